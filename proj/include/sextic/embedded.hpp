#pragma once

#include <string>
#include <utility>
#include <vector>

// Data files compiled into the library (see cmake/embed_data.cmake).
namespace sextic::embedded {

const char* catalog_json();

// (file stem, JSON text) for every corpus record, sorted by file name.
const std::vector<std::pair<std::string, std::string>>& example_json();

}  // namespace sextic::embedded
