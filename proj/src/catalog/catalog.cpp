#include <algorithm>
#include <cctype>
#include <map>

#include "json.hpp"
#include "sextic/catalog.hpp"
#include "sextic/embedded.hpp"

namespace sextic {

namespace {

using json = nlohmann::json;

std::string slug(const std::string& table) { return table == "simple" ? "simple" : "nonsimple"; }

// An entry is realized by a record claim with the same types and component
// degrees. Subscripts are compared only when both sides carry one.
bool realizes(const CatalogEntry& e, const Claims& c) {
  if (!c.config || !c.components) return false;
  Configuration cc = parse_configuration(*c.config);
  if (!same_types(e.config, cc) || *c.components != e.degrees) return false;
  return !(e.config.index && cc.index && *e.config.index != *cc.index);
}

std::vector<CatalogEntry> load_catalog() {
  json j = json::parse(embedded::catalog_json());
  std::vector<CatalogEntry> out;
  std::map<std::string, int> seen;
  for (const auto& group : j.at("entries")) {
    for (const auto& text : group.at("configs")) {
      CatalogEntry e;
      e.table = group.at("table").get<std::string>();
      e.item = group.at("item").get<std::string>();
      e.inner = group.value("inner", "");
      e.inner_contains = group.value("inner_contains", "");
      e.component_text = group.at("components").get<std::string>();
      e.degrees = parse_component_type(e.component_text);
      e.config_text = text.get<std::string>();
      e.config = parse_configuration(e.config_text);
      e.intersection = group.value("intersection", "");
      const std::string stem = slug(e.table) + "-" + e.item;
      e.id = stem + "-" + std::to_string(++seen[stem]);
      out.push_back(std::move(e));
    }
  }
  for (auto& e : out)
    for (const auto& doc : builtin_examples()) {
      bool hit = realizes(e, doc.claims);
      for (const auto& in : doc.instances) hit = hit || realizes(e, in.claims);
      if (doc.generic) hit = hit || realizes(e, doc.generic->claims);
      if (hit) e.examples.push_back(doc.id);
    }
  return out;
}

std::vector<CurveDocument> load_examples() {
  std::vector<CurveDocument> out;
  for (const auto& [name, text] : embedded::example_json()) {
    CurveDocument doc = parse_document(text);
    if (doc.id.empty()) doc.id = name;
    out.push_back(std::move(doc));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace

std::vector<int> parse_component_type(const std::string& text) {
  std::vector<int> degrees;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('+', pos);
    if (next == std::string::npos) next = text.size();
    std::string term = text.substr(pos, next - pos);
    term.erase(std::remove_if(term.begin(), term.end(), [](unsigned char c) { return std::isspace(c); }),
               term.end());
    while (!term.empty() && term.back() == '\'') term.pop_back();
    if (term.size() < 3 || term[0] != 'B' || term[1] != '_')
      throw std::invalid_argument("bad component term '" + term + "' in " + text);
    std::string digits = term.substr(2);
    if (digits.front() == '{' && digits.back() == '}') digits = digits.substr(1, digits.size() - 2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("bad component degree in " + text);
    degrees.push_back(std::stoi(digits));
    pos = next + 1;
  }
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

const std::vector<CurveDocument>& builtin_examples() {
  static const std::vector<CurveDocument> docs = load_examples();
  return docs;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = load_catalog();
  return entries;
}

const CurveDocument* find_example(const std::string& id) {
  for (const auto& d : builtin_examples())
    if (d.id == id) return &d;
  return nullptr;
}

std::vector<ZariskiGroup> weak_zariski_groups(const std::vector<CatalogEntry>& entries) {
  std::vector<ZariskiGroup> groups;
  std::map<std::string, std::size_t> where;
  for (const auto& e : entries) {
    Configuration key = e.config.reduced();
    key.index.reset();
    key.mr = false;
    auto [it, fresh] = where.emplace(key.body(), groups.size());
    if (fresh) groups.push_back({key, {}, false});
    groups[it->second].members.push_back(&e);
  }
  std::vector<ZariskiGroup> out;
  for (auto& g : groups) {
    bool all_indexed = true;
    int lowest = 1 << 30;
    for (const auto* m : g.members) {
      if (!m->config.index) all_indexed = false;
      else lowest = std::min(lowest, *m->config.index);
    }
    // Subscripts that start at 2 mark an irreducible member the table omits.
    g.implied_irreducible = all_indexed && lowest >= 2;
    if (g.size() >= 2) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace sextic
