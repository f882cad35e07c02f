#include <algorithm>
#include <cctype>
#include <sstream>

#include "sextic/global.hpp"

namespace sextic {

namespace {

bool entry_less(const ConfigEntry& a, const ConfigEntry& b) {
  if (a.type < b.type) return true;
  if (b.type < a.type) return false;
  return a.inner.value_or(false) > b.inner.value_or(false);
}

bool same_slot(const ConfigEntry& a, const ConfigEntry& b) { return a.type == b.type && a.inner == b.inner; }

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

}  // namespace

Configuration make_configuration(std::vector<ConfigEntry> entries, std::optional<int> index, bool mr) {
  std::sort(entries.begin(), entries.end(), entry_less);
  Configuration c;
  for (auto& e : entries) {
    if (e.count < 1) throw std::invalid_argument("configuration counts must be positive");
    if (!c.entries.empty() && same_slot(c.entries.back(), e))
      c.entries.back().count += e.count;
    else
      c.entries.push_back(std::move(e));
  }
  c.index = index;
  c.mr = mr;
  return c;
}

int Configuration::total_milnor() const {
  int total = 0;
  for (const auto& e : entries) total += e.count * e.type.milnor();
  return total;
}

bool Configuration::has_unknown() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ConfigEntry& e) { return e.type.family == SingType::Family::Unknown; });
}

Configuration Configuration::reduced() const {
  std::vector<ConfigEntry> flat;
  for (const auto& e : entries) flat.push_back({e.type, e.count, std::nullopt});
  return make_configuration(std::move(flat), index, mr);
}

std::vector<SingType> Configuration::types() const {
  std::vector<SingType> out;
  for (const auto& e : entries)
    for (int i = 0; i < e.count; ++i) out.push_back(e.type);
  return out;
}

std::string Configuration::body() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ',';
    if (entries[i].count > 1) out << entries[i].count;
    out << entries[i].type.name();
  }
  out << ']';
  return out.str();
}

std::string Configuration::to_string() const {
  std::string s = body();
  if (index) s += "_" + std::to_string(*index);
  if (mr) s += "^{mr}";
  return s;
}

Configuration parse_configuration(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty() || s[0] != '[') throw ParseError(0, "configuration must start with '['");
  std::size_t close = std::string::npos;
  int depth = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '{') ++depth;
    if (s[i] == '}') --depth;
    if (s[i] == ']' && depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::string::npos) throw ParseError(s.size(), "missing ']'");

  std::vector<ConfigEntry> entries;
  std::size_t start = 1;
  depth = 0;
  auto take = [&](std::size_t end) {
    std::string item = s.substr(start, end - start);
    if (item.empty()) {
      if (end == close && entries.empty() && start == 1) return;
      throw ParseError(start, "empty configuration entry");
    }
    std::size_t k = 0;
    while (k < item.size() && std::isdigit(static_cast<unsigned char>(item[k]))) ++k;
    ConfigEntry e;
    if (k > 0) e.count = std::stoi(item.substr(0, k));
    if (e.count < 1) throw ParseError(start, "count must be positive");
    try {
      e.type = parse_sing_type(item.substr(k));
    } catch (const std::invalid_argument& err) {
      throw ParseError(start + k, err.what());
    }
    entries.push_back(std::move(e));
  };
  for (std::size_t i = 1; i < close; ++i) {
    if (s[i] == '{') ++depth;
    if (s[i] == '}') --depth;
    if (s[i] == ',' && depth == 0) {
      take(i);
      start = i + 1;
    }
  }
  take(close);

  std::optional<int> index;
  bool mr = false;
  std::size_t i = close + 1;
  if (i < s.size() && s[i] == '_') {
    ++i;
    bool braced = i < s.size() && s[i] == '{';
    if (braced) ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ParseError(i, "expected an index after '_'");
    index = std::stoi(s.substr(i, j - i));
    i = j;
    if (braced) {
      if (i >= s.size() || s[i] != '}') throw ParseError(i, "expected '}'");
      ++i;
    }
  }
  if (i < s.size()) {
    std::string rest = s.substr(i);
    if (rest == "^mr" || rest == "^{mr}")
      mr = true;
    else
      throw ParseError(i, "unexpected '" + rest + "' after configuration");
  }
  return make_configuration(std::move(entries), index, mr);
}

bool same_types(const Configuration& a, const Configuration& b) {
  Configuration ra = a.reduced(), rb = b.reduced();
  if (ra.entries.size() != rb.entries.size()) return false;
  for (std::size_t i = 0; i < ra.entries.size(); ++i)
    if (!(ra.entries[i].type == rb.entries[i].type) || ra.entries[i].count != rb.entries[i].count) return false;
  return true;
}

Configuration assemble_configuration(const std::vector<LocalSingularity>& sings,
                                     const std::optional<std::vector<AlgebraicPoint>>& inner_points) {
  std::vector<ConfigEntry> entries;
  for (const auto& s : sings) {
    ConfigEntry e{s.type, s.point.degree(), std::nullopt};
    if (inner_points)
      e.inner = std::find(inner_points->begin(), inner_points->end(), s.point) != inner_points->end();
    entries.push_back(std::move(e));
  }
  Configuration c = make_configuration(std::move(entries));
  c.mr = is_maximal_rank(c);
  return c;
}

bool is_maximal_rank(const Configuration& config) {
  for (const auto& e : config.entries)
    if (!e.type.is_simple()) return false;
  return config.total_milnor() == 19;
}

}  // namespace sextic
