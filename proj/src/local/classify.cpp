#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "sextic/local.hpp"

namespace sextic {

namespace {

struct TableRow {
  const char* signature;
  const char* type;
};

constexpr TableRow kTable[] = {
#include "sigtable.inc"
    {nullptr, nullptr},
};

int family_rank(SingType::Family f) {
  switch (f) {
    case SingType::Family::B: return 0;
    case SingType::Family::C: return 1;
    case SingType::Family::D47: return 2;
    case SingType::Family::Sp1: return 3;
    case SingType::Family::Sp2: return 4;
    case SingType::Family::E: return 5;
    case SingType::Family::D: return 6;
    case SingType::Family::A: return 7;
    case SingType::Family::Unknown: return 8;
  }
  return 9;
}

int parse_int(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("expected an index, got '" + std::string(s) + "'");
  return std::stoi(std::string(s));
}

// "3,6" or the compact "36" / "312" with a one-digit first index.
std::pair<int, int> parse_pair(std::string_view s) {
  auto comma = s.find(',');
  if (comma != std::string_view::npos) return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
  if (s.size() < 2) throw std::invalid_argument("expected a pair of indices, got '" + std::string(s) + "'");
  return {parse_int(s.substr(0, 1)), parse_int(s.substr(1))};
}

}  // namespace

int SingType::milnor() const {
  switch (family) {
    case Family::A:
    case Family::D:
    case Family::E: return k;
    case Family::B: return (p - 1) * (q - 1);
    case Family::C: return p + q + 1;
    case Family::D47: return 16;
    case Family::Sp1: return 18;
    case Family::Sp2: return 21;
    case Family::Unknown: return 0;
  }
  return 0;
}

int SingType::delta() const {
  int r = 1;
  switch (family) {
    case Family::A: r = k % 2 ? 2 : 1; break;
    case Family::D: r = k % 2 ? 2 : 3; break;
    case Family::E: r = k == 7 ? 2 : 1; break;
    case Family::B: r = std::gcd(p, q); break;
    case Family::C: r = std::gcd(p - 2, 2) + std::gcd(q - 2, 2); break;
    case Family::D47: r = 3; break;
    case Family::Sp1: r = 1; break;
    case Family::Sp2: r = 2; break;
    case Family::Unknown: return 0;
  }
  return (milnor() + r - 1) / 2;
}

std::string SingType::name() const {
  switch (family) {
    case Family::A: return "A_" + std::to_string(k);
    case Family::D: return "D_" + std::to_string(k);
    case Family::E: return "E_" + std::to_string(k);
    case Family::B: return "B_{" + std::to_string(p) + "," + std::to_string(q) + "}";
    case Family::C: return "C_{" + std::to_string(p) + "," + std::to_string(q) + "}";
    case Family::D47: return "D_{4,7}";
    case Family::Sp1: return "Sp_1";
    case Family::Sp2: return "Sp_2";
    case Family::Unknown: return "Unknown<" + raw + ">";
  }
  return {};
}

bool operator==(const SingType& a, const SingType& b) {
  return a.family == b.family && a.k == b.k && a.p == b.p && a.q == b.q && a.raw == b.raw;
}

bool operator<(const SingType& a, const SingType& b) {
  auto key = [](const SingType& t) { return std::tuple(family_rank(t.family), t.p, t.q, -t.k, t.raw); };
  return key(a) < key(b);
}

SingType parse_sing_type(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&]() -> SingType { throw std::invalid_argument("unknown singularity type '" + std::string(text) + "'"); };
  if (s == "Sp_1" || s == "Sp1" || s == "Sp_{1}") return SingType::Sp1();
  if (s == "Sp_2" || s == "Sp2" || s == "Sp_{2}") return SingType::Sp2();
  if (s.size() < 2) return fail();
  char fam = s[0];
  std::string idx = s.substr(1);
  if (!idx.empty() && idx[0] == '_') idx = idx.substr(1);
  if (idx.size() >= 2 && idx.front() == '{' && idx.back() == '}') idx = idx.substr(1, idx.size() - 2);
  if (idx.empty()) return fail();
  switch (fam) {
    case 'A': {
      int k = parse_int(idx);
      if (k < 1) return fail();
      return SingType::A(k);
    }
    case 'E': {
      int k = parse_int(idx);
      if (k < 6 || k > 8) return fail();
      return SingType::E(k);
    }
    case 'D': {
      if (idx == "4,7" || idx == "47") return SingType::D47();
      int k = parse_int(idx);
      if (k < 4) return fail();
      return SingType::D(k);
    }
    case 'B': {
      auto [p, q] = parse_pair(idx);
      return SingType::B(p, q);
    }
    case 'C': {
      auto [p, q] = parse_pair(idx);
      return SingType::C(p, q);
    }
    default: return fail();
  }
}

std::string signature(int m, int mu, const std::vector<BranchData>& branches,
                      const std::vector<std::vector<int>>& contacts) {
  const int r = static_cast<int>(branches.size());
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  using Key = std::pair<std::vector<std::vector<int>>, std::vector<int>>;
  std::optional<Key> best;
  do {
    Key key;
    for (int i : perm) {
      std::vector<int> b{branches[i].n};
      b.insert(b.end(), branches[i].beta.begin(), branches[i].beta.end());
      key.first.push_back(std::move(b));
    }
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) key.second.push_back(contacts[perm[i]][perm[j]]);
    if (!best || key < *best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::ostringstream out;
  out << "m=" << m << ",mu=" << mu << ",r=" << r << ",branches={";
  for (std::size_t i = 0; i < best->first.size(); ++i) {
    const auto& b = best->first[i];
    if (i) out << ';';
    out << b[0];
    for (std::size_t k = 1; k < b.size(); ++k) out << (k == 1 ? ':' : ',') << b[k];
  }
  out << "},I={";
  for (std::size_t i = 0; i < best->second.size(); ++i) out << (i ? "," : "") << best->second[i];
  out << '}';
  return out.str();
}

SingType classify_signature(const std::string& sig) {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    for (const auto& row : kTable)
      if (row.signature) t.emplace(row.signature, row.type);
    return t;
  }();
  auto it = table.find(sig);
  if (it == table.end()) {
    SingType u;
    u.raw = sig;
    return u;
  }
  return parse_sing_type(it->second);
}

SingType classify(const LocalSingularity& s) {
  if (s.m < 2) {
    SingType u;
    u.raw = "smooth";
    return u;
  }
  return classify_signature(s.signature.empty() ? signature(s.m, s.mu, s.branches, s.contacts) : s.signature);
}

const std::vector<NormalForm>& normal_forms() {
  static const std::vector<NormalForm> forms = [] {
    std::vector<NormalForm> v;
    for (int k = 1; k <= 19; ++k) v.push_back({SingType::A(k), "y^2 + x^" + std::to_string(k + 1)});
    for (int k = 4; k <= 14; ++k) v.push_back({SingType::D(k), "x*y^2 + x^" + std::to_string(k - 1)});
    v.push_back({SingType::E(6), "y^3 + x^4"});
    v.push_back({SingType::E(7), "y^3 + y*x^3"});
    v.push_back({SingType::E(8), "y^3 + x^5"});
    for (auto [p, q] : {std::pair{3, 6}, {3, 12}, {4, 6}, {6, 6}})
      v.push_back({SingType::B(p, q), "y^" + std::to_string(p) + " + x^" + std::to_string(q)});
    for (auto [p, q] : {std::pair{3, 7}, {3, 8}, {3, 9}, {3, 12}, {3, 15}, {6, 6}, {6, 9}, {6, 12}})
      v.push_back({SingType::C(p, q), "y^" + std::to_string(p) + " + x^" + std::to_string(q) + " + x^2*y^2"});
    v.push_back({SingType::D47(), "y^4 + x^3*y^2 + x^7"});
    v.push_back({SingType::Sp1(), "(y^2 - x^3)^2 + (x*y)^3"});
    v.push_back({SingType::Sp2(), "(y^2 - x^3)^2 - y^6"});
    return v;
  }();
  return forms;
}

}  // namespace sextic
