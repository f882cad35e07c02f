#include <algorithm>

#include "sextic/global.hpp"

namespace sextic {

namespace {

int degree_of(const Poly& component) {
  int d = component.total_degree();
  if (d < 1) throw std::invalid_argument("component must have positive degree");
  return d;
}

}  // namespace

void DefectTable::set(const SingType& t, int defect) {
  if (defect < 0) throw std::invalid_argument("flex defects are nonnegative");
  table_[t.name()] = defect;
}

int DefectTable::at(const SingType& t) const {
  auto it = table_.find(t.name());
  if (it == table_.end()) throw std::out_of_range("no flex defect given for " + t.name());
  return it->second;
}

int delta_sum(const std::vector<LocalSingularity>& sings) {
  int total = 0;
  for (const auto& s : sings) total += s.point.degree() * s.delta;
  return total;
}

int genus(const Poly& component, const std::vector<LocalSingularity>& sings) {
  const int d = degree_of(component);
  const int g = (d - 1) * (d - 2) / 2 - delta_sum(sings);
  if (g < 0) throw ImpossibleCurve("genus " + std::to_string(g) + " is negative");
  return g;
}

int class_degree(const Poly& component, const std::vector<LocalSingularity>& sings) {
  const int d = degree_of(component);
  int n = d * (d - 1);
  for (const auto& s : sings) n -= s.point.degree() * (s.mu + s.m - 1);
  if (d >= 2 && n < 2) throw ImpossibleCurve("class " + std::to_string(n) + " is below 2");
  return n;
}

int flex_count(const Poly& component, const std::vector<LocalSingularity>& sings, const DefectTable& defects) {
  const int d = degree_of(component);
  int i = 3 * d * (d - 2);
  for (const auto& s : sings) i -= s.point.degree() * defects.at(s.type);
  return i;
}

GlobalInvariants component_invariants(const Poly& component, const std::vector<LocalSingularity>& sings,
                                      const DefectTable* defects) {
  GlobalInvariants g;
  g.degree = degree_of(component);
  g.genus = genus(component, sings);
  g.delta_star = delta_sum(sings);
  g.class_degree = class_degree(component, sings);
  if (defects) g.flex_count = flex_count(component, sings, *defects);
  return g;
}

int delta_star_ceiling(std::vector<int> degrees) {
  std::sort(degrees.rbegin(), degrees.rend());
  if (degrees.size() == 1) return (degrees[0] - 1) * (degrees[0] - 2) / 2;
  using V = std::vector<int>;
  if (degrees == V{5, 1}) return 6;
  if (degrees == V{4, 2} || degrees == V{4, 1, 1}) return 3;
  if (degrees == V{3, 3}) return 2;
  if (degrees == V{3, 2, 1} || degrees == V{3, 1, 1, 1}) return 1;
  return 0;
}

DeltaStar delta_star(const ComponentDecomposition& dec, const std::vector<std::vector<LocalSingularity>>& sings) {
  if (!dec.complete()) throw std::invalid_argument("delta* needs a complete decomposition");
  auto pieces = dec.pieces();
  if (pieces.size() != sings.size()) throw std::invalid_argument("one list of singular points per piece expected");
  DeltaStar out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& split = *pieces[i]->geometric;
    const int k = static_cast<int>(split.size());
    const int e = split.front();
    out.value += delta_sum(sings[i]) - k * (k - 1) / 2 * e * e;
  }
  out.ceiling = delta_star_ceiling(*dec.component_degrees());
  out.ok = out.value <= out.ceiling;
  return out;
}

}  // namespace sextic
