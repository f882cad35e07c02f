#include "intersection.hpp"

namespace sextic {

using namespace detail;

namespace detail {

namespace {

// Coefficients of a(X, 0), index = power of X.
KPoly on_x_axis(const Field& K, const BiPoly& a) {
  KPoly r;
  for (const auto& [k, c] : a) {
    if (k.second != 0) continue;
    if (static_cast<int>(r.size()) <= k.first) r.resize(k.first + 1);
    r[k.first] = c;
  }
  return K.kp_trim(std::move(r));
}

}  // namespace

int fulton(const Field& K, BiPoly F, BiPoly G) {
  int total = 0;
  while (true) {
    if (F.empty() || G.empty()) throw InfiniteIntersection();
    if (F.count({0, 0}) || G.count({0, 0})) return total;
    KPoly a = on_x_axis(K, F), b = on_x_axis(K, G);
    if ((b.empty() && !a.empty()) || (!a.empty() && a.size() > b.size())) {
      std::swap(F, G);
      std::swap(a, b);
    }
    if (a.empty()) {
      if (b.empty()) throw InfiniteIntersection();
      int ord = 0;
      while (K.is_zero(b[ord])) ++ord;
      total += ord;
      BiPoly h;
      for (const auto& [k, c] : F) h.emplace(std::pair{k.first, k.second - 1}, c);
      F = std::move(h);
      continue;
    }
    const int shift = static_cast<int>(b.size() - a.size());
    BiPoly xf;
    for (const auto& [k, c] : F) xf.emplace(std::pair{k.first + shift, k.second}, c);
    G = bp_sub(K, bp_scale(K, G, a.back()), bp_scale(K, xf, b.back()));
  }
}

}  // namespace detail

int intersection_multiplicity(const Poly& g, const Poly& h, const AlgebraicPoint& p) {
  PointField pf = point_field(p);
  return fulton(pf.K, germ_at(pf, g), germ_at(pf, h));
}

int milnor_number(const Poly& f, const AlgebraicPoint& p) {
  PointField pf = point_field(p);
  BiPoly g = germ_at(pf, f);
  if (g.count({0, 0})) throw NotOnCurve();
  try {
    return fulton(pf.K, bp_dx(pf.K, g), bp_dy(pf.K, g));
  } catch (const InfiniteIntersection&) {
    throw NonIsolatedSingularity();
  }
}

}  // namespace sextic
