#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "bipoly.hpp"

namespace sextic {

using namespace detail;

namespace {

// Element of Q or of a simple extension Q[t]/(m) as a polynomial in t.
UniPoly to_unipoly(const Field& K, const Num& a) {
  if (K.level() == 0) return UniPoly("t", {a.q});
  std::vector<Rational> c;
  for (const auto& x : a.c) c.push_back(x.q);
  return UniPoly("t", std::move(c));
}

KPoly specialize_x(const Field& K, const Poly& g, const Num& alpha) {
  std::vector<Poly> cy = coefficients_in(g, "y");
  KPoly out;
  for (const auto& c : cy) {
    UniPoly u = c.is_zero() ? UniPoly("x") : UniPoly::from_poly(c, "x");
    Num acc{};
    for (auto it = u.coeffs().rbegin(); it != u.coeffs().rend(); ++it)
      acc = K.add(K.mul(acc, alpha), K.from_rational(*it));
    out.push_back(acc);
  }
  return K.kp_trim(std::move(out));
}

std::vector<Rational> shear_candidates() {
  std::vector<Rational> c{0};
  for (int k = 1; k <= 12; ++k) {
    c.push_back(k);
    c.push_back(-k);
  }
  return c;
}

// Common zeros found with x-shear c, or nullopt if some fibre holds more than
// one of them. The first polynomial must be y-general after the shear.
std::optional<std::vector<AlgebraicPoint>> zeros_with_shear(const std::vector<Poly>& polys, const Rational& c) {
  std::vector<std::string> xy{"x", "y"};
  Poly x = Poly::variable("x", xy), y = Poly::variable("y", xy);
  std::vector<Poly> g;
  for (const auto& p : polys) g.push_back(substitute(p.with_vars(merge_vars(xy, p.vars())).with_vars(xy), {{"x", x + c * y}}));
  Poly r;
  for (std::size_t i = 1; i < g.size(); ++i) r = gcd(r, resultant(g[0], g[i], "y"));
  std::vector<AlgebraicPoint> out;
  if (r.is_zero()) throw InfiniteIntersection();
  if (r.is_constant()) return out;
  for (const auto& [m, mult] : factor(UniPoly::from_poly(r, "x"))) {
    (void)mult;
    Field K = Field::from_minpoly(m);
    Num alpha = m.degree() == 1 ? K.from_rational(-m.coeff(0)) : K.generator();
    KPoly h = specialize_x(K, g[0], alpha);
    for (std::size_t i = 1; i < g.size(); ++i) h = K.kp_gcd(h, specialize_x(K, g[i], alpha));
    if (h.size() <= 1) continue;
    if (h.size() > 2) h = K.kp_monic(K.kp_divexact(h, K.kp_gcd(h, K.kp_derivative(h))));
    if (h.size() > 2) return std::nullopt;
    Num beta = K.neg(h[0]);
    Num px = K.add(alpha, K.mul(K.from_rational(c), beta));
    AlgebraicPoint p;
    if (m.degree() == 1) {
      p = AlgebraicPoint::rational(*K.as_rational(px), *K.as_rational(beta));
    } else {
      p.minpoly = UniPoly("t", m.coeffs());
      p.x = to_unipoly(K, px);
      p.y = to_unipoly(K, beta);
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlgebraicPoint> common_zeros(const std::vector<Poly>& polys) {
  Poly f = polys.front();
  Poly fd = f.homogeneous_part(f.total_degree());
  for (const auto& c : shear_candidates()) {
    std::map<std::string, Rational> at{{"x", c}, {"y", Rational(1)}};
    if (evaluate(fd, at).is_zero()) continue;
    if (auto pts = zeros_with_shear(polys, c)) return *pts;
  }
  throw std::runtime_error("no separating projection found for the common zeros");
}

}  // namespace

AlgebraicPoint AlgebraicPoint::rational(const Rational& x, const Rational& y) {
  AlgebraicPoint p;
  p.x = UniPoly("t", {x});
  p.y = UniPoly("t", {y});
  return p;
}

Rational AlgebraicPoint::x_rational() const {
  if (!is_rational()) throw std::logic_error("point is not rational");
  return x.eval(-minpoly.coeff(0));
}

Rational AlgebraicPoint::y_rational() const {
  if (!is_rational()) throw std::logic_error("point is not rational");
  return y.eval(-minpoly.coeff(0));
}

std::string AlgebraicPoint::to_string() const {
  if (is_rational()) return "(" + x_rational().get_str() + ", " + y_rational().get_str() + ")";
  std::ostringstream out;
  out << "(" << format(x) << ", " << format(y) << ") where " << format(minpoly) << " = 0";
  return out.str();
}

bool operator<(const AlgebraicPoint& a, const AlgebraicPoint& b) {
  auto key = [](const AlgebraicPoint& p) {
    return std::tuple(p.degree(), p.minpoly.coeffs(), p.x.coeffs(), p.y.coeffs());
  };
  return key(a) < key(b);
}

bool operator==(const AlgebraicPoint& a, const AlgebraicPoint& b) {
  return a.minpoly == b.minpoly && a.x == b.x && a.y == b.y;
}

std::vector<AlgebraicPoint> singular_points(const Poly& f) {
  for (const auto& v : f.used_vars())
    if (v != "x" && v != "y") throw std::invalid_argument("curve depends on unbound symbol " + v);
  if (f.total_degree() <= 1) return {};
  if (!is_squarefree(f)) throw NotSquarefree();
  try {
    return common_zeros({f, derivative(f, "x"), derivative(f, "y")});
  } catch (const InfiniteIntersection&) {
    throw NonIsolatedSingularity();
  }
}

std::vector<AlgebraicPoint> intersection_points(const Poly& g, const Poly& h) {
  for (const auto* p : {&g, &h})
    for (const auto& v : p->used_vars())
      if (v != "x" && v != "y") throw std::invalid_argument("curve depends on unbound symbol " + v);
  if (g.is_zero() || h.is_zero()) throw InfiniteIntersection();
  if (g.is_constant() || h.is_constant()) return {};
  return common_zeros({g, h});
}

bool singular_at_infinity(const Poly& f, int d) {
  Poly fd = f.homogeneous_part(d);
  if (fd.is_zero()) return true;
  Poly g = gcd(fd, derivative(fd, "x"));
  g = gcd(g, derivative(fd, "y"));
  g = gcd(g, f.homogeneous_part(d - 1));
  return !g.is_constant();
}

Poly rechart(const Poly& f, int d, const Rational& k, const Rational& l) {
  std::vector<std::string> xy = merge_vars(f.vars(), {"x", "y"});
  Poly z = Poly::constant(1, xy) + k * Poly::variable("x", xy) + l * Poly::variable("y", xy);
  Poly out(xy);
  for (int e = 0; e <= d; ++e) {
    Poly part = f.homogeneous_part(e);
    if (part.is_zero()) continue;
    out += part * pow(z, static_cast<unsigned>(d - e));
  }
  return out;
}

AlgebraicPoint rechart_point(const AlgebraicPoint& p, const Rational& k, const Rational& l) {
  PointField pf = point_field(p);
  const Field& K = pf.K;
  Num den = K.sub(K.one(), K.add(K.mul(K.from_rational(k), pf.x), K.mul(K.from_rational(l), pf.y)));
  if (K.is_zero(den)) throw std::domain_error("point moves to infinity in the new chart");
  Num inv = K.inv(den);
  Num nx = K.mul(pf.x, inv), ny = K.mul(pf.y, inv);
  if (p.is_rational()) return AlgebraicPoint::rational(*K.as_rational(nx), *K.as_rational(ny));
  AlgebraicPoint q;
  q.minpoly = p.minpoly;
  q.x = to_unipoly(K, nx);
  q.y = to_unipoly(K, ny);
  return q;
}

bool lies_on(const Poly& f, const AlgebraicPoint& p) {
  PointField pf = point_field(p);
  BiPoly g = germ_at(pf, f);
  return g.find({0, 0}) == g.end();
}

int multiplicity(const Poly& f, const AlgebraicPoint& p) {
  PointField pf = point_field(p);
  BiPoly g = germ_at(pf, f);
  if (g.empty()) throw std::domain_error("zero polynomial has no multiplicity");
  int o = bp_order(g);
  if (o == 0) throw NotOnCurve();
  return o;
}

}  // namespace sextic
