#include "sextic/torus.hpp"

#include <array>

namespace sextic {

namespace {

const std::vector<std::string> kXY{"x", "y"};

Poly in_xy(const Poly& p) {
  for (const auto& v : p.used_vars())
    if (v != "x" && v != "y") throw std::invalid_argument("polynomial depends on unbound symbol " + v);
  return p.with_vars(merge_vars(kXY, p.vars())).with_vars(kXY);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn = sqrt(n), rd = sqrt(d);
  return Rational(rn, rd);
}

// Common points of the closures of C2 and C3 on the line at infinity.
bool meet_at_infinity(const Poly& f2, const Poly& f3) {
  return !gcd(f2.homogeneous_part(2), f3.homogeneous_part(3)).is_constant();
}

int affine_intersection_total(const Poly& f2, const Poly& f3) {
  int total = 0;
  for (const auto& p : intersection_points(f2, f3)) total += p.degree() * intersection_multiplicity(f2, f3, p);
  return total;
}

}  // namespace

Poly expand(const TorusPair& pair) {
  auto vars = merge_vars(pair.f2.vars(), pair.f3.vars());
  Poly f2 = pair.f2.with_vars(vars), f3 = pair.f3.with_vars(vars);
  return pow(f2, 3) + pow(f3, 2);
}

bool same_curve(const Poly& a, const Poly& b) {
  auto vars = merge_vars(a.vars(), b.vars());
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return primitive_integer(a.with_vars(vars)) == primitive_integer(b.with_vars(vars));
}

int InnerOuterSplit::inner_iota_total() const {
  int total = 0;
  for (const auto& p : inner) total += p.point.degree() * p.iota;
  return total;
}

InnerOuterSplit inner_outer_split(const TorusPair& pair, const std::vector<AlgebraicPoint>& sings) {
  const Poly f2 = in_xy(pair.f2), f3 = in_xy(pair.f3);
  if (!gcd(f2, f3).is_constant()) throw DegenerateTorus("conic and cubic share a component");
  InnerOuterSplit out;
  for (const auto& p : sings) {
    if (lies_on(f2, p) && lies_on(f3, p))
      out.inner.push_back({p, intersection_multiplicity(f2, f3, p)});
    else
      out.outer.push_back(p);
  }
  return out;
}

int total_intersection(const TorusPair& pair) {
  const Poly f2 = in_xy(pair.f2), f3 = in_xy(pair.f3);
  if (f2.is_zero() || f3.is_zero() || !gcd(f2, f3).is_constant())
    throw DegenerateTorus("conic and cubic share a component");
  if (!meet_at_infinity(f2, f3)) return affine_intersection_total(f2, f3);
  for (int k = 0; k <= 6; ++k)
    for (int l = 0; l <= 6; ++l) {
      Poly g2 = rechart(f2, 2, k, l).with_vars(kXY), g3 = rechart(f3, 3, k, l).with_vars(kXY);
      if (!meet_at_infinity(g2, g3)) return affine_intersection_total(g2, g3);
    }
  throw std::runtime_error("no chart separates the common points of the conic and the cubic from infinity");
}

std::vector<CorrespondenceCheck> verify_inner_correspondence(const TorusPair& pair, const InnerOuterSplit& split,
                                                            const std::vector<LocalSingularity>& classified) {
  const Poly f3 = in_xy(pair.f3);
  std::vector<CorrespondenceCheck> out;
  for (const auto& ip : split.inner) {
    CorrespondenceCheck c;
    c.point = ip.point;
    c.iota = ip.iota;
    for (const auto& s : classified)
      if (s.point == ip.point) c.type = s.type;
    c.c3_smooth = multiplicity(f3, ip.point) == 1;
    c.applies = c.c3_smooth;
    if (c.applies) {
      // With C3 smooth the germ is y^2 + x^(3 iota): A_{6j-1} exactly when iota = 2j.
      const SingType expected = SingType::A(3 * ip.iota - 1);
      c.holds = c.type == expected;
      c.detail = "iota = " + std::to_string(ip.iota) + ", expected " + expected.name() + ", found " + c.type.name();
    } else {
      c.detail = "cubic singular at the point";
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<Poly> LinearTorus::rational_root() const {
  auto r = rational_sqrt(-scale);
  if (!r) return std::nullopt;
  return ell * *r;
}

std::optional<LinearTorus> is_linear_torus(const TorusPair& pair) {
  const Poly f2 = in_xy(pair.f2);
  if (f2.is_zero() || f2.total_degree() > 2) return std::nullopt;
  // Symmetric matrix of the homogenized quadratic form in (x, y, z).
  auto c = [&](int i, int j) { return f2.coefficient({i, j}); };
  std::array<std::array<Rational, 3>, 3> m{};
  m[0][0] = c(2, 0);
  m[1][1] = c(0, 2);
  m[2][2] = c(0, 0);
  m[0][1] = m[1][0] = c(1, 1) / 2;
  m[0][2] = m[2][0] = c(1, 0) / 2;
  m[1][2] = m[2][1] = c(0, 1) / 2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          if (m[i][k] * m[j][l] != m[i][l] * m[j][k]) return std::nullopt;
  int row = 0;
  while (row < 3 && m[row][row] == 0) ++row;
  if (row == 3) return std::nullopt;
  const Poly x = Poly::variable("x", kXY), y = Poly::variable("y", kXY);
  Poly ell = primitive_integer(m[row][0] * x + m[row][1] * y + Poly::constant(m[row][2], kXY));
  Poly sq = ell * ell;
  LinearTorus lt;
  lt.ell = ell;
  lt.scale = f2.leading_coefficient() / sq.leading_coefficient();
  if (sq * lt.scale != f2) throw std::logic_error("rank one quadratic form is not a square");
  return lt;
}

std::vector<LineIntersection> line_intersections(const Poly& f0, const Poly& line0) {
  const Poly f = in_xy(f0), line = in_xy(line0);
  if (line.total_degree() != 1) throw std::invalid_argument("not a line: " + format(line));
  const Rational a = line.coefficient({1, 0}), b = line.coefficient({0, 1}), c = line.coefficient({0, 0});
  const Poly x = Poly::variable("x", kXY), y = Poly::variable("y", kXY);
  // Parametrize by x when the line is not vertical, by y otherwise.
  const bool by_x = b != 0;
  Poly restricted = by_x ? substitute(f, {{"y", (-a / b) * x + Poly::constant(-c / b, kXY)}})
                         : substitute(f, {{"x", Poly::constant(-c / a, kXY)}});
  if (restricted.is_zero()) throw InfiniteIntersection();
  UniPoly u = UniPoly::from_poly(restricted, by_x ? "x" : "y");
  std::vector<LineIntersection> out;
  if (u.degree() <= 0) return out;
  for (const auto& [m, e] : factor(u)) {
    UniPoly mm = m.monic();
    LineIntersection li;
    li.multiplicity = e;
    if (mm.degree() == 1) {
      Rational t = -mm.coeff(0);
      li.point = by_x ? AlgebraicPoint::rational(t, -(a * t + c) / b) : AlgebraicPoint::rational(-c / a, t);
    } else {
      li.point.minpoly = UniPoly("t", mm.coeffs());
      UniPoly t("t", {Rational(0), Rational(1)});
      if (by_x) {
        li.point.x = t;
        li.point.y = UniPoly("t", {-c / b, -a / b});
      } else {
        li.point.x = UniPoly("t", {-c / a});
        li.point.y = t;
      }
    }
    out.push_back(std::move(li));
  }
  return out;
}

bool linear_type_test(const Poly& f0, const Poly& line0, const std::vector<AlgebraicPoint>& points,
                      const LocalOptions& opt) {
  const Poly f = in_xy(f0), line = in_xy(line0);
  if (line.total_degree() != 1 || points.empty()) return false;
  int total = 0;
  for (const auto& p : points) {
    const SingType t = analyze_point(f, p, opt).type;
    int expected = 0;
    if (t == SingType::A(5)) expected = 2;
    else if (t == SingType::A(11)) expected = 4;
    else if (t == SingType::A(17)) expected = 6;
    else return false;
    if (!lies_on(line, p)) return false;
    if (intersection_multiplicity(f, line, p) != expected) return false;
    total += p.degree() * expected;
  }
  // Bezout: the listed points then carry every intersection with the line.
  return total == f.total_degree();
}

}  // namespace sextic
