#pragma once

#include <map>
#include <utility>

#include "sextic/local.hpp"
#include "sextic/numfield.hpp"

namespace sextic::detail {

// Polynomial in X, Y over a tower field; key (i, j) is X^i Y^j.
using BiPoly = std::map<std::pair<int, int>, Num>;

BiPoly bp_from_poly(const Field& K, const Poly& f, const std::string& xv = "x", const std::string& yv = "y");
BiPoly bp_add(const Field& K, const BiPoly& a, const BiPoly& b);
BiPoly bp_sub(const Field& K, const BiPoly& a, const BiPoly& b);
BiPoly bp_mul(const Field& K, const BiPoly& a, const BiPoly& b);
BiPoly bp_scale(const Field& K, const BiPoly& a, const Num& c);
BiPoly bp_pow(const Field& K, const BiPoly& a, int e);
BiPoly bp_dx(const Field& K, const BiPoly& a);
BiPoly bp_dy(const Field& K, const BiPoly& a);
// a(X + u, Y + v)
BiPoly bp_translate(const Field& K, const BiPoly& a, const Num& u, const Num& v);
// a(X + c Y, Y)
BiPoly bp_shear(const Field& K, const BiPoly& a, const Num& c);
// Lowest total degree of a term; -1 for zero.
int bp_order(const BiPoly& a);
// Homogeneous part of degree d as a polynomial in z = X/Y... coefficients of
// X^i Y^(d-i), index i.
KPoly bp_form(const Field& K, const BiPoly& a, int d);
Num bp_coeff(const BiPoly& a, int i, int j);

// Field generated by the point and its coordinates in it.
struct PointField {
  Field K;
  Num x, y;
};
PointField point_field(const AlgebraicPoint& p);

// f translated to p: the germ of f at p over Q(p).
BiPoly germ_at(const PointField& pf, const Poly& f);

}  // namespace sextic::detail
