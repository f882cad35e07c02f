#include "sextic/poly.hpp"
#include "sextic/unipoly.hpp"

namespace sextic {

namespace {

Poly gcd_rec(const Poly& a, const Poly& b);

std::string main_var(const Poly& a, const Poly& b) {
  for (const auto& v : a.vars())
    if (a.degree(v) > 0 || b.degree(v) > 0) return v;
  return {};
}

Poly content_in(const Poly& p, const std::string& var) {
  Poly g(p.vars());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) return Poly::constant(1, p.vars());
  }
  return g;
}

Poly primitive_in(const Poly& p, const std::string& var) {
  if (p.is_zero()) return p;
  return primitive_integer(divexact(p, content_in(p, var)));
}

Poly leading_in(const Poly& p, const std::string& var) { return coefficients_in(p, var).back(); }

// Pseudo-remainder up to a nonzero factor from the coefficient ring.
Poly pseudo_remainder(Poly a, const Poly& b, const std::string& var) {
  const int db = b.degree(var);
  const Poly lb = leading_in(b, var);
  Poly x = Poly::variable(var, a.vars());
  while (!a.is_zero() && a.degree(var) >= db) {
    Poly la = leading_in(a, var);
    a = lb * a - la * pow(x, static_cast<unsigned>(a.degree(var) - db)) * b;
    a = primitive_integer(a);
  }
  return a;
}

bool is_univariate_in(const Poly& p, const std::string& var) {
  for (const auto& v : p.used_vars())
    if (v != var) return false;
  return true;
}

// gcd up to a nonzero rational factor.
Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return Poly::constant(1, a.vars());
  std::string v = main_var(a, b);
  if (is_univariate_in(a, v) && is_univariate_in(b, v)) {
    UniPoly g = gcd(UniPoly::from_poly(a, v), UniPoly::from_poly(b, v));
    return g.to_poly(a.vars());
  }
  if (!a.depends_on(v)) return gcd_rec(a, content_in(b, v));
  if (!b.depends_on(v)) return gcd_rec(content_in(a, v), b);
  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly c = gcd_rec(ca, cb);
  Poly pa = primitive_integer(divexact(a, ca));
  Poly pb = primitive_integer(divexact(b, cb));
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (true) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.depends_on(v)) return c;
    pa = std::move(pb);
    pb = primitive_in(r, v);
  }
  return c * primitive_in(pb, v);
}

}  // namespace

Poly gcd(const Poly& a_in, const Poly& b_in) {
  auto vars = merge_vars(a_in.vars(), b_in.vars());
  Poly a = a_in.with_vars(vars);
  Poly b = b_in.with_vars(vars);
  if (a.is_zero() && b.is_zero()) return Poly(vars);
  return make_monic(gcd_rec(a, b));
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero() || p.is_constant()) return p;
  Poly g = p;
  for (const auto& v : p.used_vars()) g = gcd(g, derivative(p, v));
  return divexact(p, make_monic(g));
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  Poly g = p;
  for (const auto& v : p.used_vars()) {
    g = gcd(g, derivative(p, v));
    if (g.is_constant()) return true;
  }
  return g.is_constant();
}

}  // namespace sextic
