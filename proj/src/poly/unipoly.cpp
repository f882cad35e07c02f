#include "sextic/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sextic {

UniPoly::UniPoly(std::string var, std::vector<Rational> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c, std::string var) { return UniPoly(std::move(var), {c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree, std::string var) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(var), std::move(v));
}

UniPoly UniPoly::from_poly(const Poly& p, std::string_view var) {
  for (const auto& v : p.used_vars())
    if (v != var) throw std::invalid_argument("polynomial depends on " + v + ", not univariate in " + std::string(var));
  int i = p.var_index(var);
  std::vector<Rational> c(std::max(p.degree(var) + 1, 0), Rational(0));
  for (const auto& [e, k] : p.terms()) c[i < 0 ? 0 : e[i]] = k;
  return UniPoly(std::string(var), std::move(c));
}

Poly UniPoly::to_poly(const std::vector<std::string>& vars_in) const {
  std::vector<std::string> vars = merge_vars(vars_in, {var_});
  int idx = static_cast<int>(std::find(vars.begin(), vars.end(), var_) - vars.begin());
  Poly::TermMap t;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Exponents e(vars.size(), 0);
    e[idx] = static_cast<int>(k);
    t.emplace(std::move(e), c_[k]);
  }
  return Poly(vars, std::move(t));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(a.var_, std::move(r));
}

UniPoly operator*(UniPoly a, const Rational& k) {
  for (auto& c : a.c_) c *= k;
  a.trim();
  return a;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> r = c_;
  const int dd = d.degree();
  if (degree() < dd) return {UniPoly(var_), *this};
  std::vector<Rational> q(degree() - dd + 1, Rational(0));
  Rational inv = 1 / d.leading();
  for (int k = degree(); k >= dd; --k) {
    if (r[k] == 0) continue;
    Rational t = r[k] * inv;
    q[k - dd] = t;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= t * d.c_[j];
  }
  r.resize(dd);
  return {UniPoly(var_, std::move(q)), UniPoly(var_, std::move(r))};
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> r;
  for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * static_cast<long>(k));
  return UniPoly(var_, std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc(inner.var_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UniPoly::constant(*it, inner.var_);
  return acc;
}

UniPoly gcd(const UniPoly& a_in, const UniPoly& b_in) {
  UniPoly a = a_in.monic(), b = b_in.monic();
  while (!b.is_zero()) {
    UniPoly r = a.divrem(b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UniPoly divexact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = a.divrem(b);
  if (!r.is_zero()) throw InexactDivision();
  return q;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divexact(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_factorization(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() <= 0) return out;
  UniPoly c = gcd(p, p.derivative());
  UniPoly w = divexact(p, c).monic();
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly z = divexact(w, y).monic();
    if (z.degree() > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = divexact(c, y);
  }
  return out;
}

std::vector<std::pair<UniPoly, int>> factor(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("factorization of zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  for (const auto& [s, m] : squarefree_factorization(p))
    for (auto& g : factor_squarefree(s)) out.emplace_back(std::move(g), m);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    const auto& ca = a.first.coeffs();
    const auto& cb = b.first.coeffs();
    for (std::size_t i = ca.size(); i-- > 0;)
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    return a.second < b.second;
  });
  return out;
}

RationalRoots rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of zero polynomial");
  RationalRoots out;
  out.residual = p;
  for (const auto& [g, m] : factor(p)) {
    if (g.degree() != 1) continue;
    out.roots.emplace_back(-g.coeff(0), m);
    for (int k = 0; k < m; ++k) out.residual = divexact(out.residual, g);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

std::string format(const UniPoly& p) { return format(p.to_poly()); }

}  // namespace sextic
