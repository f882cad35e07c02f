#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sextic/poly.hpp"
#include "sextic/rational.hpp"

namespace sextic {

// Dense univariate polynomial; coeffs()[i] multiplies var^i.
class UniPoly {
 public:
  UniPoly() : var_("x") {}
  explicit UniPoly(std::string var, std::vector<Rational> coeffs = {});

  static UniPoly constant(const Rational& c, std::string var = "x");
  static UniPoly monomial(const Rational& c, int degree, std::string var = "x");
  static UniPoly from_poly(const Poly& p, std::string_view var);
  Poly to_poly(const std::vector<std::string>& vars = {}) const;

  const std::string& var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  Rational leading() const;
  Rational eval(const Rational& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& k);
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

  std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly compose(const UniPoly& inner) const;

 private:
  void trim();
  std::string var_;
  std::vector<Rational> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly divexact(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);

// Monic squarefree factors with their multiplicity, ordered by multiplicity.
std::vector<std::pair<UniPoly, int>> squarefree_factorization(const UniPoly& p);

struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;  // ascending
  UniPoly residual;                             // input divided by prod (x - r)^m
};
RationalRoots rational_roots(const UniPoly& p);

// Monic irreducible factors over Q with multiplicities, deterministic order
// (degree, then coefficients).
std::vector<std::pair<UniPoly, int>> factor(const UniPoly& p);
// Irreducible factors of a squarefree polynomial.
std::vector<UniPoly> factor_squarefree(const UniPoly& p);

std::string format(const UniPoly& p);

}  // namespace sextic
