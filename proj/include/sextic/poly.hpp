#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/rational.hpp"

namespace sextic {

using Exponents = std::vector<int>;

// Graded lexicographic order, earlier variables heavier. Sorting with this
// comparator puts the leading term first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class InexactDivision : public std::domain_error {
 public:
  InexactDivision() : std::domain_error("inexact division") {}
};

// Sparse polynomial with rational coefficients over an ordered list of named
// variables. Binary operations on polynomials over different variable lists
// work over the union (left operand's variables first).
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars);
  Poly(std::vector<std::string> vars, TermMap terms);

  static Poly constant(const Rational& c, std::vector<std::string> vars = {});
  static Poly variable(std::string_view name, std::vector<std::string> vars);
  static Poly monomial(const Rational& c, Exponents e, std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational leading_coefficient() const;
  const Exponents& leading_exponents() const;
  int total_degree() const;
  int degree(std::string_view var) const;
  int low_degree(std::string_view var) const;
  int order() const;
  int var_index(std::string_view var) const;
  bool depends_on(std::string_view var) const;
  std::vector<std::string> used_vars() const;

  Poly with_vars(const std::vector<std::string>& vars) const;
  Poly homogeneous_part(int degree) const;
  Rational coefficient(const Exponents& e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

 private:
  void add_scaled(const Poly& other, const Rational& c);

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

Poly pow(const Poly& p, unsigned e);
std::optional<Poly> divide(const Poly& a, const Poly& b);
Poly divexact(const Poly& a, const Poly& b);

Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings);
Poly evaluate(const Poly& p, const std::map<std::string, Rational>& values);
Poly derivative(const Poly& p, std::string_view var);

// Coefficients of p viewed as a polynomial in var; index is the power.
std::vector<Poly> coefficients_in(const Poly& p, std::string_view var);
Poly from_coefficients(const std::vector<Poly>& coeffs, std::string_view var);

// Sylvester determinant with the p rows above the q rows.
Poly resultant(const Poly& p, const Poly& q, std::string_view var);

// gcd normalized to leading coefficient 1 (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& p);
bool is_squarefree(const Poly& p);

// Integer coefficients with content 1 and positive leading coefficient.
Poly primitive_integer(const Poly& p);
Poly make_monic(const Poly& p);

Poly parse_poly(std::string_view text, const std::vector<std::string>& declared_vars);
std::string format(const Poly& p);

}  // namespace sextic
