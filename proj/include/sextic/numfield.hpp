#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/rational.hpp"
#include "sextic/unipoly.hpp"

namespace sextic {

// Element of a tower Q = K_0 < K_1 < ... < K_L with K_i = K_{i-1}[t_i]/(m_i).
// A level-0 element is `q`; a level-i element is sum c[k] t_i^k with level
// i-1 coefficients. Zero at level >= 1 is the empty vector.
struct Num {
  Rational q;
  std::vector<Num> c;
};

// Polynomial over one tower level, low degree first, no trailing zeros.
using KPoly = std::vector<Num>;

// Raised when an element of level `level` turns out to be a zero divisor: the
// modulus of that level factors with `factor` as a proper monic divisor.
class TowerSplit : public std::exception {
 public:
  TowerSplit(int level, KPoly factor) : level_(level), factor_(std::move(factor)) {}
  int level() const { return level_; }
  const KPoly& factor() const { return factor_; }
  const char* what() const noexcept override { return "tower modulus splits"; }

 private:
  int level_;
  KPoly factor_;
};

class TowerCapExceeded : public std::runtime_error {
 public:
  explicit TowerCapExceeded(int degree)
      : std::runtime_error("coefficient field degree " + std::to_string(degree) + " exceeds the tower cap") {}
};

class Field {
 public:
  Field();

  int level() const { return static_cast<int>(moduli_->size()); }
  int degree() const;
  const KPoly& modulus(int level) const { return (*moduli_)[level - 1]; }

  // Adjoins a root of the monic polynomial `modulus` (coefficients in this field).
  Field extend(const KPoly& modulus, int cap) const;
  static Field from_minpoly(const UniPoly& m);

  Num zero() const;
  Num one() const;
  Num from_rational(const Rational& q) const;
  Num generator() const;
  // Lifts an element of the field one level below into this field.
  Num embed(const Num& a) const;
  Num lift_from(const Num& a, int from_level) const;
  Num eval_unipoly(const UniPoly& p, const Num& at) const;

  bool is_zero(const Num& a) const { return is_zero_at(a, level()); }
  bool equal(const Num& a, const Num& b) const { return is_zero(sub(a, b)); }
  Num add(const Num& a, const Num& b) const { return add_at(a, b, level()); }
  Num sub(const Num& a, const Num& b) const { return sub_at(a, b, level()); }
  Num neg(const Num& a) const { return neg_at(a, level()); }
  Num mul(const Num& a, const Num& b) const { return mul_at(a, b, level()); }
  Num inv(const Num& a) const { return inv_at(a, level()); }
  Num div(const Num& a, const Num& b) const { return mul(a, inv(b)); }
  Num pow(const Num& a, int e) const;
  std::optional<Rational> as_rational(const Num& a) const;
  std::string to_string(const Num& a) const;

  // Polynomials over this field.
  KPoly kp_trim(KPoly a) const { return trim_at(std::move(a), level()); }
  KPoly kp_add(const KPoly& a, const KPoly& b) const { return kadd_at(a, b, level()); }
  KPoly kp_sub(const KPoly& a, const KPoly& b) const { return ksub_at(a, b, level()); }
  KPoly kp_mul(const KPoly& a, const KPoly& b) const { return kmul_at(a, b, level()); }
  KPoly kp_scale(const KPoly& a, const Num& k) const;
  std::pair<KPoly, KPoly> kp_divrem(const KPoly& a, const KPoly& b) const { return kdivrem_at(a, b, level()); }
  KPoly kp_gcd(const KPoly& a, const KPoly& b) const { return kgcd_at(a, b, level()); }
  KPoly kp_monic(const KPoly& a) const { return kmonic_at(a, level()); }
  KPoly kp_derivative(const KPoly& a) const;
  KPoly kp_divexact(const KPoly& a, const KPoly& b) const;
  Num kp_eval(const KPoly& a, const Num& x) const;
  // Yun decomposition: monic squarefree factors with multiplicities.
  std::vector<std::pair<KPoly, int>> kp_squarefree(const KPoly& a) const;

 private:
  explicit Field(std::shared_ptr<const std::vector<KPoly>> moduli) : moduli_(std::move(moduli)) {}

  bool is_zero_at(const Num& a, int lvl) const;
  Num zero_at(int lvl) const;
  Num from_rational_at(const Rational& q, int lvl) const;
  Num add_at(const Num& a, const Num& b, int lvl) const;
  Num sub_at(const Num& a, const Num& b, int lvl) const;
  Num neg_at(const Num& a, int lvl) const;
  Num mul_at(const Num& a, const Num& b, int lvl) const;
  Num inv_at(const Num& a, int lvl) const;
  KPoly trim_at(KPoly a, int lvl) const;
  KPoly kadd_at(const KPoly& a, const KPoly& b, int lvl) const;
  KPoly ksub_at(const KPoly& a, const KPoly& b, int lvl) const;
  KPoly kmul_at(const KPoly& a, const KPoly& b, int lvl) const;
  std::pair<KPoly, KPoly> kdivrem_at(const KPoly& a, const KPoly& b, int lvl) const;
  KPoly kgcd_at(const KPoly& a, const KPoly& b, int lvl) const;
  KPoly kmonic_at(const KPoly& a, int lvl) const;
  Num reduce_at(KPoly a, int lvl) const;
  std::string to_string_at(const Num& a, int lvl) const;

  std::shared_ptr<const std::vector<KPoly>> moduli_;
};

}  // namespace sextic
