#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sextic/poly.hpp"

namespace sextic {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

Poly::Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Poly::Poly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity does not match variables");
    if (c != 0) terms_.emplace(e, c);
  }
}

Poly Poly::constant(const Rational& c, std::vector<std::string> vars) {
  Poly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
  return p;
}

Poly Poly::variable(std::string_view name, std::vector<std::string> vars) {
  Poly p(std::move(vars));
  int i = p.var_index(name);
  if (i < 0) {
    p.vars_.emplace_back(name);
    i = static_cast<int>(p.vars_.size()) - 1;
  }
  Exponents e(p.vars_.size(), 0);
  e[i] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Poly Poly::monomial(const Rational& c, Exponents e, std::vector<std::string> vars) {
  Poly p(std::move(vars));
  if (e.size() != p.vars_.size()) throw std::invalid_argument("exponent arity does not match variables");
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational Poly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

Rational Poly::leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.begin()->second; }

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::degree(std::string_view var) const {
  if (terms_.empty()) return -1;
  int i = var_index(var);
  if (i < 0) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int Poly::low_degree(std::string_view var) const {
  if (terms_.empty()) return -1;
  int i = var_index(var);
  if (i < 0) return 0;
  int d = -1;
  for (const auto& [e, c] : terms_) d = d < 0 ? e[i] : std::min(d, e[i]);
  return d;
}

int Poly::order() const {
  if (terms_.empty()) return -1;
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    d = d < 0 ? s : std::min(d, s);
  }
  return d;
}

int Poly::var_index(std::string_view var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) return static_cast<int>(i);
  return -1;
}

bool Poly::depends_on(std::string_view var) const { return degree(var) > 0; }

std::vector<std::string> Poly::used_vars() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
  return out;
}

Poly Poly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> target(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (vars[j] == vars_[i]) target[i] = static_cast<int>(j);
  Poly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] < 0) throw std::invalid_argument("variable " + vars_[i] + " dropped while in use");
      ne[target[i]] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

Poly Poly::homogeneous_part(int degree) const {
  Poly out(vars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == degree) out.terms_.emplace(e, c);
  return out;
}

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

void Poly::add_scaled(const Poly& other, const Rational& k) {
  if (other.vars_ != vars_) {
    auto merged = merge_vars(vars_, other.vars_);
    *this = with_vars(merged);
    add_scaled(other.with_vars(merged), k);
    return;
  }
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second += k * c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  add_scaled(other, Rational(1));
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (other.vars_ != vars_) {
    auto merged = merge_vars(vars_, other.vars_);
    Poly a = with_vars(merged);
    a *= other.with_vars(merged);
    return *this = std::move(a);
  }
  TermMap out;
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.try_emplace(e, 0);
      it->second += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  terms_ = std::move(out);
  return *this;
}

bool Poly::operator==(const Poly& other) const {
  if (vars_ == other.vars_) return terms_ == other.terms_;
  auto merged = merge_vars(vars_, other.vars_);
  return with_vars(merged).terms_ == other.with_vars(merged).terms_;
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(1, p.vars());
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<Poly> divide(const Poly& a_in, const Poly& b_in) {
  if (b_in.is_zero()) throw std::domain_error("division by zero polynomial");
  auto vars = merge_vars(a_in.vars(), b_in.vars());
  Poly r = a_in.with_vars(vars);
  Poly b = b_in.with_vars(vars);
  Poly q(vars);
  const Exponents& lb = b.leading_exponents();
  Rational lcb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    Exponents shift(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      shift[i] = lr[i] - lb[i];
      if (shift[i] < 0) return std::nullopt;
    }
    Poly t = Poly::monomial(r.leading_coefficient() / lcb, std::move(shift), vars);
    q += t;
    r -= t * b;
  }
  return q;
}

Poly divexact(const Poly& a, const Poly& b) {
  auto q = divide(a, b);
  if (!q) throw InexactDivision();
  return *q;
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings) {
  std::vector<std::string> vars = p.vars();
  for (const auto& [name, value] : bindings) vars = merge_vars(vars, value.vars());
  std::vector<std::vector<Poly>> powers(p.vars().size());
  std::vector<const Poly*> bound(p.vars().size(), nullptr);
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = bindings.find(p.vars()[i]);
    if (it != bindings.end()) bound[i] = &it->second;
  }
  auto power_of = [&](std::size_t i, int k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(1, vars));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * bound[i]->with_vars(vars));
    return cache[k];
  };
  Poly out(vars);
  for (const auto& [e, c] : p.terms()) {
    Exponents free(vars.size(), 0);
    Poly term = Poly::constant(c, vars);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (bound[i]) {
        term *= power_of(i, e[i]);
      } else {
        free[i] = e[i];
      }
    }
    out += term * Poly::monomial(1, std::move(free), vars);
  }
  return out;
}

Poly evaluate(const Poly& p, const std::map<std::string, Rational>& values) {
  std::map<std::string, Poly> bindings;
  for (const auto& [name, v] : values) bindings.emplace(name, Poly::constant(v, p.vars()));
  return substitute(p, bindings);
}

Poly derivative(const Poly& p, std::string_view var) {
  int i = p.var_index(var);
  Poly out(p.vars());
  if (i < 0) return out;
  Poly::TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponents ne = e;
    ne[i] -= 1;
    terms.emplace(std::move(ne), c * e[i]);
  }
  return Poly(p.vars(), std::move(terms));
}

std::vector<Poly> coefficients_in(const Poly& p, std::string_view var) {
  int i = p.var_index(var);
  int d = p.degree(var);
  std::vector<Poly> out(std::max(d + 1, 0), Poly(p.vars()));
  for (const auto& [e, c] : p.terms()) {
    int k = i < 0 ? 0 : e[i];
    Exponents ne = e;
    if (i >= 0) ne[i] = 0;
    out[k] += Poly::monomial(c, std::move(ne), p.vars());
  }
  return out;
}

Poly from_coefficients(const std::vector<Poly>& coeffs, std::string_view var) {
  std::vector<std::string> vars;
  for (const auto& c : coeffs) vars = merge_vars(vars, c.vars());
  Poly x = Poly::variable(var, vars);
  vars = x.vars();
  Poly out(vars);
  Poly xk = Poly::constant(1, vars);
  for (const auto& c : coeffs) {
    out += c * xk;
    xk *= x;
  }
  return out;
}

Poly primitive_integer(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (p.leading_coefficient() < 0) scale = -scale;
  return p * scale;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading_coefficient());
}

}  // namespace sextic
