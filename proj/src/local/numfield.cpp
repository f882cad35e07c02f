#include "sextic/numfield.hpp"

#include <sstream>

namespace sextic {

Field::Field() : moduli_(std::make_shared<const std::vector<KPoly>>()) {}

int Field::degree() const {
  int d = 1;
  for (const auto& m : *moduli_) d *= static_cast<int>(m.size()) - 1;
  return d;
}

Field Field::extend(const KPoly& modulus, int cap) const {
  KPoly m = kp_trim(modulus);
  if (m.size() < 2) throw std::invalid_argument("extension modulus must have positive degree");
  m = kp_monic(m);
  int d = degree() * (static_cast<int>(m.size()) - 1);
  if (d > cap) throw TowerCapExceeded(d);
  auto moduli = std::make_shared<std::vector<KPoly>>(*moduli_);
  moduli->push_back(std::move(m));
  return Field(std::move(moduli));
}

Field Field::from_minpoly(const UniPoly& m) {
  Field q;
  if (m.degree() <= 1) return q;
  KPoly km;
  UniPoly mm = m.monic();
  for (const auto& c : mm.coeffs()) km.push_back(Num{c, {}});
  return q.extend(km, m.degree());
}

Num Field::zero() const { return Num{}; }
Num Field::one() const { return from_rational_at(1, level()); }
Num Field::from_rational(const Rational& q) const { return from_rational_at(q, level()); }

Num Field::generator() const {
  if (level() == 0) throw std::logic_error("Q has no generator");
  return reduce_at({zero_at(level() - 1), from_rational_at(1, level() - 1)}, level());
}

Num Field::embed(const Num& a) const {
  if (is_zero_at(a, level() - 1)) return Num{};
  return Num{0, {a}};
}

Num Field::lift_from(const Num& a, int from_level) const {
  Num r = a;
  for (int l = from_level + 1; l <= level(); ++l) r = is_zero_at(r, l - 1) ? Num{} : Num{0, {r}};
  return r;
}

Num Field::eval_unipoly(const UniPoly& p, const Num& at) const {
  Num acc{};
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = add(mul(acc, at), from_rational(*it));
  return acc;
}

Num Field::pow(const Num& a, int e) const {
  if (e < 0) return pow(inv(a), -e);
  Num r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

std::optional<Rational> Field::as_rational(const Num& a) const {
  const Num* cur = &a;
  for (int l = level(); l > 0; --l) {
    if (cur->c.empty()) return Rational(0);
    if (cur->c.size() > 1) return std::nullopt;
    cur = &cur->c[0];
  }
  return cur->q;
}

std::string Field::to_string(const Num& a) const { return to_string_at(a, level()); }

std::string Field::to_string_at(const Num& a, int lvl) const {
  if (lvl == 0) return a.q.get_str();
  if (a.c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    if (is_zero_at(a.c[k], lvl - 1)) continue;
    if (!first) out << " + ";
    first = false;
    std::string coef = to_string_at(a.c[k], lvl - 1);
    if (k == 0) {
      out << coef;
    } else {
      if (coef != "1") out << '(' << coef << ")*";
      out << 't' << lvl;
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

bool Field::is_zero_at(const Num& a, int lvl) const { return lvl == 0 ? a.q == 0 : a.c.empty(); }

Num Field::zero_at(int) const { return Num{}; }

Num Field::from_rational_at(const Rational& q, int lvl) const {
  if (lvl == 0) return Num{q, {}};
  if (q == 0) return Num{};
  return Num{0, {from_rational_at(q, lvl - 1)}};
}

KPoly Field::trim_at(KPoly a, int lvl) const {
  while (!a.empty() && is_zero_at(a.back(), lvl)) a.pop_back();
  return a;
}

Num Field::add_at(const Num& a, const Num& b, int lvl) const {
  if (lvl == 0) return Num{a.q + b.q, {}};
  return Num{0, kadd_at(a.c, b.c, lvl - 1)};
}

Num Field::sub_at(const Num& a, const Num& b, int lvl) const {
  if (lvl == 0) return Num{a.q - b.q, {}};
  return Num{0, ksub_at(a.c, b.c, lvl - 1)};
}

Num Field::neg_at(const Num& a, int lvl) const {
  if (lvl == 0) return Num{-a.q, {}};
  Num r;
  for (const auto& x : a.c) r.c.push_back(neg_at(x, lvl - 1));
  return r;
}

Num Field::mul_at(const Num& a, const Num& b, int lvl) const {
  if (lvl == 0) return Num{a.q * b.q, {}};
  if (a.c.empty() || b.c.empty()) return Num{};
  return reduce_at(kmul_at(a.c, b.c, lvl - 1), lvl);
}

Num Field::reduce_at(KPoly a, int lvl) const {
  const KPoly& m = modulus(lvl);
  const int d = static_cast<int>(m.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= d; --k) {
    if (is_zero_at(a[k], lvl - 1)) continue;
    Num lead = a[k];
    for (int j = 0; j < d; ++j) a[k - d + j] = sub_at(a[k - d + j], mul_at(lead, m[j], lvl - 1), lvl - 1);
    a[k] = Num{};
  }
  if (static_cast<int>(a.size()) > d) a.resize(d);
  return Num{0, trim_at(std::move(a), lvl - 1)};
}

Num Field::inv_at(const Num& a, int lvl) const {
  if (is_zero_at(a, lvl)) throw std::domain_error("division by zero in number field");
  if (lvl == 0) return Num{1 / a.q, {}};
  KPoly r0 = modulus(lvl), r1 = a.c;
  KPoly s0, s1 = {from_rational_at(1, lvl - 1)};
  while (true) {
    if (r1.empty()) throw TowerSplit(lvl, kmonic_at(r0, lvl - 1));
    if (r1.size() == 1) {
      Num k = inv_at(r1[0], lvl - 1);
      KPoly s;
      for (const auto& x : s1) s.push_back(mul_at(x, k, lvl - 1));
      return reduce_at(std::move(s), lvl);
    }
    auto [q, r] = kdivrem_at(r0, r1, lvl - 1);
    KPoly s2 = ksub_at(s0, kmul_at(q, s1, lvl - 1), lvl - 1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

KPoly Field::kadd_at(const KPoly& a, const KPoly& b, int lvl) const {
  KPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i >= a.size())
      r[i] = b[i];
    else if (i >= b.size())
      r[i] = a[i];
    else
      r[i] = add_at(a[i], b[i], lvl);
  }
  return trim_at(std::move(r), lvl);
}

KPoly Field::ksub_at(const KPoly& a, const KPoly& b, int lvl) const {
  KPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i >= a.size())
      r[i] = neg_at(b[i], lvl);
    else if (i >= b.size())
      r[i] = a[i];
    else
      r[i] = sub_at(a[i], b[i], lvl);
  }
  return trim_at(std::move(r), lvl);
}

KPoly Field::kmul_at(const KPoly& a, const KPoly& b, int lvl) const {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero_at(a[i], lvl)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (is_zero_at(b[j], lvl)) continue;
      r[i + j] = add_at(r[i + j], mul_at(a[i], b[j], lvl), lvl);
    }
  }
  return trim_at(std::move(r), lvl);
}

std::pair<KPoly, KPoly> Field::kdivrem_at(const KPoly& a_in, const KPoly& b, int lvl) const {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  KPoly a = a_in;
  if (a.size() < b.size()) return {{}, a};
  const int db = static_cast<int>(b.size()) - 1;
  Num inv = inv_at(b.back(), lvl);
  KPoly q(a.size() - b.size() + 1);
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    if (is_zero_at(a[k], lvl)) continue;
    Num t = mul_at(a[k], inv, lvl);
    q[k - db] = t;
    for (int j = 0; j < db; ++j) a[k - db + j] = sub_at(a[k - db + j], mul_at(t, b[j], lvl), lvl);
    a[k] = Num{};
  }
  a.resize(db);
  return {trim_at(std::move(q), lvl), trim_at(std::move(a), lvl)};
}

KPoly Field::kmonic_at(const KPoly& a, int lvl) const {
  if (a.empty()) return a;
  Num inv = inv_at(a.back(), lvl);
  KPoly r;
  for (const auto& x : a) r.push_back(mul_at(x, inv, lvl));
  return trim_at(std::move(r), lvl);
}

KPoly Field::kgcd_at(const KPoly& a_in, const KPoly& b_in, int lvl) const {
  KPoly a = trim_at(a_in, lvl), b = trim_at(b_in, lvl);
  while (!b.empty()) {
    KPoly r = kdivrem_at(a, b, lvl).second;
    a = std::move(b);
    b = std::move(r);
  }
  return kmonic_at(a, lvl);
}

KPoly Field::kp_scale(const KPoly& a, const Num& k) const {
  KPoly r;
  for (const auto& x : a) r.push_back(mul(x, k));
  return kp_trim(std::move(r));
}

KPoly Field::kp_derivative(const KPoly& a) const {
  KPoly r;
  for (std::size_t k = 1; k < a.size(); ++k) r.push_back(mul(a[k], from_rational(static_cast<long>(k))));
  return kp_trim(std::move(r));
}

KPoly Field::kp_divexact(const KPoly& a, const KPoly& b) const {
  auto [q, r] = kp_divrem(a, b);
  if (!r.empty()) throw InexactDivision();
  return q;
}

Num Field::kp_eval(const KPoly& a, const Num& x) const {
  Num acc{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = add(mul(acc, x), *it);
  return acc;
}

std::vector<std::pair<KPoly, int>> Field::kp_squarefree(const KPoly& a_in) const {
  std::vector<std::pair<KPoly, int>> out;
  KPoly a = kp_trim(a_in);
  if (a.size() < 2) return out;
  KPoly c = kp_gcd(a, kp_derivative(a));
  KPoly w = kp_monic(kp_divexact(a, c));
  int i = 1;
  while (w.size() > 1) {
    KPoly y = kp_gcd(w, c);
    KPoly z = kp_monic(kp_divexact(w, y));
    if (z.size() > 1) out.emplace_back(z, i);
    ++i;
    w = y;
    c = kp_divexact(c, y);
  }
  return out;
}

}  // namespace sextic
