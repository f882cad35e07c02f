#include "bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sextic::detail {

namespace {

void accumulate(const Field& K, BiPoly& into, std::pair<int, int> key, const Num& c) {
  if (K.is_zero(c)) return;
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(key, c);
    return;
  }
  it->second = K.add(it->second, c);
  if (K.is_zero(it->second)) into.erase(it);
}

std::vector<Rational> binomial_row(int n) {
  std::vector<Rational> row(n + 1, Rational(1));
  for (int k = 1; k < n; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    row[k] = Rational(b);
  }
  return row;
}

}  // namespace

BiPoly bp_from_poly(const Field& K, const Poly& f, const std::string& xv, const std::string& yv) {
  for (const auto& v : f.used_vars())
    if (v != xv && v != yv) throw std::invalid_argument("germ depends on unbound symbol " + v);
  int ix = f.var_index(xv), iy = f.var_index(yv);
  BiPoly out;
  for (const auto& [e, c] : f.terms()) {
    int i = ix < 0 ? 0 : e[ix];
    int j = iy < 0 ? 0 : e[iy];
    accumulate(K, out, {i, j}, K.from_rational(c));
  }
  return out;
}

BiPoly bp_add(const Field& K, const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b) accumulate(K, r, k, c);
  return r;
}

BiPoly bp_sub(const Field& K, const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b) accumulate(K, r, k, K.neg(c));
  return r;
}

BiPoly bp_mul(const Field& K, const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) accumulate(K, r, {ka.first + kb.first, ka.second + kb.second}, K.mul(ca, cb));
  return r;
}

BiPoly bp_scale(const Field& K, const BiPoly& a, const Num& c) {
  BiPoly r;
  if (K.is_zero(c)) return r;
  for (const auto& [k, x] : a) r.emplace(k, K.mul(x, c));
  return r;
}

BiPoly bp_pow(const Field& K, const BiPoly& a, int e) {
  BiPoly r{{{0, 0}, K.one()}};
  for (int i = 0; i < e; ++i) r = bp_mul(K, r, a);
  return r;
}

BiPoly bp_dx(const Field& K, const BiPoly& a) {
  BiPoly r;
  for (const auto& [k, c] : a)
    if (k.first > 0) accumulate(K, r, {k.first - 1, k.second}, K.mul(c, K.from_rational(k.first)));
  return r;
}

BiPoly bp_dy(const Field& K, const BiPoly& a) {
  BiPoly r;
  for (const auto& [k, c] : a)
    if (k.second > 0) accumulate(K, r, {k.first, k.second - 1}, K.mul(c, K.from_rational(k.second)));
  return r;
}

BiPoly bp_translate(const Field& K, const BiPoly& a, const Num& u, const Num& v) {
  int maxi = 0, maxj = 0;
  for (const auto& [k, c] : a) {
    maxi = std::max(maxi, k.first);
    maxj = std::max(maxj, k.second);
  }
  std::vector<Num> upow{K.one()}, vpow{K.one()};
  for (int i = 1; i <= maxi; ++i) upow.push_back(K.mul(upow.back(), u));
  for (int j = 1; j <= maxj; ++j) vpow.push_back(K.mul(vpow.back(), v));
  BiPoly r;
  for (const auto& [k, c] : a) {
    auto bi = binomial_row(k.first), bj = binomial_row(k.second);
    for (int s = 0; s <= k.first; ++s) {
      Num cs = K.mul(c, K.mul(K.from_rational(bi[s]), upow[k.first - s]));
      if (K.is_zero(cs)) continue;
      for (int t = 0; t <= k.second; ++t)
        accumulate(K, r, {s, t}, K.mul(cs, K.mul(K.from_rational(bj[t]), vpow[k.second - t])));
    }
  }
  return r;
}

BiPoly bp_shear(const Field& K, const BiPoly& a, const Num& c) {
  int maxi = 0;
  for (const auto& [k, x] : a) maxi = std::max(maxi, k.first);
  std::vector<Num> cpow{K.one()};
  for (int i = 1; i <= maxi; ++i) cpow.push_back(K.mul(cpow.back(), c));
  BiPoly r;
  for (const auto& [k, x] : a) {
    auto bi = binomial_row(k.first);
    for (int s = 0; s <= k.first; ++s)
      accumulate(K, r, {s, k.second + k.first - s}, K.mul(x, K.mul(K.from_rational(bi[s]), cpow[k.first - s])));
  }
  return r;
}

int bp_order(const BiPoly& a) {
  int o = -1;
  for (const auto& [k, c] : a) {
    int d = k.first + k.second;
    if (o < 0 || d < o) o = d;
  }
  return o;
}

KPoly bp_form(const Field& K, const BiPoly& a, int d) {
  KPoly r(d + 1);
  for (const auto& [k, c] : a)
    if (k.first + k.second == d) r[k.first] = c;
  return K.kp_trim(std::move(r));
}

Num bp_coeff(const BiPoly& a, int i, int j) {
  auto it = a.find({i, j});
  return it == a.end() ? Num{} : it->second;
}

PointField point_field(const AlgebraicPoint& p) {
  PointField pf;
  if (p.is_rational()) {
    pf.x = pf.K.from_rational(p.x_rational());
    pf.y = pf.K.from_rational(p.y_rational());
    return pf;
  }
  pf.K = Field::from_minpoly(p.minpoly);
  Num t = pf.K.generator();
  pf.x = pf.K.eval_unipoly(p.x, t);
  pf.y = pf.K.eval_unipoly(p.y, t);
  return pf;
}

BiPoly germ_at(const PointField& pf, const Poly& f) {
  return bp_translate(pf.K, bp_from_poly(pf.K, f), pf.x, pf.y);
}

}  // namespace sextic::detail
