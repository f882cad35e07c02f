// Univariate factorization over Q: Cantor-Zassenhaus modulo a small prime,
// quadratic Hensel lifting, and subset recombination.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "sextic/unipoly.hpp"

namespace sextic {

namespace {

using u64 = std::uint64_t;
using PVec = std::vector<u64>;      // coefficients in [0, p), low degree first
using ZVec = std::vector<Integer>;  // integer coefficients, low degree first

// ---------- arithmetic modulo a word-sized prime ----------

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PVec& a) { return static_cast<int>(a.size()) - 1; }

PVec padd(const PVec& a, const PVec& b, u64 p) {
  PVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = s % p;
  }
  ptrim(r);
  return r;
}

PVec psub(const PVec& a, const PVec& b, u64 p) {
  PVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  ptrim(r);
  return r;
}

PVec pmul(const PVec& a, const PVec& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  ptrim(r);
  return r;
}

std::pair<PVec, PVec> pdivrem(PVec a, const PVec& b, u64 p) {
  if (b.empty()) throw std::domain_error("division by zero mod p");
  if (a.size() < b.size()) return {{}, a};
  PVec q(a.size() - b.size() + 1, 0);
  u64 inv = invmod(b.back(), p);
  for (int k = pdeg(a); k >= pdeg(b); --k) {
    u64 t = mulmod(a[k], inv, p);
    if (!t) continue;
    q[k - pdeg(b)] = t;
    for (int j = 0; j <= pdeg(b); ++j) a[k - pdeg(b) + j] = (a[k - pdeg(b) + j] + p - mulmod(t, b[j], p)) % p;
  }
  a.resize(b.size() - 1);
  ptrim(a);
  ptrim(q);
  return {q, a};
}

PVec pmonic(PVec a, u64 p) {
  if (a.empty()) return a;
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

PVec pgcd(PVec a, PVec b, u64 p) {
  while (!b.empty()) {
    PVec r = pdivrem(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

// Returns (g, s, t) with s*a + t*b = g monic.
void pxgcd(const PVec& a, const PVec& b, u64 p, PVec& g, PVec& s, PVec& t) {
  PVec r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = pdivrem(r0, r1, p);
    PVec s2 = psub(s0, pmul(q, s1, p), p);
    PVec t2 = psub(t0, pmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = invmod(r0.back(), p);
  g = pmonic(r0, p);
  s = s0;
  t = t0;
  for (auto& c : s) c = mulmod(c, inv, p);
  for (auto& c : t) c = mulmod(c, inv, p);
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& m, u64 p) { return pdivrem(pmul(a, b, p), m, p).second; }

PVec ppow_mod(PVec base, const Integer& e, const PVec& m, u64 p) {
  PVec r = {1};
  r = pdivrem(r, m, p).second;
  base = pdivrem(base, m, p).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = pmulmod(r, r, m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = pmulmod(r, base, m, p);
  }
  return r;
}

// Equal-degree splitting of a product of distinct monic irreducibles of degree d.
void equal_degree_split(const PVec& f, int d, u64 p, std::mt19937_64& rng, std::vector<PVec>& out) {
  if (pdeg(f) == d) {
    out.push_back(f);
    return;
  }
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, d);
  Integer e = (q - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  while (true) {
    PVec a(pdeg(f), 0);
    for (auto& c : a) c = coef(rng);
    ptrim(a);
    if (pdeg(a) < 1) continue;
    PVec b = psub(ppow_mod(a, e, f, p), {1}, p);
    PVec g = pgcd(f, b, p);
    if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(pdivrem(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial modulo an odd prime.
std::vector<PVec> factor_mod_p(PVec f, u64 p, std::mt19937_64& rng) {
  std::vector<PVec> out;
  PVec x = {0, 1};
  PVec h = x;
  for (int d = 1; 2 * d <= pdeg(f); ++d) {
    h = ppow_mod(h, Integer(static_cast<unsigned long>(p)), f, p);
    PVec g = pgcd(f, psub(h, x, p), p);
    if (pdeg(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      f = pdivrem(f, g, p).first;
      h = pdivrem(h, f, p).second;
    }
  }
  if (pdeg(f) > 0) out.push_back(f);
  return out;
}

// ---------- integer polynomials modulo a growing modulus ----------

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

void ztrim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZVec zreduce(ZVec a, const Integer& m) {
  for (auto& c : a) c = mod_pos(c, m);
  ztrim(a);
  return a;
}

ZVec zadd(const ZVec& a, const ZVec& b) {
  ZVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(r);
  return r;
}

ZVec zsub(const ZVec& a, const ZVec& b) {
  ZVec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

ZVec zmul(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

// Division by a monic polynomial modulo m.
std::pair<ZVec, ZVec> zdivrem_monic(ZVec a, const ZVec& b, const Integer& m) {
  a = zreduce(std::move(a), m);
  if (a.size() < b.size()) return {{}, a};
  const int db = static_cast<int>(b.size()) - 1;
  ZVec q(a.size() - b.size() + 1, 0);
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    Integer t = mod_pos(a[k], m);
    if (t == 0) continue;
    q[k - db] = t;
    for (int j = 0; j <= db; ++j) a[k - db + j] = mod_pos(a[k - db + j] - t * b[j], m);
  }
  a.resize(db);
  ztrim(a);
  ztrim(q);
  return {q, a};
}

ZVec to_zvec(const PVec& a) {
  ZVec r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

PVec to_pvec(const ZVec& a, u64 p) {
  PVec r;
  Integer pp(static_cast<unsigned long>(p));
  for (const auto& c : a) r.push_back(mod_pos(c, pp).get_ui());
  ptrim(r);
  return r;
}

// One quadratic Hensel step (f = g*h mod m, s*g + t*h = 1 mod m, h monic) to modulus m^2.
void hensel_step(const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t, const Integer& m) {
  Integer M = m * m;
  ZVec e = zreduce(zsub(f, zmul(g, h)), M);
  auto [q, r] = zdivrem_monic(zmul(s, e), h, M);
  ZVec g2 = zreduce(zadd(g, zadd(zmul(t, e), zmul(q, g))), M);
  ZVec h2 = zreduce(zadd(h, r), M);
  ZVec b = zreduce(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZVec{1}), M);
  auto [c, d] = zdivrem_monic(zmul(s, b), h2, M);
  s = zreduce(zsub(s, d), M);
  t = zreduce(zsub(t, zadd(zmul(t, b), zmul(c, g2))), M);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc(f) * prod(factors) from mod p to mod p^(2^steps); returns monic lifts.
std::vector<ZVec> multifactor_lift(const ZVec& f, const std::vector<PVec>& factors, u64 p, int steps,
                                   const Integer& M) {
  if (factors.size() == 1) {
    Integer inv;
    Integer lc = mod_pos(f.back(), M);
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    ZVec r = f;
    for (auto& c : r) c = mod_pos(c * inv, M);
    return {r};
  }
  std::size_t half = factors.size() / 2;
  std::vector<PVec> left(factors.begin(), factors.begin() + half);
  std::vector<PVec> right(factors.begin() + half, factors.end());
  PVec g0 = {to_pvec(ZVec{f.back()}, p)[0]};
  for (const auto& u : left) g0 = pmul(g0, u, p);
  PVec h0 = {1};
  for (const auto& u : right) h0 = pmul(h0, u, p);
  PVec gg, s0, t0;
  pxgcd(g0, h0, p, gg, s0, t0);
  ZVec g = to_zvec(g0), h = to_zvec(h0), s = to_zvec(s0), t = to_zvec(t0);
  Integer m(static_cast<unsigned long>(p));
  for (int i = 0; i < steps; ++i) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  auto a = multifactor_lift(g, left, p, steps, M);
  auto b = multifactor_lift(h, right, p, steps, M);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ZVec symmetric(ZVec a, const Integer& M) {
  Integer half = M / 2;
  for (auto& c : a) {
    c = mod_pos(c, M);
    if (c > half) c -= M;
  }
  ztrim(a);
  return a;
}

Integer content(const ZVec& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZVec primitive(ZVec a) {
  Integer g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact division over Z; empty optional when b does not divide a.
std::optional<ZVec> zdivide(ZVec a, const ZVec& b) {
  if (a.size() < b.size()) return std::nullopt;
  const int db = static_cast<int>(b.size()) - 1;
  ZVec q(a.size() - b.size() + 1, 0);
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    if (a[k] == 0) continue;
    if (!mpz_divisible_p(a[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer t = a[k] / b.back();
    q[k - db] = t;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= t * b[j];
  }
  for (int k = 0; k < db; ++k)
    if (a[k] != 0) return std::nullopt;
  return q;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

constexpr u64 kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
                           97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
                           191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281,
                           283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397,
                           401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503,
                           509, 521, 523, 541, 547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617, 619};

// Irreducible factors of a primitive squarefree integer polynomial of degree >= 2.
std::vector<ZVec> zassenhaus(ZVec f) {
  const int n = static_cast<int>(f.size()) - 1;
  std::mt19937_64 rng(0x5eed5eedULL);
  u64 best_p = 0;
  std::vector<PVec> best;
  int good = 0;
  for (u64 p : kPrimes) {
    Integer pp(static_cast<unsigned long>(p));
    if (mpz_divisible_p(f.back().get_mpz_t(), pp.get_mpz_t())) continue;
    PVec fp = to_pvec(f, p);
    PVec dfp;
    for (std::size_t k = 1; k < fp.size(); ++k) dfp.push_back(mulmod(fp[k], k % p, p));
    ptrim(dfp);
    if (pdeg(pgcd(fp, dfp, p)) != 0) continue;
    auto facs = factor_mod_p(pmonic(fp, p), p, rng);
    if (best.empty() || facs.size() < best.size()) {
      best = facs;
      best_p = p;
    }
    if (best.size() == 1 || ++good >= 5) break;
  }
  if (best.empty()) throw std::runtime_error("no suitable prime for factorization");
  if (best.size() == 1) return {f};

  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = 2 * abs(f.back()) * maxc * (n + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  Integer M(static_cast<unsigned long>(best_p));
  int steps = 0;
  while (M <= bound) {
    M *= M;
    ++steps;
  }
  std::vector<ZVec> lifted = multifactor_lift(f, best, best_p, steps, M);

  std::vector<ZVec> out;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZVec g{f.back()};
      for (std::size_t i : idx) g = zreduce(zmul(g, lifted[i]), M);
      g = primitive(symmetric(g, M));
      if (f.front() != 0 && g.front() != 0 && !mpz_divisible_p(f.front().get_mpz_t(), g.front().get_mpz_t()))
        continue;
      auto q = zdivide(f, g);
      if (!q) continue;
      out.push_back(g);
      f = primitive(*q);
      std::vector<ZVec> rest;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(lifted[i]);
      lifted = std::move(rest);
      found = true;
      break;
    } while (next_combination(idx, lifted.size()));
    if (!found) ++s;
  }
  if (f.size() > 1) out.push_back(primitive(f));
  return out;
}

}  // namespace

std::vector<UniPoly> factor_squarefree(const UniPoly& p) {
  if (p.degree() <= 0) return {};
  if (p.degree() == 1) return {p.monic()};
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZVec f;
  for (const auto& c : p.coeffs()) f.push_back(Integer(c * den));
  f = primitive(f);
  std::vector<UniPoly> out;
  for (const auto& g : zassenhaus(f)) {
    std::vector<Rational> c(g.begin(), g.end());
    out.push_back(UniPoly(p.var(), std::move(c)).monic());
  }
  return out;
}

}  // namespace sextic
