#include "sextic/components.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "sextic/unipoly.hpp"

namespace sextic {

namespace {

const std::vector<std::string> kXY{"x", "y"};

Poly X() { return Poly::variable("x", kXY); }
Poly Y() { return Poly::variable("y", kXY); }

// The shear x -> x + k y and its inverse.
Poly shear(const Poly& f, const Rational& k) {
  if (k == 0) return f;
  return substitute(f, {{"x", X() + Poly::constant(k, kXY) * Y()}});
}

// Smallest k in 0, 1, -1, 2, -2, ... with f_d(k, 1) != 0, so that every factor
// of the sheared curve has a constant leading coefficient in y.
Rational general_shear(const Poly& f) {
  const Poly top = f.homogeneous_part(f.total_degree());
  for (int i = 0;; ++i) {
    Rational k((i + 1) / 2 * (i % 2 ? 1 : -1));
    if (!evaluate(top, {{"x", k}, {"y", Rational(1)}}).is_zero()) return k;
  }
}

UniPoly in_y(const Poly& g, const Rational& x0) { return UniPoly::from_poly(evaluate(g, {{"x", x0}}), "y"); }

// Monic quadratic divisors of u, as (B, C) with y^2 + B y + C.
std::vector<std::pair<Rational, Rational>> quadratic_divisors(const UniPoly& u) {
  std::vector<std::pair<Rational, Rational>> out;
  std::vector<std::pair<UniPoly, int>> fac = factor(u);
  std::vector<Rational> roots;
  for (const auto& [p, e] : fac) {
    UniPoly m = p.monic();
    if (m.degree() == 2) out.emplace_back(m.coeff(1), m.coeff(0));
    if (m.degree() == 1) {
      roots.push_back(-m.coeff(0));
      if (e >= 2) out.emplace_back(2 * m.coeff(0), m.coeff(0) * m.coeff(0));
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      out.emplace_back(-(roots[i] + roots[j]), roots[i] * roots[j]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> distinct_roots(const UniPoly& u) {
  std::vector<Rational> out;
  for (const auto& [r, m] : rational_roots(u).roots) out.push_back(r);
  return out;
}

Rational conic_determinant(const Poly& q) {
  auto c = [&](int i, int j) { return q.coefficient({i, j}); };
  const Rational a = c(2, 0), b = c(1, 1) / 2, cc = c(0, 2), d = c(1, 0) / 2, e = c(0, 1) / 2, f = c(0, 0);
  return a * (cc * f - e * e) - b * (b * f - e * d) + d * (b * e - cc * d);
}

// Divides rest by p as often as possible.
int strip(Poly& rest, const Poly& p) {
  int m = 0;
  while (rest.total_degree() >= p.total_degree()) {
    auto q = divide(rest, p);
    if (!q) break;
    rest = *q;
    ++m;
  }
  return m;
}

constexpr std::size_t kConicCandidateCap = 200000;

bool is_form(const Poly& f) {
  const int d = f.total_degree();
  for (const auto& [e, c] : f.terms())
    if (e[0] + e[1] != d) return false;
  return true;
}

// Irreducible factors over Q of a binary form, from its dehomogenization.
std::vector<std::pair<Poly, int>> factor_form(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  const UniPoly u = UniPoly::from_poly(evaluate(f, {{"y", Rational(1)}}), "x");
  for (const auto& [p, m] : factor(u)) {
    Poly h(kXY);
    for (int i = 0; i <= p.degree(); ++i)
      h += Poly::monomial(p.coeff(i), {i, p.degree() - i}, kXY);
    out.push_back({normalize_factor(h), m});
  }
  // The dehomogenization drops the factor y once per missing degree.
  if (const int m = f.total_degree() - u.degree(); m > 0) out.push_back({Y(), m});
  return out;
}

}  // namespace

std::optional<Poly> divides(const Poly& f, const Poly& g) {
  if (g.is_zero()) return std::nullopt;
  return divide(f.with_vars(merge_vars(f.vars(), g.vars())), g.with_vars(merge_vars(f.vars(), g.vars())));
}

Poly normalize_factor(const Poly& p) { return primitive_integer(p.with_vars(merge_vars(kXY, p.vars())).with_vars(kXY)); }

std::vector<Poly> find_linear_factors(const Poly& f0) {
  const Poly f = normalize_factor(f0);
  std::vector<Poly> out;
  if (f.total_degree() < 1) return out;
  const Rational k = general_shear(f);
  const Poly g = shear(f, k);
  const int d = g.total_degree();
  // A line y = r x + rho of the sheared curve: r is a root of g_d(1, y) and
  // rho a root of g(0, y).
  const std::vector<Rational> slopes = distinct_roots(in_y(g.homogeneous_part(d), 1));
  const std::vector<Rational> offsets = distinct_roots(in_y(g, 0));
  for (const auto& r : slopes)
    for (const auto& rho : offsets) {
      Poly line = Y() - Poly::constant(r, kXY) * X() - Poly::constant(rho, kXY);
      if (!divide(g, line)) continue;
      out.push_back(normalize_factor(shear(line, -k)));
    }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return format(a) < format(b); });
  return out;
}

ConicSearch find_conic_factors(const Poly& f0) {
  const Poly f = normalize_factor(f0);
  ConicSearch out;
  if (f.total_degree() < 2) return out;
  const Rational k = general_shear(f);
  const Poly g = shear(f, k);
  const int d = g.total_degree();
  // q = y^2 + (b1 x + b0) y + c2 x^2 + c1 x + c0; the top form fixes (b1, c2)
  // and the fibres over x = 0 and x = 1 fix the rest.
  auto tops = quadratic_divisors(in_y(g.homogeneous_part(d), 1));
  auto at0 = quadratic_divisors(in_y(g, 0));
  auto at1 = quadratic_divisors(in_y(g, 1));
  if (tops.size() * at0.size() * at1.size() > kConicCandidateCap) {
    out.undecided = true;
    return out;
  }
  std::set<std::string> seen;
  for (const auto& [b1, c2] : tops)
    for (const auto& [b0, c0] : at0)
      for (const auto& [B1, C1] : at1) {
        if (b1 + b0 != B1) continue;
        const Rational c1 = C1 - c2 - c0;
        Poly q = Y() * Y() + (Poly::constant(b1, kXY) * X() + Poly::constant(b0, kXY)) * Y() +
                 Poly::constant(c2, kXY) * X() * X() + Poly::constant(c1, kXY) * X() + Poly::constant(c0, kXY);
        if (!divide(g, q)) continue;
        Poly c = normalize_factor(shear(q, -k));
        if (!find_linear_factors(c).empty()) continue;
        if (seen.insert(format(c)).second) out.conics.push_back(c);
      }
  return out;
}

std::optional<std::pair<Poly, Poly>> linear_torus_split(const TorusPair& pair) {
  auto lt = is_linear_torus(pair);
  if (!lt) return std::nullopt;
  auto ell = lt->rational_root();
  if (!ell) return std::nullopt;
  const Poly f3 = pair.f3.with_vars(merge_vars(kXY, pair.f3.vars())).with_vars(kXY);
  const Poly cube = pow(ell->with_vars(kXY), 3);
  return std::pair{normalize_factor(f3 + cube), normalize_factor(f3 - cube)};
}

std::vector<const Factor*> ComponentDecomposition::pieces() const {
  std::vector<const Factor*> out;
  for (const auto& f : factors) out.push_back(&f);
  for (const auto& f : residual_pieces) out.push_back(&f);
  return out;
}

bool ComponentDecomposition::complete() const {
  for (const Factor* p : pieces())
    if (!p->rational_irreducible || !p->geometric) return false;
  return true;
}

std::optional<std::vector<int>> ComponentDecomposition::component_degrees() const {
  std::vector<int> out;
  for (const Factor* p : pieces()) {
    if (!p->geometric) return std::nullopt;
    for (int m = 0; m < p->multiplicity; ++m) out.insert(out.end(), p->geometric->begin(), p->geometric->end());
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

ComponentDecomposition decompose(const Poly& f0, const std::vector<Poly>& hints, const std::optional<TorusPair>& pair) {
  ComponentDecomposition dec;
  Poly rest = normalize_factor(f0);
  if (rest.is_zero()) throw std::invalid_argument("zero polynomial has no components");

  auto add = [&](const Poly& p, int mult, const std::string& source) {
    Factor fac;
    fac.poly = p;
    fac.degree = p.total_degree();
    fac.multiplicity = mult;
    fac.source = source;
    if (fac.degree == 1) {
      fac.rational_irreducible = true;
      fac.geometric = std::vector<int>{1};
    }
    dec.factors.push_back(std::move(fac));
  };

  for (const auto& h0 : hints) {
    Poly h = normalize_factor(h0);
    if (h.total_degree() < 1) continue;
    int m = strip(rest, h);
    if (m == 0) {
      dec.notes.push_back("hint " + format(h) + " does not divide the curve");
      continue;
    }
    add(h, m, "hint");
  }

  // A binary form splits into lines through the origin; its rational
  // factors come from one univariate factorization.
  if (rest.total_degree() >= 1 && is_form(rest)) {
    for (const auto& [p, m] : factor_form(rest)) {
      strip(rest, p);
      add(p, m, p.total_degree() == 1 ? "line" : "form");
      dec.factors.back().rational_irreducible = true;
      dec.factors.back().geometric = std::vector<int>(p.total_degree(), 1);
    }
  }

  for (const auto& line : find_linear_factors(rest)) add(line, strip(rest, line), "line");

  bool conics_decided = true;
  if (rest.total_degree() >= 4) {
    ConicSearch cs = find_conic_factors(rest);
    for (const auto& c : cs.conics) {
      int m = strip(rest, c);
      if (m > 0) add(c, m, "conic");
    }
    if (cs.undecided) {
      conics_decided = false;
      dec.undecided = true;
      dec.notes.push_back("conic search abandoned: too many candidate fibres");
    }
  } else if (rest.total_degree() == 2) {
    add(rest, 1, "conic");
    rest = Poly::constant(1, kXY);
  }

  if (pair && rest.total_degree() >= 3) {
    if (auto split = linear_torus_split(*pair)) {
      for (const Poly& c : {split->first, split->second}) {
        if (c.total_degree() != 3) continue;
        int m = strip(rest, c);
        if (m > 0) add(c, m, "linear-torus");
      }
    }
  }

  if (!rest.is_constant()) {
    Factor r;
    r.poly = rest;
    r.degree = rest.total_degree();
    r.source = "residual";
    dec.residual_pieces.push_back(std::move(r));
  }
  dec.residual = rest;

  // Irreducibility over Q once smaller rational factors are excluded.
  for (auto* list : {&dec.factors, &dec.residual_pieces})
    for (auto& fac : *list) {
      if (fac.degree == 1 || fac.source == "form") continue;
      const bool no_lines = fac.source == "line" || find_linear_factors(fac.poly).empty();
      if (fac.degree <= 3)
        fac.rational_irreducible = no_lines;
      else if (fac.degree <= 5)
        fac.rational_irreducible = no_lines && conics_decided && find_conic_factors(fac.poly).conics.empty();
      if (fac.degree == 2 && fac.rational_irreducible)
        fac.geometric = conic_determinant(fac.poly) == 0 ? std::vector<int>{1, 1} : std::vector<int>{2};
    }
  return dec;
}

std::vector<std::vector<int>> conjugate_split_options(int degree, int delta_total) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= degree; ++k) {
    if (degree % k) continue;
    const int e = degree / k;
    const int cross = k * (k - 1) / 2 * e * e;
    const int rest = delta_total - cross;
    if (rest < 0 || rest % k) continue;
    if (rest / k > (e - 1) * (e - 2) / 2) continue;
    out.push_back(std::vector<int>(k, e));
  }
  return out;
}

void infer_geometric(Factor& piece, int delta_total) {
  if (piece.geometric || !piece.rational_irreducible) return;
  auto options = conjugate_split_options(piece.degree, delta_total);
  if (options.size() == 1) piece.geometric = options.front();
}

}  // namespace sextic
