#pragma once

// Independent reference computations used only by the tests. None of them
// calls the code path it checks.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sextic/catalog.hpp"

namespace oracle {

using sextic::Poly;
using sextic::Rational;

inline const std::vector<std::string> kXY{"x", "y"};

// Determinant by Gaussian elimination over Q.
inline Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Sylvester resultant of two univariate coefficient lists (index = power),
// rows of p above rows of q.
inline Rational sylvester(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1;
  const int size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = p[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = q[n - i];
  return det(s);
}

// Coefficients in `var` of a polynomial whose only variable is `var`.
inline std::vector<Rational> dense(const Poly& p, const std::string& var) {
  std::vector<Rational> c(std::max(p.degree(var), 0) + 1, Rational(0));
  const int i = p.var_index(var);
  for (const auto& [e, v] : p.terms()) c[i < 0 ? 0 : e[i]] += v;
  return c;
}

// Milnor number of a convenient Newton-nondegenerate germ at the origin:
// 2V - a - b + 1 with V the area under the Newton boundary.
inline std::optional<int> kouchnirenko(const Poly& germ) {
  std::vector<std::pair<int, int>> pts;
  const int ix = germ.var_index("x"), iy = germ.var_index("y");
  for (const auto& [e, c] : germ.terms()) pts.push_back({ix < 0 ? 0 : e[ix], iy < 0 ? 0 : e[iy]});
  int a = -1, b = -1;
  for (auto [i, j] : pts) {
    if (j == 0 && (a < 0 || i < a)) a = i;
    if (i == 0 && (b < 0 || j < b)) b = j;
  }
  if (a < 0 || b < 0) return std::nullopt;
  // Lower convex hull from (0, b) to (a, 0).
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<long, long>> hull;
  for (auto [i, j] : pts) {
    if (i > a) continue;
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull.back();
      if ((x2 - x1) * (j - y1) - (y2 - y1) * (i - x1) <= 0) hull.pop_back();
      else break;
    }
    if (!hull.empty() && hull.back().first == i) continue;
    hull.push_back({i, j});
  }
  while (!hull.empty() && hull.front().first == 0 && hull.front().second != b) hull.erase(hull.begin());
  // Face polynomials must be squarefree away from the axes.
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    auto [x0, y0] = hull[k];
    auto [x1, y1] = hull[k + 1];
    const long g = std::gcd(x1 - x0, y0 - y1);
    std::vector<Rational> face(g + 1, Rational(0));
    for (const auto& [e, c] : germ.terms()) {
      long i = ix < 0 ? 0 : e[ix], j = iy < 0 ? 0 : e[iy];
      if ((i - x0) * (y0 - y1) + (j - y0) * (x1 - x0) == 0) face[(i - x0) * g / (x1 - x0)] += c;
    }
    sextic::UniPoly u("z", face);
    if (sextic::gcd(u, u.derivative()).degree() > 0) return std::nullopt;
  }
  long twice_area = 0;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k)
    twice_area += (hull[k + 1].first - hull[k].first) * (hull[k].second + hull[k + 1].second);
  return static_cast<int>(twice_area - a - b + 1);
}

// Number of tangent lines through a generic point: smooth points of f on the
// polar (x - a) f_x + (y - b) f_y = 0. Needs a monic-in-y curve whose
// singular points have distinct x coordinates, and a generic (a, b).
inline int class_by_polar(const Poly& f, const Rational& a, const Rational& b, int singular_x_count) {
  Poly X = Poly::variable("x", kXY), Y = Poly::variable("y", kXY);
  Poly h = (X - Poly::constant(a, kXY)) * sextic::derivative(f, "x") +
           (Y - Poly::constant(b, kXY)) * sextic::derivative(f, "y");
  Poly r = sextic::resultant(f, h, "y");
  sextic::UniPoly u = sextic::UniPoly::from_poly(r, "x");
  sextic::UniPoly sq = sextic::squarefree_part(u);
  return sq.degree() - singular_x_count;
}

// Random polynomial with small coefficients.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_degree, int terms) {
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 4), deg(0, max_degree);
  Poly p(vars);
  for (int t = 0; t < terms; ++t) {
    sextic::Exponents e(vars.size(), 0);
    int budget = deg(rng);
    for (auto& x : e) {
      std::uniform_int_distribution<int> part(0, budget);
      x = part(rng);
      budget -= x;
    }
    p += Poly::monomial(sextic::make_rational(coef(rng), den(rng)), e, vars);
  }
  return p;
}

}  // namespace oracle
