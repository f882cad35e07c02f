#include <algorithm>
#include <map>
#include <numeric>

#include "sextic/local.hpp"

namespace sextic {

NewtonPolygon newton_polygon(const Poly& germ) {
  if (germ.is_zero()) throw std::domain_error("zero germ has no Newton polygon");
  for (const auto& v : germ.used_vars())
    if (v != "x" && v != "y") throw std::invalid_argument("germ depends on unbound symbol " + v);
  if (germ.constant_term() != 0) throw NotOnCurve();
  const int ix = germ.var_index("x"), iy = germ.var_index("y");
  auto ex = [&](const Exponents& e) { return ix < 0 ? 0 : e[ix]; };
  auto ey = [&](const Exponents& e) { return iy < 0 ? 0 : e[iy]; };

  NewtonPolygon np;
  std::map<std::pair<int, int>, Rational> coef;
  np.x_power = np.y_power = -1;
  for (const auto& [e, c] : germ.terms()) {
    int i = ex(e), j = ey(e);
    np.support.emplace_back(i, j);
    coef[{i, j}] = c;
    if (np.x_power < 0 || i < np.x_power) np.x_power = i;
    if (np.y_power < 0 || j < np.y_power) np.y_power = j;
  }
  std::sort(np.support.begin(), np.support.end());

  // Lowest x power for each y power of the germ with x^a y^b removed.
  std::map<int, int> low;
  for (const auto& [k, c] : coef) {
    int i = k.first - np.x_power, j = k.second - np.y_power;
    auto it = low.find(j);
    if (it == low.end() || i < it->second) low[j] = i;
  }
  int cj = low.begin()->first == 0 ? -1 : 0;
  for (const auto& [j, i] : low)
    if (i == 0) {
      cj = j;
      break;
    }
  bool degenerate = np.x_power > 1 || np.y_power > 1;
  int ci = 0;
  while (cj > 0) {
    int best_j = -1;
    Rational best;
    for (const auto& [j, i] : low) {
      if (j >= cj) break;
      Rational sl(i - ci, cj - j);
      sl.canonicalize();
      if (best_j < 0 || sl < best || (sl == best && j < best_j)) {
        best = sl;
        best_j = j;
      }
    }
    NewtonFace f;
    f.i0 = ci + np.x_power;
    f.j0 = cj + np.y_power;
    f.i1 = low[best_j] + np.x_power;
    f.j1 = best_j + np.y_power;
    int g = std::gcd(f.i1 - f.i0, f.j0 - f.j1);
    f.a = (f.j0 - f.j1) / g;
    f.b = (f.i1 - f.i0) / g;
    std::vector<Rational> phi(g + 1, Rational(0));
    for (int k = 0; k <= g; ++k) {
      auto it = coef.find({f.i1 - k * f.b, f.j1 + k * f.a});
      if (it != coef.end()) phi[k] = it->second;
    }
    f.face_poly = UniPoly("z", std::move(phi));
    f.factors = factor(f.face_poly);
    for (const auto& [h, mult] : f.factors)
      if (mult > 1) degenerate = true;
    np.faces.push_back(std::move(f));
    ci = low[best_j];
    cj = best_j;
  }
  np.nondegenerate = !degenerate;
  return np;
}

std::optional<std::vector<InitialBranch>> nondegenerate_branches(const NewtonPolygon& np) {
  if (!np.nondegenerate) return std::nullopt;
  std::vector<InitialBranch> out;
  if (np.x_power == 1) {
    InitialBranch b;
    b.a = 1;
    b.axis = "x";
    out.push_back(b);
  }
  if (np.y_power == 1) {
    InitialBranch b;
    b.a = 1;
    b.axis = "y";
    out.push_back(b);
  }
  for (const auto& f : np.faces)
    for (const auto& [h, mult] : f.factors)
      for (int k = 0; k < h.degree(); ++k) {
        InitialBranch b;
        b.a = f.a;
        b.b = f.b;
        b.alpha = h;
        out.push_back(b);
      }
  return out;
}

}  // namespace sextic
