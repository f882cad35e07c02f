#include <algorithm>
#include <stdexcept>

#include "sextic/poly.hpp"

namespace sextic {

namespace {

// Fraction-free (Bareiss) determinant over the polynomial ring.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1, vars);
  Poly prev = Poly::constant(1, vars);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Poly(vars);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = m[k][k] * m[i][j];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) v -= m[i][k] * m[k][j];
        m[i][j] = divexact(v, prev);
      }
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

Poly resultant(const Poly& p_in, const Poly& q_in, std::string_view var) {
  if (p_in.is_zero() || q_in.is_zero()) throw std::domain_error("resultant of zero polynomial");
  auto vars = merge_vars(p_in.vars(), q_in.vars());
  if (std::find(vars.begin(), vars.end(), std::string(var)) == vars.end()) vars.emplace_back(var);
  Poly p = p_in.with_vars(vars);
  Poly q = q_in.with_vars(vars);
  int m = p.degree(var);
  int n = q.degree(var);
  if (m <= 0 && n <= 0) throw std::domain_error("both inputs constant in " + std::string(var));
  auto pc = coefficients_in(p, var);
  auto qc = coefficients_in(q, var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Poly>> sylvester(size, std::vector<Poly>(size, Poly(vars)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) sylvester[i][i + k] = pc[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) sylvester[n + i][i + k] = qc[n - k];
  return bareiss_determinant(std::move(sylvester), vars);
}

}  // namespace sextic
