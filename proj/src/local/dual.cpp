#include <algorithm>

#include "sextic/local.hpp"

namespace sextic {

namespace {

using Series = std::vector<Rational>;

int order(const Series& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) return static_cast<int>(i);
  return -1;
}

Series derivative(const Series& s) {
  Series d;
  for (std::size_t i = 1; i < s.size(); ++i) d.push_back(s[i] * static_cast<long>(i));
  return d;
}

// a / b for power series known to `prec` terms, with ord a >= ord b.
Series divide(const Series& a, const Series& b, std::size_t prec) {
  int k = order(b);
  Series num(a.begin() + std::min<std::size_t>(k, a.size()), a.end());
  Series den(b.begin() + k, b.end());
  Series q(prec, Rational(0));
  for (std::size_t i = 0; i < prec; ++i) {
    Rational acc = i < num.size() ? num[i] : Rational(0);
    for (std::size_t j = 1; j <= i && j < den.size(); ++j) acc -= den[j] * q[i - j];
    q[i] = acc / den[0];
  }
  return q;
}

}  // namespace

Parametrization dual_branch(const Parametrization& b) {
  const std::size_t len = std::min(b.x.size(), b.y.size());
  Series x(b.x.begin(), b.x.begin() + len), y(b.y.begin(), b.y.begin() + len);
  Series dx = derivative(x), dy = derivative(y);
  int a = order(dx);
  if (a < 0) throw std::domain_error("x(t) is constant to the given precision");
  int ady = order(dy);
  if (ady >= 0 && ady < a) throw std::domain_error("branch has a vertical tangent in this chart");
  if (static_cast<int>(dx.size()) <= a) throw std::domain_error("not enough terms for the dual");
  const std::size_t prec_p = dx.size() - a;
  Series p = divide(dy, dx, prec_p);
  bool line = true;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] != 0) line = false;
  if (line) throw std::domain_error("line branch: the dual is a point");
  int ox = std::max(order(x), 0);
  const std::size_t prec = std::min(prec_p, len > static_cast<std::size_t>(ox) ? len : prec_p);
  Series q(prec, Rational(0));
  for (std::size_t i = 0; i < prec; ++i) {
    q[i] = i < y.size() ? y[i] : Rational(0);
    for (std::size_t j = 0; j <= i; ++j)
      if (j < p.size() && i - j < x.size()) q[i] -= p[j] * x[i - j];
  }
  p.resize(prec);
  return {p, q};
}

Poly implicitize(const Parametrization& b, const std::string& u, const std::string& v) {
  std::vector<std::string> vars{u, v, "t"};
  Poly t = Poly::variable("t", vars);
  auto series_poly = [&](const Series& s) {
    Poly out(vars);
    Poly pw = Poly::constant(1, vars);
    for (const auto& c : s) {
      out += c * pw;
      pw *= t;
    }
    return out;
  };
  Poly pu = Poly::variable(u, vars) - series_poly(b.x);
  Poly pv = Poly::variable(v, vars) - series_poly(b.y);
  Poly r = resultant(pu, pv, "t");
  return primitive_integer(r.with_vars({u, v}));
}

}  // namespace sextic
