#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace sextic;
using oracle::kXY;

namespace {

Poly P(const std::string& s, const std::vector<std::string>& vars = kXY) { return parse_poly(s, vars); }

UniPoly U(const std::string& s) { return UniPoly::from_poly(P(s, {"x"}), "x"); }

}  // namespace

TEST_CASE("parse and format") {
  CHECK(format(P("x^2 - 2*x*y + y^2")) == format(P("(x - y)^2")));
  CHECK(P("3/4*x - 1/2") * Rational(4) == P("3*x - 2"));
  CHECK(P("  x *  y ") == P("x*y"));
  CHECK_THROWS_AS(P("2x"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("x + (y"), ParseError);
  CHECK_THROWS_AS(P("z + 1"), ParseError);
  CHECK_THROWS_AS(P("x/0"), ParseError);
  try {
    P("x + * y");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("parse and format round trip on the corpus") {
  int checked = 0;
  for (const auto& doc : builtin_examples()) {
    std::vector<std::string> texts;
    for (const auto* s : {&doc.f, &doc.f2, &doc.f3, &doc.expansion})
      if (*s) texts.push_back(**s);
    texts.insert(texts.end(), doc.factors.begin(), doc.factors.end());
    std::vector<std::string> vars = kXY;
    vars.insert(vars.end(), doc.parameters.begin(), doc.parameters.end());
    for (const auto& t : texts) {
      Poly p = parse_poly(t, vars);
      CHECK(parse_poly(format(p), vars) == p);
      ++checked;
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("substitute, evaluate and derivative") {
  CHECK(evaluate(P("x^2 + y^2"), {{"y", Rational(0)}}) == P("x^2"));
  CHECK(derivative(P("y^3 + x^6"), "y") == P("3*y^2"));
  CHECK(derivative(P("x^2*(x^2 - 1)^2"), "x") == P("2*x*(x^2 - 1)*(3*x^2 - 1)"));
  CHECK(derivative(P("7"), "x").is_zero());
  Poly s = substitute(P("x*y"), {{"x", P("x + y")}});
  CHECK(s == P("x*y + y^2"));
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(20240611);
  const std::vector<std::string> vars{"x", "y", "z", "w"};
  for (int i = 0; i < 200; ++i) {
    Poly a = oracle::random_poly(rng, vars, 8, 6), b = oracle::random_poly(rng, vars, 8, 6),
         c = oracle::random_poly(rng, vars, 8, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) {
      CHECK(divexact(a * b, b) == a);
      auto q = divide(a * b + Poly::monomial(1, {9, 0, 0, 0}, vars), b);
      if (q) CHECK(*q * b == a * b + Poly::monomial(1, {9, 0, 0, 0}, vars));
    }
  }
}

TEST_CASE("resultant examples and sign convention") {
  CHECK(resultant(P("x^2 - y"), P("x - 1"), "x") == P("1 - y"));
  CHECK(resultant(P("x^2 - y"), P("x^2 - y"), "x").is_zero());
  // Sylvester rows of the first argument come first; the result is (x - 1)^2.
  CHECK(resultant(P("y - x^2"), P("y - 2*x + 1"), "y") == P("x^2 - 2*x + 1"));
  CHECK_THROWS(resultant(P("x"), P("x + 1"), "y"));
}

TEST_CASE("resultant agrees with the Sylvester determinant and specializes") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Poly p = oracle::random_poly(rng, kXY, 5, 5), q = oracle::random_poly(rng, kXY, 4, 5);
    if (p.degree("y") < 1 || q.degree("y") < 1) continue;
    Poly r = resultant(p, q, "y");
    std::uniform_int_distribution<int> pick(-7, 7);
    const Rational x0 = make_rational(pick(rng), 3);
    Poly ps = evaluate(p, {{"x", x0}}), qs = evaluate(q, {{"x", x0}});
    if (ps.degree("y") != p.degree("y") || qs.degree("y") != q.degree("y")) continue;
    Rational want = oracle::sylvester(oracle::dense(ps, "y"), oracle::dense(qs, "y"));
    Poly got = evaluate(r, {{"x", x0}});
    CHECK(got == Poly::constant(want, got.vars()));
    // Antisymmetry up to the degree sign.
    Poly swapped = resultant(q, p, "y");
    const int s = (p.degree("y") * q.degree("y")) % 2 ? -1 : 1;
    CHECK(swapped == r * Rational(s));
  }
}

TEST_CASE("gcd and squarefree parts") {
  CHECK(make_monic(gcd(P("x^2 - 1"), P("x^3 - 1"))) == P("x - 1"));
  CHECK(make_monic(squarefree_part(P("x^2*(x^2 - 1)^2"))) == P("x^3 - x"));
  CHECK(is_squarefree(P("x^2 + y^2 - 1")));
  CHECK_FALSE(is_squarefree(P("(x - y)^2*(x + 1)")));
  auto sf = squarefree_factorization(U("x^3*(x - 1)^2"));
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].first == U("x - 1"));
  CHECK(sf[0].second == 2);
  CHECK(sf[1].first == U("x"));
  CHECK(sf[1].second == 3);
}

TEST_CASE("rational roots") {
  auto r = rational_roots(U("x^2*(x^2 - 1)^2"));
  REQUIRE(r.roots.size() == 3);
  CHECK(r.roots[0] == std::pair{Rational(-1), 2});
  CHECK(r.roots[1] == std::pair{Rational(0), 2});
  CHECK(r.roots[2] == std::pair{Rational(1), 2});
  CHECK(r.residual.degree() == 0);
  auto none = rational_roots(U("x^2 + 1"));
  CHECK(none.roots.empty());
  CHECK(none.residual.monic() == U("x^2 + 1"));
  auto two = rational_roots(U("6*x^2 - 5*x + 1"));
  REQUIRE(two.roots.size() == 2);
  CHECK(two.roots[0].first == make_rational(1, 3));
  CHECK(two.roots[1].first == make_rational(1, 2));
  CHECK_THROWS(rational_roots(UniPoly("x")));
}

TEST_CASE("univariate factorization reconstructs its input") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    Poly a = oracle::random_poly(rng, {"x"}, 4, 3), b = oracle::random_poly(rng, {"x"}, 3, 3);
    UniPoly u = UniPoly::from_poly(a * b, "x");
    if (u.degree() < 1) continue;
    UniPoly prod = UniPoly::constant(u.leading());
    for (const auto& [p, m] : factor(u))
      for (int k = 0; k < m; ++k) prod = prod * p;
    CHECK(prod == u);
  }
  CHECK(factor(U("x^4 + 1")).size() == 1);
  CHECK(factor(U("x^4 - 4")).size() == 2);
  CHECK(factor(U("x^6 + 3*x^3 + 1")).size() == 1);
}
