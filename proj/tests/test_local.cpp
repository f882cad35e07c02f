#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace sextic;
using oracle::kXY;

namespace {

Poly P(const std::string& s) { return parse_poly(s, kXY); }
const AlgebraicPoint O = AlgebraicPoint::rational(0, 0);

LocalSingularity at_origin(const std::string& s) { return analyze_point(P(s), O); }

}  // namespace

TEST_CASE("singular points, rational and conjugate") {
  auto pts = singular_points(P("y^2 - x^2*(x + 1)"));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == O);
  CHECK(singular_points(P("x^3 + y^3 + 1")).empty());
  // Nodes at (i, 0) and (-i, 0) form one cluster of degree 2.
  auto conj = singular_points(P("y^2 - (x^2 + 1)^2*(x + 2)"));
  REQUIRE(conj.size() == 1);
  CHECK(conj[0].degree() == 2);
  auto s = analyze_point(P("y^2 - (x^2 + 1)^2*(x + 2)"), conj[0]);
  CHECK(s.type == SingType::A(1));
  CHECK_THROWS_AS(singular_points(P("(x - y)^2*(x + 1)")), NotSquarefree);
  CHECK_THROWS_AS(analyze_point(P("y - x^2 - 1"), O), NotOnCurve);
}

TEST_CASE("simple examples") {
  CHECK(at_origin("y^2 - x^3").type == SingType::A(2));
  CHECK(at_origin("(y^2 - x^3)^2 - y^6").type == SingType::Sp2());
  CHECK(at_origin("y^3 + x^2*y^2 - x^8").type == SingType::C(3, 8));
  auto d5 = at_origin("x*(y^2 - x^3)");
  CHECK(d5.type == SingType::D(5));
  CHECK(d5.r == 2);
}

TEST_CASE("normal forms: closed-form invariants and the Kouchnirenko oracle") {
  int oracle_checked = 0;
  for (const auto& nf : normal_forms()) {
    CAPTURE(nf.type.name());
    Poly g = P(nf.poly);
    LocalSingularity s = analyze_point(g, O);
    CHECK(s.type == nf.type);
    CHECK(s.mu == nf.type.milnor());
    CHECK(s.delta == nf.type.delta());
    CHECK(milnor_number(g, O) == s.mu);
    CHECK(2 * s.delta - s.r + 1 == s.mu);
    // Non-convenient forms get a high pure power that leaves mu unchanged.
    Poly conv = g + P("x^60 + y^60");
    if (auto mu = oracle::kouchnirenko(conv)) {
      CHECK(*mu == s.mu);
      ++oracle_checked;
    }
  }
  CHECK(oracle_checked >= 40);
}

TEST_CASE("stated local invariants") {
  CHECK(at_origin("y^3 + x^9 + x^2*y^2").mu == 13);
  auto d47 = at_origin("y^4 + x^3*y^2 + x^7");
  CHECK(d47.mu == 16);
  CHECK(d47.r == 3);
  CHECK(at_origin("y^3 + x^7 + x^2*y^2").delta == 6);

  auto b36 = at_origin("y^3 + x^6");
  REQUIRE(b36.r == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(b36.contacts[i][j] == 2);

  // C_{3,8} as a smooth branch y = -x^2 and two branches y = +-x^3 tangent to it.
  auto c38 = at_origin("(y + x^2)*(y^2 - x^6)");
  CHECK(c38.type == SingType::C(3, 8));
  REQUIRE(c38.r == 3);
  std::multiset<int> contacts;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) contacts.insert(c38.contacts[i][j]);
  CHECK(contacts == std::multiset<int>{2, 2, 3});
  // The two unions: I = 5 against an A_3, I = 4 against an A_5.
  CHECK(at_origin("(y + x^2)*(y + x^3)").type == SingType::A(3));
  CHECK(intersection_multiplicity(P("y - x^3"), P("(y + x^2)*(y + x^3)"), O) == 5);
  CHECK(at_origin("y^2 - x^6").type == SingType::A(5));
  CHECK(intersection_multiplicity(P("y + x^2"), P("y^2 - x^6"), O) == 4);
}

TEST_CASE("A_{2i-1} law on constructed germs") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> coef(-6, 6), nz(1, 5), iota_pick(1, 3);
  for (int n = 0; n < 50; ++n) {
    const int iota = iota_pick(rng);
    // u(x) with u(0) = 0, v = u + c x^iota + higher terms.
    Poly X = Poly::variable("x", kXY), Y = Poly::variable("y", kXY);
    Poly u(kXY), v(kXY);
    for (int k = 1; k <= 4; ++k) u += Poly::constant(make_rational(coef(rng), nz(rng)), kXY) * pow(X, k);
    v = u + Poly::constant(Rational(nz(rng) * (coef(rng) < 0 ? -1 : 1)), kXY) * pow(X, iota);
    for (int k = iota + 1; k <= 5; ++k) v += Poly::constant(Rational(coef(rng)), kXY) * pow(X, k);
    Poly b1 = Y - u, b2 = Y - v;
    // A linear change of coordinates keeps the type.
    const Rational a = make_rational(coef(rng), nz(rng));
    std::map<std::string, Poly> change{{"x", X + Poly::constant(a, kXY) * Y}, {"y", Y}};
    Poly f = substitute(b1 * b2, change);
    CAPTURE(format(f));
    CHECK(intersection_multiplicity(substitute(b1, change), substitute(b2, change), O) == iota);
    LocalSingularity s = analyze_point(f, O);
    CHECK(s.type == SingType::A(2 * iota - 1));
    CHECK(s.mu == 2 * iota - 1);
  }
}

TEST_CASE("nondegenerate branch count") {
  for (const char* g : {"y^3 + x^6", "y^4 - x^4", "x*y*(x - y)*(x + 2*y)", "y^3 + x^2*y^2 + x^9"}) {
    NewtonPolygon np = newton_polygon(P(g));
    REQUIRE(np.nondegenerate);
    auto br = nondegenerate_branches(np);
    REQUIRE(br);
    CHECK(static_cast<int>(br->size()) == resolve(P(g)).r);
  }
}

TEST_CASE("dual germ lemma: a smooth branch and a flex give E_7") {
  const Rational a = 2, b = 3;
  const std::vector<Rational> t{0, 1, 0, 0, 0, 0, 0, 0, 0, 0};
  Parametrization l1{t, {0, 0, Rational(-a), 0, 0, 0, 0, 0, 0, 0}};
  Parametrization l3{t, {0, 0, 0, Rational(-b), 0, 0, 0, 0, 0, 0}};
  Parametrization d1 = dual_branch(l1), d3 = dual_branch(l3);
  Poly g1 = implicitize(d1), g3 = implicitize(d3);
  CHECK(analyze_point(g1, O).m == 1);
  CHECK(at_origin(format(g3)).type == SingType::A(2));
  LocalSingularity e = analyze_point(g1 * g3, O);
  CHECK(e.type == SingType::E(7));
  CHECK(e.mu == 7);
  CHECK_THROWS_AS(dual_branch(Parametrization{t, {0, 2, 0, 0, 0, 0, 0, 0, 0, 0}}), std::domain_error);
  Parametrization t2 = dual_branch(Parametrization{{0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(t2.x[1] == 2);
  CHECK(t2.y[2] == -1);
}

TEST_CASE("dual twice preserves the branch type") {
  // y = x^3 + x^4: the dual is a cusp, the double dual has contact 3 again.
  Parametrization b{{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0}};
  Parametrization dd = dual_branch(dual_branch(b));
  Poly g = implicitize(dd);
  CHECK(intersection_multiplicity(g, P("y"), O) == 3);
  CHECK(analyze_point(g, O).m == 1);
}

TEST_CASE("charts at infinity") {
  // y^2 = x^3 has its cusp at the origin and a flex at infinity: smooth there.
  CHECK_FALSE(singular_at_infinity(P("y^2 - x^3"), 3));
  // x^2 y^2 + x^2 + y^2 has nodes at the coordinate points of the closure.
  const Poly g = P("x^2*y^2 + x^2 + y^2");
  CHECK(singular_at_infinity(g, 4));
  Chart c = choose_chart(g, 4);
  CHECK_FALSE(c.is_identity());
  Poly moved = rechart(g, 4, c.k, c.l);
  CHECK_FALSE(singular_at_infinity(moved, 4));
  // Three nodes, all affine now.
  int nodes = 0;
  for (const auto& p : singular_points(moved)) nodes += p.degree();
  CHECK(nodes == 3);
  auto q = rechart_point(AlgebraicPoint::rational(1, 2), 1, 1);
  CHECK(q.x_rational() == make_rational(-1, 2));
  CHECK(q.y_rational() == -1);
}

TEST_CASE("Milnor cross-check on every corpus singularity") {
  int points = 0;
  for (const auto& doc : builtin_examples()) {
    std::vector<Bindings> picks;
    if (doc.free_parameters().empty()) picks.push_back({});
    for (const auto& in : doc.instances)
      if (!in.claims.unverifiable) picks.push_back(in.params);
    for (const auto& b : picks) {
      CurveInput in = instantiate(doc, b);
      CurveAnalysis a = analyze_curve(in);
      for (const auto& p : a.points) {
        CHECK(milnor_number(a.chart_f, p.sing.point) == 2 * p.sing.delta - p.sing.r + 1);
        ++points;
      }
    }
  }
  CHECK(points >= 100);
}
