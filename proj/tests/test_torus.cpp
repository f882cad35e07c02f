#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace sextic;
using oracle::kXY;

namespace {

Poly P(const std::string& s) { return parse_poly(s, kXY); }

Bindings pick(const std::vector<std::string>& names, std::uint64_t& state) {
  Bindings b;
  for (const auto& n : names) b[n] = random_rational(state, {0});
  return b;
}

}  // namespace

TEST_CASE("3A5 template restricted to y = 0") {
  const NormalFormTemplate& t = normal_form_template(NormalFormFamily::ThreeA5);
  std::vector<std::string> vars = kXY;
  vars.insert(vars.end(), t.params.begin(), t.params.end());
  Poly on_axis = evaluate(t.cleared(), {{"y", Rational(0)}});
  CHECK(on_axis == parse_poly("x^2*(x^2 - 1)^2", vars));
}

TEST_CASE("normal forms carry their singularities at seeded parameters") {
  std::uint64_t state = record_seed(1, "normal-form-tests");
  struct Want {
    NormalFormFamily family;
    std::vector<std::pair<AlgebraicPoint, SingType>> points;
    Poly line;
  };
  const AlgebraicPoint O = AlgebraicPoint::rational(0, 0);
  const std::vector<Want> wants{
      {NormalFormFamily::ThreeA5,
       {{AlgebraicPoint::rational(-1, 0), SingType::A(5)}, {O, SingType::A(5)},
        {AlgebraicPoint::rational(1, 0), SingType::A(5)}},
       P("y")},
      {NormalFormFamily::A11A5, {{O, SingType::A(11)}, {AlgebraicPoint::rational(1, 0), SingType::A(5)}}, P("y")},
      {NormalFormFamily::A17, {{O, SingType::A(17)}}, P("y")},
  };
  for (const auto& w : wants) {
    for (int sample = 0; sample < 3; ++sample) {
      Bindings b = pick(normal_form_template(w.family).params, state);
      NormalFormInstance inst;
      try {
        inst = normal_form({w.family, b});
      } catch (const DegenerateTorus&) {
        continue;
      }
      CAPTURE(family_name(w.family));
      CAPTURE(format(inst.sextic));
      CHECK(inst.sextic == inst.leading * pow(P("y"), 6) + pow(inst.f3, 2));
      std::vector<AlgebraicPoint> pts;
      for (const auto& [p, type] : w.points) {
        CHECK(analyze_point(inst.sextic, p).type == type);
        pts.push_back(p);
      }
      CHECK(linear_type_test(inst.sextic, w.line, pts));
      // A line through other points fails the test.
      CHECK_FALSE(linear_type_test(inst.sextic, P("x - 7"), pts));
    }
  }
}

TEST_CASE("normal form argument errors") {
  CHECK_THROWS_AS(normal_form({NormalFormFamily::A17, {{"t3", Rational(1)}}}), std::invalid_argument);
  Bindings zero_den{{"t2", Rational(0)}, {"t3", Rational(1)}, {"t4", Rational(1)},
                    {"t5", Rational(1)}, {"a04", Rational(1)}, {"a06", Rational(1)}};
  CHECK_THROWS_AS(normal_form({NormalFormFamily::A11A5, zero_den}), std::invalid_argument);
  CHECK(parse_family("A17") == NormalFormFamily::A17);
  CHECK_THROWS(parse_family("A19"));
}

TEST_CASE("inner and outer singularities of a generic torus curve") {
  TorusPair pair{P("x^2 + y^2 - 1"), P("y - x^3 + 2*x")};
  Poly f = expand(pair);
  CHECK(total_intersection(pair) == 6);
  auto sings = singular_points(f);
  InnerOuterSplit split = inner_outer_split(pair, sings);
  CHECK(split.inner_iota_total() == 6);
  std::vector<LocalSingularity> classified;
  for (const auto& ip : split.inner) classified.push_back(analyze_point(f, ip.point));
  for (const auto& c : verify_inner_correspondence(pair, split, classified)) {
    CHECK(c.applies);
    CHECK(c.holds);
  }
}

TEST_CASE("tangency raises the inner type") {
  // C2 and C3 are both tangent to y = 0 at the origin, so iota = 2 and the point is A_5.
  TorusPair tangent{P("x^2 + y^2 - 2*y"), P("y + y^2 - x^3")};
  Poly f = expand(tangent);
  CHECK(analyze_point(f, AlgebraicPoint::rational(0, 0)).type == SingType::A(5));
  auto split = inner_outer_split(tangent, singular_points(f));
  int iota_at_origin = 0;
  for (const auto& ip : split.inner)
    if (ip.point == AlgebraicPoint::rational(0, 0)) iota_at_origin = ip.iota;
  CHECK(iota_at_origin == 2);
  CHECK(split.inner_iota_total() == 6);
}

TEST_CASE("the two decompositions of the C_{3,9} curve") {
  const CurveDocument* doc = find_example("c39-pair");
  REQUIRE(doc);
  REQUIRE(doc->alternative);
  TorusPair main{bind_poly(*doc, *doc->f2), bind_poly(*doc, *doc->f3)};
  TorusPair alt{bind_poly(*doc, doc->alternative->f2), bind_poly(*doc, doc->alternative->f3)};
  CHECK(expand(alt) * doc->alternative->scale == expand(main));
  CHECK(same_curve(expand(alt), expand(main)));
}

TEST_CASE("linear torus curves") {
  TorusPair pair{P("-3*(x + 2*y - 1)^2"), P("x^3 + y^3 - 1")};
  auto lt = is_linear_torus(pair);
  REQUIRE(lt);
  CHECK(lt->scale * pow(lt->ell, 2) == pair.f2);
  CHECK(lt->rational_root() == std::nullopt);
  TorusPair square{P("-4*(x - y)^2"), P("x^3 + y^3 - 1")};
  auto sq = is_linear_torus(square);
  REQUIRE(sq);
  REQUIRE(sq->rational_root());
  CHECK(-pow(*sq->rational_root(), 2) == square.f2);
  CHECK_FALSE(is_linear_torus({P("x^2 + y^2 - 1"), P("x^3 - y")}));
}

TEST_CASE("degenerate pairs") {
  TorusPair shared{P("x*(x + y - 1)"), P("x*(y^2 - 3)")};
  CHECK_THROWS_AS(inner_outer_split(shared, {}), DegenerateTorus);
}
