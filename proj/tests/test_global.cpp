#include "doctest.h"
#include "oracles.hpp"

using namespace sextic;
using oracle::kXY;

namespace {

Poly P(const std::string& s) { return parse_poly(s, kXY); }

std::vector<LocalSingularity> sings_of(const Poly& f) {
  std::vector<LocalSingularity> out;
  for (const auto& p : singular_points(f)) out.push_back(analyze_point(f, p));
  return out;
}

LocalSingularity fake(const SingType& t) {
  LocalSingularity s;
  s.type = t;
  s.mu = t.milnor();
  s.delta = t.delta();
  s.r = 2 * s.delta - s.mu + 1;
  s.m = 2;
  return s;
}

}  // namespace

TEST_CASE("genus and class of cubics, checked against the polar oracle") {
  Poly nodal = P("y^2 - x^2*(x + 1)");
  auto s = sings_of(nodal);
  CHECK(genus(nodal, s) == 0);
  CHECK(class_degree(nodal, s) == 4);
  CHECK(oracle::class_by_polar(nodal, 3, 7, 1) == 4);

  Poly smooth = P("y^2 - x^3 - x - 1");
  CHECK(sings_of(smooth).empty());
  CHECK(genus(smooth, {}) == 1);
  CHECK(class_degree(smooth, {}) == 6);
  CHECK(oracle::class_by_polar(smooth, 5, -2, 0) == 6);

  Poly cusp = P("y^2 - x^3");
  CHECK(class_degree(cusp, sings_of(cusp)) == 3);
}

TEST_CASE("the deltoid quartic has class 3") {
  Poly deltoid = P("(x^2 + y^2)^2 + 18*(x^2 + y^2) - 8*x^3 + 24*x*y^2 - 27");
  auto s = sings_of(deltoid);
  int cusps = 0;
  for (const auto& p : s)
    if (p.type == SingType::A(2)) cusps += p.point.degree();
  CHECK(cusps == 3);
  CHECK(genus(deltoid, s) == 0);
  CHECK(class_degree(deltoid, s) == 3);
}

TEST_CASE("class formula on a stated singularity list") {
  // A quintic with five cusps has genus 1 and class 20 - 5*3 = 5.
  std::vector<LocalSingularity> cusps(5, fake(SingType::A(2)));
  Poly quintic = P("x^5 + y^5 + 1");
  CHECK(genus(quintic, cusps) == 1);
  CHECK(class_degree(quintic, cusps) == 5);
  std::vector<LocalSingularity> too_many(7, fake(SingType::A(2)));
  CHECK_THROWS_AS(genus(quintic, too_many), ImpossibleCurve);
}

TEST_CASE("flex counts") {
  DefectTable d;
  d.set(SingType::A(1), 6);
  d.set(SingType::A(2), 8);
  CHECK(flex_count(P("y^2 - x^3 - x - 1"), {}, d) == 9);
  Poly nodal = P("y^2 - x^2*(x + 1)");
  CHECK(flex_count(nodal, sings_of(nodal), d) == 3);
  Poly cusp = P("y^2 - x^3");
  CHECK(flex_count(cusp, sings_of(cusp), d) == 1);
  DefectTable empty;
  CHECK_THROWS_AS(flex_count(cusp, sings_of(cusp), empty), std::out_of_range);
}

TEST_CASE("delta* ceilings") {
  CHECK(delta_star_ceiling({6}) == 10);
  CHECK(delta_star_ceiling({5, 1}) == 6);
  CHECK(delta_star_ceiling({2, 4}) == 3);
  CHECK(delta_star_ceiling({4, 1, 1}) == 3);
  CHECK(delta_star_ceiling({3, 3}) == 2);
  CHECK(delta_star_ceiling({1, 2, 3}) == 1);
  CHECK(delta_star_ceiling({3, 1, 1, 1}) == 1);
  CHECK(delta_star_ceiling({2, 2, 2}) == 0);
  CHECK(delta_star_ceiling(std::vector<int>(6, 1)) == 0);
}

TEST_CASE("configuration parse and format") {
  Configuration c = parse_configuration("[C_{3,7},A_8,A_1]");
  CHECK(c.total_milnor() == 11 + 8 + 1);
  CHECK(parse_configuration(c.to_string()).to_string() == c.to_string());
  Configuration mr = parse_configuration("[3A_5,2A_2]_2^{mr}");
  CHECK(mr.mr);
  CHECK(mr.index == 2);
  CHECK(mr.types().size() == 5);
  CHECK(parse_configuration("[A_{11},A_5]").to_string() == parse_configuration("[A_11,A_5]").to_string());
  CHECK(same_types(parse_configuration("[A_1,A_2]"), parse_configuration("[A_2,A_1]_3")));
  CHECK_THROWS_AS(parse_configuration("[A_5"), ParseError);
  CHECK_THROWS_AS(parse_configuration("[Q_5]"), ParseError);
}

TEST_CASE("catalog configurations round trip and agree on mr") {
  int mr_marked = 0;
  std::set<std::string> unmarked;
  for (const auto& e : builtin_catalog()) {
    CAPTURE(e.config_text);
    CHECK(parse_configuration(e.config.to_string()).to_string() == e.config.to_string());
    if (e.config.mr) {
      CHECK(is_maximal_rank(e.config));
      ++mr_marked;
    }
    if (is_maximal_rank(e.config) && !e.config.mr) unmarked.insert(e.config.body());
  }
  CHECK(mr_marked > 0);
  // The table omits the mark on one entry that the text calls maximal rank.
  CHECK(unmarked == std::set<std::string>{parse_configuration("[A_11,2A_2,A_3,A_1]").body()});
}

TEST_CASE("assembled configuration of a torus curve") {
  Poly f = P("(x^2 + y^2 - 1)^3 + (y - x^3)^2");
  Configuration c = assemble_configuration(sings_of(f));
  int mu = 0;
  for (const auto& s : sings_of(f)) mu += s.mu * s.point.degree();
  CHECK(c.total_milnor() == mu);
}
