#include "doctest.h"
#include "oracles.hpp"

using namespace sextic;

namespace {

std::vector<const CatalogEntry*> with_body(const std::string& body) {
  const std::string want = parse_configuration(body).body();
  std::vector<const CatalogEntry*> out;
  for (const auto& e : builtin_catalog())
    if (e.config.reduced().body() == want) out.push_back(&e);
  return out;
}

// Every claim of the given instance verified, and at least one present.
bool instance_clean(const VerdictReport& r, const std::string& label) {
  int seen = 0;
  for (const auto& c : r.claims)
    if (c.instance == label) {
      if (c.status != Status::Verified) return false;
      ++seen;
    }
  return seen > 0;
}

std::string found_for(const VerdictReport& r, const std::string& label, const std::string& claim) {
  for (const auto& c : r.claims)
    if (c.instance == label && c.claim == claim) return c.found;
  return {};
}

VerdictReport verify_id(const std::string& id) {
  const CurveDocument* doc = find_example(id);
  REQUIRE(doc);
  return verify_example(*doc);
}

}  // namespace

TEST_CASE("catalog size and tables") {
  const auto& cat = builtin_catalog();
  CHECK(cat.size() == 138);
  CHECK(std::count_if(cat.begin(), cat.end(), [](const auto& e) { return e.table == "simple"; }) == 89);
  CHECK(std::count_if(cat.begin(), cat.end(), [](const auto& e) { return e.table == "non-simple"; }) == 49);
  std::set<std::string> ids;
  for (const auto& e : cat) ids.insert(e.id);
  CHECK(ids.size() == cat.size());
}

TEST_CASE("catalog entries are internally consistent") {
  for (const auto& e : builtin_catalog()) {
    CAPTURE(e.id);
    int deg = 0;
    for (int d : e.degrees) deg += d;
    CHECK(deg == 6);
    CHECK(std::is_sorted(e.degrees.rbegin(), e.degrees.rend()));
    CHECK_FALSE(e.config.has_unknown());
    // The inner configuration is part of the reduced one.
    if (!e.inner.empty()) {
      std::multiset<std::string> all, inner;
      for (const auto& t : e.config.types()) all.insert(t.name());
      for (const auto& t : parse_configuration(e.inner).types()) inner.insert(t.name());
      CHECK(std::includes(all.begin(), all.end(), inner.begin(), inner.end()));
    }
    if (!e.inner_contains.empty()) {
      const SingType t = parse_sing_type(e.inner_contains);
      auto types = e.config.types();
      CHECK(std::find(types.begin(), types.end(), t) != types.end());
    }
    // Every listed example exists and realizes the entry.
    for (const auto& id : e.examples) CHECK(find_example(id) != nullptr);
  }
}

TEST_CASE("catalog lookups") {
  CHECK(std::count_if(builtin_catalog().begin(), builtin_catalog().end(),
                      [](const auto& e) { return e.inner == "[A_17]"; }) == 4);
  CHECK(with_body("[A_17,2A_1]").size() == 1);
  CHECK(with_body("[B_{6,6}]").size() == 1);
  const auto b66 = with_body("[B_{6,6}]");
  REQUIRE(b66.size() == 1);
  CHECK(b66[0]->degrees == std::vector<int>(6, 1));
  CHECK(b66[0]->strength() == "exampled");
  CHECK(parse_component_type("B_1+B_1'+B_4") == std::vector<int>{4, 1, 1});
  CHECK(parse_component_type("B_{5}+B_1") == std::vector<int>{5, 1});
}

TEST_CASE("weak Zariski groups") {
  auto groups = weak_zariski_groups(builtin_catalog());
  auto find = [&](const std::string& body) -> const ZariskiGroup* {
    const std::string want = parse_configuration(body).body();
    for (const auto& g : groups)
      if (g.config.body() == want) return &g;
    return nullptr;
  };
  const ZariskiGroup* g1 = find("[A_5,4A_2,A_3,2A_1]");
  REQUIRE(g1);
  CHECK(g1->size() >= 3);
  const ZariskiGroup* g2 = find("[2A_5,2A_2,3A_1]");
  REQUIRE(g2);
  CHECK(g2->size() == 4);
  CHECK(find("[B_{6,6}]") == nullptr);
  std::set<std::string> repeated;
  for (const auto& g : groups) {
    CHECK(g.size() >= 2);
    const int degree_sum = [&] {
      int s = 0;
      for (int d : g.members.front()->degrees) s += d;
      return s;
    }();
    CHECK(degree_sum == 6);
    for (const auto* m : g.members) CHECK(same_types(m->config, g.config));
    // Indices within a group are distinct, except for one entry pair the
    // source table numbers twice.
    std::set<int> idx;
    for (const auto* m : g.members)
      if (m->config.index && !idx.insert(*m->config.index).second) repeated.insert(g.config.body());
  }
  CHECK(repeated == std::set<std::string>{parse_configuration("[3A_5,3A_1]").body()});
}

TEST_CASE("catalog delta* within the ceiling of its component type") {
  for (const auto& e : builtin_catalog()) {
    if (e.degrees.size() < 2) continue;
    CAPTURE(e.id);
    // Intersection points of distinct components account for part of the
    // total delta; the rest is bounded by the ceiling.
    int delta = 0;
    for (const auto& t : e.config.types()) delta += t.delta();
    const int genus_sum = [&] {
      int s = 0;
      for (int d : e.degrees) s += (d - 1) * (d - 2) / 2;
      return s;
    }();
    int crossings = 0;
    for (std::size_t i = 0; i < e.degrees.size(); ++i)
      for (std::size_t j = i + 1; j < e.degrees.size(); ++j) crossings += e.degrees[i] * e.degrees[j];
    CHECK(delta <= genus_sum + crossings);
    CHECK(delta_star_ceiling(e.degrees) >= 0);
  }
}

TEST_CASE("corpus items with stated configurations") {
  auto r5 = verify_id("nonsimple-05");
  CHECK(r5.clean());
  CHECK(instance_clean(r5, "given"));
  CHECK(found_for(r5, "given", "config") == "[C_{3,7},A_8,A_1]");

  auto r17 = verify_id("nonsimple-17");
  CHECK(instance_clean(r17, "given"));

  auto r18 = verify_id("nonsimple-18");
  CHECK(instance_clean(r18, "given"));
  CHECK(found_for(r18, "given", "factorization") == "same curve");

  auto r19 = verify_id("nonsimple-19");
  CHECK(r19.clean());
  CHECK(instance_clean(r19, "s=0"));
  CHECK(instance_clean(r19, "s=1"));
}

TEST_CASE("degenerations") {
  auto r8 = verify_id("degen-8");
  CHECK(instance_clean(r8, "s=1"));
  CHECK(instance_clean(r8, "s=2"));
  const std::string s1 = found_for(r8, "s=1", "config");
  CHECK(s1.find("D_4") != std::string::npos);
  CHECK(s1.find("A_3") == std::string::npos);
  CHECK(found_for(r8, "s=2", "config").find("A_3") != std::string::npos);

  auto r16 = verify_id("nonsimple-16");
  CHECK(found_for(r16, "s=2", "components") == "[3,3]");
  CHECK(found_for(r16, "s=1", "components") == "[3,2,1]");
  CHECK(instance_clean(r16, "s=1"));
}

TEST_CASE("verification is deterministic in the seed") {
  const CurveDocument* doc = find_example("nonsimple-13a");
  REQUIRE(doc);
  VerifyOptions opt;
  opt.seed = 42;
  auto a = verify_example(*doc, opt), b = verify_example(*doc, opt);
  REQUIRE(a.claims.size() == b.claims.size());
  for (std::size_t i = 0; i < a.claims.size(); ++i) {
    CHECK(a.claims[i].instance == b.claims[i].instance);
    CHECK(a.claims[i].found == b.claims[i].found);
  }
  CHECK(record_seed(1, "a") != record_seed(1, "b"));
  CHECK(record_seed(1, "a") != record_seed(2, "a"));
  std::uint64_t s = 5;
  for (int i = 0; i < 100; ++i) {
    Rational q = random_rational(s, {0, 1});
    CHECK(q != 0);
    CHECK(q != 1);
  }
}

TEST_CASE("document errors") {
  CHECK_THROWS_AS(parse_document("not json"), DocumentError);
  CHECK_THROWS_AS(parse_document(R"({"id": "a", "f": "x", "colour": 1})"), DocumentError);
  CHECK_THROWS_AS(parse_document(R"({"id": "a", "f2": "x^2"})"), DocumentError);
  CHECK_THROWS_AS(parse_document(R"({"id": "a", "f": "x + * y"})"), DocumentError);
  auto doc = parse_document(R"({"id": "a", "parameters": ["s"], "f2": "s*x^2 + y", "f3": "y^3 + x",
                                "f2_denominator": "s"})");
  CHECK(doc.free_parameters() == std::vector<std::string>{"s"});
  CHECK_THROWS_AS(instantiate(doc), DocumentError);
  CHECK_THROWS_AS(instantiate(doc, {{"s", Rational(0)}}), DocumentError);
  CurveInput in = instantiate(doc, {{"s", Rational(2)}});
  REQUIRE(in.pair);
  CHECK(in.f == expand(*in.pair));
}

TEST_CASE("every corpus record parses and instantiates") {
  CHECK(builtin_examples().size() >= 25);
  for (const auto& doc : builtin_examples()) {
    CAPTURE(doc.id);
    CHECK_FALSE(doc.source.empty());
    for (const auto& in : doc.instances)
      if (!in.claims.unverifiable) CHECK_NOTHROW(instantiate(doc, in.params));
  }
}
