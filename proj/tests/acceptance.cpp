// One pass/fail line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

#include "oracles.hpp"

using namespace sextic;
using oracle::kXY;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Poly P(const std::string& s) { return parse_poly(s, kXY); }

const AlgebraicPoint O = AlgebraicPoint::rational(0, 0);

struct Result {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// Every fixed and instance curve of the corpus, analyzed once.
struct CorpusCurve {
  std::string label;
  CurveAnalysis analysis;
};

std::vector<CorpusCurve> analyze_corpus(std::vector<std::string>& failures) {
  std::vector<CorpusCurve> out;
  for (const auto& doc : builtin_examples()) {
    std::vector<std::pair<std::string, Bindings>> picks;
    if (doc.free_parameters().empty() && !doc.claims.unverifiable) picks.push_back({"given", {}});
    for (const auto& in : doc.instances)
      if (!in.claims.unverifiable) {
        std::string label;
        for (const auto& [k, v] : in.params) label += (label.empty() ? "" : ", ") + k + "=" + to_string(v);
        picks.push_back({label, in.params});
      }
    for (const auto& [label, b] : picks) {
      try {
        out.push_back({doc.id + " " + label, analyze_curve(instantiate(doc, b))});
      } catch (const std::exception& e) {
        failures.push_back(doc.id + ": " + e.what());
      }
    }
  }
  return out;
}

const VerdictReport* report_for(const std::vector<VerdictReport>& reports, const std::string& id) {
  for (const auto& r : reports)
    if (r.id == id) return &r;
  return nullptr;
}

bool instance_clean(const VerdictReport* r, const std::string& label) {
  if (!r) return false;
  int seen = 0;
  for (const auto& c : r->claims)
    if (c.instance == label) {
      if (c.status != Status::Verified) return false;
      ++seen;
    }
  return seen > 0;
}

std::string found_for(const VerdictReport* r, const std::string& label, const std::string& claim) {
  if (r)
    for (const auto& c : r->claims)
      if (c.instance == label && c.claim == claim) return c.found;
  return {};
}

Result corpus_regression(const std::vector<VerdictReport>& reports, double secs) {
  Result res;
  int mismatches = 0, verified = 0;
  for (const auto& r : reports) {
    mismatches += r.count(Status::Mismatch);
    verified += r.count(Status::Verified);
    for (const auto& c : r.claims)
      if (c.status == Status::Mismatch) res.require(false, r.id + " " + c.instance + " " + c.claim);
    for (const auto& e : r.consistency_errors) res.require(false, r.id + " " + e);
    for (const auto& e : r.unresolved) res.require(false, r.id + " unresolved " + e);
  }
  res.require(reports.size() >= 25, "fewer than 25 records");
  res.require(secs <= 300, "took " + std::to_string(secs) + " s");
  auto r5 = report_for(reports, "nonsimple-05");
  res.require(found_for(r5, "given", "config") == "[C_{3,7},A_8,A_1]", "item 5");
  auto r17 = report_for(reports, "nonsimple-17");
  res.require(found_for(r17, "given", "config") == "[C_{3,15},A_1]", "item 17");
  auto r18 = report_for(reports, "nonsimple-18");
  res.require(found_for(r18, "given", "config") == "[B_{3,12}]" &&
                  found_for(r18, "given", "factorization") == "same curve",
              "item 18");
  auto r19 = report_for(reports, "nonsimple-19");
  res.require(found_for(r19, "s=1", "config") == "[D_{4,7},2A_2]", "item 19 at s=1");
  res.require(found_for(r19, "s=0", "config") == "[D_{4,7},A_5]", "item 19 at s=0");
  bool generic19 = false;
  if (r19)
    for (const auto& c : r19->claims)
      if (c.instance.rfind("generic", 0) == 0 && c.claim == "config")
        generic19 = c.found == "[D_{4,7},2A_2]";
  res.require(generic19, "item 19 at generic s");
  res.detail = std::to_string(reports.size()) + " records, " + std::to_string(verified) + " verified, " +
               std::to_string(mismatches) + " mismatches, " + std::to_string(static_cast<int>(secs)) + " s" +
               (res.detail.empty() ? "" : ": " + res.detail);
  return res;
}

Result local_invariants() {
  Result res;
  res.require(analyze_point(P("y^3 + x^9 + x^2*y^2"), O).mu == 13, "mu(C_{3,9})");
  res.require(analyze_point(P("y^4 + x^3*y^2 + x^7"), O).mu == 16, "mu(D_{4,7})");
  res.require(analyze_point(P("y^3 + x^7 + x^2*y^2"), O).delta == 6, "delta(C_{3,7})");
  auto b36 = analyze_point(P("y^3 + x^6"), O);
  bool contacts = b36.r == 3;
  for (int i = 0; contacts && i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) contacts = contacts && b36.contacts[i][j] == 2;
  res.require(contacts, "B_{3,6} branches");
  auto c38 = analyze_point(P("(y + x^2)*(y^2 - x^6)"), O);
  bool smooth = c38.r == 3 && c38.type == SingType::C(3, 8);
  for (const auto& b : c38.branches) smooth = smooth && b.n == 1;
  res.require(smooth, "C_{3,8} branches");
  res.require(intersection_multiplicity(P("y - x^3"), P("(y + x^2)*(y + x^3)"), O) == 5 &&
                  analyze_point(P("(y + x^2)*(y + x^3)"), O).type == SingType::A(3),
              "I = 5 with A_3");
  res.require(intersection_multiplicity(P("y + x^2"), P("y^2 - x^6"), O) == 4 &&
                  analyze_point(P("y^2 - x^6"), O).type == SingType::A(5),
              "I = 4 with A_5");
  return res;
}

Result formula_checks(const std::vector<CorpusCurve>& corpus) {
  Result res;
  auto sings = [](const Poly& f) {
    std::vector<LocalSingularity> out;
    for (const auto& p : singular_points(f)) out.push_back(analyze_point(f, p));
    return out;
  };
  Poly nodal = P("y^2 - x^2*(x + 1)"), smooth = P("y^2 - x^3 - x - 1");
  res.require(class_degree(nodal, sings(nodal)) == 4 && oracle::class_by_polar(nodal, 3, 7, 1) == 4,
              "nodal cubic class");
  res.require(class_degree(smooth, {}) == 6 && oracle::class_by_polar(smooth, 5, -2, 0) == 6, "smooth cubic class");
  res.require(genus(smooth, {}) == 1, "smooth cubic genus");
  LocalSingularity cusp;
  cusp.type = SingType::A(2);
  cusp.mu = 2;
  cusp.delta = 1;
  cusp.r = 1;
  cusp.m = 2;
  res.require(class_degree(P("x^5 + y^5 + 1"), std::vector<LocalSingularity>(5, cusp)) == 5, "5-cuspidal quintic");
  int components = 0;
  for (const auto& c : corpus) {
    for (const auto& pr : c.analysis.pieces) {
      if (pr.genus) {
        ++components;
        res.require(*pr.genus >= 0, c.label + " negative genus");
      }
      for (const auto& e : pr.errors) res.require(false, c.label + " " + e);
    }
    if (c.analysis.delta_star)
      res.require(c.analysis.delta_star->ok, c.label + " delta* " + std::to_string(c.analysis.delta_star->value) +
                                                 " > " + std::to_string(c.analysis.delta_star->ceiling));
    else if (c.analysis.components.complete())
      res.require(false, c.label + " delta* missing");
  }
  if (res.ok) res.detail = std::to_string(components) + " corpus components";
  return res;
}

Result milnor_consistency(const std::vector<CorpusCurve>& corpus, const std::vector<std::string>& failures) {
  Result res;
  for (const auto& f : failures) res.require(false, f);
  int points = 0;
  for (const auto& c : corpus)
    for (const auto& p : c.analysis.points) {
      ++points;
      const int mu = milnor_number(c.analysis.chart_f, p.sing.point);
      res.require(mu == 2 * p.sing.delta - p.sing.r + 1, c.label + " at " + p.sing.point.to_string());
    }
  if (res.ok) res.detail = std::to_string(points) + " singular points";
  return res;
}

Result torus_laws(const std::vector<CorpusCurve>& corpus) {
  Result res;
  const CurveDocument* doc = find_example("c39-pair");
  if (!doc || !doc->alternative) {
    res.require(false, "c39-pair record missing");
  } else {
    TorusPair main{bind_poly(*doc, *doc->f2), bind_poly(*doc, *doc->f3)};
    TorusPair alt{bind_poly(*doc, doc->alternative->f2), bind_poly(*doc, doc->alternative->f3)};
    res.require(expand(alt) * doc->alternative->scale == expand(main), "C_{3,9} pairs differ");
  }
  int pairs = 0, checked_points = 0;
  for (const auto& c : corpus) {
    if (!c.analysis.split) continue;
    ++pairs;
    res.require(c.analysis.inner_iota_total == 6, c.label + " inner iota " + std::to_string(c.analysis.inner_iota_total));
    for (const auto& k : c.analysis.correspondence) {
      if (!k.applies) continue;
      ++checked_points;
      const bool law = k.type == SingType::A(3 * k.iota - 1);
      res.require(law && k.holds, c.label + " " + k.type.name() + " with iota " + std::to_string(k.iota));
    }
  }
  if (res.ok)
    res.detail = std::to_string(pairs) + " pairs, " + std::to_string(checked_points) + " inner points with C3 smooth";
  return res;
}

Result normal_form_checks() {
  Result res;
  const NormalFormTemplate& t = normal_form_template(NormalFormFamily::ThreeA5);
  std::vector<std::string> vars = kXY;
  vars.insert(vars.end(), t.params.begin(), t.params.end());
  res.require(evaluate(t.cleared(), {{"y", Rational(0)}}) == parse_poly("x^2*(x^2 - 1)^2", vars),
              "3A5 template on y = 0");
  struct Family {
    NormalFormFamily family;
    std::vector<std::pair<AlgebraicPoint, SingType>> points;
  };
  const std::vector<Family> families{
      {NormalFormFamily::ThreeA5,
       {{AlgebraicPoint::rational(-1, 0), SingType::A(5)}, {O, SingType::A(5)},
        {AlgebraicPoint::rational(1, 0), SingType::A(5)}}},
      {NormalFormFamily::A11A5, {{O, SingType::A(11)}, {AlgebraicPoint::rational(1, 0), SingType::A(5)}}},
      {NormalFormFamily::A17, {{O, SingType::A(17)}}},
  };
  std::uint64_t state = record_seed(1, "acceptance-normal-forms");
  int instances = 0;
  for (const auto& fam : families) {
    int done = 0;
    for (int attempt = 0; done < 3 && attempt < 64; ++attempt) {
      Bindings b;
      for (const auto& p : normal_form_template(fam.family).params) b[p] = random_rational(state, {0});
      NormalFormInstance inst;
      try {
        inst = normal_form({fam.family, b});
      } catch (const DegenerateTorus&) {
        continue;
      }
      if (!is_squarefree(inst.sextic)) continue;
      ++done;
      for (const auto& [p, type] : fam.points) {
        const SingType got = analyze_point(inst.sextic, p).type;
        res.require(got == type, family_name(fam.family) + " found " + got.name() + " at " + p.to_string());
      }
    }
    res.require(done == 3, family_name(fam.family) + " had too few nondegenerate picks");
    instances += done;
  }
  if (res.ok) res.detail = std::to_string(instances) + " seeded instances";
  return res;
}

Result degeneration_jumps(const std::vector<VerdictReport>& reports) {
  Result res;
  auto r8 = report_for(reports, "degen-8");
  const std::string s1 = found_for(r8, "s=1", "config"), s2 = found_for(r8, "s=2", "config");
  res.require(instance_clean(r8, "s=1") && s1.find("D_4") != std::string::npos, "degeneration 8 at s=1: " + s1);
  res.require(instance_clean(r8, "s=2") && s2.find("A_3") != std::string::npos, "degeneration 8 at s=2: " + s2);
  for (const char* id : {"nonsimple-13a", "nonsimple-13b"}) {
    auto r = report_for(reports, id);
    res.require(instance_clean(r, "u=1"), std::string(id) + " at u=1");
    bool generic = false;
    if (r)
      for (const auto& c : r->claims)
        if (c.instance.rfind("generic", 0) == 0) generic = c.status == Status::Verified;
    res.require(generic, std::string(id) + " generic");
  }
  auto r16 = report_for(reports, "nonsimple-16");
  res.require(found_for(r16, "s=2", "components") == "[3,3]", "item 16 at s=2");
  res.require(found_for(r16, "s=1", "components") == "[3,2,1]" &&
                  found_for(r16, "s=1", "config") == "[C_{6,12},A_1]",
              "item 16 at s=1");
  return res;
}

Result property_suites() {
  Result res;
  const auto start = Clock::now();
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> coef(-6, 6), nz(1, 5), iota_pick(1, 3);
  Poly X = Poly::variable("x", kXY), Y = Poly::variable("y", kXY);
  for (int n = 0; n < 50; ++n) {
    const int iota = iota_pick(rng);
    Poly u(kXY);
    for (int k = 1; k <= 4; ++k) u += Poly::constant(make_rational(coef(rng), nz(rng)), kXY) * pow(X, k);
    Poly v = u + Poly::constant(Rational(nz(rng)), kXY) * pow(X, iota);
    for (int k = iota + 1; k <= 5; ++k) v += Poly::constant(Rational(coef(rng)), kXY) * pow(X, k);
    std::map<std::string, Poly> change{{"x", X + Poly::constant(make_rational(coef(rng), nz(rng)), kXY) * Y}};
    Poly b1 = substitute(Y - u, change), b2 = substitute(Y - v, change);
    auto s = analyze_point(b1 * b2, O);
    res.require(s.type == SingType::A(2 * iota - 1) && s.r == 2 && intersection_multiplicity(b1, b2, O) == iota,
                "germ " + format(b1 * b2));
  }
  std::mt19937_64 rng2(20240611);
  const std::vector<std::string> vars{"x", "y", "z", "w"};
  for (int i = 0; i < 200; ++i) {
    Poly a = oracle::random_poly(rng2, vars, 8, 6), b = oracle::random_poly(rng2, vars, 8, 6),
         c = oracle::random_poly(rng2, vars, 8, 6);
    res.require((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a, "ring law");
    Poly p = oracle::random_poly(rng2, kXY, 5, 5), q = oracle::random_poly(rng2, kXY, 4, 5);
    if (p.degree("y") < 1 || q.degree("y") < 1) continue;
    Poly r = resultant(p, q, "y");
    const int sgn = (p.degree("y") * q.degree("y")) % 2 ? -1 : 1;
    res.require(resultant(q, p, "y") == r * Rational(sgn), "resultant antisymmetry");
    const Rational x0 = make_rational(coef(rng2), 3);
    Poly ps = evaluate(p, {{"x", x0}}), qs = evaluate(q, {{"x", x0}});
    if (ps.degree("y") != p.degree("y") || qs.degree("y") != q.degree("y")) continue;
    Rational want = oracle::sylvester(oracle::dense(ps, "y"), oracle::dense(qs, "y"));
    res.require(evaluate(r, {{"x", x0}}) == Poly::constant(want, kXY), "resultant vs Sylvester");
  }
  int strings = 0;
  for (const auto& doc : builtin_examples()) {
    std::vector<std::string> texts;
    for (const auto* s : {&doc.f, &doc.f2, &doc.f3, &doc.expansion})
      if (*s) texts.push_back(**s);
    texts.insert(texts.end(), doc.factors.begin(), doc.factors.end());
    std::vector<std::string> vars2 = kXY;
    vars2.insert(vars2.end(), doc.parameters.begin(), doc.parameters.end());
    for (const auto& t : texts) {
      Poly p = parse_poly(t, vars2);
      res.require(parse_poly(format(p), vars2) == p, "round trip " + t);
      ++strings;
    }
  }
  const double secs = seconds_since(start);
  res.require(secs <= 120, "took " + std::to_string(secs) + " s");
  if (res.ok)
    res.detail = "50 germs, 200 random polynomial triples, " + std::to_string(strings) + " corpus strings, " +
                 std::to_string(static_cast<int>(secs)) + " s";
  return res;
}

void print(int n, const std::string& name, const Result& r) {
  std::printf("[%s] %d %s%s%s\n", r.ok ? "PASS" : "FAIL", n, name.c_str(), r.detail.empty() ? "" : ": ",
              r.detail.c_str());
}

}  // namespace

int main() {
  const auto start = Clock::now();
  std::vector<VerdictReport> reports = verify_all(builtin_examples());
  const double verify_secs = seconds_since(start);
  std::vector<std::string> failures;
  std::vector<CorpusCurve> corpus = analyze_corpus(failures);

  std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"corpus regression", [&] { return corpus_regression(reports, verify_secs); }},
      {"stated local invariants", local_invariants},
      {"formula cross-checks", [&] { return formula_checks(corpus); }},
      {"Milnor consistency", [&] { return milnor_consistency(corpus, failures); }},
      {"torus laws", [&] { return torus_laws(corpus); }},
      {"normal forms", normal_form_checks},
      {"degeneration jumps", [&] { return degeneration_jumps(reports); }},
      {"property suites", property_suites},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    print(static_cast<int>(i + 1), criteria[i].first, r);
    all = all && r.ok;
  }
  return all ? 0 : 1;
}
