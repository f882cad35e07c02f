#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "sextic/catalog.hpp"

namespace sextic {

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::string label_of(const Bindings& b) {
  std::string out;
  for (const auto& [k, v] : b) out += (out.empty() ? "" : ", ") + k + "=" + to_string(v);
  return out;
}

// Inner entries of the configuration, flags dropped.
Configuration inner_config(const CurveAnalysis& a) {
  std::vector<ConfigEntry> e;
  for (const auto& p : a.points)
    if (p.inner) e.push_back({p.sing.type, p.sing.point.degree(), std::nullopt});
  return make_configuration(e);
}

std::string degrees_text(const std::vector<int>& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + "]";
}

class Run {
 public:
  Run(const CurveDocument& doc, VerdictReport& report, std::string label, Bindings bindings, const VerifyOptions& opt)
      : doc_(doc), report_(report), label_(std::move(label)), bindings_(std::move(bindings)), opt_(opt) {}

  void check(const Claims& claims, const CurveInput& input) {
    CurveAnalysis a = analyze_curve(input, opt_.local);
    if (claims.config) check_config(a, *claims.config);
    if (claims.components) check_components(a, *claims.components);
    if (claims.inner) check_inner(a, *claims.inner);
    if (claims.inner_contains) check_inner_contains(a, *claims.inner_contains);
    for (const auto& p : claims.points) check_point(input, p);
    if (!claims.factorization.empty()) check_factorization(input, claims.factorization);
    for (const auto& c : claims.component_configs) check_component_config(a, c);
    if (doc_.expansion && input.pair) check_expansion(input);
    if (doc_.alternative) check_alternative(input);
    laws(a);
  }

 private:
  void add(std::string claim, bool ok, std::string expected, std::string found, std::string reason = {}) {
    report_.claims.push_back(
        {label_, std::move(claim), ok ? Status::Verified : Status::Mismatch, std::move(expected), std::move(found),
         std::move(reason)});
  }

  void law(const std::string& name, bool ok, const std::string& detail) {
    add("law: " + name, ok, "holds", ok ? "holds" : detail);
    if (!ok) report_.consistency_errors.push_back(label_ + ": " + name + ": " + detail);
  }

  void check_config(const CurveAnalysis& a, const std::string& text) {
    Configuration want = parse_configuration(text);
    Configuration got = a.config.reduced();
    bool ok = same_types(want, got) && (!want.mr || got.mr);
    Configuration shown = got;
    shown.index.reset();
    add("config", ok, text, shown.to_string());
  }

  void check_components(const CurveAnalysis& a, const std::vector<int>& want) {
    auto got = a.component_degrees();
    if (!got) {
      report_.claims.push_back({label_, "components", Status::Unverifiable, degrees_text(want), "undetermined",
                                "the rational pieces could not be split into geometric components"});
      return;
    }
    add("components", *got == want, degrees_text(want), degrees_text(*got));
  }

  void check_inner(const CurveAnalysis& a, const std::string& text) {
    if (!a.split) {
      add("inner", false, text, "no torus pair", "inner singularities need the pair (f2, f3)");
      return;
    }
    Configuration got = inner_config(a);
    add("inner", same_types(parse_configuration(text), got), text, got.to_string());
  }

  void check_inner_contains(const CurveAnalysis& a, const std::string& text) {
    if (!a.split) {
      add("inner contains", false, text, "no torus pair", "inner singularities need the pair (f2, f3)");
      return;
    }
    SingType want = parse_sing_type(text);
    bool ok = false;
    for (const auto& p : a.points) ok = ok || (p.inner && p.sing.type == want);
    add("inner contains", ok, text, inner_config(a).to_string());
  }

  void check_point(const CurveInput& input, const PointClaim& p) {
    const std::string where = "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
    AlgebraicPoint pt = AlgebraicPoint::rational(p.x, p.y);
    if (!lies_on(input.f, pt)) {
      add("point " + where, false, p.type, "not on the curve");
      return;
    }
    LocalSingularity s = analyze_point(input.f, pt, opt_.local);
    add("point " + where, s.type == parse_sing_type(p.type), p.type, s.type.name());
  }

  void check_factorization(const CurveInput& input, const std::vector<std::string>& factors) {
    Poly prod = Poly::constant(1, {"x", "y"});
    for (const auto& h : factors) prod *= bind_poly(doc_, h, bindings_);
    add("factorization", same_curve(prod, input.f), "product of " + std::to_string(factors.size()) + " factors",
        same_curve(prod, input.f) ? "same curve" : "different curve");
  }

  void check_component_config(const CurveAnalysis& a, const ComponentClaim& c) {
    Configuration want = parse_configuration(c.config);
    std::string found;
    bool ok = false;
    for (const auto& pr : a.pieces) {
      if (!pr.factor.geometric || pr.factor.geometric->size() != 1 || pr.factor.degree != c.degree) continue;
      found += (found.empty() ? "" : " ") + pr.config.reduced().to_string();
      ok = ok || same_types(want, pr.config);
    }
    add("component of degree " + std::to_string(c.degree), ok, c.config, found.empty() ? "none" : found);
  }

  void check_expansion(const CurveInput& input) {
    Poly want = bind_poly(doc_, *doc_.expansion, bindings_);
    add("expansion", want == input.f, "f2^3 + f3^2 = " + *doc_.expansion,
        want == input.f ? "identical" : format(input.f));
  }

  void check_alternative(const CurveInput& input) {
    const AlternativePair& alt = *doc_.alternative;
    TorusPair p{bind_poly(doc_, alt.f2, bindings_), bind_poly(doc_, alt.f3, bindings_)};
    Poly e = expand(p);
    bool ok = e * alt.scale == input.f;
    add("alternative pair", ok, to_string(alt.scale) + " (f2^3 + f3^2) = f", ok ? "identical" : format(e));
    if (!ok || !alt.inner) return;
    CurveInput in2;
    in2.f = e;
    in2.pair = p;
    in2.hints = input.hints;
    CurveAnalysis b = analyze_curve(in2, opt_.local);
    Configuration got = inner_config(b);
    add("alternative inner", same_types(parse_configuration(*alt.inner), got), *alt.inner, got.to_string());
    laws(b, "alternative ");
  }

  void laws(const CurveAnalysis& a, const std::string& prefix = {}) {
    if (a.split) {
      law(prefix + "inner intersection total", a.inner_iota_total == 6,
          "sum of I(C2,C3) over inner points is " + std::to_string(a.inner_iota_total));
      law(prefix + "C2.C3 = 6", a.c2_c3_intersection == 6,
          "conic and cubic meet in " + std::to_string(a.c2_c3_intersection) + " points");
      for (const auto& c : a.correspondence)
        if (c.applies)
          law(prefix + "inner type at " + c.point.to_string(), c.holds, c.detail);
    }
    for (const auto& pr : a.pieces)
      for (const auto& e : pr.errors) law(prefix + "component invariants", false, format(pr.factor.poly) + ": " + e);
    if (a.delta_star) {
      const auto& d = *a.delta_star;
      law(prefix + "delta* bound", d.ok && d.value >= 0,
          "delta* = " + std::to_string(d.value) + ", ceiling " + std::to_string(d.ceiling));
    }
  }

  const CurveDocument& doc_;
  VerdictReport& report_;
  std::string label_;
  Bindings bindings_;
  const VerifyOptions& opt_;
};

// Runs one set of claims; errors of the pipeline land in the report.
void run_claims(const CurveDocument& doc, VerdictReport& report, const std::string& label, const Bindings& b,
                const Claims& claims, const CurveInput& input, const VerifyOptions& opt) {
  try {
    Run(doc, report, label, b, opt).check(claims, input);
  } catch (const Unresolved& e) {
    report.unresolved.push_back(label + ": " + e.what());
  } catch (const ConsistencyError& e) {
    report.consistency_errors.push_back(label + ": " + e.what());
  } catch (const std::exception& e) {
    report.claims.push_back({label, "analysis", Status::Mismatch, "a reduced torus sextic", "error", e.what()});
  }
}

void run_fixed(const CurveDocument& doc, VerdictReport& report, const std::string& label, const Bindings& b,
               const Claims& claims, const VerifyOptions& opt) {
  if (claims.unverifiable) {
    report.claims.push_back({label, "curve", Status::Unverifiable, "", "", *claims.unverifiable});
    return;
  }
  CurveInput input;
  try {
    input = instantiate(doc, b);
  } catch (const std::exception& e) {
    report.claims.push_back({label, "instantiate", Status::Mismatch, "a curve", "error", e.what()});
    return;
  }
  run_claims(doc, report, label, b, claims, input, opt);
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Mismatch: return "mismatch";
    case Status::Unverifiable: return "unverifiable";
  }
  return "?";
}

int VerdictReport::count(Status s) const {
  return static_cast<int>(std::count_if(claims.begin(), claims.end(), [s](const auto& c) { return c.status == s; }));
}

std::uint64_t record_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::uint64_t s = h ^ seed;
  return splitmix(s);
}

Rational random_rational(std::uint64_t& state, const std::vector<Rational>& avoid) {
  for (;;) {
    long num = static_cast<long>(splitmix(state) % 61) - 30;
    long den = static_cast<long>(splitmix(state) % 12) + 1;
    Rational q = make_rational(num, den);
    if (std::find(avoid.begin(), avoid.end(), q) == avoid.end()) return q;
  }
}

VerdictReport verify_example(const CurveDocument& doc, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  VerdictReport report;
  report.id = doc.id;
  report.source = doc.source;
  report.seed = record_seed(opt.seed, doc.id);

  const auto free = doc.free_parameters();
  if (free.empty()) run_fixed(doc, report, "given", {}, doc.claims, opt);
  for (const auto& in : doc.instances) run_fixed(doc, report, label_of(in.params), in.params, in.claims, opt);

  if (doc.generic && !free.empty()) {
    std::uint64_t state = report.seed;
    for (int i = 0; i < doc.generic->samples; ++i) {
      // Redraw until the instance is a reduced curve with a nondegenerate pair.
      for (int attempt = 0; attempt < 64; ++attempt) {
        Bindings b;
        for (const auto& p : free) b[p] = random_rational(state, doc.generic->avoid);
        CurveInput input;
        try {
          input = instantiate(doc, b);
          if (!is_squarefree(input.f)) continue;
          if (input.pair && !gcd(input.pair->f2, input.pair->f3).is_constant()) continue;
        } catch (const DocumentError&) {
          continue;
        } catch (const DegenerateTorus&) {
          continue;
        }
        run_claims(doc, report, "generic " + label_of(b), b, doc.generic->claims, input, opt);
        break;
      }
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerdictReport> verify_all(const std::vector<CurveDocument>& docs, const VerifyOptions& opt) {
  std::vector<VerdictReport> out(docs.size());
  unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(docs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < docs.size();) out[i] = verify_example(docs[i], opt);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace sextic
