// Command-line front end: analyze, verify, catalog, sweep.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sextic/catalog.hpp"

namespace {

using namespace sextic;
using ojson = nlohmann::ordered_json;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kConsistency = 3 };

struct Flags {
  bool json = false;
  bool quiet = false;
  std::uint64_t seed = 1;
  int tower_cap = 12;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string degrees_text(const std::vector<int>& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "+" : "") + std::to_string(d[i]);
  return out;
}

ojson analysis_json(const CurveAnalysis& a) {
  ojson j;
  j["f"] = format(a.f);
  if (!a.chart.is_identity()) j["chart"] = {{"k", to_string(a.chart.k)}, {"l", to_string(a.chart.l)}};
  j["points"] = ojson::array();
  for (const auto& p : a.points) {
    ojson q{{"point", p.sing.point.to_string()},
            {"degree", p.sing.point.degree()},
            {"type", p.sing.type.name()},
            {"m", p.sing.m},
            {"mu", p.sing.mu},
            {"delta", p.sing.delta},
            {"r", p.sing.r}};
    if (a.split) {
      q["inner"] = p.inner;
      if (p.inner) q["iota"] = p.iota;
    }
    j["points"].push_back(q);
  }
  Configuration reduced = a.config.reduced();
  j["configuration"] = reduced.to_string();
  j["mr"] = reduced.mr;
  j["total_milnor"] = a.total_milnor;
  if (a.split) {
    j["inner_iota_total"] = a.inner_iota_total;
    j["c2_c3_intersection"] = a.c2_c3_intersection;
  }
  j["components"] = ojson::array();
  for (const auto& pr : a.pieces) {
    ojson c{{"factor", format(pr.factor.poly)}, {"degree", pr.factor.degree}, {"found_by", pr.factor.source}};
    if (pr.factor.geometric) c["geometric_degrees"] = *pr.factor.geometric;
    c["configuration"] = pr.config.reduced().to_string();
    if (pr.genus) c["genus"] = *pr.genus;
    if (pr.class_degree) c["class"] = *pr.class_degree;
    if (pr.flex_count) c["flexes"] = *pr.flex_count;
    for (const auto& e : pr.errors) c["errors"].push_back(e);
    j["components"].push_back(c);
  }
  if (auto d = a.component_degrees()) j["component_degrees"] = *d;
  if (a.delta_star)
    j["delta_star"] = {{"value", a.delta_star->value}, {"ceiling", a.delta_star->ceiling}, {"ok", a.delta_star->ok}};
  for (const auto& n : a.notes) j["notes"].push_back(n);
  return j;
}

void print_analysis(const CurveAnalysis& a) {
  std::cout << "curve: " << format(a.f) << "\n";
  for (const auto& n : a.notes) std::cout << "note: " << n << "\n";
  std::cout << "singular points:\n";
  for (const auto& p : a.points) {
    std::cout << "  " << std::left << std::setw(10) << p.sing.type.name() << " at " << p.sing.point.to_string()
              << "  m=" << p.sing.m << " mu=" << p.sing.mu << " delta=" << p.sing.delta << " r=" << p.sing.r;
    if (a.split) std::cout << (p.inner ? "  inner iota=" + std::to_string(p.iota) : "  outer");
    std::cout << "\n";
  }
  Configuration reduced = a.config.reduced();
  std::cout << "configuration: " << reduced.to_string() << (reduced.mr ? " (maximal rank)" : "") << "\n";
  if (a.split)
    std::cout << "inner iota total: " << a.inner_iota_total << ", C2.C3 = " << a.c2_c3_intersection << "\n";
  std::cout << "components:\n";
  for (const auto& pr : a.pieces) {
    std::cout << "  degree " << pr.factor.degree << " [" << pr.factor.source << "] " << format(pr.factor.poly);
    if (pr.factor.geometric && pr.factor.geometric->size() > 1)
      std::cout << "  splits as " << degrees_text(*pr.factor.geometric);
    if (pr.genus) std::cout << "  genus " << *pr.genus;
    if (pr.class_degree) std::cout << "  class " << *pr.class_degree;
    if (pr.flex_count) std::cout << "  flexes " << *pr.flex_count;
    std::cout << "\n";
    for (const auto& e : pr.errors) std::cout << "    error: " << e << "\n";
  }
  if (auto d = a.component_degrees()) std::cout << "component degrees: " << degrees_text(*d) << "\n";
  if (a.delta_star)
    std::cout << "delta*: " << a.delta_star->value << " (ceiling " << a.delta_star->ceiling << ")\n";
}

ojson report_json(const VerdictReport& r) {
  ojson j{{"id", r.id}, {"source", r.source}, {"seed", r.seed}};
  j["claims"] = ojson::array();
  for (const auto& c : r.claims) {
    ojson cj{{"instance", c.instance}, {"claim", c.claim}, {"status", status_name(c.status)}};
    if (!c.expected.empty()) cj["expected"] = c.expected;
    if (!c.found.empty()) cj["found"] = c.found;
    if (!c.reason.empty()) cj["reason"] = c.reason;
    j["claims"].push_back(cj);
  }
  for (const auto& u : r.unresolved) j["unresolved"].push_back(u);
  for (const auto& e : r.consistency_errors) j["consistency_errors"].push_back(e);
  j["verified"] = r.count(Status::Verified);
  j["mismatches"] = r.count(Status::Mismatch);
  j["unverifiable"] = r.count(Status::Unverifiable);
  return j;
}

void print_report(const VerdictReport& r, bool quiet) {
  std::cout << r.id << " (" << r.source << "): " << r.count(Status::Verified) << " verified, "
            << r.count(Status::Mismatch) << " mismatch, " << r.count(Status::Unverifiable) << " unverifiable";
  if (!r.consistency_errors.empty()) std::cout << ", " << r.consistency_errors.size() << " consistency errors";
  std::cout << "  [seed " << r.seed << "]\n";
  for (const auto& c : r.claims) {
    if (quiet && c.status == Status::Verified) continue;
    std::cout << "  " << std::left << std::setw(13) << status_name(c.status) << c.instance << ": " << c.claim;
    if (c.status != Status::Verified || !quiet) {
      if (!c.expected.empty()) std::cout << "  expected " << c.expected;
      if (!c.found.empty() && c.status != Status::Verified) std::cout << ", found " << c.found;
    }
    if (!c.reason.empty()) std::cout << "  (" << c.reason << ")";
    std::cout << "\n";
  }
  for (const auto& u : r.unresolved) std::cout << "  unresolved    " << u << "\n";
  for (const auto& e : r.consistency_errors) std::cout << "  inconsistent  " << e << "\n";
}

int exit_for(const std::vector<VerdictReport>& reports) {
  int code = kOk;
  for (const auto& r : reports) {
    if (!r.consistency_errors.empty()) return kConsistency;
    if (r.count(Status::Mismatch)) code = kMismatch;
  }
  return code;
}

int emit_reports(const std::vector<VerdictReport>& reports, const Flags& flags) {
  if (flags.json) {
    ojson all = ojson::array();
    for (const auto& r : reports) all.push_back(report_json(r));
    std::cout << all.dump(2) << "\n";
  } else {
    int v = 0, m = 0, u = 0;
    for (const auto& r : reports) {
      print_report(r, flags.quiet);
      v += r.count(Status::Verified);
      m += r.count(Status::Mismatch);
      u += r.count(Status::Unverifiable);
    }
    if (reports.size() > 1)
      std::cout << reports.size() << " records: " << v << " verified, " << m << " mismatch, " << u
                << " unverifiable\n";
  }
  return exit_for(reports);
}

VerifyOptions verify_options(const Flags& flags) {
  VerifyOptions opt;
  opt.seed = flags.seed;
  opt.local.tower_cap = flags.tower_cap;
  return opt;
}

int cmd_analyze(const std::string& path, const Flags& flags) {
  CurveDocument doc = parse_document(read_file(path));
  if (!doc.free_parameters().empty())
    throw DocumentError("unbound parameter " + doc.free_parameters().front() + "; bind it under 'params'");
  LocalOptions local;
  local.tower_cap = flags.tower_cap;
  CurveAnalysis a = analyze_curve(instantiate(doc), local);
  std::optional<VerdictReport> report;
  if (!doc.claims.empty() || doc.expansion || doc.alternative) report = verify_example(doc, verify_options(flags));
  if (flags.json) {
    ojson j{{"document", doc.id.empty() ? path : doc.id}};
    j["analysis"] = analysis_json(a);
    if (report) j["verdict"] = report_json(*report);
    std::cout << j.dump(2) << "\n";
  } else {
    print_analysis(a);
    if (report) print_report(*report, flags.quiet);
  }
  return report ? exit_for({*report}) : kOk;
}

int cmd_verify(const std::string& id, bool all, const Flags& flags) {
  if (all == !id.empty()) throw CLI::ValidationError("verify", "give one example id or --all");
  std::vector<CurveDocument> docs;
  if (all) {
    docs = builtin_examples();
  } else {
    const CurveDocument* d = find_example(id);
    if (!d) throw DocumentError("unknown example id '" + id + "'");
    docs.push_back(*d);
  }
  return emit_reports(verify_all(docs, verify_options(flags)), flags);
}

int cmd_catalog(const std::string& what, const std::string& id, const Flags& flags) {
  const auto& entries = builtin_catalog();
  if (what == "list") {
    if (flags.json) {
      ojson all = ojson::array();
      for (const auto& e : entries)
        all.push_back({{"id", e.id}, {"components", e.component_text}, {"config", e.config_text},
                       {"strength", e.strength()}});
      std::cout << all.dump(2) << "\n";
    } else {
      for (const auto& e : entries)
        std::cout << std::left << std::setw(22) << e.id << std::setw(26) << e.component_text << std::setw(34)
                  << e.config_text << e.strength() << "\n";
      std::cout << entries.size() << " entries\n";
    }
    return kOk;
  }
  if (what == "show") {
    for (const auto& e : entries)
      if (e.id == id) {
        ojson j{{"id", e.id},
                {"table", e.table},
                {"item", e.item},
                {"configuration", e.config_text},
                {"components", e.component_text},
                {"degrees", e.degrees},
                {"maximal_rank", e.config.mr},
                {"total_milnor", e.config.total_milnor()},
                {"strength", e.strength()},
                {"examples", e.examples}};
        if (!e.inner.empty()) j["inner"] = e.inner;
        if (!e.inner_contains.empty()) j["inner_contains"] = e.inner_contains;
        if (!e.intersection.empty()) j["intersection"] = e.intersection;
        if (flags.json) {
          std::cout << j.dump(2) << "\n";
        } else {
          for (const auto& [k, v] : j.items())
            std::cout << std::left << std::setw(15) << k << (v.is_string() ? v.get<std::string>() : v.dump())
                      << "\n";
        }
        return kOk;
      }
    throw DocumentError("unknown catalog id '" + id + "'");
  }
  if (what == "groups") {
    auto groups = weak_zariski_groups(entries);
    ojson all = ojson::array();
    for (const auto& g : groups) {
      ojson members = ojson::array();
      for (const auto* m : g.members)
        members.push_back({{"id", m->id}, {"config", m->config_text}, {"components", m->component_text},
                           {"intersection", m->intersection}});
      all.push_back({{"config", g.config.body()}, {"size", g.size()}, {"implied_irreducible", g.implied_irreducible},
                     {"members", members}});
    }
    if (flags.json) {
      std::cout << all.dump(2) << "\n";
    } else {
      for (const auto& g : groups) {
        std::cout << g.config.body() << ": weak Zariski " << g.size() << "-ple\n";
        for (const auto* m : g.members)
          std::cout << "  " << std::left << std::setw(22) << m->id << std::setw(30) << m->config_text
                    << m->component_text << (m->intersection.empty() ? "" : "  " + m->intersection) << "\n";
        if (g.implied_irreducible) std::cout << "  (an irreducible member is implied by the subscripts)\n";
      }
    }
    return kOk;
  }
  throw CLI::ValidationError("catalog", "expected list, show or groups");
}

int cmd_sweep(const std::string& path, const std::string& param, const std::string& values, const Flags& flags) {
  CurveDocument doc = parse_document(read_file(path));
  auto free = doc.free_parameters();
  if (free.size() != 1) throw DocumentError("a sweep needs exactly one free parameter");
  if (!param.empty() && param != free.front())
    throw DocumentError("the free parameter is " + free.front() + ", not " + param);
  std::vector<Rational> vals;
  std::stringstream ss(values);
  for (std::string item; std::getline(ss, item, ',');) vals.push_back(parse_rational(item));
  if (vals.empty()) throw DocumentError("no values to sweep");

  LocalOptions local;
  local.tower_cap = flags.tower_cap;
  ojson rows = ojson::array();
  std::optional<std::string> previous;
  for (const auto& v : vals) {
    ojson row{{free.front(), to_string(v)}};
    try {
      CurveAnalysis a = analyze_curve(instantiate(doc, {{free.front(), v}}), local);
      std::string config = a.config.reduced().body();
      row["status"] = "ok";
      row["configuration"] = config;
      if (auto d = a.component_degrees()) row["component_degrees"] = *d;
      row["jump"] = previous && *previous != config;
      previous = config;
    } catch (const Unresolved& e) {
      row["status"] = "unresolved";
      row["reason"] = e.what();
    } catch (const ConsistencyError&) {
      throw;
    } catch (const std::exception& e) {
      row["status"] = "degenerate";
      row["reason"] = e.what();
    }
    rows.push_back(row);
  }
  if (flags.json) {
    std::cout << rows.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << free.front() << "=" << std::left << std::setw(8) << r[free.front()].get<std::string>();
      if (r["status"] == "ok") {
        std::cout << std::setw(34) << r["configuration"].get<std::string>();
        if (r.contains("component_degrees")) {
          std::vector<int> d = r["component_degrees"];
          std::cout << "components " << degrees_text(d);
        }
        if (r["jump"].get<bool>()) std::cout << "  <- jump";
      } else {
        std::cout << r["status"].get<std::string>() << ": " << r["reason"].get<std::string>();
      }
      std::cout << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of torus sextics f2^3 + f3^2 = 0"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "Structured output");
  app.add_flag("--quiet", flags.quiet, "Only non-verified claims");
  app.add_option("--seed", flags.seed, "Seed for generic parameter picks");
  app.add_option("--tower-cap", flags.tower_cap, "Largest field degree used to resolve a germ")->check(
      CLI::PositiveNumber);

  std::string file, id, what, param, values;
  bool all = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze a curve document");
  analyze->add_option("file", file, "JSON document")->required();
  auto* verify = app.add_subcommand("verify", "Verify built-in example records");
  verify->add_option("id", id, "Example id");
  verify->add_flag("--all", all, "Every record");
  auto* catalog = app.add_subcommand("catalog", "Browse the classification catalog");
  catalog->add_option("what", what, "list, show or groups")->required()->check(
      CLI::IsMember({"list", "show", "groups"}));
  catalog->add_option("id", id, "Entry id for show");
  auto* sweep = app.add_subcommand("sweep", "Analyze a family at several parameter values");
  sweep->add_option("file", file, "JSON document")->required();
  sweep->add_option("--param", param, "The free parameter");
  sweep->add_option("--values", values, "Comma separated rationals")->required();
  for (auto* sub : {analyze, verify, catalog, sweep}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*analyze) return cmd_analyze(file, flags);
    if (*verify) return cmd_verify(id, all, flags);
    if (*catalog) return cmd_catalog(what, id, flags);
    return cmd_sweep(file, param, values, flags);
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return kConsistency;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Unresolved& e) {
    std::cerr << "unresolved: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
