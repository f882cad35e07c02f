#include "sextic/analysis.hpp"

#include <algorithm>

namespace sextic {

namespace {

const std::vector<std::string> kXY{"x", "y"};

Poly in_xy(const Poly& p) {
  for (const auto& v : p.used_vars())
    if (v != "x" && v != "y") throw std::invalid_argument("polynomial depends on unbound symbol " + v);
  return p.with_vars(merge_vars(kXY, p.vars())).with_vars(kXY);
}

Poly to_chart(const Poly& p, int degree, const Chart& c) {
  if (c.is_identity()) return p;
  return rechart(p, degree, c.k, c.l).with_vars(kXY);
}

}  // namespace

Chart choose_chart(const Poly& f, int degree) {
  if (!singular_at_infinity(f, degree)) return {};
  for (int r = 1; r <= 8; ++r)
    for (int k = -r; k <= r; ++k)
      for (int l : {r - std::abs(k), -(r - std::abs(k))}) {
        Poly g = rechart(f, degree, k, l);
        if (!singular_at_infinity(g, degree)) return {Rational(k), Rational(l)};
        if (l == 0) break;
      }
  throw std::runtime_error("no chart moves every singular point off the line at infinity");
}

std::vector<LocalSingularity> CurveAnalysis::singularities() const {
  std::vector<LocalSingularity> out;
  for (const auto& p : points) out.push_back(p.sing);
  return out;
}

CurveAnalysis analyze_curve(const CurveInput& input, const LocalOptions& opt) {
  CurveAnalysis a;
  a.f = in_xy(input.f);
  if (a.f.is_zero()) throw std::invalid_argument("zero polynomial");
  if (a.f.total_degree() > input.degree) throw std::invalid_argument("polynomial exceeds the stated degree");
  if (!is_squarefree(a.f)) throw NotSquarefree();
  if (input.pair) {
    TorusPair p{in_xy(input.pair->f2), in_xy(input.pair->f3)};
    if (expand(p) != a.f) throw std::invalid_argument("torus pair does not expand to the curve");
    if (!gcd(p.f2, p.f3).is_constant()) throw DegenerateTorus("conic and cubic share a component");
  }

  a.chart = choose_chart(a.f, input.degree);
  a.chart_f = to_chart(a.f, input.degree, a.chart);
  if (!a.chart.is_identity())
    a.notes.push_back("singular points at infinity; analysis in the chart z = 1 + (" + a.chart.k.get_str() +
                      ")x + (" + a.chart.l.get_str() + ")y");
  if (input.pair)
    a.chart_pair = TorusPair{to_chart(in_xy(input.pair->f2), 2, a.chart), to_chart(in_xy(input.pair->f3), 3, a.chart)};

  // Local stage.
  std::vector<AlgebraicPoint> sing_points = singular_points(a.chart_f);
  std::vector<LocalSingularity> sings;
  for (const auto& p : sing_points) sings.push_back(analyze_point(a.chart_f, p, opt));

  // Torus stage.
  std::optional<std::vector<AlgebraicPoint>> inner_points;
  if (a.chart_pair) {
    a.split = inner_outer_split(*a.chart_pair, sing_points);
    a.inner_iota_total = a.split->inner_iota_total();
    a.c2_c3_intersection = total_intersection(*a.chart_pair);
    a.correspondence = verify_inner_correspondence(*a.chart_pair, *a.split, sings);
    inner_points.emplace();
    for (const auto& ip : a.split->inner) inner_points->push_back(ip.point);
  }
  for (const auto& s : sings) {
    PointReport r;
    r.sing = s;
    if (a.split)
      for (const auto& ip : a.split->inner)
        if (ip.point == s.point) {
          r.inner = true;
          r.iota = ip.iota;
        }
    a.total_milnor += s.point.degree() * s.mu;
    a.delta_total += s.point.degree() * s.delta;
    a.points.push_back(std::move(r));
  }
  a.config = assemble_configuration(sings, inner_points);

  // Components, all in the analysis chart.
  std::vector<Poly> hints;
  for (const auto& h : input.hints) {
    Poly hh = in_xy(h);
    hints.push_back(to_chart(hh, hh.total_degree(), a.chart));
  }
  a.components = decompose(a.chart_f, hints, a.chart_pair);
  for (auto* list : {&a.components.factors, &a.components.residual_pieces})
    for (auto& fac : *list) {
      PieceReport pr;
      if (fac.degree >= 2) {
        for (const auto& p : singular_points(fac.poly)) pr.sings.push_back(analyze_point(fac.poly, p, opt));
      }
      pr.delta = delta_sum(pr.sings);
      infer_geometric(fac, pr.delta);
      pr.config = assemble_configuration(pr.sings);
      pr.factor = fac;
      a.pieces.push_back(std::move(pr));
    }

  for (auto& pr : a.pieces) {
    const Factor& fac = pr.factor;
    if (!fac.geometric) continue;
    const int k = static_cast<int>(fac.geometric->size());
    const int e = fac.geometric->front();
    if (k == 1) {
      try {
        pr.genus = genus(fac.poly, pr.sings);
      } catch (const ImpossibleCurve& err) {
        pr.errors.push_back(err.what());
      }
      try {
        pr.class_degree = class_degree(fac.poly, pr.sings);
      } catch (const ImpossibleCurve& err) {
        pr.errors.push_back(err.what());
      }
      if (input.defects && fac.degree >= 2) {
        try {
          pr.flex_count = flex_count(fac.poly, pr.sings, *input.defects);
        } catch (const std::out_of_range& err) {
          pr.errors.push_back(err.what());
        }
      }
    } else {
      // delta of one conjugate component; the cross terms are the e^2
      // intersections of each pair.
      const int own = (pr.delta - k * (k - 1) / 2 * e * e) / k;
      const int g = (e - 1) * (e - 2) / 2 - own;
      if (g < 0)
        pr.errors.push_back("genus " + std::to_string(g) + " is negative");
      else
        pr.genus = g;
    }
  }

  if (a.components.complete()) {
    std::vector<std::vector<LocalSingularity>> per_piece;
    for (const auto& pr : a.pieces) per_piece.push_back(pr.sings);
    a.delta_star = delta_star(a.components, per_piece);
  } else {
    a.notes.push_back("component type not determined");
  }
  return a;
}

}  // namespace sextic
