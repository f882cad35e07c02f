#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sextic/components.hpp"
#include "sextic/global.hpp"
#include "sextic/local.hpp"
#include "sextic/torus.hpp"

namespace sextic {

struct CurveInput {
  Poly f;                          // in x, y
  std::optional<TorusPair> pair;   // f = f2^3 + f3^2 exactly when present
  std::vector<Poly> hints;
  std::optional<DefectTable> defects;
  int degree = 6;                  // projective degree of the closure
};

// The chart Z = 1 + k x + l y in which the whole analysis runs. (0, 0) is the
// given chart.
struct Chart {
  Rational k, l;
  bool is_identity() const { return k == 0 && l == 0; }
};

// First (k, l) in a fixed order of small integers for which the closure has
// no singular point on the new line at infinity.
Chart choose_chart(const Poly& f, int degree);

struct PointReport {
  LocalSingularity sing;
  bool inner = false;
  int iota = 0;  // I(C2, C3; P) at inner points
};

struct PieceReport {
  Factor factor;  // in the analysis chart
  std::vector<LocalSingularity> sings;
  int delta = 0;
  Configuration config;
  // Genus of one geometric component; for k conjugate components it is the
  // common genus of each.
  std::optional<int> genus;
  std::optional<int> class_degree;  // geometrically irreducible pieces only
  std::optional<int> flex_count;
  std::vector<std::string> errors;
};

struct CurveAnalysis {
  Poly f;        // as given
  Chart chart;
  Poly chart_f;  // the curve in the analysis chart
  std::optional<TorusPair> chart_pair;
  std::vector<PointReport> points;
  Configuration config;
  int total_milnor = 0;
  int delta_total = 0;

  std::optional<InnerOuterSplit> split;
  int inner_iota_total = 0;
  int c2_c3_intersection = 0;
  std::vector<CorrespondenceCheck> correspondence;

  ComponentDecomposition components;
  std::vector<PieceReport> pieces;  // same order as components.pieces()
  std::optional<DeltaStar> delta_star;
  std::vector<std::string> notes;

  std::vector<LocalSingularity> singularities() const;
  std::optional<std::vector<int>> component_degrees() const { return components.component_degrees(); }
};

// Throws NotSquarefree, NonIsolatedSingularity, DegenerateTorus, Unresolved
// and ConsistencyError as raised by the stages.
CurveAnalysis analyze_curve(const CurveInput& input, const LocalOptions& opt = {});

}  // namespace sextic
