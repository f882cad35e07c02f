#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/local.hpp"
#include "sextic/poly.hpp"

namespace sextic {

// The pair (f2, f3) of a torus curve f2^3 + f3^2 = 0: conic C2 and cubic C3.
struct TorusPair {
  Poly f2;
  Poly f3;
};

class DegenerateTorus : public std::domain_error {
 public:
  explicit DegenerateTorus(const std::string& what) : std::domain_error(what) {}
};

Poly expand(const TorusPair& pair);

// (f2, f3) and (c^2 f2, c^3 f3) define the same curve; this compares the
// expansions after reduction to primitive integer form.
bool same_curve(const Poly& a, const Poly& b);

struct InnerPoint {
  AlgebraicPoint point;
  int iota = 0;  // I(C2, C3; P)
};

struct InnerOuterSplit {
  std::vector<InnerPoint> inner;
  std::vector<AlgebraicPoint> outer;
  // Sum of iota over inner points, conjugates counted.
  int inner_iota_total() const;
};

// Throws DegenerateTorus if C2 and C3 share a component.
InnerOuterSplit inner_outer_split(const TorusPair& pair, const std::vector<AlgebraicPoint>& sings);

// Sum over all common points of C2 and C3 of the intersection number,
// conjugates counted; 6 when the two curves meet only in the affine chart.
int total_intersection(const TorusPair& pair);

struct CorrespondenceCheck {
  AlgebraicPoint point;
  SingType type;
  int iota = 0;
  bool c3_smooth = false;
  bool applies = false;  // C3 smooth at P
  bool holds = true;
  std::string detail;
};

// A_{6j-1} at P if and only if iota = 2j, at inner points where C3 is smooth.
std::vector<CorrespondenceCheck> verify_inner_correspondence(const TorusPair& pair, const InnerOuterSplit& split,
                                                            const std::vector<LocalSingularity>& classified);

// f2 = scale * ell^2 with ell a primitive integer linear form.
struct LinearTorus {
  Poly ell;
  Rational scale;
  // ell' = sqrt(-scale) * ell is rational, so f2 = -ell'^2 over Q.
  std::optional<Poly> rational_root() const;
};

std::optional<LinearTorus> is_linear_torus(const TorusPair& pair);

struct LineIntersection {
  AlgebraicPoint point;
  int multiplicity = 0;
};

// Intersection of the curve with a line that is not one of its components.
std::vector<LineIntersection> line_intersections(const Poly& f, const Poly& line);

// True iff the line meets f exactly at the given points, with intersection
// numbers 2, 4, 6 at the A_5, A_11, A_17 points respectively.
bool linear_type_test(const Poly& f, const Poly& line, const std::vector<AlgebraicPoint>& points,
                      const LocalOptions& opt = {});

enum class NormalFormFamily { ThreeA5, A11A5, A17 };

std::string family_name(NormalFormFamily f);
NormalFormFamily parse_family(std::string_view name);

// leading * y^6 + f3^2 with leading = lead_num / den^(2e), f3 = f3_num / den^e.
struct NormalFormTemplate {
  NormalFormFamily family;
  std::vector<std::string> params;
  Poly lead_num;
  Poly f3_num;
  Poly den;  // 1 for the 3A5 form, t2 or t3 otherwise
  int den_power = 0;
  // Same curve with denominators cleared: lead_num * y^6 + f3_num^2.
  Poly cleared() const;
};

const NormalFormTemplate& normal_form_template(NormalFormFamily family);

struct NormalFormParams {
  NormalFormFamily family;
  std::map<std::string, Rational> bindings;
};

struct NormalFormInstance {
  Rational leading;
  Poly f3;
  Poly sextic;
};

// Throws std::invalid_argument on missing bindings or a zero denominator and
// DegenerateTorus when the leading coefficient vanishes.
NormalFormInstance normal_form(const NormalFormParams& params);

}  // namespace sextic
