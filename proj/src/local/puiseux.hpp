#pragma once

#include <array>
#include <string>
#include <vector>

#include "bipoly.hpp"

namespace sextic::detail {

// One decision on the way from the root of the expansion to a branch: which
// face, which root cluster, which conjugate. Branches that agree on a prefix
// of steps share those Puiseux terms.
struct PathStep {
  std::array<int, 3> choice{};
  bool infinite = false;  // the exact branch Y = 0 at this node
  Rational slope;         // q/p of the face taken
  int s = 0;              // the node's current Y is x^(s/n) times a unit
  int n = 1;
};

struct PuiseuxBranch {
  int n = 1;
  std::vector<Rational> char_exponents;  // as exponents of x
  std::vector<PathStep> path;
  Rational first_exponent;
  std::string initial_form;
  int field_degree = 1;
};

// Branches of a germ at the origin whose tangent cone avoids X = 0 (the germ
// is Y-general of order equal to its multiplicity). Levels up to `trusted`
// of K are known to be fields; higher levels are split on demand.
std::vector<PuiseuxBranch> puiseux_branches(const Field& K, const BiPoly& germ, int trusted,
                                            const LocalOptions& opt);

// Contact order of two branches in x: the largest coincidence exponent of
// their Puiseux series.
Rational contact_exponent(const PuiseuxBranch& a, const PuiseuxBranch& b);

}  // namespace sextic::detail
