#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sextic/poly.hpp"
#include "sextic/unipoly.hpp"

namespace sextic {

// A closed point over Q-bar, up to conjugation: the coordinates are x(t), y(t)
// reduced modulo the irreducible monic minpoly(t). Rational points have a
// linear minpoly t and constant coordinates.
struct AlgebraicPoint {
  UniPoly minpoly{"t", {Rational(0), Rational(1)}};
  UniPoly x{"t"};
  UniPoly y{"t"};

  static AlgebraicPoint rational(const Rational& x, const Rational& y);

  int degree() const { return minpoly.degree(); }
  bool is_rational() const { return degree() == 1; }
  Rational x_rational() const;
  Rational y_rational() const;
  std::string to_string() const;
};

bool operator<(const AlgebraicPoint& a, const AlgebraicPoint& b);
bool operator==(const AlgebraicPoint& a, const AlgebraicPoint& b);

class NotSquarefree : public std::domain_error {
 public:
  NotSquarefree() : std::domain_error("polynomial is not squarefree (curve is not reduced)") {}
};

class NonIsolatedSingularity : public std::domain_error {
 public:
  NonIsolatedSingularity() : std::domain_error("singular locus is positive dimensional") {}
};

class NotOnCurve : public std::domain_error {
 public:
  NotOnCurve() : std::domain_error("point does not lie on the curve") {}
};

class InfiniteIntersection : public std::domain_error {
 public:
  InfiniteIntersection() : std::domain_error("curves share a component through the point") {}
};

// Two independent computations of the same invariant disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The resolution needs a coefficient field beyond the tower cap or a Puiseux
// expansion deeper than the truncation cap.
class Unresolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LocalOptions {
  int tower_cap = 12;
  int depth_cap = 30;
};

// Newton polygon of a germ at the origin with rational coefficients. Points
// are (i, j) for x^i y^j. Each face joins (i0, j0) to (i1, j1) with i0 < i1,
// j0 > j1; along it y^a ~ x^b with a = (j0 - j1)/g, b = (i1 - i0)/g.
struct NewtonFace {
  int i0 = 0, j0 = 0, i1 = 0, j1 = 0;
  int a = 0, b = 0;
  // Face polynomial in z = y^a / x^b; its roots are the alpha of y^a - alpha x^b.
  UniPoly face_poly{"z"};
  std::vector<std::pair<UniPoly, int>> factors;  // over Q, with multiplicity
};

struct NewtonPolygon {
  std::vector<std::pair<int, int>> support;
  int x_power = 0;  // monomial x^x_power y^y_power removed before the hull
  int y_power = 0;
  std::vector<NewtonFace> faces;  // increasing slope b/a
  bool nondegenerate = false;
};

NewtonPolygon newton_polygon(const Poly& germ);

// Initial form y^a - alpha x^b of one branch; alpha is a root of `alpha`
// (a linear factor for rational alpha). Axis branches use a = 1, b = 0.
struct InitialBranch {
  int a = 0, b = 0;
  UniPoly alpha{"z"};
  std::string axis;  // "x" or "y" for the branches x = 0 and y = 0
};

// Branch count sum(nu_i) with one initial form per branch; nullopt when the
// polygon is degenerate.
std::optional<std::vector<InitialBranch>> nondegenerate_branches(const NewtonPolygon& np);

struct BranchData {
  int index = 0;
  int n = 1;                  // multiplicity (ramification over the transversal)
  std::vector<int> beta;      // characteristic exponents with denominator n
  Rational first_exponent;    // order of the first term y ~ c x^e in generic coordinates
  std::string initial_form;   // leading term of the expansion
  int field_degree = 1;       // degree of the coefficient field of the expansion
};

struct SingType {
  enum class Family { A, D, E, B, C, D47, Sp1, Sp2, Unknown };
  Family family = Family::Unknown;
  int k = 0;         // A_k, D_k, E_k
  int p = 0, q = 0;  // B_{p,q}, C_{p,q}
  std::string raw;   // signature of an unrecognized germ

  static SingType A(int k) { return {Family::A, k, 0, 0, {}}; }
  static SingType D(int k) { return {Family::D, k, 0, 0, {}}; }
  static SingType E(int k) { return {Family::E, k, 0, 0, {}}; }
  static SingType B(int p, int q) { return {Family::B, 0, p, q, {}}; }
  static SingType C(int p, int q) { return {Family::C, 0, p, q, {}}; }
  static SingType D47() { return {Family::D47, 0, 0, 0, {}}; }
  static SingType Sp1() { return {Family::Sp1, 0, 0, 0, {}}; }
  static SingType Sp2() { return {Family::Sp2, 0, 0, 0, {}}; }

  bool is_simple() const { return family == Family::A || family == Family::D || family == Family::E; }
  // Milnor number of the type (0 for Unknown).
  int milnor() const;
  int delta() const;
  // Paper-style name: A_5, E_6, B_{3,6}, C_{3,12}, D_{4,7}, Sp_1.
  std::string name() const;
};

bool operator==(const SingType& a, const SingType& b);
bool operator<(const SingType& a, const SingType& b);  // canonical print order

// Parses a type name; accepts braces around single indices ("A_{11}") and the
// compact forms "B_{36}", "D_{47}". Throws std::invalid_argument.
SingType parse_sing_type(std::string_view text);

struct LocalSingularity {
  AlgebraicPoint point;
  int m = 0;
  int mu = 0;
  int r = 0;
  int delta = 0;
  std::vector<int> mult_sequence;       // multiplicities >= 2 of the infinitely near points
  std::vector<BranchData> branches;
  std::vector<std::vector<int>> contacts;  // I(b_i, b_j); 0 on the diagonal
  std::string signature;
  SingType type;
};

// Affine singular points of a squarefree curve, one entry per conjugacy class,
// sorted.
std::vector<AlgebraicPoint> singular_points(const Poly& f);

// Affine common points of two curves without a common component, one entry
// per conjugacy class, sorted. Throws InfiniteIntersection otherwise.
std::vector<AlgebraicPoint> intersection_points(const Poly& g, const Poly& h);

// Singular points on the line at infinity of the degree-d closure exist.
bool singular_at_infinity(const Poly& f, int d);

// The curve in the chart Z = 1 + k x + l y of its degree-d closure.
Poly rechart(const Poly& f, int d, const Rational& k, const Rational& l);
AlgebraicPoint rechart_point(const AlgebraicPoint& p, const Rational& k, const Rational& l);

int multiplicity(const Poly& f, const AlgebraicPoint& p);
bool lies_on(const Poly& f, const AlgebraicPoint& p);

int intersection_multiplicity(const Poly& g, const Poly& h, const AlgebraicPoint& p);
int milnor_number(const Poly& f, const AlgebraicPoint& p);

struct Resolution {
  int m = 0;
  int r = 0;
  int delta = 0;
  std::vector<int> mult_sequence;
  std::vector<BranchData> branches;
  std::vector<std::vector<int>> contacts;
};

// Branch structure of a reduced germ at the origin (rational coefficients).
Resolution resolve(const Poly& germ, const LocalOptions& opt = {});
Resolution resolve_at(const Poly& f, const AlgebraicPoint& p, const LocalOptions& opt = {});

// (mu + r - 1)/2, cross-checked against the resolution; ConsistencyError on mismatch.
int delta(const Poly& f, const AlgebraicPoint& p, const LocalOptions& opt = {});

LocalSingularity analyze_point(const Poly& f, const AlgebraicPoint& p, const LocalOptions& opt = {});

// Canonical topological signature of a resolved germ (minimized over branch
// orderings).
std::string signature(int m, int mu, const std::vector<BranchData>& branches,
                      const std::vector<std::vector<int>>& contacts);
SingType classify(const LocalSingularity& s);
SingType classify_signature(const std::string& sig);

// The normal forms the recognition table is generated from.
struct NormalForm {
  SingType type;
  std::string poly;  // in x, y
};
const std::vector<NormalForm>& normal_forms();

// Truncated power-series parametrization (x(t), y(t)); index = power of t.
struct Parametrization {
  std::vector<Rational> x;
  std::vector<Rational> y;
};

// Gauss image of a branch: slope p = y'/x' and intercept q = y - p x of the
// tangent line, truncated to the precision the input supports. Throws
// std::domain_error for a line branch.
Parametrization dual_branch(const Parametrization& b);

// Implicit equation in (u, v) of a truncated parametrization (resultant in t).
Poly implicitize(const Parametrization& b, const std::string& u = "x", const std::string& v = "y");

}  // namespace sextic
