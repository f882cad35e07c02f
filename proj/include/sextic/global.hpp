#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/components.hpp"
#include "sextic/local.hpp"

namespace sextic {

// An invariant formula rules the curve out (negative genus, class below 2).
class ImpossibleCurve : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ConfigEntry {
  SingType type;
  int count = 1;
  std::optional<bool> inner;  // inner or outer singularity of a torus curve
};

// A configuration of singularities with the optional subscript and mr mark,
// e.g. "[C_{3,7},A_8,A_1]" or "[3A_5,2A_2]^{mr}".
struct Configuration {
  std::vector<ConfigEntry> entries;  // canonical order, counts folded
  bool mr = false;
  std::optional<int> index;

  int total_milnor() const;
  bool has_unknown() const;
  // Entries with the inner flags dropped and counts merged.
  Configuration reduced() const;
  std::vector<SingType> types() const;  // with repetition
  std::string to_string() const;        // with index and mr
  std::string body() const;             // the bracket only
};

// Sorts and folds entries into canonical order.
Configuration make_configuration(std::vector<ConfigEntry> entries, std::optional<int> index = std::nullopt,
                                 bool mr = false);

// '[' entry (',' entry)* ']' ('_' int)? ('^mr' | '^{mr}')? with entries like
// "4A_2", "C_{3,7}", "A_{11}". Throws ParseError.
Configuration parse_configuration(std::string_view text);

// Same multiset of types, ignoring inner flags, index and mr.
bool same_types(const Configuration& a, const Configuration& b);

// Flex defect per singularity type; absent types are errors.
class DefectTable {
 public:
  void set(const SingType& t, int defect);
  int at(const SingType& t) const;  // std::out_of_range when absent
  bool empty() const { return table_.empty(); }
  const std::map<std::string, int>& entries() const { return table_; }

 private:
  std::map<std::string, int> table_;
};

// Singular points are given one per conjugacy class; every sum below counts
// each class with the degree of its point.
int genus(const Poly& component, const std::vector<LocalSingularity>& sings);
int class_degree(const Poly& component, const std::vector<LocalSingularity>& sings);
int flex_count(const Poly& component, const std::vector<LocalSingularity>& sings, const DefectTable& defects);

// Sum of delta over the singular points of one curve.
int delta_sum(const std::vector<LocalSingularity>& sings);

struct GlobalInvariants {
  int degree = 0;
  int genus = 0;
  int delta_star = 0;
  int class_degree = 0;
  std::optional<int> flex_count;
};

// Invariants of an irreducible component; flex_count only with defects.
GlobalInvariants component_invariants(const Poly& component, const std::vector<LocalSingularity>& sings,
                                      const DefectTable* defects = nullptr);

// Upper bound on delta* for a curve whose components have these degrees:
// the genus bound for one component, the table for two or more.
int delta_star_ceiling(std::vector<int> component_degrees);

struct DeltaStar {
  int value = 0;
  int ceiling = 0;
  bool ok = true;
};

// delta* of a curve from the singular points of each rational piece of the
// decomposition (same order as pieces()). A piece that splits into k
// conjugate components of degree e contributes delta(piece) - C(k,2) e^2.
// Throws std::invalid_argument if the decomposition is not complete.
DeltaStar delta_star(const ComponentDecomposition& dec, const std::vector<std::vector<LocalSingularity>>& sings);

// Canonical multiset; points of degree k count k times. When inner_points is
// given, entries carry inner flags.
Configuration assemble_configuration(const std::vector<LocalSingularity>& sings,
                                     const std::optional<std::vector<AlgebraicPoint>>& inner_points = std::nullopt);

// Only simple types and total Milnor number 19.
bool is_maximal_rank(const Configuration& config);

}  // namespace sextic
