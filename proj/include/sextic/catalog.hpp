#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/analysis.hpp"
#include "sextic/global.hpp"

namespace sextic {

class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Bindings = std::map<std::string, Rational>;

struct PointClaim {
  Rational x, y;
  std::string type;
};

struct ComponentClaim {
  int degree = 0;
  std::string config;
};

// What a record states about one curve. Every present field becomes one
// verdict line.
struct Claims {
  std::optional<std::string> config;          // reduced configuration
  std::optional<std::vector<int>> components; // degrees of the irreducible components
  std::optional<std::string> inner;           // inner configuration
  std::optional<std::string> inner_contains;  // one type known to be inner
  std::vector<PointClaim> points;
  std::vector<std::string> factorization;     // product is the curve up to a constant
  std::vector<ComponentClaim> component_configs;
  std::optional<std::string> unverifiable;    // reason the curve cannot be built over Q

  bool empty() const;
};

struct Instance {
  Bindings params;
  Claims claims;
};

// A second torus decomposition of the same curve: scale * (f2^3 + f3^2) is the
// expansion of the main pair.
struct AlternativePair {
  std::string f2, f3;
  Rational scale = 1;
  std::optional<std::string> inner;
};

struct GenericClaims {
  Claims claims;
  int samples = 2;
  std::vector<Rational> avoid;  // parameter values known to be special
};

struct CurveDocument {
  std::string id;
  std::string source;
  std::string title;
  std::vector<std::string> parameters;
  std::optional<std::string> f, f2, f3;
  std::optional<std::string> f2_denominator, f3_denominator;
  std::optional<NormalFormFamily> normal_form;
  std::vector<std::string> factors;
  Bindings params;
  std::map<std::string, int> defects;
  Claims claims;
  std::vector<Instance> instances;
  std::optional<GenericClaims> generic;
  std::optional<AlternativePair> alternative;
  std::optional<std::string> expansion;  // an exact identity for the expanded pair

  bool is_pair() const { return f2.has_value(); }
  // Parameters not bound by params.
  std::vector<std::string> free_parameters() const;
};

// Parses and validates a JSON document. Throws DocumentError.
CurveDocument parse_document(const std::string& json_text);

// The curve at the given bindings (merged over the document's own params).
// Throws DocumentError for unbound parameters or a vanishing denominator.
CurveInput instantiate(const CurveDocument& doc, const Bindings& bindings = {});

// A polynomial written in the document's variables, at the given bindings
// (merged over the document's own params), as a polynomial in x, y.
Poly bind_poly(const CurveDocument& doc, const std::string& text, const Bindings& bindings = {});

// Catalog of the two classification tables.
struct CatalogEntry {
  std::string id;
  std::string table;  // "simple" or "non-simple"
  std::string item;
  std::string inner;  // exact inner configuration for the simple table
  std::string inner_contains;
  std::string component_text;  // e.g. "B_1+B_1'+B_4"
  std::vector<int> degrees;    // descending
  std::string config_text;
  Configuration config;
  std::string intersection;    // stated intersection pattern, may be empty
  std::vector<std::string> examples;  // corpus records realizing the entry
  std::string strength() const { return examples.empty() ? "asserted" : "exampled"; }
};

std::vector<int> parse_component_type(const std::string& text);

const std::vector<CatalogEntry>& builtin_catalog();
const std::vector<CurveDocument>& builtin_examples();
const CurveDocument* find_example(const std::string& id);

struct ZariskiGroup {
  Configuration config;  // reduced, no index
  std::vector<const CatalogEntry*> members;
  bool implied_irreducible = false;  // subscripts start at 2
  int size() const { return static_cast<int>(members.size()) + (implied_irreducible ? 1 : 0); }
};

std::vector<ZariskiGroup> weak_zariski_groups(const std::vector<CatalogEntry>& entries);

// Verification.
enum class Status { Verified, Mismatch, Unverifiable };
std::string status_name(Status s);

struct ClaimStatus {
  std::string instance;  // "given", "s=1", "generic s=3/7"
  std::string claim;
  Status status = Status::Verified;
  std::string expected;
  std::string found;
  std::string reason;
};

struct VerdictReport {
  std::string id;
  std::string source;
  std::uint64_t seed = 0;
  std::vector<ClaimStatus> claims;
  std::vector<std::string> unresolved;
  std::vector<std::string> consistency_errors;
  double seconds = 0;

  int count(Status s) const;
  bool clean() const { return count(Status::Mismatch) == 0 && consistency_errors.empty(); }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  LocalOptions local;
  unsigned threads = 0;  // 0: hardware concurrency
};

VerdictReport verify_example(const CurveDocument& doc, const VerifyOptions& opt = {});
std::vector<VerdictReport> verify_all(const std::vector<CurveDocument>& docs, const VerifyOptions& opt = {});

// Seeded generic rational value, avoiding the given values.
Rational random_rational(std::uint64_t& state, const std::vector<Rational>& avoid = {});
std::uint64_t record_seed(std::uint64_t seed, const std::string& id);

}  // namespace sextic
