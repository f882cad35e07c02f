#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sextic/poly.hpp"
#include "sextic/torus.hpp"

namespace sextic {

struct Factor {
  Poly poly;
  int degree = 0;
  int multiplicity = 1;
  std::string source;  // "hint", "line", "form", "conic", "linear-torus", "residual"
  // Irreducible over Q: certified by exhaustion of smaller rational factors.
  bool rational_irreducible = false;
  // Degrees of the components over the complex numbers, when known. A conic
  // that is a pair of conjugate lines gives {1, 1}.
  std::optional<std::vector<int>> geometric;
};

struct ComponentDecomposition {
  std::vector<Factor> factors;
  std::vector<Factor> residual_pieces;  // what is left after all searches
  Poly residual;                        // product of the residual pieces
  bool undecided = false;               // the conic search gave up somewhere
  std::vector<std::string> notes;

  // Every piece is irreducible over Q with known geometric degrees.
  bool complete() const;
  // Every rational piece, factors first.
  std::vector<const Factor*> pieces() const;
  // Degrees of the geometric components, descending, when all are known.
  std::optional<std::vector<int>> component_degrees() const;
};

std::optional<Poly> divides(const Poly& f, const Poly& g);

// Content 1, positive leading coefficient, variables (x, y).
Poly normalize_factor(const Poly& p);

std::vector<Poly> find_linear_factors(const Poly& f);

struct ConicSearch {
  std::vector<Poly> conics;
  bool undecided = false;
};

// Rational conic factors of f after its rational line factors are removed.
ConicSearch find_conic_factors(const Poly& f);

// The two cubics f3 + ell^3 and f3 - ell^3 when f2 = -ell^2 over Q.
std::optional<std::pair<Poly, Poly>> linear_torus_split(const TorusPair& pair);

ComponentDecomposition decompose(const Poly& f, const std::vector<Poly>& hints = {},
                                 const std::optional<TorusPair>& pair = std::nullopt);

// Ways a curve that is irreducible over Q, of the given degree and total
// delta (conjugate points counted), can split into k Galois conjugate
// components of degree d/k: each option is the list of component degrees.
// The delta of k conjugate components is k*delta_c + C(k,2)*(d/k)^2 with
// 0 <= delta_c <= (d/k-1)(d/k-2)/2, so a single option is a certificate.
std::vector<std::vector<int>> conjugate_split_options(int degree, int delta_total);

// Fills in piece.geometric when the split options leave a single choice.
void infer_geometric(Factor& piece, int delta_total);

}  // namespace sextic
