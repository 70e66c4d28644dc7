#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aq/dump.hpp"

namespace aq {

// Generator data in graded (Rees) form. Quantizer data is made homogeneous by
// hbar powers, with z of weight -1: brackets have weight 2 and coproducts
// weight 1. Truncation keeps terms z^k hbar^j X^mu with |mu| + j <= D; that
// weight never drops under products, so the truncated data is exact. Setting
// hbar = 1 recovers the ordinary algebra. Deformed data of order N is kept
// whole when D >= N + 2.
struct BasicSetPresentation {
  std::string name;
  std::vector<std::string> generators;
  Truncation trunc = Truncation::graded(0, 2);  // z-order N, graded degree D
  CommutatorTable commutators;
  CoproductTable coproducts;

  std::size_t size() const { return generators.size(); }
  bool deformed() const { return trunc.z_max > 0; }
  HopfStructure hopf() const { return HopfStructure(commutators, coproducts); }
  friend bool operator==(const BasicSetPresentation&, const BasicSetPresentation&) = default;
};

// One polynomial per generator, in the coordinates of the basis it acts on.
// As a primitivization step it means X_i := X_i - P_i(X); perturb_basis reads
// it as Y_i := X_i + P_i(X).
struct BasisChange {
  int stage = 0;
  std::vector<SeriesElement> corrections;

  bool empty() const;
  friend bool operator==(const BasisChange&, const BasisChange&) = default;
};

// Undeformed enveloping algebra with primitive coproducts (delta ignored).
BasicSetPresentation classical_presentation(const LieBialgebra& b, int degree);
// Graded form of a quantizer result, truncated at graded degree `degree`.
BasicSetPresentation graded_presentation(const DeformationResult& r, int degree);

// Assigns hbar powers to a polynomial written at hbar = 1 so that each term
// has graded degree >= 2. Graded inputs pass through.
SeriesElement to_graded(const SeriesElement& p, Truncation t);
// S[X^nu]: the sum of the words of nu over all orderings, normal ordered.
SeriesElement symmetrized(const Monomial& nu, const Algebra& a);
// Degree-one part of u written in the basis of symmetrized monomials.
SeriesElement linear_part(const SeriesElement& u, const Algebra& a);
// poly(values): X^mu is replaced by the ordered product of the values.
SeriesElement substitute(const SeriesElement& poly, const std::vector<SeriesElement>& values, const Algebra& a);

// Data of a new basis W_i = X_i + (graded degree >= 2), given in X-coordinates,
// rewritten in W-coordinates.
BasicSetPresentation rebase(const BasicSetPresentation& s, const std::vector<SeriesElement>& basis);
BasicSetPresentation perturb_basis(const BasicSetPresentation& s, const BasisChange& p);

// Coassociativity and homomorphism failures of the presentation itself.
std::vector<std::string> presentation_defects(const BasicSetPresentation& s);

// Classical stage m: removes the graded degree m+1 part of the z^0 coproducts.
std::pair<BasisChange, BasicSetPresentation> primitivize_step(const BasicSetPresentation& s, int m);
// Deformed stage: brings the z^k coproducts into the quantizer's gauge.
// Requires z^0 primitive and lower orders already clean.
std::pair<BasisChange, BasicSetPresentation> primitivize_order(const BasicSetPresentation& s, int k);

struct PrimitivizeResult {
  BasisChange composite;  // final X_i = Y_i - composite_i(Y)
  std::vector<BasisChange> stages;
  BasicSetPresentation presentation;
};
// Classical stages 1..M, then (deformed input) z-orders 1..N.
PrimitivizeResult primitivize(const BasicSetPresentation& s, int max_stage);

// "X := X - (...)" lines, one per generator with a nonzero correction.
std::string render_basis_change(const BasisChange& c, const std::vector<std::string>& names);

Dump to_dump(const BasicSetPresentation& s);
BasicSetPresentation to_presentation(const Dump& d);
// hbar = 1 image of the presentation in the quantizer's regime.
DeformationResult drop_grading(const BasicSetPresentation& s, const LieBialgebra& b);

}  // namespace aq
