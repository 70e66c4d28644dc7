#pragma once

#include <string>
#include <vector>

#include "aq/algebra.hpp"
#include "aq/bialgebra.hpp"

namespace aq {

// analytic: zero preferred on a fixed column order (the default).
// min-norm: the solution orthogonal to the constraint kernel.
enum class Gauge { Analytic, MinNorm };
std::string gauge_id(Gauge g);
Gauge parse_gauge(const std::string& id);

struct OrderDiagnostics {
  int order = 0;
  std::string phase;    // "coproduct" or "commutator"
  std::string subject;  // generator name, or "all" for the commutator phase
  int unknowns = 0;
  int rank = 0;
  int kernel = 0;
  friend bool operator==(const OrderDiagnostics&, const OrderDiagnostics&) = default;
};

struct DeformationResult {
  LieBialgebra bialgebra;
  int order = 0;
  Gauge gauge = Gauge::Analytic;
  CommutatorTable commutators;
  CoproductTable coproducts;
  std::vector<OrderDiagnostics> diagnostics;

  HopfStructure hopf() const { return HopfStructure(commutators, coproducts); }
};

// Delta_(0) primitive plus z delta, classical brackets. Throws InputError on an
// invalid bialgebra.
DeformationResult init_deformation(const LieBialgebra& b, int order, Gauge gauge = Gauge::Analytic);
// Fills Delta_(k) from coassociativity at z^k. Throws ObstructionError.
void solve_coproduct_order(DeformationResult& state, int k);
// Fills the z^k bracket corrections (and, for odd k > 1, the degree-2
// antisymmetric part of Delta_(k)) from the homomorphism property and Jacobi.
void solve_commutator_order(DeformationResult& state, int k);
DeformationResult quantize(const LieBialgebra& b, int order, Gauge gauge = Gauge::Analytic);

// A coproduct term X_P (x) X_j (or its mirror) with j not above any index of P.
// At even k these are the columns the analytic gauge sets to zero.
bool pivot_type(const Monomial& l, const Monomial& r);
// Exponent vectors of total degree d in ascending lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);
// Additive weight of a monomial under weight_grading.
std::vector<long> weight_of(const Monomial& m, const std::vector<std::vector<long>>& w);

}  // namespace aq
