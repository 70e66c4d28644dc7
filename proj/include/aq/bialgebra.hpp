#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aq/algebra.hpp"
#include "aq/rational.hpp"
#include "aq/series.hpp"

namespace aq {

using LinearForm = std::map<int, Rational>;
// Coefficients of X_a (x) X_b with a < b in a wedge sum: {a,b} -> f means f * (X_a ^ X_b).
using WedgeForm = std::map<std::pair<int, int>, Rational>;

// A finite-dimensional Lie bialgebra. X ^ Y means X (x) Y - Y (x) X, and the
// cocommutator is stored without the deformation parameter.
struct LieBialgebra {
  std::string name;
  std::vector<std::string> generators;
  std::map<std::pair<int, int>, LinearForm> brackets;  // i < j
  std::map<int, WedgeForm> cocommutators;

  std::size_t size() const { return generators.size(); }
  int index_of(const std::string& generator) const;  // throws InputError
  LinearForm bracket(int i, int j) const;            // signed, zero on the diagonal
  WedgeForm cocommutator(int i) const;

  void set_bracket(int i, int j, LinearForm value);
  void set_cocommutator(int i, WedgeForm value);
  friend bool operator==(const LieBialgebra&, const LieBialgebra&) = default;
};

using ValidationReport = std::vector<std::string>;

// Throws InputError when indices are out of range or names are not unique.
void check_well_formed(const LieBialgebra& b);
// Empty iff Jacobi, co-Jacobi and the cocycle condition hold exactly.
ValidationReport validate(const LieBialgebra& b);

// (ad_{X_i} (x) 1 + 1 (x) ad_{X_i}) t for a z^0 tensor of X_j (x) X_k terms.
TensorSeries adjoint_action(const LieBialgebra& b, int i, const TensorSeries& t);
// delta(X_i) as a z^0 tensor of degree (1,1).
TensorSeries cocommutator_tensor(const LieBialgebra& b, int i, Truncation t);
// Undeformed commutator table.
CommutatorTable classical_table(const LieBialgebra& b, Truncation t);

// Integer weight vectors w_i (one per generator) spanning all additive
// gradings preserved by the brackets and by delta.
std::vector<std::vector<long>> weight_grading(const LieBialgebra& b);
// Greedy minimal generating set of the Lie algebra in index order.
std::vector<int> generating_set(const LieBialgebra& b);

// Text format with sections `generators:`, `brackets:`, `cocommutators:`.
LieBialgebra parse_bialgebra(const std::string& text, const std::string& name = "custom");
std::string render_bialgebra(const LieBialgebra& b);

std::vector<std::string> builtin_bialgebra_names();
bool is_builtin_bialgebra(const std::string& name);
LieBialgebra builtin_bialgebra(const std::string& name);
// A builtin name or a path to a bialgebra file.
LieBialgebra load_bialgebra(const std::string& name_or_path);

}  // namespace aq
