#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "aq/rational.hpp"

namespace aq {

// Sparse exact linear system sum_c a_c x_c = rhs, reduced incrementally with
// integer (fraction-free) row operations. Pivots are the leftmost nonzero
// column of each row, so column order sets the preference among solutions:
// free columns are set to zero, and later columns are the ones left free.
class EchelonSolver {
 public:
  explicit EchelonSolver(int columns);

  // Returns false once an inconsistent row has been seen.
  bool add_row(const std::map<int, Rational>& coefficients, const Rational& rhs);
  bool consistent() const { return consistent_; }
  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  int kernel_dimension() const { return columns_ - rank(); }
  bool is_pivot(int column) const { return rows_.count(column) != 0; }

  // Free columns zero. Requires consistent().
  std::vector<Rational> particular_solution() const;
  // One vector per free column, with that column set to one.
  std::vector<std::vector<Rational>> kernel_basis() const;
  // The solution orthogonal to the kernel under the standard inner product.
  std::vector<Rational> min_norm_solution() const;

 private:
  struct Row {
    std::map<int, mpz_class> a;  // leading entry is the pivot, positive
    mpz_class rhs;
  };
  void normalize(Row& r) const;
  void eliminate(Row& target, int column, const Row& pivot) const;

  int columns_;
  bool consistent_ = true;
  std::map<int, Row> rows_;  // by pivot column, kept fully reduced
};

// Solves a small dense square system exactly; throws InputError if singular.
std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace aq
