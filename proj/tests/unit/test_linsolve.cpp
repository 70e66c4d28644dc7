#include <doctest.h>

#include "aq/errors.hpp"
#include "aq/linsolve.hpp"

using namespace aq;

TEST_CASE("particular solution leaves free columns at zero") {
  // x0 + x1 = 3, x1 + x2 = 1 with x2 free.
  EchelonSolver s(3);
  CHECK(s.add_row({{0, 1}, {1, 1}}, 3));
  CHECK(s.add_row({{1, 1}, {2, 1}}, 1));
  CHECK(s.rank() == 2);
  CHECK(s.kernel_dimension() == 1);
  CHECK_FALSE(s.is_pivot(2));
  const auto x = s.particular_solution();
  CHECK(x == std::vector<Rational>{2, 1, 0});
  const auto k = s.kernel_basis();
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rational>{1, -1, 1});
}

TEST_CASE("redundant rows are absorbed and contradictions flagged") {
  EchelonSolver s(2);
  CHECK(s.add_row({{0, Rational(1, 2)}, {1, Rational(1, 3)}}, 1));
  CHECK(s.add_row({{0, 3}, {1, 2}}, 6));
  CHECK(s.rank() == 1);
  CHECK_FALSE(s.add_row({{0, 3}, {1, 2}}, 5));
  CHECK_FALSE(s.consistent());
}

TEST_CASE("min-norm solution is orthogonal to the kernel") {
  // x0 + x1 = 2: min norm is (1, 1).
  EchelonSolver s(2);
  s.add_row({{0, 1}, {1, 1}}, 2);
  CHECK(s.min_norm_solution() == std::vector<Rational>{1, 1});
  CHECK(s.particular_solution() == std::vector<Rational>{2, 0});
}

TEST_CASE("dense solve") {
  const auto x = solve_dense({{2, 1}, {1, 3}}, {3, 5});
  CHECK(x == std::vector<Rational>{Rational(4, 5), Rational(7, 5)});
  CHECK_THROWS_AS(solve_dense({{1, 2}, {2, 4}}, {1, 2}), InputError);
}
