#include <doctest.h>

#include "aq/bialgebra.hpp"
#include "aq/errors.hpp"
#include "aq/quantizer.hpp"
#include "aq/verify.hpp"

using namespace aq;

namespace {

Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

Monomial power(int i, int k) {
  Monomial m(3);
  m.set(static_cast<std::size_t>(i), k);
  return m;
}

// Test-side expansion of e^{zH} (x) G + G (x) e^{-zH} for G = X or Y.
TensorSeries exp_pair(int g, int order) {
  TensorSeries t(Truncation::z_order(order));
  Rational fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= k;
    t.add(TensorKey{k, 0, power(0, k), power(g, 1)}, 1 / fact);
    t.add(TensorKey{k, 0, power(g, 1), power(0, k)}, (k % 2 ? -1 : 1) / fact);
  }
  return t;
}

// sinh(2 z H)/z through z^order.
SeriesElement sinh_2h(int order) {
  SeriesElement s(Truncation::z_order(order));
  Rational fact = 1;
  Rational pow2 = 1;
  for (int j = 1; j <= order + 1; ++j) {
    fact *= j;
    pow2 *= 2;
    if (j % 2) s.add(TermKey{j - 1, 0, power(0, j)}, pow2 / fact);
  }
  return s;
}

}  // namespace

TEST_CASE("su2 coproducts are the exponential pair, H stays primitive") {
  const DeformationResult q = quantize(builtin_bialgebra("su2"), 4);
  const Truncation t = Truncation::z_order(4);
  CHECK(q.coproducts.entries[0] == primitive_coproduct(3, 0, t));
  CHECK(q.coproducts.entries[1] == exp_pair(1, 4));
  CHECK(q.coproducts.entries[2] == exp_pair(2, 4));
  // Spot values written out by hand.
  CHECK(q.coproducts.entries[1].coefficient(TensorKey{2, 0, mono({2, 0, 0}), mono({0, 1, 0})}) == Rational(1, 2));
  CHECK(q.coproducts.entries[1].coefficient(TensorKey{3, 0, mono({0, 1, 0}), mono({3, 0, 0})}) == Rational(-1, 6));
}

TEST_CASE("su2 commutators") {
  const DeformationResult q = quantize(builtin_bialgebra("su2"), 5);
  CHECK(q.commutators.bracket(1, 2).same_terms(sinh_2h(5)));
  CHECK(q.commutators.bracket(1, 2).coefficient(TermKey{4, 0, mono({5, 0, 0})}) == Rational(4, 15));
  CHECK(q.commutators.bracket(0, 1).same_terms(generator_element(3, 1, Truncation::z_order(5))));
  CHECK(q.commutators.bracket(0, 2).same_terms(generator_element(3, 2, Truncation::z_order(5)).scaled(-1)));
}

TEST_CASE("quantizer output passes the Hopf checks") {
  for (const char* name : {"su2", "su2-borel", "u3"}) {
    CAPTURE(name);
    const DeformationResult q = quantize(builtin_bialgebra(name), 3);
    const HopfReport r = verify_hopf(q);
    CHECK_MESSAGE(r.empty(), r.render());
  }
}

TEST_CASE("flip parity of each order") {
  const DeformationResult q = quantize(builtin_bialgebra("u3"), 3);
  for (const auto& d : q.coproducts.entries)
    for (int k = 0; k <= 3; ++k) {
      const TensorSeries dk = d.z_component(k);
      CHECK(flip(dk) == (k % 2 ? dk.scaled(-1) : dk));
    }
}

TEST_CASE("min-norm gauge is a different valid solution") {
  const LieBialgebra b = builtin_bialgebra("su2");
  const DeformationResult m = quantize(b, 3, Gauge::MinNorm);
  CHECK(verify_hopf(m).empty());
  CHECK_FALSE(m.coproducts.entries[1] == exp_pair(1, 3));
  CHECK(m.coproducts.entries[1].z_component(1) == exp_pair(1, 3).z_component(1));
  CHECK(parse_gauge(gauge_id(Gauge::MinNorm)) == Gauge::MinNorm);
  CHECK_THROWS_AS(parse_gauge("lattice"), InputError);
}

TEST_CASE("diagnostics record every solve") {
  const DeformationResult q = quantize(builtin_bialgebra("su2"), 2);
  bool coproduct = false;
  bool commutator = false;
  for (const auto& d : q.diagnostics) {
    CHECK(d.rank + d.kernel == d.unknowns);
    coproduct = coproduct || d.phase == "coproduct";
    commutator = commutator || d.phase == "commutator";
  }
  CHECK(coproduct);
  CHECK(commutator);
}

TEST_CASE("invalid input is rejected before solving") {
  LieBialgebra b = builtin_bialgebra("su2");
  b.set_cocommutator(2, {{{0, 2}, 2}});
  CHECK_THROWS_AS(quantize(b, 2), InputError);
  CHECK_THROWS_AS(quantize(builtin_bialgebra("su2"), 0), InputError);
}

TEST_CASE("column helpers") {
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(3, 2).front() == mono({0, 0, 2}));
  CHECK(pivot_type(mono({1, 0, 0}), mono({0, 1, 0})) == pivot_type(mono({0, 1, 0}), mono({1, 0, 0})));
  const auto w = weight_grading(builtin_bialgebra("su2"));
  CHECK(weight_of(mono({0, 1, 1}), w) == weight_of(Monomial(3), w));
}
