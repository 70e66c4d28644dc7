#include <doctest.h>

#include "aq/bialgebra.hpp"
#include "aq/dump.hpp"
#include "aq/errors.hpp"
#include "aq/oracles.hpp"
#include "aq/verify.hpp"

using namespace aq;

namespace {

Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

Rational q(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("Taylor coefficients") {
  CHECK(exp_coefficients(4) == std::vector<Rational>{1, 1, q(1, 2), q(1, 6), q(1, 24)});
  CHECK(exp_coefficients(2, -2) == std::vector<Rational>{1, -2, 2});
  CHECK(sinh_over_z_coefficients(4) == std::vector<Rational>{1, 0, q(1, 6), 0, q(1, 120)});
  CHECK(sinh_over_z_coefficients(2, 2) == std::vector<Rational>{2, 0, q(4, 3)});
  CHECK(z_over_sinh_coefficients(4) == std::vector<Rational>{1, 0, q(-1, 6), 0, q(7, 360)});
}

TEST_CASE("closed forms expand to their series") {
  const CommutatorTable table = classical_table(builtin_bialgebra("su2"), Truncation::z_order(2));
  ClosedForm alt;
  alt.kind = ClosedFormKind::SinhOverSinh;
  alt.form = {{0, 2}};
  // sinh(2zH)/sinh(z) = 2H + z^2 (4/3 H^3 - 1/3 H) + ...
  const auto s = std::get<SeriesElement>(expand(alt, 2, table));
  CHECK(s.size() == 3);
  CHECK(s.coefficient(TermKey{0, 0, mono({1, 0, 0})}) == 2);
  CHECK(s.coefficient(TermKey{2, 0, mono({3, 0, 0})}) == q(4, 3));
  CHECK(s.coefficient(TermKey{2, 0, mono({1, 0, 0})}) == q(-1, 3));

  ClosedForm pair;
  pair.kind = ClosedFormKind::ExpPrimitivePair;
  pair.form = {{0, 1}};
  pair.generator = 1;
  // e^{zH} (x) X + X (x) e^{-zH} through z^2.
  const auto p = std::get<TensorSeries>(expand(pair, 2, table));
  CHECK(p.size() == 6);
  CHECK(p.coefficient(TensorKey{1, 0, mono({1, 0, 0}), mono({0, 1, 0})}) == 1);
  CHECK(p.coefficient(TensorKey{1, 0, mono({0, 1, 0}), mono({1, 0, 0})}) == -1);
  CHECK(p.coefficient(TensorKey{2, 0, mono({0, 1, 0}), mono({2, 0, 0})}) == q(1, 2));
  CHECK(p.coefficient(TensorKey{2, 0, mono({2, 0, 0}), mono({0, 1, 0})}) == q(1, 2));

  for (const auto k : {ClosedFormKind::ExpPrimitivePair, ClosedFormKind::SinhOverZ, ClosedFormKind::SinhOverSinh,
                       ClosedFormKind::SinhHalfCoshLinear, ClosedFormKind::U3F13Coproduct,
                       ClosedFormKind::U3F13QCommutant, ClosedFormKind::U3F13F31Commutator})
    CHECK(parse_closed_form_kind(closed_form_kind_id(k)) == k);
}

TEST_CASE("su2 reference agrees with the quantizer") {
  for (int n : {1, 4, 6}) {
    CAPTURE(n);
    CHECK(diff_dumps(to_dump(quantize(builtin_bialgebra("su2"), n)), to_dump(builtin_reference("su2", n))).empty());
  }
  CHECK_THROWS_AS(builtin_reference("so5", 2), InputError);
}

TEST_CASE("u3 reference differs from the quantizer only in the F13 F31 bracket") {
  const auto lines = diff_dumps(to_dump(quantize(builtin_bialgebra("u3"), 3)), to_dump(builtin_reference("u3", 3)));
  CHECK(lines.size() == 2);
  for (const auto& l : lines) CHECK(l.find("bracket F13 F31 : z^2") != std::string::npos);
}

TEST_CASE("q-Serre holds on the deformed table and fails classically") {
  const DeformationResult d = quantize(builtin_bialgebra("u3"), 3);
  CHECK(check_qserre(d, 3).empty());
  DeformationResult c = d;
  c.commutators = classical_table(d.bialgebra, Truncation::z_order(3));
  const auto residues = check_qserre(c, 3);
  CHECK_FALSE(residues.empty());
  CHECK(check_qserre(c, 1).empty());
  CHECK_THROWS_AS(check_qserre(d, 4), InputError);
}

TEST_CASE("single-term corruptions are flagged") {
  const DeformationResult good = quantize(builtin_bialgebra("su2"), 3);
  REQUIRE(verify_hopf(good).empty());

  DeformationResult a = good;  // coproduct coefficient
  a.coproducts.entries[1].add(TensorKey{2, 0, mono({2, 0, 0}), mono({0, 1, 0})}, 1);
  CHECK_FALSE(verify_hopf(a).empty());

  DeformationResult b = good;  // linear bracket term
  b.commutators.add(1, 2, TermKey{2, 0, mono({1, 0, 0})}, 1);
  CHECK_FALSE(verify_hopf(b).empty());

  DeformationResult c = good;  // counit
  c.coproducts.entries[0].add(TensorKey{1, 0, mono({1, 0, 0}), Monomial(3)}, 1);
  CHECK(verify_hopf(c).flags("counit"));

  DeformationResult d = good;  // parity-violating even order
  d.coproducts.entries[2].add(TensorKey{2, 0, mono({1, 0, 0}), mono({0, 0, 1})}, 1);
  CHECK(verify_hopf(d).flags("parity"));

  DeformationResult e = good;  // quadratic z^0 bracket: no longer a rewriting system
  e.commutators.add(0, 1, TermKey{0, 0, mono({1, 1, 0})}, 1);
  const HopfReport shape = verify_hopf(e);
  CHECK(shape.flags("shape"));
  CHECK(shape.violations.size() == 1);
}
