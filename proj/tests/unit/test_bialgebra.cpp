#include <doctest.h>

#include "aq/bialgebra.hpp"
#include "aq/errors.hpp"
#include "aq/quantizer.hpp"

using namespace aq;

namespace {

Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

bool has_prefix(const ValidationReport& r, const std::string& prefix) {
  for (const auto& line : r)
    if (line.rfind(prefix, 0) == 0) return true;
  return false;
}

const char* kSu2Text = R"(name: su2
generators: H X Y
brackets:
[H,X] = X
[H,Y] = -Y
[X,Y] = 2*H
cocommutators:
delta(X) = (H^X)
delta(Y) = (H^Y)
)";

}  // namespace

TEST_CASE("builtin bialgebras satisfy the axioms") {
  for (const auto& name : builtin_bialgebra_names()) {
    CAPTURE(name);
    CHECK(validate(builtin_bialgebra(name)).empty());
  }
}

TEST_CASE("bundled data files load and validate") {
  CHECK(validate(load_bialgebra(AQ_DATA_DIR "/su2.bialg")).empty());
  CHECK(validate(load_bialgebra(AQ_DATA_DIR "/u3.bialg")).empty());
  const auto broken = validate(load_bialgebra(AQ_DATA_DIR "/broken-cocycle.bialg"));
  CHECK(has_prefix(broken, "cocycle"));
}

TEST_CASE("text form round-trips") {
  const LieBialgebra b = parse_bialgebra(kSu2Text, "su2");
  CHECK(b == builtin_bialgebra("su2"));
  CHECK(parse_bialgebra(render_bialgebra(b), "su2") == b);
}

TEST_CASE("each axiom failure is reported") {
  LieBialgebra jac = builtin_bialgebra("su2");
  jac.set_bracket(1, 2, {{0, 2}, {1, 1}});
  CHECK(has_prefix(validate(jac), "jacobi"));

  LieBialgebra cojac = builtin_bialgebra("su2");
  cojac.set_cocommutator(0, {{{1, 2}, 1}});
  CHECK(has_prefix(validate(cojac), "co-jacobi"));

  LieBialgebra cocycle = builtin_bialgebra("su2");
  cocycle.set_cocommutator(2, {{{0, 2}, 2}});
  CHECK(has_prefix(validate(cocycle), "cocycle"));
}

TEST_CASE("parse errors carry line and column") {
  const auto expect_at = [](const std::string& text, int line) {
    try {
      parse_bialgebra(text);
      FAIL("no error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() >= 1);
    }
  };
  expect_at("name: a\ngenerators: H H\n", 2);
  expect_at("name: a\ngenerators: H X\nbrackets:\n[H,H] = X\n", 4);
  expect_at("name: a\ngenerators: H X\nbrackets:\n[H,X] = 1/0*X\n", 4);
  expect_at("name: a\ngenerators: H X\ncocommutators:\ndelta(X) = (X^X)\n", 4);
  expect_at("name: a\n", 1);
  CHECK_THROWS_AS(builtin_bialgebra("sl7"), InputError);
}

TEST_CASE("adjoint action on a tensor") {
  // (ad_H (x) 1 + 1 (x) ad_H)(H (x) X - X (x) H) = H (x) X - X (x) H.
  const LieBialgebra b = builtin_bialgebra("su2");
  const Truncation t = Truncation::z_order(0);
  const TensorSeries d = cocommutator_tensor(b, 1, t);
  CHECK(d.size() == 2);
  CHECK(d.coefficient(TensorKey{0, 0, mono({1, 0, 0}), mono({0, 1, 0})}) == 1);
  CHECK(d.coefficient(TensorKey{0, 0, mono({0, 1, 0}), mono({1, 0, 0})}) == -1);
  CHECK(adjoint_action(b, 0, d) == d);
  // ad_X sends H (x) X and X (x) H both to -X (x) X, so they cancel.
  const TensorSeries ax = adjoint_action(b, 1, d);
  CHECK(ax.size() == 0);
}

TEST_CASE("normal ordering with the classical table") {
  const Algebra a(classical_table(builtin_bialgebra("su2"), Truncation::z_order(0)));
  // X H = H X - X
  const SeriesElement xh = a.normal_order({1, 0});
  CHECK(xh.size() == 2);
  CHECK(xh.coefficient(TermKey{0, 0, mono({1, 1, 0})}) == 1);
  CHECK(xh.coefficient(TermKey{0, 0, mono({0, 1, 0})}) == -1);
  // Y X = X Y - 2H
  const SeriesElement yx = a.normal_order({2, 1});
  CHECK(yx.size() == 2);
  CHECK(yx.coefficient(TermKey{0, 0, mono({0, 1, 1})}) == 1);
  CHECK(yx.coefficient(TermKey{0, 0, mono({1, 0, 0})}) == -2);
  // Y X X = X^2 Y - 2 X H - 2 H X = X^2 Y - 4 H X + 2 X
  const SeriesElement yxx = a.normal_order({2, 1, 1});
  CHECK(yxx.size() == 3);
  CHECK(yxx.coefficient(TermKey{0, 0, mono({0, 2, 1})}) == 1);
  CHECK(yxx.coefficient(TermKey{0, 0, mono({1, 1, 0})}) == -4);
  CHECK(yxx.coefficient(TermKey{0, 0, mono({0, 1, 0})}) == 2);
}

TEST_CASE("normal ordering with the deformed su2 table") {
  // Y X = X Y - [X, Y] with [X, Y] = sinh(2 z H)/z.
  const DeformationResult q = quantize(builtin_bialgebra("su2"), 4);
  const Algebra a(q.commutators);
  const SeriesElement yx = a.normal_order({2, 1});
  CHECK(yx.size() == 4);
  CHECK(yx.coefficient(TermKey{0, 0, mono({0, 1, 1})}) == 1);
  CHECK(yx.coefficient(TermKey{0, 0, mono({1, 0, 0})}) == -2);
  CHECK(yx.coefficient(TermKey{2, 0, mono({3, 0, 0})}) == Rational(-4, 3));
  CHECK(yx.coefficient(TermKey{4, 0, mono({5, 0, 0})}) == Rational(-4, 15));
}

TEST_CASE("tensor products of primitive coproducts") {
  const Truncation t = Truncation::z_order(1);
  const CommutatorTable table = classical_table(builtin_bialgebra("su2"), t);
  const TensorSeries p = tensor_multiply(primitive_coproduct(3, 0, t), primitive_coproduct(3, 1, t), table);
  CHECK(p.size() == 4);
  CHECK(p.coefficient(TensorKey{0, 0, mono({1, 1, 0}), mono({0, 0, 0})}) == 1);
  CHECK(p.coefficient(TensorKey{0, 0, mono({1, 0, 0}), mono({0, 1, 0})}) == 1);
  CHECK(p.coefficient(TensorKey{0, 0, mono({0, 1, 0}), mono({1, 0, 0})}) == 1);
  CHECK(p.coefficient(TensorKey{0, 0, mono({0, 0, 0}), mono({1, 1, 0})}) == 1);

  CoproductTable cop(3, t);
  for (int i = 0; i < 3; ++i) cop.entries[static_cast<std::size_t>(i)] = primitive_coproduct(3, i, t);
  const TensorSeries h2 = extend_coproduct(mono({2, 0, 0}), cop, table);
  CHECK(h2.size() == 3);
  CHECK(h2.coefficient(TensorKey{0, 0, mono({1, 0, 0}), mono({1, 0, 0})}) == 2);
}

TEST_CASE("products beyond the z-order vanish") {
  const Truncation t = Truncation::z_order(1);
  const CommutatorTable table = classical_table(builtin_bialgebra("su2"), t);
  SeriesElement zh(t);
  zh.add(TermKey{1, 0, mono({1, 0, 0})}, 1);
  CHECK(multiply(zh, zh, table).empty());
  CHECK(multiply(zh, generator_element(3, 0, t), table).size() == 1);
}

// Greedy in index order: H is taken before X and Y reveal it as a bracket.
TEST_CASE("weight grading and generating set") {
  const LieBialgebra b = builtin_bialgebra("su2");
  const auto w = weight_grading(b);
  REQUIRE(w.size() == 3);
  // H has weight zero; X and Y have opposite nonzero weights.
  for (long v : w[0]) CHECK(v == 0);
  bool nonzero = false;
  for (std::size_t k = 0; k < w[1].size(); ++k) {
    CHECK(w[1][k] == -w[2][k]);
    nonzero = nonzero || w[1][k] != 0;
  }
  CHECK(nonzero);
  CHECK(generating_set(b) == std::vector<int>{0, 1, 2});
  CHECK(generating_set(builtin_bialgebra("u3")).size() == 7);
}
