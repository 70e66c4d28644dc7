#include <doctest.h>

#include <random>

#include "aq/errors.hpp"
#include "aq/friedrichs.hpp"

using namespace aq;

namespace {

Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

Rational q(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

const LieBialgebra& su2() {
  static const LieBialgebra b = builtin_bialgebra("su2");
  return b;
}

BasisChange single(const BasicSetPresentation& s, int i, const SeriesElement& p) {
  BasisChange c;
  c.corrections.assign(s.size(), SeriesElement(s.trunc));
  c.corrections[static_cast<std::size_t>(i)] = p;
  return c;
}

// Y_i = X_i + P_i(X) in X-coordinates.
std::vector<SeriesElement> perturbed_values(const BasicSetPresentation& s, const BasisChange& p) {
  std::vector<SeriesElement> y;
  for (std::size_t i = 0; i < s.size(); ++i)
    y.push_back(generator_element(s.size(), static_cast<int>(i), s.trunc) + p.corrections[i]);
  return y;
}

}  // namespace

TEST_CASE("symmetrized monomials") {
  const auto s = classical_presentation(su2(), 3);
  const Algebra a(s.commutators);
  // S[HX] = HX + XH = 2 HX - hbar X
  const SeriesElement hx = symmetrized(mono({1, 1, 0}), a);
  CHECK(hx.size() == 2);
  CHECK(hx.coefficient(TermKey{0, 0, mono({1, 1, 0})}) == 2);
  CHECK(hx.coefficient(TermKey{0, 1, mono({0, 1, 0})}) == -1);
  CHECK(symmetrized(mono({2, 0, 0}), a).coefficient(TermKey{0, 0, mono({2, 0, 0})}) == 2);
  CHECK(linear_part(hx, a).empty());
  CHECK(linear_part(hx + generator_element(3, 2, s.trunc), a) == generator_element(3, 2, s.trunc));
}

TEST_CASE("one classical stage removes the quadratic cross terms") {
  const auto s = classical_presentation(su2(), 3);
  const Algebra a(s.commutators);
  // Y_X = X + S[HX]/2 = X + HX - hbar X/2
  const auto y = perturb_basis(s, single(s, 1, symmetrized(mono({1, 1, 0}), a).scaled(q(1, 2))));
  const TensorSeries& dx = y.coproducts.entries[1];
  CHECK(dx.coefficient(TensorKey{0, 0, mono({1, 0, 0}), mono({0, 1, 0})}) == 1);
  CHECK(dx.coefficient(TensorKey{0, 0, mono({0, 1, 0}), mono({1, 0, 0})}) == 1);
  CHECK_FALSE(presentation_defects(y).size());

  const auto [step, next] = primitivize_step(y, 1);
  CHECK(step.corrections[0].empty());
  CHECK(step.corrections[2].empty());
  CHECK(step.corrections[1].size() == 2);
  CHECK(step.corrections[1].coefficient(TermKey{0, 0, mono({1, 1, 0})}) == 1);
  CHECK(step.corrections[1].coefficient(TermKey{0, 1, mono({0, 1, 0})}) == q(-1, 2));
  CHECK(render_basis_change(step, s.generators) == "X := X - (z^0 * 1 * H*X + z^0 * hbar^1 * -1/2 * X)\n");
  for (const auto& [k, c] : next.coproducts.entries[1].terms()) CHECK(k.degree() + k.h != 2);

  const auto r = primitivize(y, 2);
  CHECK(r.presentation == s);
  CHECK(r.stages.size() >= 2);
}

TEST_CASE("inverting a commuting perturbation gives Catalan coefficients") {
  // Y_H = H - H^2 inverts to H = Y + Y^2 + 2 Y^3 + 5 Y^4 + 14 Y^5.
  const auto s = classical_presentation(su2(), 5);
  SeriesElement p(s.trunc);
  p.add(TermKey{0, 0, mono({2, 0, 0})}, -1);
  const auto r = primitivize(perturb_basis(s, single(s, 0, p)), 4);
  CHECK(r.presentation == s);
  const SeriesElement& c = r.composite.corrections[0];
  CHECK(c.size() == 4);
  CHECK(c.coefficient(TermKey{0, 0, mono({2, 0, 0})}) == -1);
  CHECK(c.coefficient(TermKey{0, 0, mono({3, 0, 0})}) == -2);
  CHECK(c.coefficient(TermKey{0, 0, mono({4, 0, 0})}) == -5);
  CHECK(c.coefficient(TermKey{0, 0, mono({5, 0, 0})}) == -14);
}

TEST_CASE("random symmetric perturbations round-trip") {
  const int degree = 4;
  const auto s = classical_presentation(su2(), degree);
  const Algebra a(s.commutators);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    CAPTURE(trial);
    BasisChange p;
    p.corrections.assign(3, SeriesElement(s.trunc));
    for (auto& pi : p.corrections)
      for (int d = 2; d <= degree; ++d)
        for (const auto& nu : monomials_of_degree(3, d))
          if (rng() % 3 == 0) pi += symmetrized(nu, a).scaled(q(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4));
    const auto r = primitivize(perturb_basis(s, p), degree - 1);
    CHECK(r.presentation == s);
    const auto y = perturbed_values(s, p);
    for (int i = 0; i < 3; ++i) {
      const SeriesElement x = generator_element(3, i, s.trunc);
      CHECK(substitute(x - r.composite.corrections[static_cast<std::size_t>(i)], y, a).same_terms(x));
    }
  }
}

TEST_CASE("a coproduct outside every basis change is rejected") {
  auto s = classical_presentation(su2(), 3);
  s.coproducts.entries[0].add(TensorKey{0, 0, mono({0, 1, 0}), mono({0, 1, 0})}, 3);
  const auto defects = presentation_defects(s);
  REQUIRE_FALSE(defects.empty());
  CHECK(defects.front().rfind("homomorphism", 0) == 0);
  CHECK_THROWS_AS(primitivize(s, 2), NonPrimitivizableError);
}

TEST_CASE("argument checks") {
  const auto s = classical_presentation(su2(), 3);
  CHECK_THROWS_AS(primitivize(s, 3), InputError);
  CHECK_THROWS_AS(primitivize(s, -1), InputError);
  CHECK_THROWS_AS(classical_presentation(su2(), 1), InputError);
  CHECK(primitivize(s, 0).presentation == s);
}

TEST_CASE("graded presentations survive the dump format") {
  const auto s = graded_presentation(quantize(su2(), 2), 4);
  const Dump d = to_dump(s);
  CHECK(d.degree == 4);
  CHECK(d.gauge == "basic-set");
  CHECK(to_presentation(parse_dump(render_dump(d))) == s);
  CHECK(presentation_defects(s).empty());
  CHECK_THROWS_AS(to_presentation(to_dump(quantize(su2(), 2))), InputError);
}

TEST_CASE("deformed identity and round trip") {
  const DeformationResult qd = quantize(su2(), 3);
  const auto s = graded_presentation(qd, 5);
  const auto id = primitivize(s, 4);
  CHECK(id.composite.empty());
  CHECK(id.presentation == s);

  const Algebra a(s.commutators);
  std::mt19937 rng(5);
  BasisChange p;
  p.corrections.assign(3, SeriesElement(s.trunc));
  for (auto& pi : p.corrections)
    for (const auto& nu : monomials_of_degree(3, 2))
      if (rng() % 2 == 0) pi += symmetrized(nu, a).scaled(q(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4));
  const auto r = primitivize(perturb_basis(s, p), 4);
  const DeformationResult back = drop_grading(r.presentation, su2());
  CHECK(back.coproducts == qd.coproducts);
  CHECK(back.commutators == qd.commutators);
}

TEST_CASE("z-dependent perturbation of H") {
  // Y_H = H + z H^2 inverts to H = Y - z Y^2 + 2 z^2 Y^3 - 5 z^3 Y^4.
  const DeformationResult qd = quantize(su2(), 3);
  const auto s = graded_presentation(qd, 5);
  SeriesElement p(Truncation::z_order(3));
  p.add(TermKey{1, 0, mono({2, 0, 0})}, 1);
  const auto r = primitivize(perturb_basis(s, single(s, 0, to_graded(p, s.trunc))), 4);
  CHECK(drop_grading(r.presentation, su2()).coproducts == qd.coproducts);
  const SeriesElement c = drop_grading(r.composite.corrections[0]);
  CHECK(c.size() == 3);
  CHECK(c.coefficient(TermKey{1, 0, mono({2, 0, 0})}) == 1);
  CHECK(c.coefficient(TermKey{2, 0, mono({3, 0, 0})}) == -2);
  CHECK(c.coefficient(TermKey{3, 0, mono({4, 0, 0})}) == 5);
}
