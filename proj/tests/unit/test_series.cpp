#include <doctest.h>

#include "aq/errors.hpp"
#include "aq/series.hpp"

using namespace aq;

namespace {

const std::vector<std::string> kSu2 = {"H", "X", "Y"};

Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("rational parsing is canonical and strict") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1/"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("monomial bookkeeping") {
  const Monomial m = mono({2, 0, 1});
  CHECK(m.degree() == 3);
  CHECK(m.first_index() == 0);
  CHECK(m.last_index() == 2);
  CHECK(Monomial(3).is_unit());
  CHECK(Monomial(3).first_index() == -1);
  CHECK(m + Monomial::generator(3, 1) == mono({2, 1, 1}));
  CHECK(render_monomial(m, kSu2) == "H^2*Y");
  CHECK(render_monomial(Monomial(3), kSu2) == "1");
}

TEST_CASE("truncation admits by z-order, and by degree plus hbar when graded") {
  const Truncation z = Truncation::z_order(2);
  CHECK(z.admits(2, 0, 40));
  CHECK_FALSE(z.admits(3, 0, 1));
  CHECK_FALSE(z.admits(-1, 0, 1));
  const Truncation g = Truncation::graded(1, 4);
  CHECK(g.admits(1, 1, 3));
  CHECK_FALSE(g.admits(0, 2, 3));
  CHECK_FALSE(g.admits(2, 0, 1));
}

TEST_CASE("series addition cancels and drops out-of-range terms") {
  SeriesElement s(Truncation::z_order(1));
  const TermKey hx{0, 0, mono({1, 1, 0})};
  s.add(hx, 2);
  s.add(hx, -2);
  CHECK(s.empty());
  s.add(TermKey{2, 0, mono({1, 0, 0})}, 5);
  CHECK(s.empty());
  s.add(hx, Rational(1, 3));
  CHECK(s.coefficient(hx) == Rational(1, 3));
  CHECK(s.scaled(3).coefficient(hx) == 1);
  CHECK(s.scaled(0).empty());
}

TEST_CASE("shuffle coproduct of a monomial is the multinomial expansion") {
  // Delta_0(H^2 X) = sum over sub-multisets: binomial(2,a) H^a X^b (x) H^(2-a) X^(1-b).
  const auto terms = shuffle_coproduct(mono({2, 1, 0}));
  CHECK(terms.size() == 6);
  for (const auto& [lr, c] : terms) {
    const int a = lr.first[0];
    CHECK(c == binomial(2, a));
    CHECK(lr.first[0] + lr.second[0] == 2);
    CHECK(lr.first[1] + lr.second[1] == 1);
  }
}

TEST_CASE("flip swaps tensor factors") {
  const Truncation t = Truncation::z_order(1);
  TensorSeries a(t);
  a.add(TensorKey{1, 0, mono({1, 0, 0}), mono({0, 1, 0})}, 1);
  const TensorSeries f = flip(a);
  CHECK(f.coefficient(TensorKey{1, 0, mono({0, 1, 0}), mono({1, 0, 0})}) == 1);
  CHECK(flip(f) == a);
}

TEST_CASE("terms render and parse back") {
  const std::vector<std::string> texts = {
      "z^0 * 1 * H",
      "z^2 * -4/3 * H^3",
      "z^1 * hbar^2 * 1/2 * H*X^2",
      "z^0 * 7 * 1",
  };
  for (const auto& t : texts) {
    const auto [k, c] = parse_term(t, kSu2);
    CHECK(render_term(k, c, kSu2) == t);
  }
  const auto [tk, tc] = parse_tensor_term("z^3 * -1/6 * X (x) H^3", kSu2);
  CHECK(tk.z == 3);
  CHECK(tc == Rational(-1, 6));
  CHECK(render_term(tk, tc, kSu2) == "z^3 * -1/6 * X (x) H^3");
  CHECK_THROWS_AS(parse_term("z^1 * 2 * Q", kSu2), InputError);
  CHECK_THROWS_AS(parse_term("z^1 * 2/0 * H", kSu2), InputError);
  CHECK_THROWS_AS(parse_term("2 * H", kSu2), InputError);
}

TEST_CASE("dropping the grading merges hbar powers") {
  SeriesElement s(Truncation::graded(0, 4));
  s.add(TermKey{0, 1, mono({0, 1, 0})}, 2);
  s.add(TermKey{0, 2, mono({0, 1, 0})}, 3);
  const SeriesElement d = drop_grading(s);
  CHECK(d.size() == 1);
  CHECK(d.coefficient(TermKey{0, 0, mono({0, 1, 0})}) == 5);
  CHECK_FALSE(d.truncation().graded_regime());
}
