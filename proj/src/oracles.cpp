#include "aq/oracles.hpp"

#include "aq/errors.hpp"

namespace aq {

namespace {

const std::vector<std::pair<ClosedFormKind, std::string>>& kind_ids() {
  static const std::vector<std::pair<ClosedFormKind, std::string>> ids{
      {ClosedFormKind::ExpPrimitivePair, "exp-primitive-pair"},
      {ClosedFormKind::SinhOverZ, "sinh-over-z"},
      {ClosedFormKind::SinhOverSinh, "sinh-over-sinh"},
      {ClosedFormKind::SinhHalfCoshLinear, "sinh-half-cosh-linear"},
      {ClosedFormKind::U3F13Coproduct, "u3-F13-coproduct"},
      {ClosedFormKind::U3F13QCommutant, "u3-F13-qcommutant"},
      {ClosedFormKind::U3F13F31Commutator, "u3-F13F31-commutator"},
  };
  return ids;
}

Rational pow_q(const Rational& s, int j) {
  Rational r = 1;
  for (int i = 0; i < j; ++i) r *= s;
  return r;
}

Rational inv_factorial(int j) {
  Rational r(1);
  r /= Rational(factorial(j));
  return r;
}

// Coefficients of the scalar functions used by the formulas.
std::vector<Rational> cosh_coefficients(int n, const Rational& s) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (int j = 0; j <= n; j += 2) c[static_cast<std::size_t>(j)] = pow_q(s, j) * inv_factorial(j);
  return c;
}
std::vector<Rational> sinh_coefficients(int n, const Rational& s) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (int j = 1; j <= n; j += 2) c[static_cast<std::size_t>(j)] = pow_q(s, j) * inv_factorial(j);
  return c;
}
// (2/z) sinh^2(z/2) = (cosh z - 1)/z.
std::vector<Rational> sinh_half_squared_over_z(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (int j = 1; j <= n; j += 2) c[static_cast<std::size_t>(j)] = inv_factorial(j + 1);
  return c;
}
// 4 sinh^2(z/2) = 2 (cosh z - 1).
std::vector<Rational> four_sinh_half_squared(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (int j = 2; j <= n; j += 2) c[static_cast<std::size_t>(j)] = 2 * inv_factorial(j);
  return c;
}

class Builder {
 public:
  explicit Builder(const Algebra& a) : a_(a), n_(a.size()), t_(a.truncation()) {}

  SeriesElement scalar(const std::vector<Rational>& c) const {
    SeriesElement s(t_);
    for (std::size_t j = 0; j < c.size(); ++j) s.add(TermKey{static_cast<int>(j), 0, Monomial(n_)}, c[j]);
    return s;
  }
  SeriesElement gen(int i) const { return generator_element(n_, i, t_); }
  SeriesElement linear(const LinearForm& f, const Rational& constant = 0) const {
    SeriesElement s(t_);
    for (const auto& [g, c] : f) s.add(TermKey{0, 0, Monomial::generator(n_, g)}, c);
    s.add(TermKey{0, 0, Monomial(n_)}, constant);
    return s;
  }
  // sum_j c_j z^j L^j
  SeriesElement power_series(const std::vector<Rational>& c, const SeriesElement& l) const {
    SeriesElement out(t_), p = unit_element(n_, t_);
    for (std::size_t j = 0; j < c.size() && static_cast<int>(j) <= t_.z_max; ++j) {
      if (c[j] != 0)
        for (const auto& [k, v] : p.terms()) out.add(TermKey{k.z + static_cast<int>(j), k.h, k.m}, c[j] * v);
      p = a_.multiply(p, l);
    }
    return out;
  }
  SeriesElement exp(const SeriesElement& l, const Rational& s) const {
    return power_series(exp_coefficients(t_.z_max, s), l);
  }
  SeriesElement sinh_over_z(const SeriesElement& l) const {
    return mul(power_series(sinh_over_z_coefficients(t_.z_max), l), l);
  }
  SeriesElement sinh(const SeriesElement& l) const { return power_series(sinh_coefficients(t_.z_max, 1), l); }
  SeriesElement cosh(const SeriesElement& l) const { return power_series(cosh_coefficients(t_.z_max, 1), l); }
  SeriesElement mul(const SeriesElement& x, const SeriesElement& y) const { return a_.multiply(x, y); }
  SeriesElement mul(const SeriesElement& x, const SeriesElement& y, const SeriesElement& w) const {
    return mul(mul(x, y), w);
  }
  TensorSeries tensor_of(const SeriesElement& x, const SeriesElement& y) const { return tensor(x, y, t_); }

 private:
  const Algebra& a_;
  std::size_t n_;
  Truncation t_;
};

namespace u3 {
constexpr int H1 = 0, H2 = 1, H3 = 2, F12 = 3, F23 = 4, F13 = 5, F21 = 6, F32 = 7, F31 = 8;
LinearForm half_diff(int a, int b) { return {{a, Rational(1, 2)}, {b, Rational(-1, 2)}}; }
LinearForm diff(int a, int b) { return {{a, 1}, {b, -1}}; }
}  // namespace u3

void require_u3(const CommutatorTable& t) {
  if (t.n != 9) throw InputError("u3 closed forms need the 9-generator u3 layout");
}

SeriesElement sinh_half_cosh(const Builder& b, const LinearForm& l, const Rational& c, int x) {
  const int n = b.scalar({}).truncation().z_max;
  std::vector<Rational> pre(static_cast<std::size_t>(n + 1), Rational(0));
  // (2/z) sinh(z/2)
  for (int j = 0; j <= n; j += 2) pre[static_cast<std::size_t>(j)] = pow_q(Rational(1, 2), j) * inv_factorial(j + 1);
  return b.mul(b.scalar(pre), b.cosh(b.linear(l, c)), b.gen(x));
}

TensorSeries f13_coproduct(const Builder& b, bool lowering) {
  using namespace u3;
  const int n = b.scalar({}).truncation().z_max;
  const int top = lowering ? F31 : F13;
  const int x = lowering ? F21 : F12;
  const int y = lowering ? F32 : F23;
  auto e = [&](int p, int q, int s) { return b.exp(b.linear(half_diff(p, q)), s); };
  TensorSeries out = b.tensor_of(e(H1, H3, 1), b.gen(top));
  out += b.tensor_of(b.gen(top), e(H1, H3, -1));
  TensorSeries cross = b.tensor_of(b.mul(e(H2, H3, 1), b.gen(x)), b.mul(e(H1, H2, -1), b.gen(y)));
  cross -= b.tensor_of(b.mul(e(H1, H2, 1), b.gen(y)), b.mul(e(H2, H3, -1), b.gen(x)));
  // 2 sinh(z/2)
  const auto s = sinh_coefficients(n, Rational(1, 2));
  for (const auto& [k, c] : cross.terms())
    for (int j = 1; j + k.z <= n; ++j)
      if (s[static_cast<std::size_t>(j)] != 0)
        out.add(TensorKey{k.z + j, k.h, k.l, k.r}, 2 * s[static_cast<std::size_t>(j)] * c);
  return out;
}

SeriesElement f13_f31(const Builder& b) {
  using namespace u3;
  const int n = b.scalar({}).truncation().z_max;
  auto anti = [&](int p, int q) { return b.mul(b.gen(p), b.gen(q)) + b.mul(b.gen(q), b.gen(p)); };
  const SeriesElement pre = b.scalar(sinh_half_squared_over_z(n));
  SeriesElement v = b.sinh_over_z(b.linear(diff(H1, H3)));
  v += b.mul(pre, b.sinh(b.linear(diff(H1, H2))), anti(F23, F32));
  v += b.mul(pre, b.sinh(b.linear(diff(H2, H3))), anti(F12, F21));
  return v;
}

SeriesElement f13_prime(const Builder& b) {
  using namespace u3;
  const int n = b.scalar({}).truncation().z_max;
  return b.mul(b.scalar(exp_coefficients(n, Rational(1, 2))), b.mul(b.gen(F12), b.gen(F23))) -
         b.mul(b.scalar(exp_coefficients(n, Rational(-1, 2))), b.mul(b.gen(F23), b.gen(F12)));
}

CommutatorTable u3_reference_table(int order) {
  using namespace u3;
  const LieBialgebra bi = builtin_bialgebra("u3");
  CommutatorTable table = classical_table(bi, Truncation::z_order(0));
  for (int k = 1; k <= order; ++k) {
    const Truncation t = Truncation::z_order(k);
    Algebra a(table.retruncated(t));
    Builder b(a);
    CommutatorTable next = classical_table(bi, t);
    const SeriesElement s2 = b.scalar(four_sinh_half_squared(k));
    next.set(F12, F13, b.mul(s2, b.mul(b.gen(F12), b.gen(F23), b.gen(F12))));
    next.set(F13, F23, b.mul(s2, b.mul(b.gen(F23), b.gen(F12), b.gen(F23))));
    next.set(F31, F21, b.mul(s2, b.mul(b.gen(F21), b.gen(F32), b.gen(F21))));
    next.set(F32, F31, b.mul(s2, b.mul(b.gen(F32), b.gen(F21), b.gen(F32))));
    next.set(F23, F21, SeriesElement(t));
    next.set(F12, F32, SeriesElement(t));
    next.set(F12, F21, b.sinh_over_z(b.linear(diff(H1, H2))));
    next.set(F23, F32, b.sinh_over_z(b.linear(diff(H2, H3))));
    next.set(F13, F21, sinh_half_cosh(b, diff(H1, H2), Rational(1, 2), F23).scaled(-1));
    next.set(F13, F32, sinh_half_cosh(b, diff(H2, H3), Rational(1, 2), F12));
    next.set(F12, F31, sinh_half_cosh(b, diff(H1, H2), Rational(-1, 2), F32).scaled(-1));
    next.set(F23, F31, sinh_half_cosh(b, diff(H2, H3), Rational(-1, 2), F21));
    next.set(F13, F31, f13_f31(b));
    table = std::move(next);
  }
  return table.retruncated(Truncation::z_order(order));
}

}  // namespace

std::string closed_form_kind_id(ClosedFormKind k) {
  for (const auto& [kind, id] : kind_ids())
    if (kind == k) return id;
  throw InputError("unknown closed form kind");
}

ClosedFormKind parse_closed_form_kind(const std::string& id) {
  for (const auto& [kind, s] : kind_ids())
    if (s == id) return kind;
  throw InputError("unknown closed form kind '" + id + "'");
}

std::vector<Rational> exp_coefficients(int order, const Rational& s) {
  std::vector<Rational> c;
  for (int j = 0; j <= order; ++j) c.push_back(pow_q(s, j) * inv_factorial(j));
  return c;
}

std::vector<Rational> sinh_over_z_coefficients(int order, const Rational& s) {
  std::vector<Rational> c(static_cast<std::size_t>(order + 1), Rational(0));
  for (int j = 0; j <= order; j += 2) c[static_cast<std::size_t>(j)] = pow_q(s, j + 1) * inv_factorial(j + 1);
  return c;
}

std::vector<Rational> z_over_sinh_coefficients(int order) {
  const auto f = sinh_over_z_coefficients(order, 1);
  std::vector<Rational> g(static_cast<std::size_t>(order + 1), Rational(0));
  g[0] = 1;
  for (int j = 1; j <= order; ++j) {
    Rational s = 0;
    for (int i = 1; i <= j; ++i) s += f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j - i)];
    g[static_cast<std::size_t>(j)] = -s;
  }
  return g;
}

Expansion expand(const ClosedForm& c, int order, const CommutatorTable& table) {
  if (order < 0) throw InputError("order must be nonnegative");
  if (table.trunc.z_max < order) throw InputError("commutator table does not cover the requested order");
  const std::size_t n = table.n;
  for (const auto& [g, q] : c.form)
    if (g < 0 || g >= static_cast<int>(n)) throw InputError("closed form references an unknown generator");
  if (c.generator >= static_cast<int>(n)) throw InputError("closed form references an unknown generator");
  Algebra a(table.retruncated(Truncation::z_order(order)));
  Builder b(a);
  const SeriesElement l = b.linear(c.form, c.constant);
  switch (c.kind) {
    case ClosedFormKind::ExpPrimitivePair: {
      if (c.generator < 0) throw InputError("exp-primitive-pair needs a generator");
      TensorSeries t = b.tensor_of(b.exp(l, 1), b.gen(c.generator));
      t += b.tensor_of(b.gen(c.generator), b.exp(l, -1));
      return t.scaled(c.scale);
    }
    case ClosedFormKind::SinhOverZ:
      return b.sinh_over_z(l).scaled(c.scale);
    case ClosedFormKind::SinhOverSinh:
      return b.mul(b.scalar(z_over_sinh_coefficients(order)), b.sinh_over_z(l)).scaled(c.scale);
    case ClosedFormKind::SinhHalfCoshLinear:
      if (c.generator < 0) throw InputError("sinh-half-cosh-linear needs a generator");
      return sinh_half_cosh(b, c.form, c.constant, c.generator).scaled(c.scale);
    case ClosedFormKind::U3F13Coproduct:
      require_u3(table);
      return f13_coproduct(b, c.lowering).scaled(c.scale);
    case ClosedFormKind::U3F13QCommutant:
      require_u3(table);
      return f13_prime(b).scaled(c.scale);
    case ClosedFormKind::U3F13F31Commutator:
      require_u3(table);
      return f13_f31(b).scaled(c.scale);
  }
  throw InputError("unknown closed form kind");
}

std::vector<std::string> builtin_reference_names() { return {"su2", "u3"}; }

DeformationResult builtin_reference(const std::string& name, int order) {
  if (order < 1) throw InputError("order must be at least 1");
  if (name != "su2" && name != "u3") throw InputError("no reference formulas for '" + name + "'");
  const Truncation t = Truncation::z_order(order);
  DeformationResult r;
  r.bialgebra = builtin_bialgebra(name);
  r.order = order;
  r.gauge = Gauge::Analytic;
  const std::size_t n = r.bialgebra.size();
  r.coproducts = CoproductTable(n, t);
  if (name == "su2") {
    r.commutators = classical_table(r.bialgebra, t);
    ClosedForm xy{ClosedFormKind::SinhOverZ, {{0, 2}}};
    r.commutators.set(1, 2, std::get<SeriesElement>(expand(xy, order, r.commutators)));
    r.coproducts.entries[0] = primitive_coproduct(n, 0, t);
    for (int g : {1, 2}) {
      ClosedForm pair{ClosedFormKind::ExpPrimitivePair, {{0, 1}}, 0, g};
      r.coproducts.entries[static_cast<std::size_t>(g)] = std::get<TensorSeries>(expand(pair, order, r.commutators));
    }
    return r;
  }
  using namespace u3;
  r.commutators = u3_reference_table(order);
  for (int h : {H1, H2, H3}) r.coproducts.entries[static_cast<std::size_t>(h)] = primitive_coproduct(n, h, t);
  for (auto [f, p, q] : {std::tuple{F12, H1, H2}, std::tuple{F21, H1, H2}, std::tuple{F23, H2, H3}, std::tuple{F32, H2, H3}}) {
    ClosedForm pair{ClosedFormKind::ExpPrimitivePair, half_diff(p, q), 0, f};
    r.coproducts.entries[static_cast<std::size_t>(f)] = std::get<TensorSeries>(expand(pair, order, r.commutators));
  }
  for (bool lowering : {false, true}) {
    ClosedForm c{ClosedFormKind::U3F13Coproduct, {}, 0, -1, 1, lowering};
    r.coproducts.entries[static_cast<std::size_t>(lowering ? F31 : F13)] =
        std::get<TensorSeries>(expand(c, order, r.commutators));
  }
  return r;
}

std::vector<std::string> check_qserre(const DeformationResult& r, int order) {
  if (order < 0 || order > r.order) throw InputError("q-Serre order outside the result's truncation");
  const int f12 = r.bialgebra.index_of("F12");
  const int f23 = r.bialgebra.index_of("F23");
  Algebra a(r.commutators.retruncated(Truncation::z_order(order)));
  Builder b(a);
  const auto& names = r.bialgebra.generators;
  const SeriesElement x = b.gen(f12), y = b.gen(f23);
  const SeriesElement twocosh = b.scalar(cosh_coefficients(order, 1)).scaled(2);
  const SeriesElement ep = b.scalar(exp_coefficients(order, Rational(1, 2)));
  const SeriesElement em = b.scalar(exp_coefficients(order, Rational(-1, 2)));
  const SeriesElement fp = b.mul(ep, b.mul(x, y)) - b.mul(em, b.mul(y, x));

  const std::vector<std::pair<std::string, SeriesElement>> checks{
      {"serre F12^2 F23", b.mul(x, x, y) - b.mul(twocosh, b.mul(x, y, x)) + b.mul(y, x, x)},
      {"serre F12 F23^2", b.mul(x, y, y) - b.mul(twocosh, b.mul(y, x, y)) + b.mul(y, y, x)},
      {"qcommute F23 F13'", b.mul(ep, b.mul(y, fp)) - b.mul(em, b.mul(fp, y))},
      {"qcommute F13' F12", b.mul(ep, b.mul(fp, x)) - b.mul(em, b.mul(x, fp))},
  };
  std::vector<std::string> report;
  for (const auto& [label, v] : checks) {
    int last = -1;
    for (const auto& [k, c] : v.terms()) {
      if (k.z == last) continue;
      last = k.z;
      report.push_back(label + " order " + std::to_string(k.z) + ": " + render_term(k, c, names));
    }
  }
  return report;
}

}  // namespace aq
