#include "aq/quantizer.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "aq/errors.hpp"
#include "aq/linsolve.hpp"

namespace aq {

std::string gauge_id(Gauge g) { return g == Gauge::Analytic ? "analytic" : "min-norm"; }

Gauge parse_gauge(const std::string& id) {
  if (id == "analytic") return Gauge::Analytic;
  if (id == "min-norm") return Gauge::MinNorm;
  throw InputError("unknown gauge '" + id + "' (expected analytic or min-norm)");
}

bool pivot_type(const Monomial& l, const Monomial& r) {
  auto one_side = [](const Monomial& a, const Monomial& b) {
    return b.degree() == 1 && a.degree() >= 1 && b.first_index() <= a.first_index();
  };
  return one_side(l, r) || one_side(r, l);
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(n);
  auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
    if (i + 1 == n) {
      cur.set(i, rem);
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur.set(i, e);
      self(self, i + 1, rem - e);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> weight_of(const Monomial& m, const std::vector<std::vector<long>>& w) {
  std::vector<long> r(w.empty() ? 0 : w[0].size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t a = 0; a < r.size(); ++a) r[a] += m[i] * w[i][a];
  return r;
}

DeformationResult init_deformation(const LieBialgebra& b, int order, Gauge gauge) {
  if (order < 0) throw InputError("order must be nonnegative");
  if (auto report = validate(b); !report.empty()) throw InputError("invalid bialgebra: " + report.front());
  const std::size_t n = b.size();
  const Truncation t = Truncation::z_order(order);
  DeformationResult r;
  r.bialgebra = b;
  r.order = order;
  r.gauge = gauge;
  r.commutators = classical_table(b, t);
  r.coproducts = CoproductTable(n, t);
  for (std::size_t i = 0; i < n; ++i) {
    auto& d = r.coproducts.entries[i];
    d = primitive_coproduct(n, static_cast<int>(i), t);
    const auto delta = cocommutator_tensor(b, static_cast<int>(i), t);
    for (const auto& [k, c] : delta.terms())
      d.add(TensorKey{1, 0, k.l, k.r}, c);
  }
  return r;
}

namespace {

template <class Key>
class RowBuilder {
 public:
  void put(const Key& key, int column, const Rational& v) {
    if (v == 0) return;
    auto& row = rows_[key];
    auto& x = row.a[column];
    x += v;
    if (x == 0) row.a.erase(column);
  }
  void put_rhs(const Key& key, const Rational& v) { rows_[key].rhs += v; }

  EchelonSolver solve(int columns) const {
    EchelonSolver s(columns);
    for (const auto& [k, row] : rows_)
      if (!s.add_row(row.a, row.rhs)) break;
    return s;
  }

 private:
  struct Row {
    std::map<int, Rational> a;
    Rational rhs = 0;
  };
  std::map<Key, Row> rows_;
};

std::vector<Rational> pick_solution(const EchelonSolver& s, Gauge g) {
  return g == Gauge::Analytic ? s.particular_solution() : s.min_norm_solution();
}

}  // namespace

void solve_coproduct_order(DeformationResult& state, int k) {
  if (k < 2 || k > state.order) throw InputError("coproduct order out of range");
  const std::size_t n = state.bialgebra.size();
  const Truncation tk = Truncation::z_order(k);
  HopfStructure hopf(state.commutators.retruncated(tk), state.coproducts.retruncated(tk));
  const auto weights = weight_grading(state.bialgebra);
  const Monomial unit(n);
  const Rational sgn = k % 2 == 0 ? 1 : -1;

  struct Column {
    Monomial l, r;
    bool pivot;
  };
  std::vector<std::vector<Monomial>> by_degree;
  for (int d = 0; d <= k + 1; ++d) by_degree.push_back(monomials_of_degree(n, d));

  for (std::size_t i = 0; i < n; ++i) {
    const auto target = weights[i];
    std::vector<Column> cols;
    std::set<std::pair<Monomial, Monomial>> seen;
    for (int d = 2; d <= k + 1; ++d)
      for (int dl = 1; dl < d; ++dl)
        for (const auto& l : by_degree[static_cast<std::size_t>(dl)]) {
          const auto wl = weight_of(l, weights);
          for (const auto& r : by_degree[static_cast<std::size_t>(d - dl)]) {
            auto w = weight_of(r, weights);
            for (std::size_t a = 0; a < w.size(); ++a) w[a] += wl[a];
            if (w != target) continue;
            if (!seen.insert({l, r}).second) continue;
            seen.insert({r, l});
            if (l == r && k % 2 == 1) continue;
            cols.push_back({l, r, pivot_type(l, r)});
          }
        }
    if (state.gauge == Gauge::Analytic)
      std::stable_sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) { return a.pivot < b.pivot; });

    using Key = std::tuple<Monomial, Monomial, Monomial>;
    RowBuilder<Key> rows;
    const auto residual = hopf.coassociativity_residual(static_cast<int>(i)).z_component(k);
    for (const auto& [key, v] : residual.terms())
      rows.put_rhs(Key{key.a, key.b, key.c}, -v);
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      const int col = static_cast<int>(ci);
      std::vector<std::pair<std::pair<Monomial, Monomial>, Rational>> terms{{{cols[ci].l, cols[ci].r}, 1}};
      if (cols[ci].l != cols[ci].r) terms.push_back({{cols[ci].r, cols[ci].l}, sgn});
      for (const auto& [ab, c] : terms) {
        const auto& [a, b] = ab;
        for (const auto& [xy, c2] : shuffle_coproduct(a)) rows.put(Key{xy.first, xy.second, b}, col, c * c2);
        for (const auto& [xy, c2] : shuffle_coproduct(b)) rows.put(Key{a, xy.first, xy.second}, col, -c * c2);
        rows.put(Key{a, b, unit}, col, c);
        rows.put(Key{unit, a, b}, col, -c);
      }
    }
    const auto& name = state.bialgebra.generators[i];
    EchelonSolver s = rows.solve(static_cast<int>(cols.size()));
    if (!s.consistent())
      throw ObstructionError("coassociativity has no solution at order " + std::to_string(k) + " for generator " + name,
                             k, name);
    const auto x = pick_solution(s, state.gauge);
    state.diagnostics.push_back({k, "coproduct", name, static_cast<int>(cols.size()), s.rank(), s.kernel_dimension()});
    auto& d = state.coproducts.entries[i];
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      if (x[ci] == 0) continue;
      d.add(TensorKey{k, 0, cols[ci].l, cols[ci].r}, x[ci]);
      if (cols[ci].l != cols[ci].r) d.add(TensorKey{k, 0, cols[ci].r, cols[ci].l}, sgn * x[ci]);
    }
  }
}

void solve_commutator_order(DeformationResult& state, int k) {
  if (k < 1 || k > state.order) throw InputError("commutator order out of range");
  const auto& bi = state.bialgebra;
  const std::size_t n = bi.size();
  const int ni = static_cast<int>(n);
  const Truncation tk = Truncation::z_order(k);
  const auto weights = weight_grading(bi);
  const auto genset = generating_set(bi);
  auto in_genset = [&](int g) { return std::find(genset.begin(), genset.end(), g) != genset.end(); };
  auto add_w = [](std::vector<long> a, const std::vector<long>& b) {
    for (std::size_t t = 0; t < a.size(); ++t) a[t] += b[t];
    return a;
  };

  struct Column {
    bool lambda;
    int a, b;  // pair for U; (p,q) for lambda
    int g;     // lambda target generator
    Monomial m;
    int pri;
  };
  std::vector<Column> cols;
  for (int a = 0; a < ni; ++a)
    for (int b = a + 1; b < ni; ++b) {
      const auto w = add_w(weights[static_cast<std::size_t>(a)], weights[static_cast<std::size_t>(b)]);
      for (int d = 0; d <= k + 1; ++d)
        for (auto& m : monomials_of_degree(n, d)) {
          if (weight_of(m, weights) != w) continue;
          const int pri = d == 1 ? (in_genset(a) && in_genset(b) ? 2 : 1) : 0;
          cols.push_back({false, a, b, -1, std::move(m), pri});
        }
    }
  if (k % 2 == 1 && k > 1)
    for (int g = 0; g < ni; ++g)
      for (int p = 0; p < ni; ++p)
        for (int q = p + 1; q < ni; ++q)
          if (add_w(weights[static_cast<std::size_t>(p)], weights[static_cast<std::size_t>(q)]) ==
              weights[static_cast<std::size_t>(g)])
            cols.push_back({true, p, q, g, Monomial(n), in_genset(g) ? 4 : 3});
  if (state.gauge == Gauge::Analytic)
    std::stable_sort(cols.begin(), cols.end(), [](const Column& x, const Column& y) { return x.pri < y.pri; });

  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (std::size_t ci = 0; ci < cols.size(); ++ci)
    if (!cols[ci].lambda) by_pair[{cols[ci].a, cols[ci].b}].push_back(static_cast<int>(ci));

  // Row keys: ('H', a, b, l, r) homomorphism and ('J', i, j, l, m) Jacobi.
  using Key = std::tuple<char, int, int, int, Monomial, Monomial>;
  RowBuilder<Key> rows;
  const Monomial unit(n);
  auto gen = [n](int i) { return Monomial::generator(n, i); };

  HopfStructure hopf(state.commutators.retruncated(tk), state.coproducts.retruncated(tk));
  const Algebra& alg = hopf.algebra();
  for (int a = 0; a < ni; ++a)
    for (int b = a + 1; b < ni; ++b)
      for (const auto residual = hopf.homomorphism_residual(a, b).z_component(k); const auto& [key, v] : residual.terms())
        rows.put_rhs(Key{'H', a, b, -1, key.l, key.r}, -v);

  Algebra classical(classical_table(bi, Truncation::z_order(0)));
  auto classical_bracket = [&](const Monomial& m, int l) {
    std::map<Monomial, Rational> r;
    for (const auto& [kk, c] : classical.times_monomial(m, gen(l), 0, Algebra::kUnbounded)) r[kk.m] += c;
    for (const auto& [kk, c] : classical.times_monomial(gen(l), m, 0, Algebra::kUnbounded)) r[kk.m] -= c;
    return r;
  };

  for (int i = 0; i < ni; ++i)
    for (int j = i + 1; j < ni; ++j)
      for (int l = j + 1; l < ni; ++l) {
        SeriesElement sum(tk);
        for (auto [x, y, w] : {std::tuple{i, j, l}, std::tuple{j, l, i}, std::tuple{l, i, j}})
          sum += alg.commutator(alg.table().bracket(x, y), generator_element(n, w, tk));
        for (const auto top = sum.z_component(k); const auto& [key, v] : top.terms()) rows.put_rhs(Key{'J', i, j, l, key.m, unit}, -v);
        for (auto [x, y, w] : {std::tuple{i, j, l}, std::tuple{j, l, i}, std::tuple{l, i, j}}) {
          const int s = x < y ? 1 : -1;
          if (auto it = by_pair.find({std::min(x, y), std::max(x, y)}); it != by_pair.end())
            for (int ci : it->second)
              for (const auto& [mm, c] : classical_bracket(cols[static_cast<std::size_t>(ci)].m, w))
                if (c != 0) rows.put(Key{'J', i, j, l, mm, unit}, ci, s * c);
          for (const auto& [mg, c] : bi.bracket(x, y)) {
            if (mg == w) continue;
            const int s2 = mg < w ? 1 : -1;
            if (auto it = by_pair.find({std::min(mg, w), std::max(mg, w)}); it != by_pair.end())
              for (int ci : it->second) rows.put(Key{'J', i, j, l, cols[static_cast<std::size_t>(ci)].m, unit}, ci, c * s2);
          }
        }
      }

  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    const int col = static_cast<int>(ci);
    const auto& c = cols[ci];
    if (!c.lambda) {
      for (const auto& [xy, cc] : shuffle_coproduct(c.m)) {
        if (xy.first.degree() == 0 || xy.second.degree() == 0) continue;
        rows.put(Key{'H', c.a, c.b, -1, xy.first, xy.second}, col, cc);
      }
      if (c.m.degree() == 0) rows.put(Key{'H', c.a, c.b, -1, unit, unit}, col, -1);
      continue;
    }
    const std::vector<std::pair<std::pair<int, int>, Rational>> t{{{c.a, c.b}, 1}, {{c.b, c.a}, -1}};
    for (int a = 0; a < ni; ++a)
      for (int b = a + 1; b < ni; ++b) {
        for (const auto& [mm, cc] : bi.bracket(a, b))
          if (mm == c.g)
            for (const auto& [xy, v] : t) rows.put(Key{'H', a, b, -1, gen(xy.first), gen(xy.second)}, col, cc * v);
        for (const auto& [xy, v] : t) {
          const auto [x, y] = xy;
          if (c.g == a) {
            for (const auto& [w, c2] : bi.bracket(x, b)) rows.put(Key{'H', a, b, -1, gen(w), gen(y)}, col, -v * c2);
            for (const auto& [w, c2] : bi.bracket(y, b)) rows.put(Key{'H', a, b, -1, gen(x), gen(w)}, col, -v * c2);
          }
          if (c.g == b) {
            for (const auto& [w, c2] : bi.bracket(a, x)) rows.put(Key{'H', a, b, -1, gen(w), gen(y)}, col, -v * c2);
            for (const auto& [w, c2] : bi.bracket(a, y)) rows.put(Key{'H', a, b, -1, gen(x), gen(w)}, col, -v * c2);
          }
        }
      }
  }

  EchelonSolver s = rows.solve(static_cast<int>(cols.size()));
  if (!s.consistent())
    throw ObstructionError("homomorphism property has no solution at order " + std::to_string(k), k, "");
  const auto x = pick_solution(s, state.gauge);
  state.diagnostics.push_back({k, "commutator", "all", static_cast<int>(cols.size()), s.rank(), s.kernel_dimension()});
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    if (x[ci] == 0) continue;
    const auto& c = cols[ci];
    if (!c.lambda) {
      state.commutators.add(c.a, c.b, TermKey{k, 0, c.m}, x[ci]);
    } else {
      auto& d = state.coproducts.entries[static_cast<std::size_t>(c.g)];
      d.add(TensorKey{k, 0, gen(c.a), gen(c.b)}, x[ci]);
      d.add(TensorKey{k, 0, gen(c.b), gen(c.a)}, -x[ci]);
    }
  }
}

DeformationResult quantize(const LieBialgebra& b, int order, Gauge gauge) {
  if (order < 1) throw InputError("order must be at least 1");
  DeformationResult r = init_deformation(b, order, gauge);
  for (int k = 1; k <= order; ++k) {
    if (k >= 2) solve_coproduct_order(r, k);
    solve_commutator_order(r, k);
  }
  return r;
}

}  // namespace aq
