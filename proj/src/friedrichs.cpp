#include "aq/friedrichs.hpp"

#include <algorithm>
#include <map>

#include "aq/errors.hpp"
#include "aq/linsolve.hpp"

namespace aq {

namespace {

int graded_degree(const TermKey& k) { return k.m.degree() + k.h; }
int graded_degree(const TensorKey& k) { return k.l.degree() + k.r.degree() + k.h; }

void add_shifted(SeriesElement& out, const SeriesElement& s, int z, int h, const Rational& c) {
  for (const auto& [k, v] : s.terms()) out.add(TermKey{k.z + z, k.h + h, k.m}, v * c);
}

// Ordered products values_0^{mu_0} ... values_{n-1}^{mu_{n-1}}, memoized.
class PowerCache {
 public:
  PowerCache(const Algebra& a, const std::vector<SeriesElement>& values) : a_(a), values_(values) {}

  const SeriesElement& operator()(const Monomial& mu) {
    if (auto it = memo_.find(mu); it != memo_.end()) return it->second;
    SeriesElement v(a_.truncation());
    const int last = mu.last_index();
    if (last < 0) {
      v = unit_element(a_.size(), a_.truncation());
    } else {
      Monomial rest = mu;
      rest.bump(static_cast<std::size_t>(last), -1);
      const SeriesElement head = (*this)(rest);
      v = a_.multiply(head, values_[static_cast<std::size_t>(last)]);
    }
    return memo_.emplace(mu, std::move(v)).first->second;
  }

 private:
  const Algebra& a_;
  const std::vector<SeriesElement>& values_;
  std::map<Monomial, SeriesElement> memo_;
};

// S[X^nu] = sum_i nu_i X_i S[X^(nu - e_i)], summing over all |nu|! orderings.
class SymmetrizedCache {
 public:
  explicit SymmetrizedCache(const Algebra& a) : a_(a) {}

  const SeriesElement& operator()(const Monomial& nu) {
    if (auto it = memo_.find(nu); it != memo_.end()) return it->second;
    SeriesElement v(a_.truncation());
    if (nu.is_unit()) {
      v = unit_element(a_.size(), a_.truncation());
    } else {
      for (std::size_t i = 0; i < nu.size(); ++i) {
        if (!nu[i]) continue;
        Monomial rest = nu;
        rest.bump(i, -1);
        const SeriesElement tail = (*this)(rest);
        v += a_.multiply(generator_element(a_.size(), static_cast<int>(i), a_.truncation()), tail).scaled(nu[i]);
      }
    }
    return memo_.emplace(nu, std::move(v)).first->second;
  }

 private:
  const Algebra& a_;
  std::map<Monomial, SeriesElement> memo_;
};

// W^mu - X^mu: the part of a power above its leading term.
SeriesElement tail(PowerCache& pc, const Monomial& mu) {
  SeriesElement t = pc(mu);
  t.add(TermKey{0, 0, mu}, -1);
  return t;
}

// Rewrites u (X-coordinates) in W-coordinates. Each pass strictly raises the
// lowest graded degree of the remainder, so the loop ends within the bound.
SeriesElement express(const SeriesElement& u, PowerCache& pc, Truncation t, int passes) {
  SeriesElement out(t), rest = u;
  for (int pass = 0; !rest.empty(); ++pass) {
    if (pass > passes) throw std::logic_error("basis rewrite did not terminate");
    out += rest;
    SeriesElement next(t);
    for (const auto& [k, c] : rest.terms()) add_shifted(next, tail(pc, k.m), k.z, k.h, -c);
    rest = std::move(next);
  }
  return out;
}

TensorSeries express(const TensorSeries& u, PowerCache& pc, Truncation t, int passes) {
  TensorSeries out(t), rest = u;
  for (int pass = 0; !rest.empty(); ++pass) {
    if (pass > passes) throw std::logic_error("basis rewrite did not terminate");
    out += rest;
    TensorSeries next(t);
    for (const auto& [k, c] : rest.terms()) {
      const auto& wl = pc(k.l);
      const auto& wr = pc(k.r);
      const int rmin = k.r.degree();
      for (const auto& [a, ca] : wl.terms()) {
        const int z = k.z + a.z, ga = a.m.degree() + a.h + k.h;
        if (z > t.z_max || ga + rmin > t.degree_max) continue;
        const bool a_lead = a.z == 0 && a.h == 0 && a.m == k.l;
        for (const auto& [b, cb] : wr.terms()) {
          if (z + b.z > t.z_max || ga + b.m.degree() + b.h > t.degree_max) continue;
          if (a_lead && b.z == 0 && b.h == 0 && b.m == k.r) continue;
          next.add(TensorKey{z + b.z, a.h + b.h + k.h, a.m, b.m}, -c * ca * cb);
        }
      }
    }
    rest = std::move(next);
  }
  return out;
}

// Each rewrite pass raises the graded degree or the z-order of the remainder.
int rewrite_passes(Truncation t) { return (t.degree_max + 1) * (t.z_max + 1) + 1; }

void require_degree(int degree) {
  if (degree < 2) throw InputError("graded presentations need degree >= 2");
}

bool one_sided(const TensorKey& k) { return k.l.is_unit() || k.r.is_unit(); }

TensorSeries coboundary(const HopfStructure& hs, const SeriesElement& p) {
  const auto t = hs.truncation();
  TensorSeries d = hs.apply(p);
  const auto unit = unit_element(hs.size(), t);
  d -= tensor(p, unit, t);
  d -= tensor(unit, p, t);
  return d;
}

void check_defects(const BasicSetPresentation& s, int stage) {
  if (auto defects = presentation_defects(s); !defects.empty())
    throw NonPrimitivizableError("not an enveloping-algebra presentation: " + defects.front(), stage);
}

BasisChange zero_change(const BasicSetPresentation& s, int stage) {
  BasisChange c;
  c.stage = stage;
  c.corrections.assign(s.size(), SeriesElement(s.trunc));
  return c;
}

std::vector<SeriesElement> corrected_basis(const BasicSetPresentation& s, const BasisChange& c) {
  std::vector<SeriesElement> basis;
  for (std::size_t i = 0; i < s.size(); ++i)
    basis.push_back(generator_element(s.size(), static_cast<int>(i), s.trunc) - c.corrections[i]);
  return basis;
}

}  // namespace

bool BasisChange::empty() const {
  return std::all_of(corrections.begin(), corrections.end(), [](const SeriesElement& p) { return p.empty(); });
}

BasicSetPresentation classical_presentation(const LieBialgebra& b, int degree) {
  require_degree(degree);
  check_well_formed(b);
  BasicSetPresentation s;
  s.name = b.name;
  s.generators = b.generators;
  s.trunc = Truncation::graded(0, degree);
  const auto n = b.size();
  s.commutators = CommutatorTable(n, s.trunc);
  for (const auto& [ij, form] : b.brackets)
    for (const auto& [g, c] : form) s.commutators.add(ij.first, ij.second, TermKey{0, 1, Monomial::generator(n, g)}, c);
  s.coproducts = CoproductTable(n, s.trunc);
  for (std::size_t i = 0; i < n; ++i) s.coproducts.entries[i] = primitive_coproduct(n, static_cast<int>(i), s.trunc);
  return s;
}

BasicSetPresentation graded_presentation(const DeformationResult& r, int degree) {
  require_degree(degree);
  BasicSetPresentation s;
  s.name = r.bialgebra.name;
  s.generators = r.bialgebra.generators;
  s.trunc = Truncation::graded(r.order, degree);
  const auto n = r.bialgebra.size();
  s.commutators = CommutatorTable(n, s.trunc);
  for (const auto& [ab, v] : r.commutators.entries)
    for (const auto& [k, c] : v.terms()) {
      const int h = 2 + k.z - k.m.degree();
      if (h < 0) throw InputError("bracket term of degree " + std::to_string(k.m.degree()) + " at z^" +
                                  std::to_string(k.z) + " has no graded form");
      s.commutators.add(ab.first, ab.second, TermKey{k.z, h, k.m}, c);
    }
  s.coproducts = CoproductTable(n, s.trunc);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [k, c] : r.coproducts.entries[i].terms()) {
      const int h = 1 + k.z - k.degree();
      if (h < 0) throw InputError("coproduct term of degree " + std::to_string(k.degree()) + " at z^" +
                                  std::to_string(k.z) + " has no graded form");
      s.coproducts.entries[i].add(TensorKey{k.z, h, k.l, k.r}, c);
    }
  return s;
}

SeriesElement to_graded(const SeriesElement& p, Truncation t) {
  SeriesElement out(t);
  for (const auto& [k, c] : p.terms()) {
    if (k.m.is_unit()) throw InputError("basis corrections must not have a constant term");
    TermKey g = k;
    if (!p.truncation().graded_regime()) g.h = std::max(0, 2 - k.m.degree());
    if (graded_degree(g) < 2) throw InputError("basis correction of graded degree below 2");
    if (!t.admits(g.z, g.h, g.m.degree()))
      throw InputError("basis correction exceeds the truncation (z^" + std::to_string(g.z) + ", graded degree " +
                       std::to_string(graded_degree(g)) + ")");
    out.add(g, c);
  }
  return out;
}

SeriesElement symmetrized(const Monomial& nu, const Algebra& a) {
  SymmetrizedCache cache(a);
  return cache(nu);
}

SeriesElement linear_part(const SeriesElement& u, const Algebra& a) {
  SymmetrizedCache sym(a);
  std::map<Monomial, SeriesElement> normalized;
  SeriesElement rest = u;
  for (;;) {
    // Lowest z first, then highest degree: removing a symmetrized term only
    // leaves lower degrees at the same z.
    const TermKey* pick = nullptr;
    Rational c;
    for (const auto& [k, v] : rest.terms())
      if (k.m.degree() >= 2 && (!pick || k.z < pick->z || (k.z == pick->z && k.m.degree() > pick->m.degree()))) {
        pick = &k;
        c = v;
      }
    if (!pick) break;
    const TermKey key = *pick;
    auto it = normalized.find(key.m);
    if (it == normalized.end())
      it = normalized.emplace(key.m, sym(key.m).scaled(Rational(1) / Rational(factorial(key.m.degree())))).first;
    add_shifted(rest, it->second, key.z, key.h, -c);
  }
  return rest.filtered([](const TermKey& k) { return k.m.degree() == 1; });
}

SeriesElement substitute(const SeriesElement& poly, const std::vector<SeriesElement>& values, const Algebra& a) {
  PowerCache pc(a, values);
  SeriesElement out(a.truncation());
  for (const auto& [k, c] : poly.terms()) add_shifted(out, pc(k.m), k.z, k.h, c);
  return out;
}

BasicSetPresentation rebase(const BasicSetPresentation& s, const std::vector<SeriesElement>& basis) {
  const auto n = s.size();
  if (basis.size() != n) throw InputError("basis has the wrong number of elements");
  for (std::size_t i = 0; i < n; ++i) {
    const auto low = basis[i].filtered([](const TermKey& k) { return k.z == 0 && graded_degree(k) < 2; });
    if (!low.same_terms(generator_element(n, static_cast<int>(i), s.trunc)))
      throw InputError("basis element " + s.generators[i] + " is not a higher-order change of " + s.generators[i]);
  }
  const HopfStructure hs = s.hopf();
  const Algebra& a = hs.algebra();
  PowerCache pc(a, basis);
  const int passes = rewrite_passes(s.trunc);

  BasicSetPresentation out = s;
  out.commutators = CommutatorTable(n, s.trunc);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      out.commutators.set(static_cast<int>(x), static_cast<int>(y),
                          express(a.commutator(basis[x], basis[y]), pc, s.trunc, passes));
  out.coproducts = CoproductTable(n, s.trunc);
  for (std::size_t i = 0; i < n; ++i) out.coproducts.entries[i] = express(hs.apply(basis[i]), pc, s.trunc, passes);
  return out;
}

BasicSetPresentation perturb_basis(const BasicSetPresentation& s, const BasisChange& p) {
  if (p.corrections.size() != s.size()) throw InputError("basis change has the wrong number of generators");
  std::vector<SeriesElement> basis;
  for (std::size_t i = 0; i < s.size(); ++i)
    basis.push_back(generator_element(s.size(), static_cast<int>(i), s.trunc) + to_graded(p.corrections[i], s.trunc));
  if (p.empty()) return s;
  return rebase(s, basis);
}

std::vector<std::string> presentation_defects(const BasicSetPresentation& s) {
  std::vector<std::string> out;
  const HopfStructure hs = s.hopf();
  const auto n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = hs.coassociativity_residual(static_cast<int>(i));
    if (!r.empty()) {
      const auto& [k, c] = *r.terms().begin();
      out.push_back("coassociativity " + s.generators[i] + ": " + render_term(k, c, s.generators));
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto r = hs.homomorphism_residual(static_cast<int>(a), static_cast<int>(b));
      if (!r.empty()) {
        const auto& [k, c] = *r.terms().begin();
        out.push_back("homomorphism " + s.generators[a] + " " + s.generators[b] + ": " +
                      render_term(k, c, s.generators));
      }
    }
  return out;
}

namespace {

std::pair<BasisChange, BasicSetPresentation> classical_stage(const BasicSetPresentation& s, int m) {
  const auto n = s.size();
  const auto t = s.trunc;
  const auto& names = s.generators;
  const auto z0 = [](const TensorKey& k) { return k.z == 0; };

  // Obstructions: the z^0 coproduct beyond the primitive part.
  std::vector<TensorSeries> obstruction;
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    TensorSeries rest = s.coproducts.entries[i].filtered(z0) - primitive_coproduct(n, static_cast<int>(i), t);
    TensorSeries top(t);
    for (const auto& [k, c] : rest.terms()) {
      if (one_sided(k))
        throw NonPrimitivizableError("stage " + std::to_string(m) + ": counit fails for " + names[i] + " at " +
                                         render_term(k, c, names),
                                     m);
      if (graded_degree(k) <= m)
        throw NonPrimitivizableError("stage " + std::to_string(m) + ": " + names[i] +
                                         " is not primitive below degree " + std::to_string(m + 1) + ": " +
                                         render_term(k, c, names),
                                     m);
      if (graded_degree(k) == m + 1) top.add(k, c);
    }
    any = any || !top.empty();
    obstruction.push_back(std::move(top));
  }
  if (!any) return {zero_change(s, m), s};

  // Ansatz: hbar^j S[W^nu] with |nu| >= 2 and |nu| + j = m + 1.
  const HopfStructure hs = s.hopf();
  SymmetrizedCache sym(hs.algebra());
  std::vector<SeriesElement> columns;
  std::vector<TensorSeries> images;
  for (int d = 2; d <= m + 1; ++d)
    for (const auto& nu : monomials_of_degree(n, d)) {
      SeriesElement col(t);
      add_shifted(col, sym(nu), 0, m + 1 - d, 1);
      images.push_back(coboundary(hs, col).filtered(
          [m](const TensorKey& k) { return k.z == 0 && graded_degree(k) == m + 1; }));
      columns.push_back(std::move(col));
    }

  BasisChange change = zero_change(s, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (obstruction[i].empty()) continue;
    std::map<TensorKey, std::map<int, Rational>> rows;
    for (const auto& [k, c] : obstruction[i].terms()) rows[k];
    for (std::size_t c = 0; c < images.size(); ++c)
      for (const auto& [k, v] : images[c].terms()) rows[k][static_cast<int>(c)] = v;
    EchelonSolver solver(static_cast<int>(columns.size()));
    for (const auto& [k, coeffs] : rows) solver.add_row(coeffs, obstruction[i].coefficient(k));
    if (!solver.consistent())
      throw NonPrimitivizableError("stage " + std::to_string(m) + ": the degree " + std::to_string(m + 1) +
                                       " obstruction of " + names[i] + " is not a symmetric coboundary",
                                   m);
    const auto f = solver.particular_solution();
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (f[c] != 0) change.corrections[i] += columns[c].scaled(f[c]);
  }
  return {change, rebase(s, corrected_basis(s, change))};
}

}  // namespace

std::pair<BasisChange, BasicSetPresentation> primitivize_step(const BasicSetPresentation& s, int m) {
  const int D = s.trunc.degree_max;
  if (m < 1 || m >= D) throw InputError("stage " + std::to_string(m) + " outside 1.." + std::to_string(D - 1));
  check_defects(s, m);
  return classical_stage(s, m);
}

std::pair<BasisChange, BasicSetPresentation> primitivize_order(const BasicSetPresentation& s, int k) {
  const int N = s.trunc.z_max, D = s.trunc.degree_max;
  if (k < 1 || k > N) throw InputError("z-order " + std::to_string(k) + " outside 1.." + std::to_string(N));
  const auto n = s.size();
  const auto t = s.trunc;
  const auto& names = s.generators;
  const int stage = D - 1 + k;
  BasisChange change = zero_change(s, stage);

  for (std::size_t i = 0; i < n; ++i) {
    const TensorSeries T = s.coproducts.entries[i].z_component(k);
    for (const auto& [key, c] : T.terms())
      if (one_sided(key))
        throw NonPrimitivizableError("z^" + std::to_string(k) + ": counit fails for " + names[i] + " at " +
                                         render_term(key, c, names),
                                     stage);
    SeriesElement p(t);
    if (k % 2 == 1) {
      // Only the cocommutative part can be a coboundary; the rest is delta's.
      const TensorSeries sym = (T + flip(T)).scaled(Rational(1, 2));
      if (sym.empty()) continue;
      std::vector<TermKey> cols;
      std::map<TensorKey, std::map<int, Rational>> rows;
      for (const auto& [key, c] : sym.terms()) rows[key];
      for (int g = 2; g <= D; ++g)
        for (int d = 2; d <= g; ++d) {
          const int j = g - d;
          for (const auto& nu : monomials_of_degree(n, d)) {
            const int col = static_cast<int>(cols.size());
            cols.push_back(TermKey{k, j, nu});
            for (const auto& [lr, v] : shuffle_coproduct(nu))
              if (!lr.first.is_unit() && !lr.second.is_unit()) rows[TensorKey{k, j, lr.first, lr.second}][col] = v;
          }
        }
      EchelonSolver solver(static_cast<int>(cols.size()));
      for (const auto& [key, coeffs] : rows) solver.add_row(coeffs, sym.coefficient(key));
      if (!solver.consistent())
        throw NonPrimitivizableError("z^" + std::to_string(k) + ": the cocommutative part of Delta(" + names[i] +
                                         ") is not a coboundary",
                                     stage);
      const auto f = solver.particular_solution();
      for (std::size_t c = 0; c < cols.size(); ++c) p.add(cols[c], f[c]);
    } else {
      if (auto anti = T - flip(T); !anti.empty())
        throw NonPrimitivizableError("z^" + std::to_string(k) + ": Delta(" + names[i] +
                                         ") has a non-cocommutative part " +
                                         render_term(anti.terms().begin()->first, anti.terms().begin()->second, names),
                                     stage);
      // Each PBW coboundary owns exactly one pivot-type entry X^(nu - e_j) (x) X_j.
      for (const auto& [key, c] : T.terms()) {
        const int j = key.r.first_index();
        if (key.r.degree() != 1 || j > key.l.first_index()) continue;
        Monomial nu = key.l;
        nu.bump(static_cast<std::size_t>(j));
        if (graded_degree(key) < 2)
          throw NonPrimitivizableError("z^" + std::to_string(k) + ": Delta(" + names[i] + ") has a degree-one term " +
                                           render_term(key, c, names),
                                       stage);
        p.add(TermKey{k, key.h, nu}, c / nu[static_cast<std::size_t>(j)]);
      }
    }
    change.corrections[i] = std::move(p);
  }
  if (change.empty()) return {change, s};
  return {change, rebase(s, corrected_basis(s, change))};
}

PrimitivizeResult primitivize(const BasicSetPresentation& s, int max_stage) {
  const int D = s.trunc.degree_max;
  if (max_stage < 0 || max_stage >= D)
    throw InputError("max stage " + std::to_string(max_stage) + " outside 0.." + std::to_string(D - 1));
  check_defects(s, 0);
  const auto n = s.size();
  const Algebra origin(s.commutators);
  std::vector<SeriesElement> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(generator_element(n, static_cast<int>(i), s.trunc));

  PrimitivizeResult out;
  out.presentation = s;
  const auto absorb = [&](std::pair<BasisChange, BasicSetPresentation> step) {
    if (!step.first.empty()) {
      std::vector<SeriesElement> next;
      for (std::size_t i = 0; i < n; ++i) next.push_back(basis[i] - substitute(step.first.corrections[i], basis, origin));
      basis = std::move(next);
    }
    out.stages.push_back(std::move(step.first));
    out.presentation = std::move(step.second);
  };
  for (int m = 1; m <= max_stage; ++m) absorb(classical_stage(out.presentation, m));

  // Primitivity fixes the basis only up to linear terms. Pick the one in which
  // each input generator has linear part Y_i in symmetrized coordinates.
  {
    const auto& cur = out.presentation;
    PowerCache pc(origin, basis);
    BasisChange c = zero_change(cur, max_stage);
    const Algebra a(cur.commutators);
    for (std::size_t i = 0; i < n; ++i) {
      const auto y = express(generator_element(n, static_cast<int>(i), s.trunc), pc, s.trunc, rewrite_passes(s.trunc));
      const auto lin = linear_part(y, a).filtered([](const TermKey& k) { return k.z == 0; });
      c.corrections[i] = generator_element(n, static_cast<int>(i), s.trunc) - lin;
    }
    if (!c.empty()) absorb({c, rebase(cur, corrected_basis(cur, c))});
  }
  for (int k = 1; k <= s.trunc.z_max; ++k) absorb(primitivize_order(out.presentation, k));

  out.composite = zero_change(s, out.stages.empty() ? 0 : out.stages.back().stage);
  for (std::size_t i = 0; i < n; ++i)
    out.composite.corrections[i] = generator_element(n, static_cast<int>(i), s.trunc) - basis[i];
  return out;
}

std::string render_basis_change(const BasisChange& c, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < c.corrections.size(); ++i)
    if (!c.corrections[i].empty()) out += names.at(i) + " := " + names.at(i) + " - (" + render(c.corrections[i], names) + ")\n";
  return out;
}

Dump to_dump(const BasicSetPresentation& s) {
  Dump d;
  d.name = s.name;
  d.generators = s.generators;
  d.order = s.trunc.z_max;
  d.degree = s.trunc.degree_max;
  d.gauge = "basic-set";
  d.commutators = s.commutators;
  d.coproducts = s.coproducts;
  return d;
}

BasicSetPresentation to_presentation(const Dump& d) {
  if (d.degree < 0) throw InputError("dump has no degree header; use a graded presentation");
  require_degree(d.degree);
  BasicSetPresentation s;
  s.name = d.name;
  s.generators = d.generators;
  s.trunc = d.truncation();
  s.commutators = d.commutators;
  s.coproducts = d.coproducts;
  return s;
}

DeformationResult drop_grading(const BasicSetPresentation& s, const LieBialgebra& b) {
  DeformationResult r;
  r.bialgebra = b;
  r.order = s.trunc.z_max;
  const auto t = Truncation::z_order(r.order);
  r.commutators = CommutatorTable(s.size(), t);
  for (const auto& [ab, v] : s.commutators.entries) r.commutators.set(ab.first, ab.second, drop_grading(v));
  r.coproducts = CoproductTable(s.size(), t);
  for (std::size_t i = 0; i < s.size(); ++i) r.coproducts.entries[i] = drop_grading(s.coproducts.entries[i]);
  return r;
}

}  // namespace aq
