#include "aq/verify.hpp"

#include <algorithm>
#include <sstream>

namespace aq {

bool HopfReport::flags(const std::string& category, int order) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
    return v.category == category && (order < 0 || v.order == order);
  });
}

std::string HopfReport::render() const {
  std::ostringstream os;
  for (const auto& v : violations)
    os << v.category << " " << v.subject << " order " << v.order << ": " << v.term << "\n";
  return os.str();
}

namespace {

// One violation per z-order that carries a nonzero term.
template <class S>
void report_by_order(HopfReport& rep, const std::string& category, const std::string& subject, const S& residual,
                     const std::vector<std::string>& names) {
  int last = -1;
  for (const auto& [k, c] : residual.terms()) {
    if (k.z == last) continue;
    last = k.z;
    rep.violations.push_back({category, subject, k.z, render_term(k, c, names)});
  }
}

}  // namespace

HopfReport verify_hopf(const DeformationResult& r) {
  HopfReport rep;
  const auto& b = r.bialgebra;
  const auto& names = b.generators;
  const std::size_t n = b.size();
  const int ni = static_cast<int>(n);
  const Truncation t = Truncation::z_order(r.order);
  // A table that rewriting cannot terminate on defines no algebra to check.
  if (auto why = table_shape_violation(r.commutators.retruncated(t), t); !why.empty()) {
    rep.violations.push_back({"shape", "commutators", 0, why});
    return rep;
  }
  const HopfStructure hopf(r.commutators.retruncated(t), r.coproducts.retruncated(t));
  const Algebra& alg = hopf.algebra();
  auto pair_name = [&](int a, int c) { return names[static_cast<std::size_t>(a)] + "," + names[static_cast<std::size_t>(c)]; };

  for (int i = 0; i < ni; ++i)
    report_by_order(rep, "coassociativity", names[static_cast<std::size_t>(i)], hopf.coassociativity_residual(i), names);

  for (int a = 0; a < ni; ++a)
    for (int c = a + 1; c < ni; ++c) report_by_order(rep, "homomorphism", pair_name(a, c), hopf.homomorphism_residual(a, c), names);

  // (eps (x) id) Delta(X_i) = X_i = (id (x) eps) Delta(X_i).
  for (int i = 0; i < ni; ++i) {
    SeriesElement left(t), right(t);
    for (const auto& [k, c] : hopf.coproducts().entries[static_cast<std::size_t>(i)].terms()) {
      if (k.l.is_unit()) left.add(TermKey{k.z, k.h, k.r}, c);
      if (k.r.is_unit()) right.add(TermKey{k.z, k.h, k.l}, c);
    }
    const SeriesElement x = generator_element(n, i, t);
    report_by_order(rep, "counit", names[static_cast<std::size_t>(i)] + " (left)", left - x, names);
    report_by_order(rep, "counit", names[static_cast<std::size_t>(i)] + " (right)", right - x, names);
  }

  // flip(Delta_(k)) = (-1)^k Delta_(k).
  for (int i = 0; i < ni; ++i) {
    const auto& d = hopf.coproducts().entries[static_cast<std::size_t>(i)];
    TensorSeries bad(t);
    for (const auto flipped = flip(d); const auto& [k, c] : flipped.terms()) bad.add(k, k.z % 2 == 0 ? c : Rational(-c));
    bad -= d;
    report_by_order(rep, "parity", names[static_cast<std::size_t>(i)], bad, names);
  }

  for (int i = 0; i < ni; ++i)
    for (int j = i + 1; j < ni; ++j)
      for (int l = j + 1; l < ni; ++l) {
        SeriesElement sum(t);
        for (auto [x, y, w] : {std::tuple{i, j, l}, std::tuple{j, l, i}, std::tuple{l, i, j}})
          sum += alg.commutator(alg.table().bracket(x, y), generator_element(n, w, t));
        report_by_order(rep, "jacobi", pair_name(i, j) + "," + names[static_cast<std::size_t>(l)], sum, names);
      }

  // Classical limit and grading shape.
  const CommutatorTable classical = classical_table(b, t);
  for (int a = 0; a < ni; ++a)
    for (int c = a + 1; c < ni; ++c) {
      SeriesElement bad = hopf.algebra().table().bracket(a, c).z_component(0) - classical.bracket(a, c);
      bad += hopf.algebra().table().bracket(a, c).filtered([](const TermKey& k) { return k.m.degree() > k.z + 1; });
      report_by_order(rep, "classical", pair_name(a, c), bad, names);
    }
  for (int i = 0; i < ni; ++i) {
    const auto& d = hopf.coproducts().entries[static_cast<std::size_t>(i)];
    TensorSeries bad = d.filtered([](const TensorKey& k) { return k.z <= 1 || k.l.degree() + k.r.degree() > k.z + 1; });
    bad -= primitive_coproduct(n, i, t);
    for (const auto delta = cocommutator_tensor(b, i, t); const auto& [k, c] : delta.terms()) bad.add(TensorKey{1, 0, k.l, k.r}, -c);
    report_by_order(rep, "classical", names[static_cast<std::size_t>(i)], bad, names);
  }

  if (r.gauge == Gauge::Analytic) {
    const auto genset = generating_set(b);
    auto in_genset = [&](int g) { return std::find(genset.begin(), genset.end(), g) != genset.end(); };
    for (int i = 0; i < ni; ++i) {
      const auto& d = hopf.coproducts().entries[static_cast<std::size_t>(i)];
      const bool gi = in_genset(i);
      TensorSeries bad = d.filtered([&](const TensorKey& k) {
        if (k.z >= 2 && k.z % 2 == 0) return pivot_type(k.l, k.r);
        return gi && k.z >= 3 && k.l.degree() == 1 && k.r.degree() == 1;
      });
      report_by_order(rep, "gauge", names[static_cast<std::size_t>(i)], bad, names);
    }
    for (int a = 0; a < ni; ++a)
      for (int c = a + 1; c < ni; ++c) {
        if (!in_genset(a) || !in_genset(c)) continue;
        SeriesElement bad = hopf.algebra().table().bracket(a, c).filtered(
            [](const TermKey& k) { return k.z >= 1 && k.m.degree() == 1; });
        report_by_order(rep, "gauge", pair_name(a, c), bad, names);
      }
  }
  return rep;
}

}  // namespace aq
