#include "aq/algebra.hpp"

#include <stdexcept>

#include "aq/errors.hpp"

namespace aq {

SeriesElement CommutatorTable::bracket(int a, int b) const {
  if (a == b) return SeriesElement(trunc);
  const bool swap = a > b;
  auto it = entries.find(swap ? std::pair{b, a} : std::pair{a, b});
  if (it == entries.end()) return SeriesElement(trunc);
  return swap ? it->second.scaled(-1) : it->second;
}

void CommutatorTable::set(int a, int b, const SeriesElement& value) {
  if (a == b) {
    if (!value.empty()) throw InputError("nonzero diagonal commutator");
    return;
  }
  const auto key = a < b ? std::pair{a, b} : std::pair{b, a};
  SeriesElement v = (a < b ? value : value.scaled(-1)).retruncated(trunc);
  if (v.empty())
    entries.erase(key);
  else
    entries[key] = std::move(v);
}

void CommutatorTable::add(int a, int b, const TermKey& k, const Rational& c) {
  if (a == b) throw InputError("diagonal commutator entry");
  const auto key = a < b ? std::pair{a, b} : std::pair{b, a};
  auto [it, _] = entries.try_emplace(key, SeriesElement(trunc));
  it->second.add(k, a < b ? c : Rational(-c));
  if (it->second.empty()) entries.erase(it);
}

CommutatorTable CommutatorTable::retruncated(Truncation t) const {
  CommutatorTable r(n, t);
  for (const auto& [k, v] : entries) {
    auto w = v.retruncated(t);
    if (!w.empty()) r.entries.emplace(k, std::move(w));
  }
  return r;
}

CoproductTable CoproductTable::retruncated(Truncation t) const {
  CoproductTable r(n, t);
  for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] = entries[i].retruncated(t);
  return r;
}

std::string table_shape_violation(const CommutatorTable& t, Truncation regime) {
  for (const auto& [ij, v] : t.entries) {
    for (const auto& [k, c] : v.terms()) {
      const int d = k.m.degree();
      bool ok;
      if (regime.graded_regime()) {
        const int g = d + k.h;
        ok = g >= 2 && (k.z >= 1 || g >= 3 || d <= 1);
      } else {
        ok = k.h == 0 && (k.z == 0 ? d <= 1 : d <= k.z + 1);
      }
      if (!ok)
        return "bracket (" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ") term at z^" +
               std::to_string(k.z) + " has degree " + std::to_string(d);
    }
  }
  return {};
}

Algebra::Algebra(CommutatorTable table) : n_(table.n), trunc_(table.trunc), table_(std::move(table)) {
  for (const auto& [ij, v] : table_.entries) {
    if (ij.first < 0 || ij.second >= static_cast<int>(n_) || ij.first >= ij.second)
      throw InputError("commutator table index out of range");
    for (const auto& [k, c] : v.terms())
      if (k.m.size() != n_) throw InputError("commutator table monomial has wrong size");
  }
  if (auto why = table_shape_violation(table_, trunc_); !why.empty())
    throw InputError("commutator table violates the grading shape: " + why);
  br_.resize(n_ * n_);
  for (const auto& [ij, v] : table_.entries) {
    auto& fwd = br_[static_cast<std::size_t>(ij.first) * n_ + static_cast<std::size_t>(ij.second)];
    auto& bwd = br_[static_cast<std::size_t>(ij.second) * n_ + static_cast<std::size_t>(ij.first)];
    for (const auto& [k, c] : v.terms()) {
      fwd.emplace_back(k, c);
      bwd.emplace_back(k, -c);
    }
  }
}

namespace {

inline bool within(const TermKey& k, int zb, int rb) {
  return k.z <= zb && (rb >= Algebra::kUnbounded / 2 || k.m.degree() + k.h <= rb);
}

inline void accumulate(Algebra::Terms& out, TermKey&& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = out.try_emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

inline int shrink(int rb, int by) { return rb >= Algebra::kUnbounded / 2 ? rb : rb - by; }

}  // namespace

const Algebra::Terms& Algebra::times_generator(const Monomial& m, int g, int zb, int rb) const {
  MemoKey key{m, g, zb, rb};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Terms res;
  const int l = m.last_index();
  if (l <= g) {
    Monomial w = m;
    w.bump(static_cast<std::size_t>(g));
    TermKey k{0, 0, std::move(w)};
    if (within(k, zb, rb)) res.emplace(std::move(k), 1);
  } else {
    // m = m' X_l with l > g:  m' X_l X_g = (m' X_g) X_l + m' [X_l, X_g].
    Monomial mp = m;
    mp.bump(static_cast<std::size_t>(l), -1);
    const Terms first = times_generator(mp, g, zb, shrink(rb, 1));
    for (const auto& [k1, c1] : first) {
      const Terms& second = times_generator(k1.m, l, zb - k1.z, shrink(rb, k1.h));
      for (const auto& [k2, c2] : second) accumulate(res, TermKey{k1.z + k2.z, k1.h + k2.h, k2.m}, c1 * c2);
    }
    for (const auto& [kb, cb] : bracket_terms(l, g)) {
      if (kb.z > zb) continue;
      Terms t = times_monomial(mp, kb.m, zb - kb.z, shrink(rb, kb.h));
      for (auto& [k2, c2] : t) accumulate(res, TermKey{kb.z + k2.z, kb.h + k2.h, k2.m}, cb * c2);
    }
  }
  auto [it, _] = memo_.emplace(std::move(key), std::move(res));
  return it->second;
}

Algebra::Terms Algebra::times_monomial(const Monomial& a, const Monomial& b, int zb, int rb) const {
  Terms cur;
  {
    TermKey k{0, 0, a};
    if (!within(k, zb, rb)) return cur;
    cur.emplace(std::move(k), 1);
  }
  for (std::size_t g = 0; g < b.size(); ++g) {
    for (int rep = 0; rep < b[g]; ++rep) {
      Terms next;
      for (const auto& [k1, c1] : cur) {
        const Terms& t = times_generator(k1.m, static_cast<int>(g), zb - k1.z, shrink(rb, k1.h));
        for (const auto& [k2, c2] : t) accumulate(next, TermKey{k1.z + k2.z, k1.h + k2.h, k2.m}, c1 * c2);
      }
      cur = std::move(next);
    }
  }
  return cur;
}

SeriesElement Algebra::normal_order(const std::vector<int>& word) const {
  SeriesElement cur = unit_element(n_, trunc_);
  for (int g : word) {
    if (g < 0 || g >= static_cast<int>(n_)) throw InputError("generator index out of range in word");
    cur = multiply(cur, generator_element(n_, g, trunc_));
  }
  return cur;
}

SeriesElement Algebra::multiply(const SeriesElement& a, const SeriesElement& b) const {
  SeriesElement out(trunc_);
  const int D = degree_budget();
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const int z0 = ka.z + kb.z, h0 = ka.h + kb.h;
      if (z0 > trunc_.z_max) continue;
      const int rb = D >= kUnbounded / 2 ? D : D - h0;
      Terms t = times_monomial(ka.m, kb.m, trunc_.z_max - z0, rb);
      for (const auto& [k, c] : t) out.add(TermKey{z0 + k.z, h0 + k.h, k.m}, ca * cb * c);
    }
  }
  return out;
}

SeriesElement Algebra::commutator(const SeriesElement& a, const SeriesElement& b) const {
  SeriesElement r = multiply(a, b);
  r -= multiply(b, a);
  return r;
}

void Algebra::multiply_tensor_terms(const TensorKey& a, const Rational& ca, const TensorKey& b, const Rational& cb,
                                    int zb, int rb, TensorSeries& out) const {
  const int z0 = a.z + b.z, h0 = a.h + b.h;
  if (z0 > zb) return;
  const int zrem = zb - z0;
  const bool bounded = rb < kUnbounded / 2;
  const int base = bounded ? rb - h0 : kUnbounded;
  const int rl = bounded ? base - (a.r.degree() + b.r.degree()) : kUnbounded;
  if (bounded && rl < a.l.degree() + b.l.degree()) return;
  Terms left = times_monomial(a.l, b.l, zrem, rl);
  for (const auto& [kl, c1] : left) {
    const int rr = bounded ? base - (kl.m.degree() + kl.h) : kUnbounded;
    Terms right = times_monomial(a.r, b.r, zrem - kl.z, rr);
    for (const auto& [kr, c2] : right)
      out.add(TensorKey{z0 + kl.z + kr.z, h0 + kl.h + kr.h, kl.m, kr.m}, ca * cb * c1 * c2);
  }
}

TensorSeries Algebra::tensor_multiply(const TensorSeries& a, const TensorSeries& b) const {
  TensorSeries out(trunc_);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) multiply_tensor_terms(ka, ca, kb, cb, trunc_.z_max, degree_budget(), out);
  return out;
}

TensorSeries Algebra::tensor_commutator(const TensorSeries& a, const TensorSeries& b) const {
  TensorSeries r = tensor_multiply(a, b);
  r -= tensor_multiply(b, a);
  return r;
}

HopfStructure::HopfStructure(CommutatorTable table, CoproductTable cop) : alg_(std::move(table)), cop_(std::move(cop)) {
  if (cop_.entries.size() != alg_.size()) throw InputError("coproduct table size does not match the algebra");
  cop_ = cop_.retruncated(alg_.truncation());
}

const TensorSeries& HopfStructure::extend(const Monomial& m, int zb, int rb) const {
  MemoKey key{m, zb, rb};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const std::size_t n = alg_.size();
  TensorSeries res(Truncation::z_order(Algebra::kUnbounded));
  const int l = m.last_index();
  if (l < 0) {
    res.add(TensorKey{0, 0, Monomial(n), Monomial(n)}, 1);
  } else {
    Monomial mp = m;
    mp.bump(static_cast<std::size_t>(l), -1);
    // Delta(m') needs room for the at least degree-1 factor Delta(X_l).
    const bool bounded = rb < Algebra::kUnbounded / 2;
    const TensorSeries& left = extend(mp, zb, bounded ? rb - 1 : rb);
    for (const auto& [ka, ca] : left.terms())
      for (const auto& [kb, cb] : cop_.entries[static_cast<std::size_t>(l)].terms())
        alg_.multiply_tensor_terms(ka, ca, kb, cb, zb, rb, res);
  }
  auto [it, _] = memo_.emplace(std::move(key), std::move(res));
  return it->second;
}

TensorSeries HopfStructure::extend_coproduct(const Monomial& m) const {
  const auto t = truncation();
  TensorSeries out(t);
  for (const auto& [k, c] : extend(m, t.z_max, alg_.degree_budget()).terms()) out.add(k, c);
  return out;
}

TensorSeries HopfStructure::apply(const SeriesElement& x) const {
  const auto t = truncation();
  TensorSeries out(t);
  const int D = alg_.degree_budget();
  for (const auto& [kx, cx] : x.terms()) {
    if (kx.z > t.z_max) continue;
    const int rb = D >= Algebra::kUnbounded / 2 ? D : D - kx.h;
    for (const auto& [k, c] : extend(kx.m, t.z_max - kx.z, rb).terms())
      out.add(TensorKey{k.z + kx.z, k.h + kx.h, k.l, k.r}, c * cx);
  }
  return out;
}

Tensor3Series HopfStructure::coassociativity_residual(int i) const {
  const auto t = truncation();
  const int D = alg_.degree_budget();
  const bool bounded = D < Algebra::kUnbounded / 2;
  Tensor3Series res(t);
  for (const auto& [k, c] : cop_.entries.at(static_cast<std::size_t>(i)).terms()) {
    const int zb = t.z_max - k.z;
    const int base = bounded ? D - k.h : D;
    for (const auto& [k2, c2] : extend(k.l, zb, bounded ? base - k.r.degree() : D).terms())
      res.add(Tensor3Key{k.z + k2.z, k.h + k2.h, k2.l, k2.r, k.r}, c * c2);
    for (const auto& [k2, c2] : extend(k.r, zb, bounded ? base - k.l.degree() : D).terms())
      res.add(Tensor3Key{k.z + k2.z, k.h + k2.h, k.l, k2.l, k2.r}, -c * c2);
  }
  return res;
}

TensorSeries HopfStructure::homomorphism_residual(int a, int b) const {
  TensorSeries res = apply(alg_.table().bracket(a, b));
  const auto& da = cop_.entries.at(static_cast<std::size_t>(a));
  const auto& db = cop_.entries.at(static_cast<std::size_t>(b));
  res -= alg_.tensor_commutator(da, db);
  return res;
}

SeriesElement normal_order(const std::vector<int>& word, const CommutatorTable& table, int order) {
  if (table.trunc.z_max < order) throw InputError("commutator table truncation below requested order");
  Algebra alg(table.retruncated(Truncation::z_order(order)));
  return alg.normal_order(word);
}

SeriesElement multiply(const SeriesElement& a, const SeriesElement& b, const CommutatorTable& table) {
  if (a.truncation() != b.truncation() || a.truncation() != table.trunc)
    throw InputError("truncation mismatch in multiply");
  return Algebra(table).multiply(a, b);
}

TensorSeries tensor_multiply(const TensorSeries& a, const TensorSeries& b, const CommutatorTable& table) {
  if (a.truncation() != b.truncation() || a.truncation() != table.trunc)
    throw InputError("truncation mismatch in tensor_multiply");
  return Algebra(table).tensor_multiply(a, b);
}

TensorSeries extend_coproduct(const Monomial& m, const CoproductTable& cop, const CommutatorTable& table) {
  if (cop.trunc != table.trunc) throw InputError("truncation mismatch in extend_coproduct");
  return HopfStructure(table, cop).extend_coproduct(m);
}

Tensor3Series coassociativity_residual(const CoproductTable& cop, const CommutatorTable& table, int i, int k) {
  if (cop.trunc.z_max < k) throw InputError("coproduct table truncation below requested order");
  HopfStructure h(table.retruncated(Truncation::z_order(k)), cop.retruncated(Truncation::z_order(k)));
  return h.coassociativity_residual(i).z_component(k);
}

}  // namespace aq
