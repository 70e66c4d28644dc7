#pragma once

#include <climits>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aq/series.hpp"

namespace aq {

// [X_i, X_j] for i < j; other orders are served with a sign, diagonal is zero.
struct CommutatorTable {
  std::size_t n = 0;
  Truncation trunc{};
  std::map<std::pair<int, int>, SeriesElement> entries;

  CommutatorTable() = default;
  CommutatorTable(std::size_t n_, Truncation t) : n(n_), trunc(t) {}
  SeriesElement bracket(int a, int b) const;
  // Stores value as [X_a, X_b], flipping the sign when a > b. Empty values are erased.
  void set(int a, int b, const SeriesElement& value);
  void add(int a, int b, const TermKey& k, const Rational& c);
  CommutatorTable retruncated(Truncation t) const;
  friend bool operator==(const CommutatorTable&, const CommutatorTable&) = default;
};

struct CoproductTable {
  std::size_t n = 0;
  Truncation trunc{};
  std::vector<TensorSeries> entries;

  CoproductTable() = default;
  CoproductTable(std::size_t n_, Truncation t) : n(n_), trunc(t), entries(n_, TensorSeries(t)) {}
  CoproductTable retruncated(Truncation t) const;
  friend bool operator==(const CoproductTable&, const CoproductTable&) = default;
};

// Checks the shape that makes rewriting terminate (see Algebra). Returns a
// description of the first offending term, or an empty string.
std::string table_shape_violation(const CommutatorTable& t, Truncation regime);

// The truncated deformed enveloping algebra defined by a commutator table.
//
// Rewriting X_a X_b -> X_b X_a + [X_a, X_b] for a > b terminates because every
// table term either carries z (the z budget drops) or is linear at z^0 (the
// degree drops). In the graded regime every table term has graded degree >= 2,
// so graded degree never decreases and terms above the bound are pruned early.
//
// Products are memoized inside the object; an Algebra is not meant to be
// shared between threads.
class Algebra {
 public:
  static constexpr int kUnbounded = INT_MAX / 4;
  using Terms = std::map<TermKey, Rational>;
  using TensorTerms = std::map<TensorKey, Rational>;

  explicit Algebra(CommutatorTable table);

  std::size_t size() const { return n_; }
  Truncation truncation() const { return trunc_; }
  const CommutatorTable& table() const { return table_; }
  const std::vector<std::pair<TermKey, Rational>>& bracket_terms(int a, int b) const {
    return br_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
  }

  SeriesElement normal_order(const std::vector<int>& word) const;
  SeriesElement multiply(const SeriesElement& a, const SeriesElement& b) const;
  SeriesElement commutator(const SeriesElement& a, const SeriesElement& b) const;
  TensorSeries tensor_multiply(const TensorSeries& a, const TensorSeries& b) const;
  TensorSeries tensor_commutator(const TensorSeries& a, const TensorSeries& b) const;

  // Budget helpers. zb bounds the extra z-order, rb the graded degree of the
  // result (kUnbounded outside the graded regime).
  const Terms& times_generator(const Monomial& m, int g, int zb, int rb) const;
  Terms times_monomial(const Monomial& a, const Monomial& b, int zb, int rb) const;
  // Accumulates (a)(b) into out; results keep z <= zb and graded degree <= rb.
  void multiply_tensor_terms(const TensorKey& a, const Rational& ca, const TensorKey& b, const Rational& cb, int zb,
                             int rb, TensorSeries& out) const;
  int degree_budget() const { return trunc_.graded_regime() ? trunc_.degree_max : kUnbounded; }
  bool graded() const { return trunc_.graded_regime(); }

 private:
  struct MemoKey {
    Monomial m;
    int g, zb, rb;
    friend bool operator==(const MemoKey&, const MemoKey&) = default;
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
      std::size_t h = k.m.hash();
      h ^= static_cast<std::size_t>(k.g) * 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= static_cast<std::size_t>(k.zb) * 0xbf58476d1ce4e5b9ull + (h << 6) + (h >> 2);
      h ^= static_cast<std::size_t>(k.rb) * 0x94d049bb133111ebull + (h << 6) + (h >> 2);
      return h;
    }
  };

  std::size_t n_;
  Truncation trunc_;
  CommutatorTable table_;
  std::vector<std::vector<std::pair<TermKey, Rational>>> br_;
  mutable std::unordered_map<MemoKey, Terms, MemoHash> memo_;
};

// Algebra plus coproducts of the generators: the data (g_q, Delta).
class HopfStructure {
 public:
  HopfStructure(CommutatorTable table, CoproductTable cop);

  const Algebra& algebra() const { return alg_; }
  const CoproductTable& coproducts() const { return cop_; }
  std::size_t size() const { return alg_.size(); }
  Truncation truncation() const { return alg_.truncation(); }

  // Delta of a PBW monomial as the ordered product of generator coproducts.
  TensorSeries extend_coproduct(const Monomial& m) const;
  TensorSeries apply(const SeriesElement& x) const;
  // (Delta (x) 1 - 1 (x) Delta) Delta(X_i), all orders within truncation.
  Tensor3Series coassociativity_residual(int i) const;
  // Delta([X_a,X_b]) - [Delta X_a, Delta X_b], all orders within truncation.
  TensorSeries homomorphism_residual(int a, int b) const;
  // Terms of Delta(m) with extra z-order <= zb and graded degree <= rb.
  const TensorSeries& extend(const Monomial& m, int zb, int rb) const;

 private:
  struct MemoKey {
    Monomial m;
    int zb, rb;
    friend bool operator==(const MemoKey&, const MemoKey&) = default;
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
      return k.m.hash() ^ (static_cast<std::size_t>(k.zb) * 0x9e3779b97f4a7c15ull) ^
             (static_cast<std::size_t>(k.rb) * 0xbf58476d1ce4e5b9ull);
    }
  };
  Algebra alg_;
  CoproductTable cop_;
  mutable std::unordered_map<MemoKey, TensorSeries, MemoHash> memo_;
};

// Free-function forms of the series operations.
SeriesElement normal_order(const std::vector<int>& word, const CommutatorTable& table, int order);
SeriesElement multiply(const SeriesElement& a, const SeriesElement& b, const CommutatorTable& table);
TensorSeries tensor_multiply(const TensorSeries& a, const TensorSeries& b, const CommutatorTable& table);
TensorSeries extend_coproduct(const Monomial& m, const CoproductTable& cop, const CommutatorTable& table);
// z^k component of (Delta (x) 1 - 1 (x) Delta) Delta(X_i).
Tensor3Series coassociativity_residual(const CoproductTable& cop, const CommutatorTable& table, int i, int k);

}  // namespace aq
