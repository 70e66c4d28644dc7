#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "aq/rational.hpp"

namespace aq {

// One PBW word X_0^{e_0} ... X_{n-1}^{e_{n-1}}; the index order is the PBW order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  explicit Monomial(std::vector<std::uint16_t> e) : e_(std::move(e)) {}
  static Monomial generator(std::size_t n, int i);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int v) { e_[i] = static_cast<std::uint16_t>(v); }
  void bump(std::size_t i, int by = 1) { e_[i] = static_cast<std::uint16_t>(e_[i] + by); }

  int degree() const;
  bool is_unit() const { return degree() == 0; }
  int first_index() const;  // -1 for the unit monomial
  int last_index() const;   // -1 for the unit monomial
  Monomial operator+(const Monomial& o) const;
  const std::vector<std::uint16_t>& exponents() const { return e_; }
  std::size_t hash() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint16_t> e_;
};

// Which terms survive. z_max bounds the z-order. When degree_max >= 0 the
// graded regime is active and terms with degree + h > degree_max are
// dropped, where h is the power of the grading parameter hbar (z has
// weight zero).
struct Truncation {
  int z_max = 0;
  int degree_max = -1;

  static Truncation z_order(int n) { return {n, -1}; }
  static Truncation graded(int n, int d) { return {n, d}; }
  bool graded_regime() const { return degree_max >= 0; }
  bool admits(int z, int h, int degree) const {
    return z >= 0 && z <= z_max && (degree_max < 0 || degree + h <= degree_max);
  }
  friend auto operator<=>(const Truncation&, const Truncation&) = default;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

struct TermKey {
  int z = 0;
  int h = 0;
  Monomial m;
  int degree() const { return m.degree(); }
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

struct TensorKey {
  int z = 0;
  int h = 0;
  Monomial l;
  Monomial r;
  int degree() const { return l.degree() + r.degree(); }
  friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

struct Tensor3Key {
  int z = 0;
  int h = 0;
  Monomial a;
  Monomial b;
  Monomial c;
  int degree() const { return a.degree() + b.degree() + c.degree(); }
  friend auto operator<=>(const Tensor3Key&, const Tensor3Key&) = default;
  friend bool operator==(const Tensor3Key&, const Tensor3Key&) = default;
};

// Finite exact linear combination with canonical ordering and no stored zeros.
template <class Key>
class Series {
 public:
  using Map = std::map<Key, Rational>;

  Series() = default;
  explicit Series(Truncation t) : trunc_(t) {}

  Truncation truncation() const { return trunc_; }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool admits(const Key& k) const { return trunc_.admits(k.z, k.h, k.degree()); }

  void add(const Key& k, const Rational& c) {
    if (c == 0 || !admits(k)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(Key&& k, const Rational& c) {
    if (c == 0 || !admits(k)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Series& operator+=(const Series& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Series scaled(const Rational& s) const {
    Series r(trunc_);
    if (s == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }
  Series operator+(const Series& o) const { Series r = *this; r += o; return r; }
  Series operator-(const Series& o) const { Series r = *this; r -= o; return r; }

  // Terms at z-order k (all hbar powers).
  Series z_component(int k) const {
    Series r(trunc_);
    for (const auto& [key, c] : terms_)
      if (key.z == k) r.terms_.emplace(key, c);
    return r;
  }
  // Same terms, new truncation; terms outside it are dropped.
  Series retruncated(Truncation t) const {
    Series r(t);
    for (const auto& [k, c] : terms_) r.add(k, c);
    return r;
  }
  template <class Pred>
  Series filtered(Pred&& keep) const {
    Series r(trunc_);
    for (const auto& [k, c] : terms_)
      if (keep(k)) r.terms_.emplace(k, c);
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }
  bool same_terms(const Series& o) const { return terms_ == o.terms_; }

 private:
  Truncation trunc_{};
  Map terms_;
};

using SeriesElement = Series<TermKey>;
using TensorSeries = Series<TensorKey>;
using Tensor3Series = Series<Tensor3Key>;

SeriesElement unit_element(std::size_t n, Truncation t);
SeriesElement generator_element(std::size_t n, int i, Truncation t);
TensorSeries flip(const TensorSeries& t);
TensorSeries tensor(const SeriesElement& a, const SeriesElement& b, Truncation t);
// Primitive coproduct X_i (x) 1 + 1 (x) X_i.
TensorSeries primitive_coproduct(std::size_t n, int i, Truncation t);
// Delta_0 of a PBW monomial: the multinomial shuffle, no reordering needed.
std::vector<std::pair<std::pair<Monomial, Monomial>, Rational>> shuffle_coproduct(const Monomial& m);
// Sets hbar = 1, merging terms that then coincide. The result is in the
// z-order regime.
SeriesElement drop_grading(const SeriesElement& s);
TensorSeries drop_grading(const TensorSeries& s);

// Canonical text: "z^k * q * H^2*X (x) Y"; an "hbar^j * " factor follows z^k when j > 0.
std::string render_monomial(const Monomial& m, const std::vector<std::string>& names);
std::string render_term(const TermKey& k, const Rational& c, const std::vector<std::string>& names);
std::string render_term(const TensorKey& k, const Rational& c, const std::vector<std::string>& names);
std::string render_term(const Tensor3Key& k, const Rational& c, const std::vector<std::string>& names);
std::string render(const SeriesElement& s, const std::vector<std::string>& names);
std::string render(const TensorSeries& s, const std::vector<std::string>& names);

// Inverse of render_term for single-factor and tensor terms.
std::pair<TermKey, Rational> parse_term(const std::string& text, const std::vector<std::string>& names);
std::pair<TensorKey, Rational> parse_tensor_term(const std::string& text, const std::vector<std::string>& names);

}  // namespace aq

template <>
struct std::hash<aq::Monomial> {
  std::size_t operator()(const aq::Monomial& m) const noexcept { return m.hash(); }
};
