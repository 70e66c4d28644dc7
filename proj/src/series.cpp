#include "aq/series.hpp"

#include <algorithm>
#include <sstream>

#include "aq/errors.hpp"

namespace aq {

Monomial Monomial::generator(std::size_t n, int i) {
  Monomial m(n);
  m.set(static_cast<std::size_t>(i), 1);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto v : e_) d += v;
  return d;
}

int Monomial::first_index() const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i]) return static_cast<int>(i);
  return -1;
}

int Monomial::last_index() const {
  for (std::size_t i = e_.size(); i-- > 0;)
    if (e_[i]) return static_cast<int>(i);
  return -1;
}

Monomial Monomial::operator+(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<std::uint16_t>(r.e_[i] + o.e_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : e_) h = (h ^ v) * 1099511628211ull;
  return h;
}

SeriesElement unit_element(std::size_t n, Truncation t) {
  SeriesElement s(t);
  s.add(TermKey{0, 0, Monomial(n)}, 1);
  return s;
}

SeriesElement generator_element(std::size_t n, int i, Truncation t) {
  SeriesElement s(t);
  s.add(TermKey{0, 0, Monomial::generator(n, i)}, 1);
  return s;
}

TensorSeries flip(const TensorSeries& t) {
  TensorSeries r(t.truncation());
  for (const auto& [k, c] : t.terms()) r.add(TensorKey{k.z, k.h, k.r, k.l}, c);
  return r;
}

TensorSeries tensor(const SeriesElement& a, const SeriesElement& b, Truncation t) {
  TensorSeries r(t);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) r.add(TensorKey{ka.z + kb.z, ka.h + kb.h, ka.m, kb.m}, ca * cb);
  return r;
}

TensorSeries primitive_coproduct(std::size_t n, int i, Truncation t) {
  TensorSeries r(t);
  r.add(TensorKey{0, 0, Monomial::generator(n, i), Monomial(n)}, 1);
  r.add(TensorKey{0, 0, Monomial(n), Monomial::generator(n, i)}, 1);
  return r;
}

std::vector<std::pair<std::pair<Monomial, Monomial>, Rational>> shuffle_coproduct(const Monomial& m) {
  std::vector<std::pair<std::pair<Monomial, Monomial>, Rational>> cur;
  cur.push_back({{Monomial(m.size()), Monomial(m.size())}, Rational(1)});
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int e = m[i];
    if (e == 0) continue;
    std::vector<std::pair<std::pair<Monomial, Monomial>, Rational>> next;
    next.reserve(cur.size() * static_cast<std::size_t>(e + 1));
    for (const auto& [lr, c] : cur) {
      for (int a = 0; a <= e; ++a) {
        Monomial l = lr.first, r = lr.second;
        l.set(i, a);
        r.set(i, e - a);
        next.push_back({{std::move(l), std::move(r)}, c * binomial(e, a)});
      }
    }
    cur = std::move(next);
  }
  return cur;
}

SeriesElement drop_grading(const SeriesElement& s) {
  SeriesElement r(Truncation::z_order(s.truncation().z_max));
  for (const auto& [k, c] : s.terms()) r.add(TermKey{k.z, 0, k.m}, c);
  return r;
}

TensorSeries drop_grading(const TensorSeries& s) {
  TensorSeries r(Truncation::z_order(s.truncation().z_max));
  for (const auto& [k, c] : s.terms()) r.add(TensorKey{k.z, 0, k.l, k.r}, c);
  return r;
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

namespace {

std::string prefix(int z, int h, const Rational& c) {
  std::string s = "z^" + std::to_string(z) + " * ";
  if (h) s += "hbar^" + std::to_string(h) + " * ";
  return s + to_string(c) + " * ";
}

std::vector<std::string> split_on(const std::string& text, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  for (;;) {
    auto next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return parts;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_exponent(const std::string& tok, const std::string& what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw InputError("malformed " + what + " in '" + tok + "'");
  return std::stoi(tok);
}

int prefixed_power(const std::string& tok, const std::string& base) {
  if (tok.rfind(base + "^", 0) != 0) throw InputError("expected " + base + "^k, got '" + tok + "'");
  return parse_exponent(tok.substr(base.size() + 1), base + " exponent");
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names) {
  Monomial m(names.size());
  const std::string t = trim(text);
  if (t == "1") return m;
  int last = -1;
  for (const auto& factor : split_on(t, "*")) {
    const auto caret = factor.find('^');
    const std::string name = trim(factor.substr(0, caret));
    const int e = caret == std::string::npos ? 1 : parse_exponent(trim(factor.substr(caret + 1)), "exponent");
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InputError("unknown generator '" + name + "'");
    const int idx = static_cast<int>(it - names.begin());
    if (idx <= last || e <= 0) throw InputError("monomial '" + t + "' is not in PBW form");
    last = idx;
    m.set(static_cast<std::size_t>(idx), e);
  }
  return m;
}

struct ParsedPrefix {
  int z = 0;
  int h = 0;
  Rational c;
  std::string rest;
};

ParsedPrefix parse_prefix(const std::string& text) {
  auto parts = split_on(trim(text), " * ");
  if (parts.size() < 3) throw InputError("malformed term '" + text + "'");
  ParsedPrefix p;
  std::size_t i = 0;
  p.z = prefixed_power(trim(parts[i++]), "z");
  if (parts[i].rfind("hbar^", 0) == 0) p.h = prefixed_power(trim(parts[i++]), "hbar");
  if (i >= parts.size()) throw InputError("malformed term '" + text + "'");
  p.c = parse_rational(trim(parts[i++]));
  if (i >= parts.size()) throw InputError("missing monomial in '" + text + "'");
  std::string rest = parts[i++];
  for (; i < parts.size(); ++i) rest += " * " + parts[i];
  p.rest = rest;
  return p;
}

}  // namespace

std::string render_term(const TermKey& k, const Rational& c, const std::vector<std::string>& names) {
  return prefix(k.z, k.h, c) + render_monomial(k.m, names);
}

std::string render_term(const TensorKey& k, const Rational& c, const std::vector<std::string>& names) {
  return prefix(k.z, k.h, c) + render_monomial(k.l, names) + " (x) " + render_monomial(k.r, names);
}

std::string render_term(const Tensor3Key& k, const Rational& c, const std::vector<std::string>& names) {
  return prefix(k.z, k.h, c) + render_monomial(k.a, names) + " (x) " + render_monomial(k.b, names) + " (x) " +
         render_monomial(k.c, names);
}

std::string render(const SeriesElement& s, const std::vector<std::string>& names) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += render_term(k, c, names);
  }
  return out;
}

std::string render(const TensorSeries& s, const std::vector<std::string>& names) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += render_term(k, c, names);
  }
  return out;
}

std::pair<TermKey, Rational> parse_term(const std::string& text, const std::vector<std::string>& names) {
  auto p = parse_prefix(text);
  if (p.rest.find("(x)") != std::string::npos) throw InputError("unexpected tensor term '" + text + "'");
  return {TermKey{p.z, p.h, parse_monomial(p.rest, names)}, p.c};
}

std::pair<TensorKey, Rational> parse_tensor_term(const std::string& text, const std::vector<std::string>& names) {
  auto p = parse_prefix(text);
  auto sides = split_on(p.rest, "(x)");
  if (sides.size() != 2) throw InputError("expected one '(x)' in '" + text + "'");
  return {TensorKey{p.z, p.h, parse_monomial(sides[0], names), parse_monomial(sides[1], names)}, p.c};
}

}  // namespace aq
