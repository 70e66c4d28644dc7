#include "aq/bialgebra.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "aq/errors.hpp"
#include "aq/linsolve.hpp"

namespace aq {

namespace {

void add_to(LinearForm& f, int k, const Rational& c) {
  if (c == 0) return;
  auto& v = f[k];
  v += c;
  if (v == 0) f.erase(k);
}

using Tensor2 = std::map<std::pair<int, int>, Rational>;
using Tensor3 = std::map<std::tuple<int, int, int>, Rational>;

template <class M, class K>
void add_to(M& m, const K& k, const Rational& c) {
  if (c == 0) return;
  auto& v = m[k];
  v += c;
  if (v == 0) m.erase(k);
}

// delta(X_i) expanded into ordered pairs.
Tensor2 delta_pairs(const LieBialgebra& b, int i) {
  Tensor2 t;
  for (const auto& [ab, c] : b.cocommutator(i)) {
    add_to(t, ab, c);
    add_to(t, std::pair{ab.second, ab.first}, -c);
  }
  return t;
}

Tensor2 ad_pairs(const LieBialgebra& b, int i, const Tensor2& t) {
  Tensor2 out;
  for (const auto& [ab, c] : t) {
    for (const auto& [k, v] : b.bracket(i, ab.first)) add_to(out, std::pair{k, ab.second}, c * v);
    for (const auto& [k, v] : b.bracket(i, ab.second)) add_to(out, std::pair{ab.first, k}, c * v);
  }
  return out;
}

std::string pair_text(const LieBialgebra& b, int i, int j) {
  return b.generators[static_cast<std::size_t>(i)] + "," + b.generators[static_cast<std::size_t>(j)];
}

}  // namespace

int LieBialgebra::index_of(const std::string& generator) const {
  auto it = std::find(generators.begin(), generators.end(), generator);
  if (it == generators.end()) throw InputError("unknown generator '" + generator + "'");
  return static_cast<int>(it - generators.begin());
}

LinearForm LieBialgebra::bracket(int i, int j) const {
  if (i == j) return {};
  auto it = brackets.find(i < j ? std::pair{i, j} : std::pair{j, i});
  if (it == brackets.end()) return {};
  if (i < j) return it->second;
  LinearForm f;
  for (const auto& [k, c] : it->second) f.emplace(k, -c);
  return f;
}

WedgeForm LieBialgebra::cocommutator(int i) const {
  auto it = cocommutators.find(i);
  return it == cocommutators.end() ? WedgeForm{} : it->second;
}

void LieBialgebra::set_bracket(int i, int j, LinearForm value) {
  if (i == j) throw InputError("bracket of a generator with itself");
  if (i > j) {
    std::swap(i, j);
    for (auto& [k, c] : value) c = -c;
  }
  for (auto it = value.begin(); it != value.end();) it = it->second == 0 ? value.erase(it) : std::next(it);
  if (value.empty())
    brackets.erase({i, j});
  else
    brackets[{i, j}] = std::move(value);
}

void LieBialgebra::set_cocommutator(int i, WedgeForm value) {
  WedgeForm w;
  for (const auto& [ab, c] : value) {
    if (ab.first == ab.second) throw InputError("wedge of a generator with itself");
    if (ab.first < ab.second)
      add_to(w, ab, c);
    else
      add_to(w, std::pair{ab.second, ab.first}, -c);
  }
  if (w.empty())
    cocommutators.erase(i);
  else
    cocommutators[i] = std::move(w);
}

void check_well_formed(const LieBialgebra& b) {
  const int n = static_cast<int>(b.size());
  if (n == 0) throw InputError("bialgebra has no generators");
  std::set<std::string> seen;
  for (const auto& g : b.generators) {
    if (g.empty()) throw InputError("empty generator name");
    if (!seen.insert(g).second) throw InputError("duplicate generator name '" + g + "'");
  }
  auto in_range = [n](int i) { return i >= 0 && i < n; };
  for (const auto& [ij, f] : b.brackets) {
    if (!in_range(ij.first) || !in_range(ij.second) || ij.first >= ij.second)
      throw InputError("bracket index out of range");
    for (const auto& [k, c] : f)
      if (!in_range(k)) throw InputError("bracket result index out of range");
  }
  for (const auto& [i, w] : b.cocommutators) {
    if (!in_range(i)) throw InputError("cocommutator index out of range");
    for (const auto& [ab, c] : w)
      if (!in_range(ab.first) || !in_range(ab.second) || ab.first >= ab.second)
        throw InputError("cocommutator wedge index out of range");
  }
}

ValidationReport validate(const LieBialgebra& b) {
  check_well_formed(b);
  ValidationReport report;
  const int n = static_cast<int>(b.size());

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        LinearForm sum;
        for (auto [x, y, w] : {std::tuple{i, j, k}, std::tuple{j, k, i}, std::tuple{k, i, j}})
          for (const auto& [m, c] : b.bracket(x, y))
            for (const auto& [r, d] : b.bracket(m, w)) add_to(sum, r, c * d);
        if (!sum.empty())
          report.push_back("jacobi: [[" + pair_text(b, i, j) + "]," + b.generators[static_cast<std::size_t>(k)] +
                           "] + cyclic != 0");
      }

  for (int i = 0; i < n; ++i) {
    Tensor3 sum;
    for (const auto& [ab, c] : delta_pairs(b, i))
      for (const auto& [pq, d] : delta_pairs(b, ab.first)) {
        const int p = pq.first, q = pq.second, r = ab.second;
        add_to(sum, std::tuple{p, q, r}, c * d);
        add_to(sum, std::tuple{r, p, q}, c * d);
        add_to(sum, std::tuple{q, r, p}, c * d);
      }
    if (!sum.empty()) report.push_back("co-jacobi: fails for delta(" + b.generators[static_cast<std::size_t>(i)] + ")");
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Tensor2 lhs;
      for (const auto& [k, c] : b.bracket(i, j))
        for (const auto& [ab, d] : delta_pairs(b, k)) add_to(lhs, ab, c * d);
      for (const auto& [ab, c] : ad_pairs(b, i, delta_pairs(b, j))) add_to(lhs, ab, -c);
      for (const auto& [ab, c] : ad_pairs(b, j, delta_pairs(b, i))) add_to(lhs, ab, c);
      if (!lhs.empty()) report.push_back("cocycle: fails for the pair (" + pair_text(b, i, j) + ")");
    }
  return report;
}

TensorSeries adjoint_action(const LieBialgebra& b, int i, const TensorSeries& t) {
  check_well_formed(b);
  const std::size_t n = b.size();
  if (i < 0 || i >= static_cast<int>(n)) throw InputError("generator index out of range");
  Tensor2 in;
  for (const auto& [k, c] : t.terms()) {
    if (k.z != 0 || k.h != 0 || k.l.size() != n || k.r.size() != n || k.l.degree() != 1 || k.r.degree() != 1)
      throw InputError("adjoint_action expects a z^0 tensor of X_j (x) X_k terms");
    add_to(in, std::pair{k.l.first_index(), k.r.first_index()}, c);
  }
  TensorSeries out(t.truncation());
  for (const auto& [ab, c] : ad_pairs(b, i, in))
    out.add(TensorKey{0, 0, Monomial::generator(n, ab.first), Monomial::generator(n, ab.second)}, c);
  return out;
}

TensorSeries cocommutator_tensor(const LieBialgebra& b, int i, Truncation t) {
  const std::size_t n = b.size();
  TensorSeries out(t);
  for (const auto& [ab, c] : delta_pairs(b, i))
    out.add(TensorKey{0, 0, Monomial::generator(n, ab.first), Monomial::generator(n, ab.second)}, c);
  return out;
}

CommutatorTable classical_table(const LieBialgebra& b, Truncation t) {
  const std::size_t n = b.size();
  CommutatorTable table(n, t);
  for (const auto& [ij, f] : b.brackets)
    for (const auto& [k, c] : f) table.add(ij.first, ij.second, TermKey{0, 0, Monomial::generator(n, k)}, c);
  return table;
}

std::vector<std::vector<long>> weight_grading(const LieBialgebra& b) {
  const int n = static_cast<int>(b.size());
  EchelonSolver s(n);
  auto constrain = [&](int p, int q, int r) {
    std::map<int, Rational> row;
    row[p] += 1;
    row[q] += 1;
    row[r] -= 1;
    s.add_row(row, 0);
  };
  for (const auto& [ij, f] : b.brackets)
    for (const auto& [k, c] : f) constrain(ij.first, ij.second, k);
  for (const auto& [i, w] : b.cocommutators)
    for (const auto& [ab, c] : w) constrain(ab.first, ab.second, i);
  std::vector<std::vector<long>> w(static_cast<std::size_t>(n));
  for (const auto& v : s.kernel_basis()) {
    mpz_class den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (int i = 0; i < n; ++i) {
      const mpz_class scaled = v[static_cast<std::size_t>(i)].get_num() * (den / v[static_cast<std::size_t>(i)].get_den());
      w[static_cast<std::size_t>(i)].push_back(scaled.get_si());
    }
  }
  return w;
}

std::vector<int> generating_set(const LieBialgebra& b) {
  const int n = static_cast<int>(b.size());
  using Vec = std::vector<Rational>;
  auto unit = [n](int i) {
    Vec v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  // Echelon span test by exact elimination against the accepted vectors.
  struct Span {
    std::vector<std::pair<int, Vec>> rows;
    Vec reduce(Vec v) const {
      for (const auto& [p, r] : rows)
        if (v[static_cast<std::size_t>(p)] != 0) {
          const Rational f = v[static_cast<std::size_t>(p)] / r[static_cast<std::size_t>(p)];
          for (std::size_t t = 0; t < v.size(); ++t) v[t] -= f * r[t];
        }
      return v;
    }
    bool insert(const Vec& v) {
      Vec r = reduce(v);
      auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
      if (it == r.end()) return false;
      rows.emplace_back(static_cast<int>(it - r.begin()), std::move(r));
      return true;
    }
    bool contains(const Vec& v) const {
      const Vec r = reduce(v);
      return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
    }
  };
  auto bracket = [&](const Vec& u, const Vec& v) {
    Vec out(static_cast<std::size_t>(n), Rational(0));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        if (u[static_cast<std::size_t>(a)] != 0 && v[static_cast<std::size_t>(c)] != 0)
          for (const auto& [k, x] : b.bracket(a, c))
            out[static_cast<std::size_t>(k)] += u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(c)] * x;
    return out;
  };
  std::vector<int> chosen;
  Span span;
  std::vector<Vec> members;
  for (int i = 0; i < n; ++i) {
    if (span.contains(unit(i))) continue;
    chosen.push_back(i);
    std::vector<Vec> queue{unit(i)};
    while (!queue.empty()) {
      Vec v = std::move(queue.back());
      queue.pop_back();
      if (!span.insert(v)) continue;
      members.push_back(v);
      for (const auto& u : members) queue.push_back(bracket(v, u));
    }
  }
  return chosen;
}

// ---- text format ----

namespace {

struct Token {
  enum Kind { Ident, Number, Symbol, End } kind;
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '\''))
        ++j;
      out.push_back({Token::Ident, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Number, line.substr(i, j - i), col});
      i = j;
    } else if (std::string("+-*/()^[],=:").find(ch) != std::string::npos) {
      out.push_back({Token::Symbol, std::string(1, ch), col});
      ++i;
    } else {
      throw ParseError(line_no, col, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
 public:
  LineParser(const std::string& line, int line_no, const LieBialgebra& b)
      : toks_(tokenize(line, line_no)), line_(line_no), b_(b) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_symbol(const char* s) const { return peek().kind == Token::Symbol && peek().text == s; }
  bool at_end() const { return peek().kind == Token::End; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, peek().column, what); }
  void expect(const char* s) {
    if (!at_symbol(s)) fail(std::string("expected '") + s + "'");
    ++pos_;
  }
  int generator() {
    if (peek().kind != Token::Ident) fail("expected a generator name");
    const auto& t = peek();
    auto it = std::find(b_.generators.begin(), b_.generators.end(), t.text);
    if (it == b_.generators.end()) fail("unknown generator '" + t.text + "'");
    ++pos_;
    return static_cast<int>(it - b_.generators.begin());
  }
  std::string ident() {
    if (peek().kind != Token::Ident) fail("expected a name");
    return toks_[pos_++].text;
  }
  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  // Linear combination of atoms; atom() parses one and returns its key.
  template <class Atom>
  void combination(Atom&& atom) {
    bool first = true;
    if (peek().kind == Token::Number && peek().text == "0" && toks_[pos_ + 1].kind == Token::End) {
      ++pos_;
      return;
    }
    while (true) {
      Rational sign = 1;
      if (at_symbol("+") || at_symbol("-")) {
        if (at_symbol("-")) sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Rational coef = 1;
      if (peek().kind == Token::Number) {
        mpz_class num(peek().text);
        ++pos_;
        mpz_class den = 1;
        if (at_symbol("/")) {
          ++pos_;
          if (peek().kind != Token::Number) fail("expected a denominator");
          den = mpz_class(peek().text);
          if (den == 0) fail("zero denominator");
          ++pos_;
        }
        coef = Rational(num, den);
        coef.canonicalize();
        if (at_symbol("*")) ++pos_;
      }
      atom(Rational(sign * coef));
      first = false;
      if (at_end()) return;
    }
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
  const LieBialgebra& b_;
};

std::string strip_comment(const std::string& line) {
  const auto p = line.find('#');
  return p == std::string::npos ? line : line.substr(0, p);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

LieBialgebra parse_bialgebra(const std::string& text, const std::string& name) {
  LieBialgebra b;
  b.name = name;
  enum { None, Generators, Brackets, Cocommutators } section = None;
  std::set<std::pair<int, int>> seen_brackets;
  std::set<int> seen_deltas;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_generators = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    LineParser p(line, line_no, b);
    if (p.peek().kind == Token::Ident && (p.peek().text == "generators" || p.peek().text == "brackets" ||
                                          p.peek().text == "cocommutators" || p.peek().text == "name")) {
      const std::string head = p.ident();
      if (p.at_symbol(":")) p.expect(":");
      if (head == "name") {
        std::string rest = line.substr(line.find(head) + head.size());
        rest.erase(0, rest.find_first_not_of(" \t:"));
        rest.erase(rest.find_last_not_of(" \t\r") + 1);
        if (rest.empty() || rest.find_first_of(" \t") != std::string::npos) p.fail("expected a single name");
        b.name = rest;
        continue;
      }
      if (head == "generators") {
        if (have_generators) p.fail("duplicate generators section");
        section = Generators;
        have_generators = true;
      } else if (head == "brackets") {
        if (!have_generators) p.fail("brackets before generators");
        section = Brackets;
      } else {
        if (!have_generators) p.fail("cocommutators before generators");
        section = Cocommutators;
      }
      if (p.at_end()) continue;
      if (section != Generators) p.fail("unexpected input after section header");
    }
    switch (section) {
      case None:
        p.fail("expected a section header");
      case Generators:
        while (!p.at_end()) {
          const int col = p.peek().column;
          const std::string g = p.ident();
          if (std::find(b.generators.begin(), b.generators.end(), g) != b.generators.end())
            throw ParseError(line_no, col, "duplicate generator '" + g + "'");
          b.generators.push_back(g);
          if (p.at_symbol(",")) p.expect(",");
        }
        break;
      case Brackets: {
        const int col = p.peek().column;
        p.expect("[");
        const int i = p.generator();
        p.expect(",");
        const int j = p.generator();
        p.expect("]");
        p.expect("=");
        if (i == j) throw ParseError(line_no, col, "bracket of a generator with itself");
        if (!seen_brackets.insert({std::min(i, j), std::max(i, j)}).second)
          throw ParseError(line_no, col, "duplicate bracket");
        LinearForm f;
        p.combination([&](const Rational& c) { add_to(f, p.generator(), c); });
        p.finish();
        b.set_bracket(i, j, std::move(f));
        break;
      }
      case Cocommutators: {
        const int col = p.peek().column;
        const std::string kw = p.ident();
        if (kw != "delta") throw ParseError(line_no, col, "expected 'delta'");
        p.expect("(");
        const int i = p.generator();
        p.expect(")");
        p.expect("=");
        if (!seen_deltas.insert(i).second) throw ParseError(line_no, col, "duplicate cocommutator");
        WedgeForm w;
        p.combination([&](const Rational& c) {
          const bool paren = p.at_symbol("(");
          if (paren) p.expect("(");
          const int wc = p.peek().column;
          const int a = p.generator();
          p.expect("^");
          const int d = p.generator();
          if (paren) p.expect(")");
          if (a == d) throw ParseError(line_no, wc, "wedge of a generator with itself");
          if (a < d)
            add_to(w, std::pair{a, d}, c);
          else
            add_to(w, std::pair{d, a}, -c);
        });
        p.finish();
        b.set_cocommutator(i, std::move(w));
        break;
      }
    }
  }
  if (!have_generators || b.generators.empty()) throw ParseError(line_no, 1, "missing generators section");
  return b;
}

namespace {

void render_coefficient(std::ostream& os, const Rational& c, bool first) {
  Rational a = abs(c);
  if (first)
    os << (c < 0 ? "-" : "");
  else
    os << (c < 0 ? " - " : " + ");
  if (a != 1) os << a.get_str() << "*";
}

}  // namespace

std::string render_bialgebra(const LieBialgebra& b) {
  std::ostringstream os;
  os << "name: " << b.name << "\n";
  os << "generators:";
  for (const auto& g : b.generators) os << " " << g;
  os << "\nbrackets:\n";
  for (const auto& [ij, f] : b.brackets) {
    os << "[" << pair_text(b, ij.first, ij.second) << "] = ";
    bool first = true;
    for (const auto& [k, c] : f) {
      render_coefficient(os, c, first);
      os << b.generators[static_cast<std::size_t>(k)];
      first = false;
    }
    os << "\n";
  }
  os << "cocommutators:\n";
  for (const auto& [i, w] : b.cocommutators) {
    os << "delta(" << b.generators[static_cast<std::size_t>(i)] << ") = ";
    bool first = true;
    for (const auto& [ab, c] : w) {
      render_coefficient(os, c, first);
      os << "(" << b.generators[static_cast<std::size_t>(ab.first)] << "^"
         << b.generators[static_cast<std::size_t>(ab.second)] << ")";
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

LieBialgebra make_su2() {
  LieBialgebra b;
  b.name = "su2";
  b.generators = {"H", "X", "Y"};
  b.set_bracket(0, 1, {{1, 1}});
  b.set_bracket(0, 2, {{2, -1}});
  b.set_bracket(1, 2, {{0, 2}});
  b.set_cocommutator(1, {{{0, 1}, 1}});
  b.set_cocommutator(2, {{{0, 2}, 1}});
  return b;
}

LieBialgebra make_su2_borel() {
  LieBialgebra b;
  b.name = "su2-borel";
  b.generators = {"H", "X"};
  b.set_bracket(0, 1, {{1, 1}});
  b.set_cocommutator(1, {{{0, 1}, 1}});
  return b;
}

LieBialgebra make_u3() {
  LieBialgebra b;
  b.name = "u3";
  b.generators = {"H1", "H2", "H3", "F12", "F23", "F13", "F21", "F32", "F31"};
  auto H = [](int i) { return i - 1; };
  auto F = [&b](int i, int j) { return b.index_of("F" + std::to_string(i) + std::to_string(j)); };
  const std::vector<std::pair<int, int>> roots{{1, 2}, {2, 3}, {1, 3}, {2, 1}, {3, 2}, {3, 1}};
  for (int i = 1; i <= 3; ++i)
    for (auto [j, k] : roots) {
      const int c = (i == j) - (i == k);
      if (c != 0) b.set_bracket(H(i), F(j, k), {{F(j, k), c}});
    }
  // [F_ij, F_kl] = d_jk F_il - d_li F_kj, with F_ii read as H_i.
  for (auto [i, j] : roots)
    for (auto [k, l] : roots) {
      if (F(i, j) >= F(k, l)) continue;
      LinearForm f;
      if (j == k) add_to(f, i == l ? H(i) : F(i, l), 1);
      if (l == i) add_to(f, k == j ? H(k) : F(k, j), -1);
      b.set_bracket(F(i, j), F(k, l), std::move(f));
    }
  const Rational half(1, 2);
  for (auto [i, j] : roots) {
    WedgeForm w;
    auto wedge = [&w](int a, int c, const Rational& q) {
      if (a < c)
        add_to(w, std::pair{a, c}, q);
      else
        add_to(w, std::pair{c, a}, -q);
    };
    if (i < j) {
      wedge(H(i), F(i, j), half);
      wedge(H(j), F(i, j), -half);
      for (int k = i + 1; k < j; ++k) wedge(F(i, k), F(k, j), 1);
    } else {
      wedge(H(j), F(i, j), half);
      wedge(H(i), F(i, j), -half);
      for (int k = j + 1; k < i; ++k) wedge(F(i, k), F(k, j), -1);
    }
    b.set_cocommutator(F(i, j), std::move(w));
  }
  return b;
}

}  // namespace

std::vector<std::string> builtin_bialgebra_names() { return {"su2", "su2-borel", "u3"}; }

bool is_builtin_bialgebra(const std::string& name) {
  const auto names = builtin_bialgebra_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

LieBialgebra builtin_bialgebra(const std::string& name) {
  if (name == "su2") return make_su2();
  if (name == "su2-borel") return make_su2_borel();
  if (name == "u3") return make_u3();
  throw InputError("unknown builtin bialgebra '" + name + "'");
}

LieBialgebra load_bialgebra(const std::string& name_or_path) {
  if (is_builtin_bialgebra(name_or_path)) return builtin_bialgebra(name_or_path);
  std::ifstream f(name_or_path);
  if (!f) throw InputError("cannot open bialgebra file '" + name_or_path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  std::string stem = name_or_path;
  if (auto p = stem.find_last_of('/'); p != std::string::npos) stem = stem.substr(p + 1);
  if (auto p = stem.find('.'); p != std::string::npos) stem = stem.substr(0, p);
  return parse_bialgebra(ss.str(), stem);
}

}  // namespace aq
