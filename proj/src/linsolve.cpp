#include "aq/linsolve.hpp"

#include "aq/errors.hpp"

namespace aq {

EchelonSolver::EchelonSolver(int columns) : columns_(columns) {
  if (columns < 0) throw InputError("negative column count");
}

void EchelonSolver::normalize(Row& r) const {
  for (auto it = r.a.begin(); it != r.a.end();) it = it->second == 0 ? r.a.erase(it) : std::next(it);
  mpz_class g = abs(r.rhs);
  for (const auto& [c, v] : r.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1) {
    for (auto& [c, v] : r.a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r.rhs.get_mpz_t(), r.rhs.get_mpz_t(), g.get_mpz_t());
  }
  if (!r.a.empty() && r.a.begin()->second < 0) {
    for (auto& [c, v] : r.a) v = -v;
    r.rhs = -r.rhs;
  }
}

void EchelonSolver::eliminate(Row& target, int column, const Row& pivot) const {
  auto it = target.a.find(column);
  if (it == target.a.end()) return;
  const mpz_class f = it->second;
  const mpz_class p = pivot.a.begin()->second;
  for (auto& [c, v] : target.a) v *= p;
  target.rhs *= p;
  for (const auto& [c, v] : pivot.a) target.a[c] -= f * v;
  target.rhs -= f * pivot.rhs;
  normalize(target);
}

bool EchelonSolver::add_row(const std::map<int, Rational>& coefficients, const Rational& rhs) {
  if (!consistent_) return false;
  mpz_class den = rhs.get_den();
  for (const auto& [c, v] : coefficients) {
    if (c < 0 || c >= columns_) throw InputError("column index out of range");
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  Row r;
  for (const auto& [c, v] : coefficients)
    if (v != 0) r.a.emplace(c, v.get_num() * (den / v.get_den()));
  r.rhs = rhs.get_num() * (den / rhs.get_den());
  normalize(r);

  // Pivot rows are fully reduced, so eliminating one column never
  // reintroduces another pivot column.
  std::vector<int> hits;
  for (const auto& [c, v] : r.a)
    if (rows_.count(c)) hits.push_back(c);
  for (int c : hits) eliminate(r, c, rows_.at(c));

  if (r.a.empty()) {
    if (r.rhs != 0) consistent_ = false;
    return consistent_;
  }
  const int p = r.a.begin()->first;
  for (auto& [c, row] : rows_) eliminate(row, p, r);
  rows_.emplace(p, std::move(r));
  return true;
}

std::vector<Rational> EchelonSolver::particular_solution() const {
  if (!consistent_) throw InputError("inconsistent linear system has no solution");
  std::vector<Rational> x(static_cast<std::size_t>(columns_), Rational(0));
  for (const auto& [p, r] : rows_) {
    Rational v(r.rhs, r.a.begin()->second);
    v.canonicalize();
    x[static_cast<std::size_t>(p)] = v;
  }
  return x;
}

std::vector<std::vector<Rational>> EchelonSolver::kernel_basis() const {
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < columns_; ++f) {
    if (rows_.count(f)) continue;
    std::vector<Rational> v(static_cast<std::size_t>(columns_), Rational(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (const auto& [p, r] : rows_) {
      auto it = r.a.find(f);
      if (it == r.a.end()) continue;
      Rational q(-it->second, r.a.begin()->second);
      q.canonicalize();
      v[static_cast<std::size_t>(p)] = q;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> EchelonSolver::min_norm_solution() const {
  std::vector<Rational> x = particular_solution();
  const auto k = kernel_basis();
  if (k.empty()) return x;
  const std::size_t d = k.size();
  std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d, Rational(0)));
  std::vector<Rational> b(d, Rational(0));
  auto dot = [](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != 0 && v[i] != 0) s += u[i] * v[i];
    return s;
  };
  for (std::size_t i = 0; i < d; ++i) {
    b[i] = dot(k[i], x);
    for (std::size_t j = i; j < d; ++j) g[i][j] = g[j][i] = dot(k[i], k[j]);
  }
  const auto c = solve_dense(std::move(g), std::move(b));
  for (std::size_t i = 0; i < d; ++i)
    if (c[i] != 0)
      for (std::size_t t = 0; t < x.size(); ++t)
        if (k[i][t] != 0) x[t] -= c[i] * k[i][t];
  return x;
}

std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  if (a.size() != n) throw InputError("dense system shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InputError("singular dense system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace aq
