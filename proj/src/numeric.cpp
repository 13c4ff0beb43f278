#include "phiehr/numeric.hpp"

namespace phiehr {

IntVec primitive_direction(const RatVec& dir) {
  Integer den = 1;
  for (const Rational& x : dir) {
    Integer d = x.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  IntVec v;
  v.reserve(dir.size());
  Integer g = 0;
  for (const Rational& x : dir) {
    Integer e = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    v.push_back(std::move(e));
  }
  if (g == 0) throw std::invalid_argument("zero direction has no primitive representative");
  for (Integer& e : v) e /= g;
  return v;
}

int lex_compare(const IntVec& a, const IntVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

std::optional<RatVec> solve_linear(const std::vector<RatVec>& rows, const RatVec& rhs) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("solve_linear: shape mismatch");
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  // Augmented Gaussian elimination, fully exact.
  std::vector<RatVec> a(m, RatVec(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("solve_linear: ragged matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
    a[i][n] = rhs[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    Rational inv = a[row][col];
    for (std::size_t j = col; j <= n; ++j) a[row][j] /= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (a[i][n] != 0) return std::nullopt;  // inconsistent
  if (pivot_col.size() < n)
    throw std::invalid_argument("solve_linear: matrix does not have full column rank");
  RatVec x(n);
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = a[k][n];
  return x;
}

std::size_t rational_rank(std::vector<RatVec> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && rows[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[row][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[row][j];
    }
    ++row;
  }
  return row;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace phiehr
