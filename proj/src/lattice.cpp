#include "phiehr/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace phiehr {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<IntVec>& cols) {
  if (cols.empty()) return IntegerMatrix(0, 0);
  IntegerMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("ragged column set");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntegerMatrix::column(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntVec IntegerMatrix::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntegerMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::size_t integer_rank(const IntegerMatrix& m) {
  std::vector<RatVec> rows(m.rows(), RatVec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = Rational(m.at(i, j));
  return rational_rank(std::move(rows));
}

namespace {

// Elementary operations on the working copy A, with the inverse operation
// accumulated so that U = L * A * R stays invariant throughout.
struct SnfState {
  IntegerMatrix a, l, r;

  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < l.rows(); ++c) std::swap(l.at(c, i), l.at(c, j));
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.rows(); ++c) std::swap(a.at(c, i), a.at(c, j));
    for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(i, c), r.at(j, c));
  }
  // row_i += q * row_k  (so L's column k absorbs -q times... inverse: col_k of L += q * col_i)
  void row_add(std::size_t i, std::size_t k, const Integer& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) += q * a.at(k, c);
    for (std::size_t c = 0; c < l.rows(); ++c) l.at(c, k) -= q * l.at(c, i);
  }
  // col_j += q * col_k
  void col_add(std::size_t j, std::size_t k, const Integer& q) {
    for (std::size_t c = 0; c < a.rows(); ++c) a.at(c, j) += q * a.at(c, k);
    for (std::size_t c = 0; c < r.cols(); ++c) r.at(k, c) -= q * r.at(j, c);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < l.rows(); ++c) l.at(c, i) = -l.at(c, i);
  }
};

}  // namespace

SmithDecomposition snf(const IntegerMatrix& u) {
  const std::size_t m = u.rows(), n = u.cols();
  SnfState s{u, IntegerMatrix::identity(m), IntegerMatrix::identity(n)};
  const std::size_t kmax = std::min(m, n);
  for (std::size_t k = 0; k < kmax; ++k) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix becomes the pivot
      std::size_t pi = m, pj = n;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (s.a.at(i, j) == 0) continue;
          if (pi == m || cmp(abs(s.a.at(i, j)), abs(s.a.at(pi, pj))) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) goto done;  // trailing submatrix is zero
      if (pi != k) s.row_swap(k, pi);
      if (pj != k) s.col_swap(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (s.a.at(i, k) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.a.at(i, k).get_mpz_t(), s.a.at(k, k).get_mpz_t());
        if (q != 0) s.row_add(i, k, -q);
        if (s.a.at(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (s.a.at(k, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.a.at(k, j).get_mpz_t(), s.a.at(k, k).get_mpz_t());
        if (q != 0) s.col_add(j, k, -q);
        if (s.a.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // force divisibility of the trailing block by the pivot
      bool divisible = true;
      for (std::size_t i = k + 1; i < m && divisible; ++i)
        for (std::size_t j = k + 1; j < n && divisible; ++j)
          if (!mpz_divisible_p(s.a.at(i, j).get_mpz_t(), s.a.at(k, k).get_mpz_t())) {
            s.row_add(k, i, 1);
            divisible = false;
          }
      if (divisible) break;
    }
    if (s.a.at(k, k) < 0) s.row_negate(k);
  }
done:
  return SmithDecomposition{std::move(s.l), std::move(s.a), std::move(s.r)};
}

std::optional<RatVec> solve_rational(const IntegerMatrix& u, const RatVec& rhs) {
  if (rhs.size() != u.rows()) throw std::invalid_argument("rhs length mismatch");
  std::vector<RatVec> rows(u.rows(), RatVec(u.cols()));
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) rows[i][j] = Rational(u.at(i, j));
  return solve_linear(rows, rhs);
}

std::optional<RatVec> solve_rational(const IntegerMatrix& u, const IntVec& rhs) {
  return solve_rational(u, to_rational(rhs));
}

namespace {

std::size_t snf_rank(const SmithDecomposition& d) {
  std::size_t r = 0;
  const std::size_t k = std::min(d.diag.rows(), d.diag.cols());
  while (r < k && d.diag.at(r, r) != 0) ++r;
  return r;
}

// Full-rank core: lattice points of shift + Pi for a square generator
// matrix, via coset representatives of ZZ^N / U ZZ^N read off the SNF.
std::vector<ParallelepipedPoint> full_rank_points(const IntegerMatrix& u,
                                                  const std::vector<bool>& open_flags,
                                                  const RatVec& shift) {
  const std::size_t n = u.rows();
  SmithDecomposition d = snf(u);
  if (snf_rank(d) != n) throw std::invalid_argument("dependent generators");

  std::vector<ParallelepipedPoint> out;
  IntVec y(n, 0);
  for (;;) {
    // x = L * y is a coset representative
    IntVec x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x[i] += d.left.at(i, j) * y[j];

    RatVec delta(n);
    for (std::size_t i = 0; i < n; ++i) delta[i] = Rational(x[i]) - shift[i];
    RatVec lambda = *solve_rational(u, delta);
    // normalize each coordinate into its half-open range by an integer shift
    IntVec k(n);
    for (std::size_t i = 0; i < n; ++i)
      k[i] = open_flags[i] ? ceil_of(lambda[i]) - 1 : floor_of(lambda[i]);
    ParallelepipedPoint p;
    p.point = std::move(x);
    p.lambda.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      p.lambda[i] = lambda[i] - Rational(k[i]);
      for (std::size_t row = 0; row < n; ++row) p.point[row] -= k[i] * u.at(row, i);
    }
    out.push_back(std::move(p));

    // next multi-index over prod [0, d_i)
    std::size_t i = 0;
    for (; i < n; ++i) {
      y[i] += 1;
      if (y[i] < d.diag.at(i, i)) break;
      y[i] = 0;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [](const ParallelepipedPoint& a, const ParallelepipedPoint& b) {
    return lex_compare(a.point, b.point) < 0;
  });
  return out;
}

}  // namespace

IntegerMatrix saturation_basis(const IntegerMatrix& u) {
  SmithDecomposition d = snf(u);
  const std::size_t rank = snf_rank(d);
  IntegerMatrix b(u.rows(), rank);
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < rank; ++j) b.at(i, j) = d.left.at(i, j);
  return b;
}

Integer lattice_index(const IntegerMatrix& u) {
  SmithDecomposition d = snf(u);
  Integer idx = 1;
  const std::size_t k = std::min(d.diag.rows(), d.diag.cols());
  for (std::size_t i = 0; i < k; ++i)
    if (d.diag.at(i, i) != 0) idx *= d.diag.at(i, i);
  return idx;
}

std::vector<ParallelepipedPoint> parallelepiped_points(const HalfOpenParallelepiped& pi,
                                                       const RatVec& shift) {
  const IntegerMatrix& u = pi.generators;
  const std::size_t n = u.rows(), dgen = u.cols();
  if (pi.open_flags.size() != dgen) throw std::invalid_argument("one flag per generator required");
  if (shift.size() != n) throw std::invalid_argument("shift dimension mismatch");
  if (integer_rank(u) != dgen) throw std::invalid_argument("dependent generators");
  if (dgen == 0) {
    // the single point `shift`, when integral
    std::vector<ParallelepipedPoint> out;
    bool integral = true;
    for (const Rational& s : shift) integral = integral && is_integral(s);
    if (integral) out.push_back(ParallelepipedPoint{to_integral(shift), {}});
    return out;
  }
  if (dgen == n) return full_rank_points(u, pi.open_flags, shift);

  // Rank-deficient: work in the saturation lattice span(U) cap ZZ^N. Its
  // basis B consists of columns of a unimodular matrix, so B ZZ^D is exactly
  // the set of lattice points in the span, and integral shifts stay lattice.
  for (const Rational& s : shift)
    if (!is_integral(s))
      throw std::invalid_argument("non-integer shift requires full-rank generators");
  SmithDecomposition d = snf(u);
  const std::size_t rank = snf_rank(d);
  if (rank != dgen) throw std::invalid_argument("dependent generators");
  IntegerMatrix b(n, rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rank; ++j) b.at(i, j) = d.left.at(i, j);
  // generators expressed in basis B: U = B * (diag * R)
  IntegerMatrix reduced(rank, dgen);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < dgen; ++j) reduced.at(i, j) = d.diag.at(i, i) * d.right.at(i, j);

  // shift expressed in B-coordinates; if it leaves the span there are no points
  auto shift_b = solve_rational(b, shift);
  if (!shift_b) return {};
  HalfOpenParallelepiped inner{reduced, pi.open_flags};
  std::vector<ParallelepipedPoint> pts = parallelepiped_points(inner, *shift_b);
  std::vector<ParallelepipedPoint> out;
  out.reserve(pts.size());
  for (ParallelepipedPoint& p : pts) {
    IntVec x(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < rank; ++j) x[i] += b.at(i, j) * p.point[j];
    out.push_back(ParallelepipedPoint{std::move(x), std::move(p.lambda)});
  }
  std::sort(out.begin(), out.end(), [](const ParallelepipedPoint& a, const ParallelepipedPoint& b2) {
    return lex_compare(a.point, b2.point) < 0;
  });
  return out;
}

std::vector<ParallelepipedPoint> parallelepiped_points(const HalfOpenParallelepiped& pi) {
  return parallelepiped_points(pi, RatVec(pi.generators.rows(), Rational(0)));
}

}  // namespace phiehr
