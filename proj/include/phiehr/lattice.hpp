#pragma once

#include <optional>
#include <vector>

#include "phiehr/numeric.hpp"

namespace phiehr {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}

  static IntegerMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static IntegerMatrix from_columns(const std::vector<IntVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec column(std::size_t j) const;
  IntVec row(std::size_t i) const;

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  bool operator==(const IntegerMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntegerMatrix& m);

std::size_t integer_rank(const IntegerMatrix& m);

/// U = left * diag * right with left, right unimodular and diag diagonal
/// with d_1 | d_2 | ... (nonnegative diagonal, zeros trailing).
struct SmithDecomposition {
  IntegerMatrix left, diag, right;
};

SmithDecomposition snf(const IntegerMatrix& u);

/// Unique rational solution of U*x = rhs when rhs lies in the column span
/// of U (U of full column rank); nullopt otherwise.
std::optional<RatVec> solve_rational(const IntegerMatrix& u, const RatVec& rhs);
std::optional<RatVec> solve_rational(const IntegerMatrix& u, const IntVec& rhs);

/// Half-open box spanned by linearly independent integer generators
/// (columns). open_flags[i] true means coordinate i ranges over (0,1],
/// false means [0,1).
struct HalfOpenParallelepiped {
  IntegerMatrix generators;  // N x D, D <= N, columns independent
  std::vector<bool> open_flags;
};

struct ParallelepipedPoint {
  IntVec point;    // in ZZ^N
  RatVec lambda;   // point = shift + sum lambda_i * u_i
};

/// All lattice points of shift + Pi, each with its generator coordinates.
/// Output sorted lexicographically by point. The rank-deficient case is
/// reduced to the full-rank one inside the saturation lattice; a non-integer
/// shift is only supported at full rank.
std::vector<ParallelepipedPoint> parallelepiped_points(const HalfOpenParallelepiped& pi,
                                                       const RatVec& shift);
std::vector<ParallelepipedPoint> parallelepiped_points(const HalfOpenParallelepiped& pi);

/// Basis of span(U) cap ZZ^N as columns (N x rank).
IntegerMatrix saturation_basis(const IntegerMatrix& u);

/// |det| of the generators expressed in the saturation lattice basis; equals
/// the number of parallelepiped points for every flag pattern.
Integer lattice_index(const IntegerMatrix& u);

}  // namespace phiehr
