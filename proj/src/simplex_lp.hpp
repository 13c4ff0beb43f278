#pragma once

#include <cstddef>
#include <vector>

#include "phiehr/numeric.hpp"

namespace phiehr::detail {

// Exact rational simplex method (Bland's rule, two phases) for small dense
// problems:  min c.x  s.t.  A x = b, x >= 0.
//
// Kept private to the geometry module; the oracle module has its own,
// independent Fourier-Motzkin feasibility machinery.

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status;
  Rational objective;
  std::vector<Rational> x;
};

inline LpResult solve_lp(std::vector<RatVec> a, RatVec b, RatVec c) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? c.size() : a[0].size();
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }

  // Tableau with artificial variables n..n+m-1 forming the initial basis.
  const std::size_t total = n + m;
  std::vector<RatVec> t(m, RatVec(total + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][total] = b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  auto pivot = [&](std::size_t row, std::size_t col) {
    Rational p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rational f = t[i][col];
      for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  };

  auto run_phase = [&](const RatVec& cost, std::size_t ncols) -> bool {
    for (;;) {
      // reduced costs z_j = cost_j - cost_B . column_j; Bland: smallest j with z_j < 0
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j) {
        Rational z = cost[j];
        for (std::size_t i = 0; i < m; ++i)
          if (cost[basis[i]] != 0) z -= cost[basis[i]] * t[i][j];
        if (z < 0) {
          enter = j;
          break;
        }
      }
      if (enter == ncols) return true;  // optimal
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][total] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
  };

  // Phase 1: minimize the sum of artificials.
  RatVec cost1(total, Rational(0));
  for (std::size_t j = n; j < total; ++j) cost1[j] = 1;
  run_phase(cost1, total);
  Rational phase1 = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) phase1 += t[i][total];
  if (phase1 != 0) return LpResult{LpStatus::infeasible, {}, {}};
  // Drive remaining artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    std::size_t j = 0;
    while (j < n && t[i][j] == 0) ++j;
    if (j < n) pivot(i, j);
    // else: redundant row, harmless to leave (its rhs is 0)
  }

  RatVec cost2(total, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost2[j] = c[j];
  if (!run_phase(cost2, n)) return LpResult{LpStatus::unbounded, {}, {}};

  LpResult res{LpStatus::optimal, Rational(0), std::vector<Rational>(n, Rational(0))};
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = t[i][total];
  for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

}  // namespace phiehr::detail
