#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace phiehr {

// Exact arithmetic throughout; no floating point anywhere in the library.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline RatVec to_rational(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const Integer& x : v) r.emplace_back(x);
  return r;
}

/// Exact integer vector from a rational one; throws if any entry has a
/// denominator other than 1.
inline IntVec to_integral(const RatVec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const Rational& x : v) {
    if (!is_integral(x)) throw std::invalid_argument("expected integral vector");
    r.push_back(x.get_num());
  }
  return r;
}

/// Scales a rational direction to its primitive integer representative
/// (common denominator cleared, gcd divided out, orientation preserved).
IntVec primitive_direction(const RatVec& dir);

int lex_compare(const IntVec& a, const IntVec& b);

/// Unique solution of M x = rhs over the rationals, or nullopt when the
/// system is inconsistent. M need not be square but must have full column
/// rank whenever the system is consistent.
std::optional<RatVec> solve_linear(const std::vector<RatVec>& rows, const RatVec& rhs);

/// Rank of a rational matrix given as rows.
std::size_t rational_rank(std::vector<RatVec> rows);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

}  // namespace phiehr
