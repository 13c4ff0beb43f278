#pragma once

#include <map>
#include <vector>

#include "phiehr/groups.hpp"
#include "phiehr/numeric.hpp"

namespace phiehr {

/// Coefficient ring R: the integers, or the integers mod m (m >= 2).
/// Integer arithmetic is arbitrary-precision exact; modular arithmetic
/// reduces to canonical representatives 0..m-1.
class CoefficientRing {
 public:
  enum class Kind { integers, integers_mod };

  static CoefficientRing integers() { return CoefficientRing(Kind::integers, 0); }
  static CoefficientRing integers_mod(Integer m);

  Kind kind() const { return kind_; }
  const Integer& modulus() const { return modulus_; }
  bool is_modular() const { return kind_ == Kind::integers_mod; }

  Integer normalize(Integer x) const;
  Integer add(const Integer& a, const Integer& b) const { return normalize(a + b); }
  Integer mul(const Integer& a, const Integer& b) const { return normalize(a * b); }
  Integer neg(const Integer& a) const { return normalize(-a); }

  bool operator==(const CoefficientRing& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const CoefficientRing& o) const { return !(*this == o); }

 private:
  CoefficientRing(Kind k, Integer m) : kind_(k), modulus_(std::move(m)) {}
  Kind kind_;
  Integer modulus_;
};

/// Sparse R-linear combination of group elements. Canonical form: no stored
/// coefficient is zero; term keys are normalized group coordinates, kept in
/// lexicographic order. Values are immutable in spirit: all operations are
/// pure and return fresh elements.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(CoefficientRing ring, AbelianGroup group);

  static GroupRingElement zero(const CoefficientRing& r, const AbelianGroup& g) {
    return GroupRingElement(r, g);
  }
  static GroupRingElement one(const CoefficientRing& r, const AbelianGroup& g);
  static GroupRingElement monomial(const CoefficientRing& r, const GroupElement& g,
                                   const Integer& coeff);

  const CoefficientRing& ring() const { return ring_; }
  const AbelianGroup& group() const { return group_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Coefficient of a group element (zero when absent).
  Integer coefficient(const GroupElement& g) const;
  const std::map<IntVec, Integer>& terms() const { return terms_; }

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator-() const;

  /// Scale by a ring constant.
  GroupRingElement scaled(const Integer& c) const;
  /// Translate by a group element: g0 * x.
  GroupRingElement translated(const GroupElement& g0) const;

  bool operator==(const GroupRingElement& o) const;
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

  /// Adds c * g in place; used by builders, keeps canonical form.
  void add_term(const GroupElement& g, const Integer& c);
  void add_term_coords(IntVec coords, const Integer& c);

 private:
  void require_compatible(const GroupRingElement& o) const;

  CoefficientRing ring_ = CoefficientRing::integers();
  AbelianGroup group_;
  std::map<IntVec, Integer> terms_;
};

/// Image of an integer under the canonical ring map Z -> R, times the
/// identity of G.
GroupRingElement embed_int(const Integer& n, const CoefficientRing& r, const AbelianGroup& g);

}  // namespace phiehr
