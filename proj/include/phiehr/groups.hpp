#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phiehr/numeric.hpp"

namespace phiehr {

class GroupElement;

/// Finitely generated Abelian group in invariant-factor form. A factor of 0
/// denotes an infinite cyclic (free) factor; finite factors are >= 2.
/// Factors equal to 1 are dropped on construction. Descriptors are
/// structural: two groups are the same iff their factor lists match.
class AbelianGroup {
 public:
  AbelianGroup() = default;  // trivial group
  explicit AbelianGroup(IntVec invariant_factors);

  const IntVec& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }

  bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

  IntVec normalize(IntVec coords) const;

  GroupElement identity() const;
  GroupElement element(IntVec coords) const;

 private:
  IntVec factors_;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(AbelianGroup group, IntVec coords);

  const AbelianGroup& group() const { return group_; }
  const IntVec& coords() const { return coords_; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(const Integer& k) const;
  bool is_identity() const;

  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

 private:
  AbelianGroup group_;
  IntVec coords_;
};

/// Homomorphism ZZ^d -> G given by the images of the standard basis vectors.
class LatticeHomomorphism {
 public:
  LatticeHomomorphism() = default;
  LatticeHomomorphism(std::size_t ambient_dim, std::vector<GroupElement> images);

  /// The trivial homomorphism into the trivial group.
  static LatticeHomomorphism trivial(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& images() const { return images_; }

  GroupElement apply(std::span<const Integer> alpha) const;
  GroupElement apply(const IntVec& alpha) const { return apply(std::span<const Integer>(alpha)); }

  /// phi' with phi'(alpha) = phi(alpha)^{-1}.
  LatticeHomomorphism inverted() const;

  bool operator==(const LatticeHomomorphism& o) const;

 private:
  std::size_t dim_ = 0;
  AbelianGroup group_;
  std::vector<GroupElement> images_;
};

/// Direct product with concatenated invariant factors.
AbelianGroup group_product(const AbelianGroup& a, const AbelianGroup& b);

/// Injections into a product built by group_product.
GroupElement inject_first(const AbelianGroup& product, const GroupElement& a, std::size_t b_rank);
GroupElement inject_second(const AbelianGroup& product, const GroupElement& b, std::size_t a_rank);
GroupElement pair_element(const AbelianGroup& product, const GroupElement& a, const GroupElement& b);

}  // namespace phiehr
