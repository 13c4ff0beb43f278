#include "phiehr/groups.hpp"

#include <stdexcept>

namespace phiehr {

AbelianGroup::AbelianGroup(IntVec invariant_factors) {
  factors_.reserve(invariant_factors.size());
  for (Integer& d : invariant_factors) {
    if (d < 0) throw std::invalid_argument("invariant factor must be >= 0");
    if (d == 1) continue;  // trivial factor, dropped
    factors_.push_back(std::move(d));
  }
}

IntVec AbelianGroup::normalize(IntVec coords) const {
  if (coords.size() != factors_.size())
    throw std::invalid_argument("coordinate length does not match group rank");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (factors_[i] == 0) continue;  // free factor: unconstrained
    mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), factors_[i].get_mpz_t());
  }
  return coords;
}

GroupElement AbelianGroup::identity() const {
  return GroupElement(*this, IntVec(factors_.size(), 0));
}

GroupElement AbelianGroup::element(IntVec coords) const {
  return GroupElement(*this, std::move(coords));
}

GroupElement::GroupElement(AbelianGroup group, IntVec coords) : group_(std::move(group)) {
  coords_ = group_.normalize(std::move(coords));
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (group_ != o.group_) throw std::invalid_argument("group mismatch");
  IntVec c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::inverse() const {
  IntVec c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::pow(const Integer& k) const {
  IntVec c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * k;
  return GroupElement(group_, std::move(c));
}

bool GroupElement::is_identity() const {
  for (const Integer& c : coords_)
    if (c != 0) return false;
  return true;
}

bool GroupElement::operator==(const GroupElement& o) const {
  return group_ == o.group_ && coords_ == o.coords_;
}

LatticeHomomorphism::LatticeHomomorphism(std::size_t ambient_dim, std::vector<GroupElement> images)
    : dim_(ambient_dim), images_(std::move(images)) {
  if (images_.size() != dim_)
    throw std::invalid_argument("need one image per standard basis vector");
  if (!images_.empty()) {
    group_ = images_.front().group();
    for (const GroupElement& g : images_)
      if (g.group() != group_) throw std::invalid_argument("images must lie in one group");
  }
}

LatticeHomomorphism LatticeHomomorphism::trivial(std::size_t ambient_dim) {
  AbelianGroup g;
  std::vector<GroupElement> images(ambient_dim, g.identity());
  return LatticeHomomorphism(ambient_dim, std::move(images));
}

GroupElement LatticeHomomorphism::apply(std::span<const Integer> alpha) const {
  if (alpha.size() != dim_) throw std::invalid_argument("dimension mismatch");
  IntVec c(group_.rank(), 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    const IntVec& img = images_[i].coords();
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += alpha[i] * img[j];
  }
  return GroupElement(group_, std::move(c));
}

LatticeHomomorphism LatticeHomomorphism::inverted() const {
  std::vector<GroupElement> inv;
  inv.reserve(images_.size());
  for (const GroupElement& g : images_) inv.push_back(g.inverse());
  return LatticeHomomorphism(dim_, std::move(inv));
}

bool LatticeHomomorphism::operator==(const LatticeHomomorphism& o) const {
  if (dim_ != o.dim_ || group_ != o.group_) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!(images_[i] == o.images_[i])) return false;
  return true;
}

AbelianGroup group_product(const AbelianGroup& a, const AbelianGroup& b) {
  IntVec f = a.invariant_factors();
  const IntVec& g = b.invariant_factors();
  f.insert(f.end(), g.begin(), g.end());
  return AbelianGroup(std::move(f));
}

GroupElement inject_first(const AbelianGroup& product, const GroupElement& a, std::size_t b_rank) {
  IntVec c = a.coords();
  c.insert(c.end(), b_rank, Integer(0));
  return product.element(std::move(c));
}

GroupElement inject_second(const AbelianGroup& product, const GroupElement& b, std::size_t a_rank) {
  IntVec c(a_rank, 0);
  const IntVec& bc = b.coords();
  c.insert(c.end(), bc.begin(), bc.end());
  return product.element(std::move(c));
}

GroupElement pair_element(const AbelianGroup& product, const GroupElement& a,
                          const GroupElement& b) {
  IntVec c = a.coords();
  const IntVec& bc = b.coords();
  c.insert(c.end(), bc.begin(), bc.end());
  return product.element(std::move(c));
}

}  // namespace phiehr
