#include "phiehr/rings.hpp"

#include <stdexcept>

namespace phiehr {

CoefficientRing CoefficientRing::integers_mod(Integer m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  return CoefficientRing(Kind::integers_mod, std::move(m));
}

Integer CoefficientRing::normalize(Integer x) const {
  if (kind_ == Kind::integers) return x;
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
  return x;
}

GroupRingElement::GroupRingElement(CoefficientRing ring, AbelianGroup group)
    : ring_(std::move(ring)), group_(std::move(group)) {}

GroupRingElement GroupRingElement::one(const CoefficientRing& r, const AbelianGroup& g) {
  return monomial(r, g.identity(), 1);
}

GroupRingElement GroupRingElement::monomial(const CoefficientRing& r, const GroupElement& g,
                                            const Integer& coeff) {
  GroupRingElement e(r, g.group());
  e.add_term(g, coeff);
  return e;
}

Integer GroupRingElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(group_.normalize(g.coords()));
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::require_compatible(const GroupRingElement& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("coefficient ring mismatch");
  if (group_ != o.group_) throw std::invalid_argument("group descriptor mismatch");
}

void GroupRingElement::add_term(const GroupElement& g, const Integer& c) {
  if (g.group() != group_) throw std::invalid_argument("group descriptor mismatch");
  add_term_coords(g.coords(), c);
}

void GroupRingElement::add_term_coords(IntVec coords, const Integer& c) {
  Integer v = ring_.normalize(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(coords), v);
  if (!inserted) {
    it->second = ring_.add(it->second, v);
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  require_compatible(o);
  GroupRingElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add_term_coords(g, c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  require_compatible(o);
  GroupRingElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add_term_coords(g, ring_.neg(c));
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  require_compatible(o);
  GroupRingElement r(ring_, group_);
  for (const auto& [g1, c1] : terms_) {
    for (const auto& [g2, c2] : o.terms_) {
      IntVec g(g1.size());
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = g1[i] + g2[i];
      r.add_term_coords(group_.normalize(std::move(g)), ring_.mul(c1, c2));
    }
  }
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r(ring_, group_);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, ring_.neg(c));
  return r;
}

GroupRingElement GroupRingElement::scaled(const Integer& c) const {
  GroupRingElement r(ring_, group_);
  for (const auto& [g, v] : terms_) r.add_term_coords(g, ring_.mul(v, c));
  return r;
}

GroupRingElement GroupRingElement::translated(const GroupElement& g0) const {
  if (g0.group() != group_) throw std::invalid_argument("group descriptor mismatch");
  GroupRingElement r(ring_, group_);
  for (const auto& [g, c] : terms_) {
    IntVec t(g.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = g[i] + g0.coords()[i];
    r.terms_.emplace(group_.normalize(std::move(t)), c);
  }
  return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return ring_ == o.ring_ && group_ == o.group_ && terms_ == o.terms_;
}

GroupRingElement embed_int(const Integer& n, const CoefficientRing& r, const AbelianGroup& g) {
  return GroupRingElement::monomial(r, g.identity(), n);
}

}  // namespace phiehr
