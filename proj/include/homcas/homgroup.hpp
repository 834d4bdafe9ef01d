#pragma once

// Finite groups given by Cayley tables, their automorphisms, Hom-groups
// (g·h = φ(gh), δ(g) = (φ⁻¹g, φ⁻¹g), S(g) = g⁻¹) and their linearizations.

#include <cstddef>
#include <string>
#include <vector>

#include "homcas/homalgebra.hpp"
#include "homcas/report.hpp"

namespace homcas {

class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses; throws InputError.
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> cayley, std::string name = {});

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t g, std::size_t h) const { return table_.at(g).at(h); }
  std::size_t inverse(std::size_t g) const { return inverse_.at(g); }
  const std::vector<std::vector<std::size_t>>& cayley() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::string name_;
};

/// C_n with element i = g^i.
FiniteGroup cyclic_group(std::size_t n);
/// D_n of order 2n: element r^i s^j at index i + n*j.
FiniteGroup dihedral_group(std::size_t n);
/// Q_8: ±1, ±i, ±j, ±k at indices 0..7 in that order.
FiniteGroup quaternion_group();
FiniteGroup symmetric_group_3();
/// G × H with (g, h) at index g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// One representative of every isomorphism class of order at most max_order (≤ 8).
std::vector<FiniteGroup> group_catalog(std::size_t max_order);

/// A bijection of element indices preserving the product.
struct GroupAutomorphism {
  std::vector<std::size_t> image;
  friend bool operator==(const GroupAutomorphism& a, const GroupAutomorphism& b) = default;
};
bool is_automorphism(const FiniteGroup& g, const std::vector<std::size_t>& image);
/// g ↦ g^k on a group built by cyclic_group. Throws NotAutomorphism when gcd(k, n) ≠ 1.
GroupAutomorphism automorphism_from_exponent(const FiniteGroup& cyclic, long k);
/// Every automorphism, found by exhaustive search; identity first.
std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g);

class HomGroup {
 public:
  /// Throws NotAutomorphism if phi does not preserve the product.
  HomGroup(FiniteGroup group, GroupAutomorphism phi);

  const FiniteGroup& group() const noexcept { return group_; }
  const GroupAutomorphism& phi() const noexcept { return phi_; }
  std::size_t phi_inverse(std::size_t g) const { return phi_inv_.at(g); }

  /// g·h = φ(gh)
  std::size_t product(std::size_t g, std::size_t h) const;
  std::size_t unit() const noexcept { return group_.identity(); }
  /// δ(g) = (φ⁻¹(g), φ⁻¹(g))
  std::pair<std::size_t, std::size_t> comultiply(std::size_t g) const;
  std::size_t antipode(std::size_t g) const { return group_.inverse(g); }

  /// Hom-monoid, comonoid and antipode laws checked on elements.
  Report verify() const;

 private:
  FiniteGroup group_;
  GroupAutomorphism phi_;
  std::vector<std::size_t> phi_inv_;
};

/// The Hom-group algebra: basis G, α = permutation matrix of φ.
HomHopfAlgebra linearize(const HomGroup& h);

}  // namespace homcas
