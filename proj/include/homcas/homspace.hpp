#pragma once

// The symmetric monoidal category of finite-dimensional rational vector
// spaces equipped with an automorphism, with the twisted associativity and
// unit constraints.
//
// Flattening convention: (M⊗N)⊗P and M⊗(N⊗P) share one lexicographic index
// space, so the untwisted associator is the identity and the twisted one is
// the Kronecker product mu ⊗ id ⊗ pi^{-1}.

#include <cstddef>
#include <vector>

#include "homcas/kernel.hpp"
#include "homcas/report.hpp"

namespace homcas {

/// An object (M, mu): Q^dim with an invertible endomorphism.
class HomObject {
 public:
  /// Throws NotInvertible when mu is singular, InputError when not square.
  explicit HomObject(Matrix mu);
  HomObject() : HomObject(Matrix::identity(1)) {}

  static HomObject unit() { return HomObject(Matrix::identity(1)); }
  static HomObject trivial(std::size_t dim) { return HomObject(Matrix::identity(dim)); }

  std::size_t dim() const noexcept { return mu_.rows(); }
  const Matrix& mu() const noexcept { return mu_; }
  const Matrix& mu_inv() const noexcept { return mu_inv_; }
  /// mu^k for any integer k.
  Matrix mu_power(int k) const;

  friend bool operator==(const HomObject& a, const HomObject& b) { return a.mu_ == b.mu_; }

 private:
  Matrix mu_;
  Matrix mu_inv_;
};

/// A linear map f with nu ∘ f = f ∘ mu.
class HomMorphism {
 public:
  /// Throws NotAMorphism if the map does not intertwine the automorphisms.
  HomMorphism(HomObject source, HomObject target, Matrix map);

  static HomMorphism identity(const HomObject& m);
  /// Whether `map` intertwines the two automorphisms.
  static bool intertwines(const HomObject& source, const HomObject& target, const Matrix& map);

  const HomObject& source() const noexcept { return source_; }
  const HomObject& target() const noexcept { return target_; }
  const Matrix& map() const noexcept { return map_; }

 private:
  HomObject source_;
  HomObject target_;
  Matrix map_;
};

HomObject tensor(const HomObject& m, const HomObject& n);
HomMorphism tensor(const HomMorphism& f, const HomMorphism& g);
/// g ∘ f
HomMorphism compose(const HomMorphism& g, const HomMorphism& f);

/// ã_{M,N,P}: (M⊗N)⊗P -> M⊗(N⊗P), (m⊗n)⊗p ↦ mu(m)⊗(n⊗pi^{-1}(p)).
HomMorphism associator(const HomObject& m, const HomObject& n, const HomObject& p);
HomMorphism associator_inverse(const HomObject& m, const HomObject& n, const HomObject& p);

struct UnitConstraints {
  HomMorphism left;   // I⊗M -> M, x⊗m ↦ x mu(m)
  HomMorphism right;  // M⊗I -> M, m⊗x ↦ x mu(m)
};
UnitConstraints unit_constraints(const HomObject& m);

/// c_{M,N}: m⊗n ↦ n⊗m.
HomMorphism braiding(const HomObject& m, const HomObject& n);

struct LeftDual {
  HomObject dual;          // (M*, (mu*)^{-1}), mu* = mu^T
  HomMorphism evaluation;  // d̃ = d ∘ (mu*⊗mu): M*⊗M -> I
  HomMorphism coevaluation;  // b̃ = (mu⊗mu*)^{-1} ∘ b: I -> M⊗M*
};
LeftDual left_dual(const HomObject& m);

/// Composes both sides of the triangle, pentagon, hexagon and zigzag axioms
/// as matrices and compares them exactly. The pentagon takes four objects and
/// the hexagons three; shorter lists are reused cyclically. A failure names
/// the first basis column where the two sides disagree.
Report verify_constraints(const std::vector<HomObject>& objects);

/// Naturality of ã against morphisms f, g, h.
Report verify_associator_naturality(const HomMorphism& f, const HomMorphism& g,
                                    const HomMorphism& h);

}  // namespace homcas
