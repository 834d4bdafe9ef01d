#pragma once

// Hom-Lie algebras in H̃(M_k). The bracket is stored like a multiplication:
// a d x d² matrix whose column i*d+j holds [e_i, e_j].

#include <cstddef>
#include <vector>

#include "homcas/homalgebra.hpp"
#include "homcas/homspace.hpp"
#include "homcas/kernel.hpp"
#include "homcas/report.hpp"

namespace homcas {

struct HomLieAlgebra {
  HomObject object;
  Matrix bracket;
  std::size_t dim() const noexcept { return object.dim(); }
  const Matrix& alpha() const noexcept { return object.mu(); }
};

void validate(const HomLieAlgebra& l);

/// antisymmetry, alpha_multiplicative, hom_jacobi (elementwise),
/// hom_jacobi_categorical (l²∘(id + b(t³,t³s) + b(t³,t³s²)) = 0 through the
/// coherence engine) and jacobi_forms_agree, which compares the categorical
/// form at α(x)⊗(y⊗z) with the elementwise form at (x, y, z) for every triple.
Report check_hom_lie(const HomLieAlgebra& l);
/// antisymmetry and the ordinary Jacobi identity.
Report check_classical_lie(const Matrix& bracket, std::size_t dim);

/// The values of both Jacobi forms on one basis triple.
struct JacobiValues {
  Vector elementwise;
  Vector categorical;
};
JacobiValues jacobi_values(const HomLieAlgebra& l, std::size_t i, std::size_t j, std::size_t k);

/// Bracket α∘[−,−]. Throws NotInvertible, or NotAutomorphism with the first
/// basis pair where α[x,y] ≠ [αx,αy].
HomLieAlgebra twist_lie(const Matrix& bracket, const Matrix& alpha);
/// [a,b] = ab − ba. Throws ConstructionFailed with the failing axiom's witness.
HomLieAlgebra commutator_hom_lie(const HomAlgebra& a);

namespace catalog {

/// sl₂ with basis e, h, f: [e,f] = h, [h,e] = 2e, [h,f] = −2f.
Matrix sl2_bracket();
/// diag(2, 1, 1/2)
Matrix sl2_scaling();
/// Heisenberg algebra with basis x, y, z: [x,y] = z, z central.
Matrix heisenberg_bracket();
/// diag(2, 1, 2)
Matrix heisenberg_scaling();

}  // namespace catalog

}  // namespace homcas
