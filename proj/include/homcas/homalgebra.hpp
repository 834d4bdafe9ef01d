#pragma once

// Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras in the
// category of rational vector spaces with automorphism, stored as structure
// matrices: mult is d x d² (column i*d+j holds e_i e_j), comult is d² x d,
// counit and unit are vectors of length d.

#include <cstddef>
#include <string>
#include <vector>

#include "homcas/homspace.hpp"
#include "homcas/kernel.hpp"
#include "homcas/report.hpp"

namespace homcas {

struct ClassicalAlgebra {
  Matrix mult;
  Vector unit;
  std::size_t dim() const noexcept { return unit.size(); }
};

struct ClassicalCoalgebra {
  Matrix comult;
  Vector counit;
  std::size_t dim() const noexcept { return counit.size(); }
};

struct ClassicalBialgebra {
  ClassicalAlgebra algebra;
  ClassicalCoalgebra coalgebra;
  std::size_t dim() const noexcept { return algebra.dim(); }
};

struct HomAlgebra {
  HomObject object;
  Matrix mult;
  Vector unit;
  std::size_t dim() const noexcept { return object.dim(); }
  const Matrix& alpha() const noexcept { return object.mu(); }
};

struct HomCoalgebra {
  HomObject object;
  Matrix comult;
  Vector counit;
  std::size_t dim() const noexcept { return object.dim(); }
  const Matrix& gamma() const noexcept { return object.mu(); }
};

/// Algebra and coalgebra share one object.
struct HomBialgebra {
  HomAlgebra algebra;
  HomCoalgebra coalgebra;
  std::size_t dim() const noexcept { return algebra.dim(); }
  const HomObject& object() const noexcept { return algebra.object; }
  const Matrix& alpha() const noexcept { return algebra.alpha(); }
};

struct HomHopfAlgebra {
  HomBialgebra bialgebra;
  Matrix antipode;
  std::size_t dim() const noexcept { return bialgebra.dim(); }
  const HomObject& object() const noexcept { return bialgebra.object(); }
  const Matrix& alpha() const noexcept { return bialgebra.alpha(); }
  const HomAlgebra& algebra() const noexcept { return bialgebra.algebra; }
  const HomCoalgebra& coalgebra() const noexcept { return bialgebra.coalgebra; }
};

/// Shape validation; throws InputError.
void validate(const ClassicalAlgebra& a);
void validate(const ClassicalCoalgebra& c);
void validate(const ClassicalBialgebra& b);
void validate(const HomAlgebra& a);
void validate(const HomCoalgebra& c);
void validate(const HomBialgebra& b);
void validate(const HomHopfAlgebra& h);

/// Product of two elements through a d x d² structure matrix.
Vector multiply(const Matrix& mult, const Vector& a, const Vector& b);
/// The flip m⊗n ↦ n⊗m on Q^p ⊗ Q^q as a permutation matrix.
Matrix flip_matrix(std::size_t p, std::size_t q);
/// Product on A⊗B: (a⊗b)(a'⊗b') = aa'⊗bb'. Built from ã and c this
/// interchange carries no twist, which the coherence tests confirm.
Matrix tensor_product_mult(const Matrix& mult_a, std::size_t dim_a, const Matrix& mult_b, std::size_t dim_b);

Report check_classical_algebra(const ClassicalAlgebra& a);
Report check_classical_coalgebra(const ClassicalCoalgebra& c);
/// Algebra and coalgebra axioms plus Δ and ε multiplicative and unital.
Report check_classical_bialgebra(const ClassicalBialgebra& b);

/// alpha_multiplicative, alpha_unit, hom_associativity, hom_unitality.
Report check_hom_algebra(const HomAlgebra& a);
/// gamma_comultiplicative, counit_invariant, hom_coassociativity, counit_law.
Report check_hom_coalgebra(const HomCoalgebra& c);
/// Both of the above plus comult_multiplicative, comult_unit,
/// counit_multiplicative, counit_unit.
Report check_hom_bialgebra(const HomBialgebra& b);
/// Bialgebra axioms plus antipode_morphism (Sα = αS), antipode_left (S∗id)
/// and antipode_right (id∗S).
Report check_hom_hopf(const HomHopfAlgebra& h);
/// antipode_antimultiplicative, antipode_unit, antipode_anticomultiplicative,
/// counit_antipode, over all basis pairs.
Report check_antipode_properties(const HomHopfAlgebra& h);

/// Passes when alpha preserves the product and the unit; witnesses are basis pairs.
Report check_algebra_map(const Matrix& alpha, const Matrix& mult_src, const Vector& unit_src,
                         const Matrix& mult_dst, const Vector& unit_dst);
/// Passes when gamma preserves comultiplication and counit.
Report check_coalgebra_map(const Matrix& gamma, const Matrix& comult_src, const Vector& counit_src,
                           const Matrix& comult_dst, const Vector& counit_dst);

/// m̃ = α∘m with the same unit. Throws NotInvertible or NotAutomorphism.
HomAlgebra twist_algebra(const ClassicalAlgebra& a, const Matrix& alpha);
/// m = α⁻¹∘m̃. Throws ConstructionFailed if the result is not associative and unital.
ClassicalAlgebra untwist_algebra(const HomAlgebra& a);
/// Δ̃ = Δ∘γ⁻¹, cross-checked against (γ⁻¹⊗γ⁻¹)∘Δ.
HomCoalgebra twist_coalgebra(const ClassicalCoalgebra& c, const Matrix& gamma);
ClassicalCoalgebra untwist_coalgebra(const HomCoalgebra& c);
HomBialgebra twist_bialgebra(const ClassicalBialgebra& b, const Matrix& alpha);
ClassicalBialgebra untwist_bialgebra(const HomBialgebra& b);
/// The antipode carries over unchanged.
HomHopfAlgebra twist_hopf(const ClassicalBialgebra& b, const Matrix& antipode, const Matrix& alpha);
/// The bialgebra with α = id.
HomBialgebra as_hom(const ClassicalBialgebra& b);

/// f∗g = m∘(f⊗g)∘Δ for f, g: Q^c -> Q^a.
Matrix convolution(const Matrix& f, const Matrix& g, const Matrix& comult, const Matrix& mult);
Matrix convolution(const Matrix& f, const Matrix& g, const HomCoalgebra& c, const HomAlgebra& a);
/// η∘ε as an a x c matrix.
Matrix unit_counit(const Vector& unit, const Vector& counit);

/// Row-major vectorization of a matrix (index r*cols + c) and its inverse.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols);

/// Hom(C, A) with automorphism f ↦ α∘f∘γ⁻¹, convolution product, unit η∘ε.
HomAlgebra convolution_hom_algebra(const HomCoalgebra& c, const HomAlgebra& a);
/// Hom^H(C, A): maps f with α∘f = f∘γ, as a subspace of the vectorized space.
Subspace strict_morphisms(const HomCoalgebra& c, const HomAlgebra& a);
/// Strict associativity and two-sided unit η∘ε on a basis of Hom^H(C, A).
Report check_strict_convolution(const HomCoalgebra& c, const HomAlgebra& a);

struct AntipodeResult {
  enum class Status {
    unique,          // exactly one S
    none,            // no S satisfies both convolution equations
    underdetermined, // solutions exist but are not unique
    one_sided,       // only one of S∗id, id∗S is solvable: reported as an anomaly
  };
  Status status = Status::none;
  Matrix antipode;               // set only for unique
  std::size_t kernel_dim = 0;    // homogeneous kernel of the joint system
  std::string detail;
};
std::string to_string(AntipodeResult::Status s);

/// Solves S∗id = η∘ε, id∗S = η∘ε and S∘α = α∘S in the n² entries of S.
AntipodeResult solve_antipode(const HomBialgebra& b);

namespace catalog {

/// Group bialgebra from a Cayley table (entry [g][h] is the index of gh).
ClassicalBialgebra group_bialgebra(const std::vector<std::vector<std::size_t>>& cayley);
/// The inversion permutation matrix of a Cayley table.
Matrix group_inversion(const std::vector<std::vector<std::size_t>>& cayley);
/// Cayley table of C_n, element i = g^i.
std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n);
/// Cayley table of S_3 in lexicographic order of the permutations of {0,1,2}.
std::vector<std::vector<std::size_t>> symmetric3_table();
/// Permutation matrix e_g ↦ e_{image[g]}.
Matrix permutation_automorphism(const std::vector<std::size_t>& image);

/// M_2(Q) with basis E11, E12, E21, E22.
ClassicalAlgebra matrix_algebra_2();
/// X ↦ T X T⁻¹ on M_2(Q) in the basis above.
Matrix conjugation(const Matrix& t);

/// Sweedler's four-dimensional Hopf algebra, basis 1, g, x, gx.
ClassicalBialgebra sweedler();
Matrix sweedler_antipode();
/// g ↦ g, x ↦ c x.
Matrix sweedler_scaling(const Rational& c);

/// The monoid {1, e} with e² = e and both elements group-like.
ClassicalBialgebra idempotent_monoid();

}  // namespace catalog

}  // namespace homcas
