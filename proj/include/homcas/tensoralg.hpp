#pragma once

// The tensor Hom-algebra T(M) truncated at degree N. Degree n lives in
// M^{⊗n} parenthesized as the right comb; degree 0 is the scalars. Products
// of degrees (n, m) go through the coherence map b(t^n ∨ t^m, t^{n+m}) and
// are defined only when n + m ≤ N. Degree-0 factors act through the unit
// constraint, so 1·u = u·1 = T(μ)(u).
//
// Flat coordinates list degree N first and degree 0 last, so that echelon
// pivots of any vector sit in its top degree.

#include <cstddef>
#include <map>
#include <vector>

#include "homcas/homalgebra.hpp"
#include "homcas/homlie.hpp"
#include "homcas/homspace.hpp"
#include "homcas/kernel.hpp"
#include "homcas/report.hpp"

namespace homcas {

/// components[n] ∈ M^{⊗n} for 0 ≤ n ≤ N.
struct GradedVector {
  std::vector<Vector> components;

  /// Largest degree with a nonzero component, or -1 for zero.
  int top_degree() const;
  bool is_zero() const;
  friend bool operator==(const GradedVector& a, const GradedVector& b) = default;
};
GradedVector operator+(const GradedVector& a, const GradedVector& b);
GradedVector operator-(const GradedVector& a, const GradedVector& b);
GradedVector operator*(const Rational& s, const GradedVector& a);

/// An element of T ⊗̄ ... ⊗̄ T (k factors): the part with factor degrees
/// (p_1, ..., p_k) lives in M^{⊗(p_1+...+p_k)}. Zero parts are dropped.
struct MultiGraded {
  std::size_t factors = 0;
  std::map<std::vector<std::size_t>, Vector> parts;

  void add(const std::vector<std::size_t>& degrees, const Vector& v, const Rational& scale = 1);
  friend bool operator==(const MultiGraded& a, const MultiGraded& b) = default;
};
MultiGraded operator+(MultiGraded a, const MultiGraded& b);
MultiGraded operator-(MultiGraded a, const MultiGraded& b);

class TruncatedTensorHomAlgebra {
 public:
  /// Throws ResourceError when dim(M)^N exceeds 10^5.
  TruncatedTensorHomAlgebra(HomObject base, std::size_t max_degree);

  const HomObject& base() const noexcept { return base_; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t component_dim(std::size_t n) const { return powers_.at(n); }
  std::size_t total_dim() const noexcept { return total_; }
  /// Start of degree n in flat coordinates.
  std::size_t offset(std::size_t n) const { return offsets_.at(n); }
  /// Degree of flat coordinate c.
  std::size_t degree_of(std::size_t flat) const;

  GradedVector zero() const;
  GradedVector one() const;
  GradedVector basis(std::size_t degree, std::size_t index) const;
  /// The generator e_i in degree 1.
  GradedVector generator(std::size_t i) const { return basis(1, i); }
  GradedVector from_component(std::size_t degree, const Vector& v) const;

  Vector flatten(const GradedVector& u) const;
  GradedVector unflatten(const Vector& flat) const;

  /// Slot exponents of the product map on degrees (n, m).
  const std::vector<int>& product_exponents(std::size_t n, std::size_t m) const;

  /// Throws DegreeOverflow naming the first offending pair of nonzero degrees.
  GradedVector multiply(const GradedVector& u, const GradedVector& v) const;
  /// Factorwise product in T ⊗̄ ... ⊗̄ T, truncated at total degree N.
  MultiGraded multiply(const MultiGraded& u, const MultiGraded& v) const;
  /// T(μ)^k
  GradedVector automorphism(const GradedVector& u, int power = 1) const;
  MultiGraded automorphism(const MultiGraded& u, int power = 1) const;

  MultiGraded comultiply(const GradedVector& u) const;
  /// Applies Δ to one factor of a multigraded element.
  MultiGraded comultiply_factor(const MultiGraded& u, std::size_t factor) const;
  Rational counit(const GradedVector& u) const;
  GradedVector antipode(const GradedVector& u) const;
  /// Degreewise matrix of S on M^{⊗n}.
  const Matrix& antipode_matrix(std::size_t n) const { return antipode_.at(n); }

  /// Applies a degreewise family of maps to one factor.
  MultiGraded apply_factor(const MultiGraded& u, std::size_t factor, const std::vector<Matrix>& maps) const;
  /// m: T ⊗̄ T → T.
  GradedVector multiply_factors(const MultiGraded& u) const;
  MultiGraded as_multigraded(const GradedVector& u) const;
  /// The embedding of T into T ⊗̄ T as 1 ⊗̄ u or u ⊗̄ 1, without twisting.
  MultiGraded tensor(const GradedVector& u, const GradedVector& v) const;

  /// Degreewise matrices of T(μ)^k.
  std::vector<Matrix> automorphism_matrices(int power) const;

 private:
  Vector slot_powers(const std::vector<int>& exponents, const Vector& x) const;
  const SparseColumns& mu_power(int k) const;

  HomObject base_;
  std::size_t max_degree_;
  std::size_t total_ = 0;
  std::vector<std::size_t> powers_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<std::vector<int>>> exponents_;
  std::vector<SparseColumns> mu_powers_;  // index k + N
  std::vector<std::vector<MultiGraded>> delta_;
  std::vector<Matrix> antipode_;
};

/// hom_associativity, untwisted_associativity, hom_unitality,
/// alpha_multiplicative, comult_multiplicative, comult_alpha,
/// hom_coassociativity, counit_law, counit_multiplicative,
/// antipode_left, antipode_right, antipode_morphism,
/// antipode_antimultiplicative. Every axiom ranges over basis tuples whose
/// degrees fit in the truncation.
Report check_tensor_algebra(const TruncatedTensorHomAlgebra& t);

/// Degreewise maps f_n = m_A^n ∘ (f ⊗ ... ⊗ f): M^{⊗n} → A, with f_0 the unit.
struct AlgebraLift {
  std::vector<Matrix> components;
  Vector apply(const GradedVector& u) const;
};
/// Throws InputError unless α∘f = f∘μ.
AlgebraLift universal_lift(const Matrix& f, const HomAlgebra& a, const TruncatedTensorHomAlgebra& t);

/// A Hom-ideal of the truncated tensor algebra, in flat coordinates.
struct HomIdeal {
  Subspace space;
};

/// Least subspace containing X that is stable under T(μ)^{±1} and under
/// multiplication on either side by generators wherever the degree bound
/// allows. Closure under generators already gives closure under all
/// products through Hom-associativity. Throws InputError (witness: index
/// into X) when span X is not T(μ)-stable.
HomIdeal ideal_generated(const TruncatedTensorHomAlgebra& t, const std::vector<GradedVector>& x);

/// Quotient T / I with degree-filtered coordinates.
struct TruncatedQuotient {
  Subspace::Quotient maps;                 // projection and section on flat coordinates
  std::vector<Matrix> projection_blocks;   // projection restricted to each degree
  std::vector<std::size_t> degree_of;      // top degree of each quotient coordinate
  std::vector<std::size_t> degree_dims;    // dim of T_{≤n} / (I ∩ T_{≤n}) minus the previous one
  Matrix alpha;
  Vector unit;
  Vector counit;
  Matrix antipode;

  std::size_t dim() const noexcept { return degree_of.size(); }
  Vector project(const TruncatedTensorHomAlgebra& t, const GradedVector& u) const;
  GradedVector lift(const TruncatedTensorHomAlgebra& t, const Vector& q) const;
  /// Throws DegreeOverflow when the lifted degrees do not fit.
  Vector multiply(const TruncatedTensorHomAlgebra& t, const Vector& a, const Vector& b) const;
  /// Δ on the quotient, flattened in quotient ⊗ quotient.
  Vector comultiply(const TruncatedTensorHomAlgebra& t, const Vector& a) const;
  /// (π ⊗̄ π) of a two-factor element.
  Vector project_pair(const TruncatedTensorHomAlgebra& t, const MultiGraded& u) const;
};
TruncatedQuotient quotient(const TruncatedTensorHomAlgebra& t, const HomIdeal& ideal);

/// alpha_stable, left_closed, right_closed, counit_vanishes,
/// coideal (Δ(I) ⊂ I⊗̄T + T⊗̄I), antipode_stable. Witnesses index the
/// ideal's basis.
Report check_hopf_ideal(const TruncatedTensorHomAlgebra& t, const HomIdeal& ideal);

enum class GeneratorSign {
  commutator_minus_bracket,  // x⊗y − y⊗x − [x,y]
  bracket_minus_sum,         // [x,y] − x⊗y − y⊗x
};

/// One generator per basis pair (i, j), i < j.
std::vector<GradedVector> enveloping_generators(const TruncatedTensorHomAlgebra& t, const HomLieAlgebra& l,
                                                GeneratorSign sign = GeneratorSign::commutator_minus_bracket);

struct EnvelopingAlgebra {
  TruncatedTensorHomAlgebra tensor;
  std::vector<GradedVector> generators;
  HomIdeal ideal;
  Report report;
  TruncatedQuotient quotient;
};
/// Throws InputError if l fails check_hom_lie and ConstructionFailed if the
/// ideal is not a Hopf ideal.
EnvelopingAlgebra enveloping(const HomLieAlgebra& l, std::size_t max_degree,
                             GeneratorSign sign = GeneratorSign::commutator_minus_bracket);

}  // namespace homcas
