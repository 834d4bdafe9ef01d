#pragma once

// Hom-modules, Hom-comodules and Hom-Hopf modules over finite-dimensional
// Hom-(co/bi)algebras. Structure maps are dense matrices:
//   left action   dim M x (dim A · dim M), column a*dim M + m holds a·m
//   right action  dim M x (dim M · dim A), column m*dim A + a holds m·a
//   right coaction (dim M · dim C) x dim M, ρ(m) = m[0] ⊗ m[1]

#include <cstddef>
#include <optional>

#include "homcas/homalgebra.hpp"
#include "homcas/homspace.hpp"
#include "homcas/kernel.hpp"
#include "homcas/report.hpp"

namespace homcas {

struct LeftHomModule {
  HomObject object;
  Matrix action;
  std::size_t dim() const noexcept { return object.dim(); }
};

struct RightHomModule {
  HomObject object;
  Matrix action;
  std::size_t dim() const noexcept { return object.dim(); }
};

struct RightHomComodule {
  HomObject object;
  Matrix coaction;
  std::size_t dim() const noexcept { return object.dim(); }
};

/// Right Hom-module and right Hom-comodule on one object.
struct HopfModule {
  HomObject object;
  Matrix action;
  Matrix coaction;
  std::size_t dim() const noexcept { return object.dim(); }
  RightHomModule module() const { return {object, action}; }
  RightHomComodule comodule() const { return {object, coaction}; }
};

/// action_equivariant μ(am) = α(a)μ(m), action_associativity
/// α(a)(bm) = (ab)μ(m), action_unit 1m = μ(m).
Report check_left_module(const HomAlgebra& a, const LeftHomModule& m);
/// action_equivariant μ(mh) = μ(m)α(h), action_associativity
/// (mh)α(g) = μ(m)(hg), action_unit m1 = μ(m).
Report check_right_module(const HomAlgebra& a, const RightHomModule& m);
/// coaction_equivariant ρμ = (μ⊗γ)ρ, coaction_coassociativity
/// μ⁻¹(m[0])⊗Δ(m[1]) = m[0][0]⊗m[0][1]⊗γ⁻¹(m[1]), coaction_counit
/// m[0]ε(m[1]) = μ⁻¹(m).
Report check_right_comodule(const HomCoalgebra& c, const RightHomComodule& m);
/// Both of the above plus hopf_compatibility ρ(mh) = m[0]h(1) ⊗ m[1]h(2).
Report check_hopf_module(const HomHopfAlgebra& h, const HopfModule& m);
/// A morphism of right Hopf modules: commutes with μ, the action and the coaction.
Report check_hopf_module_morphism(const HomHopfAlgebra& h, const HopfModule& source, const HopfModule& target,
                                  const Matrix& f);

/// (Q, id) with h·x = ε(h)x.
LeftHomModule trivial_left_module(const HomBialgebra& h);
/// (Q, id) with ρ(x) = x ⊗ 1.
RightHomComodule trivial_right_comodule(const HomBialgebra& h);
/// H acting on itself by multiplication and coacting by Δ.
HopfModule regular_hopf_module(const HomHopfAlgebra& h);

/// h·(m⊗n) = h(1)m ⊗ h(2)n on (M⊗N, μ⊗ν).
LeftHomModule tensor_modules(const HomBialgebra& h, const LeftHomModule& m, const LeftHomModule& n);
/// ρ(m⊗n) = m[0]⊗n[0] ⊗ m[1]n[1].
RightHomComodule tensor_comodules(const HomBialgebra& h, const RightHomComodule& m, const RightHomComodule& n);
/// Passes when ã_{M,N,P} intertwines the actions on (M⊗N)⊗P and M⊗(N⊗P).
Report check_associator_equivariance(const HomBialgebra& h, const LeftHomModule& m, const LeftHomModule& n,
                                     const LeftHomModule& p);

/// N⊗H with ψ((n⊗h)⊗g) = ν(n)⊗hα⁻¹(g) and ρ(n⊗h) = (ν⁻¹(n)⊗h(1))⊗α(h(2)).
/// Dropping the α breaks the Hopf compatibility as soon as α ≠ id.
HopfModule functor_F(const HomObject& n, const HomHopfAlgebra& h);

/// M^coH = {m | ρ(m) = μ⁻¹(m)⊗1}, computed as a kernel. Throws InputError
/// if the result is not μ-stable.
Subspace coinvariants(const HomHopfAlgebra& h, const HopfModule& m);

/// The maps of the equivalence between Hopf modules and Hom-objects, as
/// matrices in coordinates of the coinvariant bases (basis index i of the
/// coinvariants tensored with e_h sits at i*dim H + h).
struct FundamentalMaps {
  Subspace coinvariants;      // M^coH
  Matrix counit;              // ε_M: M^coH⊗H → M, m'⊗h ↦ m'h
  Matrix counit_inverse;      // α̂: m ↦ m[0][0]S(m[0][1]) ⊗ m[1]
  Matrix projection;          // m ↦ m[0]S(m[1]), M → M
  Subspace unit_coinvariants; // (N⊗H)^coH
  Matrix unit;                // η_N: n ↦ ν⁻¹(n)⊗1
  Matrix unit_inverse;        // β: n⊗h ↦ ν(n)ε(h)
  Report report;
};
/// Builds both sides and verifies: projection_coinvariant, counit_round_trip
/// (ε∘α̂ = id_M), counit_inverse_round_trip (α̂∘ε = id), unit_round_trip
/// (β∘η = id_N), unit_inverse_round_trip (η∘β = id), triangle_F and
/// triangle_G.
FundamentalMaps fundamental_maps(const HomHopfAlgebra& h, const HopfModule& m, const HomObject& n);

}  // namespace homcas
