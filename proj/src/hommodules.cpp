#include "homcas/hommodules.hpp"

#include "homcas/errors.hpp"

namespace homcas {

namespace {

std::vector<std::size_t> decode(std::size_t flat, const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> out(sizes.size());
  for (std::size_t f = sizes.size(); f-- > 0;) {
    out[f] = flat % sizes[f];
    flat /= sizes[f];
  }
  return out;
}

// Records the first column where lhs and rhs differ, decoded over sizes.
void compare(Report& r, const std::string& name, const Matrix& lhs, const Matrix& rhs,
             const std::vector<std::size_t>& sizes, const std::string& why) {
  AxiomResult& a = r.axiom(name);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    a.fail({}, "shape mismatch in " + why);
    return;
  }
  const std::size_t c = lhs.first_differing_column(rhs);
  if (c < lhs.cols()) a.fail(decode(c, sizes), why);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

Matrix column(const Vector& v) { return Matrix::column_vector(v); }
Matrix row(const Vector& v) { return Matrix::row_vector(v); }
Matrix id(std::size_t n) { return Matrix::identity(n); }

}  // namespace

Report check_left_module(const HomAlgebra& alg, const LeftHomModule& m) {
  validate(alg);
  const std::size_t da = alg.dim(), dm = m.dim();
  require(m.action.rows() == dm && m.action.cols() == da * dm, "left action must be dim M x (dim A · dim M)");
  const Matrix& mu = m.object.mu();
  const Matrix& psi = m.action;
  Report r;
  compare(r, "action_equivariant", mu * psi, psi * kron(alg.alpha(), mu), {da, dm}, "μ(am) ≠ α(a)μ(m)");
  compare(r, "action_associativity", psi * kron(alg.alpha(), psi), psi * kron(alg.mult, mu), {da, da, dm},
          "α(a)(bm) ≠ (ab)μ(m)");
  compare(r, "action_unit", psi * kron(column(alg.unit), id(dm)), mu, {dm}, "1m ≠ μ(m)");
  return r;
}

Report check_right_module(const HomAlgebra& alg, const RightHomModule& m) {
  validate(alg);
  const std::size_t da = alg.dim(), dm = m.dim();
  require(m.action.rows() == dm && m.action.cols() == dm * da, "right action must be dim M x (dim M · dim A)");
  const Matrix& mu = m.object.mu();
  const Matrix& psi = m.action;
  Report r;
  compare(r, "action_equivariant", mu * psi, psi * kron(mu, alg.alpha()), {dm, da}, "μ(mh) ≠ μ(m)α(h)");
  compare(r, "action_associativity", psi * kron(psi, alg.alpha()), psi * kron(mu, alg.mult), {dm, da, da},
          "(mh)α(g) ≠ μ(m)(hg)");
  compare(r, "action_unit", psi * kron(id(dm), column(alg.unit)), mu, {dm}, "m1 ≠ μ(m)");
  return r;
}

Report check_right_comodule(const HomCoalgebra& co, const RightHomComodule& m) {
  validate(co);
  const std::size_t dc = co.dim(), dm = m.dim();
  require(m.coaction.rows() == dm * dc && m.coaction.cols() == dm, "coaction must be (dim M · dim C) x dim M");
  const Matrix& mu = m.object.mu();
  const Matrix& rho = m.coaction;
  Report r;
  compare(r, "coaction_equivariant", rho * mu, kron(mu, co.gamma()) * rho, {dm}, "ρμ ≠ (μ⊗γ)ρ");
  compare(r, "coaction_coassociativity", kron(m.object.mu_inv(), co.comult) * rho,
          kron(rho, co.object.mu_inv()) * rho, {dm}, "μ⁻¹(m[0])⊗Δ(m[1]) ≠ m[0][0]⊗m[0][1]⊗γ⁻¹(m[1])");
  compare(r, "coaction_counit", kron(id(dm), row(co.counit)) * rho, m.object.mu_inv(), {dm},
          "m[0]ε(m[1]) ≠ μ⁻¹(m)");
  return r;
}

Report check_hopf_module(const HomHopfAlgebra& h, const HopfModule& m) {
  validate(h);
  Report r = check_right_module(h.algebra(), m.module());
  r.merge(check_right_comodule(h.coalgebra(), m.comodule()));
  const std::size_t dh = h.dim(), dm = m.dim();
  // m⊗h ↦ m[0]⊗m[1]⊗h(1)⊗h(2) ↦ m[0]⊗h(1)⊗m[1]⊗h(2) ↦ m[0]h(1) ⊗ m[1]h(2)
  Matrix rhs = kron(m.action, h.algebra().mult) * kron({id(dm), flip_matrix(dh, dh), id(dh)}) *
               kron(m.coaction, h.coalgebra().comult);
  compare(r, "hopf_compatibility", m.coaction * m.action, rhs, {dm, dh}, "ρ(mh) ≠ m[0]h(1) ⊗ m[1]h(2)");
  return r;
}

Report check_hopf_module_morphism(const HomHopfAlgebra& h, const HopfModule& s, const HopfModule& t,
                                  const Matrix& f) {
  const std::size_t dh = h.dim();
  require(f.rows() == t.dim() && f.cols() == s.dim(), "morphism has the wrong shape");
  Report r;
  compare(r, "morphism_equivariant", f * s.object.mu(), t.object.mu() * f, {s.dim()}, "fμ ≠ μ'f");
  compare(r, "morphism_linear", f * s.action, t.action * kron(f, id(dh)), {s.dim(), dh}, "f(mh) ≠ f(m)h");
  compare(r, "morphism_colinear", t.coaction * f, kron(f, id(dh)) * s.coaction, {s.dim()}, "ρ'f ≠ (f⊗H)ρ");
  return r;
}

LeftHomModule trivial_left_module(const HomBialgebra& h) {
  validate(h);
  return {HomObject::unit(), row(h.coalgebra.counit)};
}

RightHomComodule trivial_right_comodule(const HomBialgebra& h) {
  validate(h);
  return {HomObject::unit(), column(h.algebra.unit)};
}

HopfModule regular_hopf_module(const HomHopfAlgebra& h) {
  validate(h);
  return {h.object(), h.algebra().mult, h.coalgebra().comult};
}

LeftHomModule tensor_modules(const HomBialgebra& h, const LeftHomModule& m, const LeftHomModule& n) {
  validate(h);
  const std::size_t dh = h.dim(), dm = m.dim(), dn = n.dim();
  require(m.action.cols() == dh * dm && n.action.cols() == dh * dn, "modules are over a different algebra");
  // h⊗m⊗n ↦ h(1)⊗h(2)⊗m⊗n ↦ h(1)⊗m⊗h(2)⊗n ↦ h(1)m ⊗ h(2)n
  Matrix action = kron(m.action, n.action) * kron({id(dh), flip_matrix(dh, dm), id(dn)}) *
                  kron({h.coalgebra.comult, id(dm), id(dn)});
  return {HomObject(kron(m.object.mu(), n.object.mu())), std::move(action)};
}

RightHomComodule tensor_comodules(const HomBialgebra& h, const RightHomComodule& m, const RightHomComodule& n) {
  validate(h);
  const std::size_t dh = h.dim(), dm = m.dim(), dn = n.dim();
  require(m.coaction.rows() == dm * dh && n.coaction.rows() == dn * dh, "comodules are over a different coalgebra");
  // m⊗n ↦ m[0]⊗m[1]⊗n[0]⊗n[1] ↦ m[0]⊗n[0]⊗m[1]⊗n[1] ↦ m[0]⊗n[0]⊗m[1]n[1]
  Matrix coaction = kron({id(dm), id(dn), h.algebra.mult}) * kron({id(dm), flip_matrix(dh, dn), id(dh)}) *
                    kron(m.coaction, n.coaction);
  return {HomObject(kron(m.object.mu(), n.object.mu())), std::move(coaction)};
}

Report check_associator_equivariance(const HomBialgebra& h, const LeftHomModule& m, const LeftHomModule& n,
                                     const LeftHomModule& p) {
  LeftHomModule left = tensor_modules(h, tensor_modules(h, m, n), p);
  LeftHomModule right = tensor_modules(h, m, tensor_modules(h, n, p));
  Matrix a = associator(m.object, n.object, p.object).map();
  Report r;
  compare(r, "associator_equivariant", a * left.action, right.action * kron(id(h.dim()), a),
          {h.dim(), m.dim(), n.dim(), p.dim()}, "ã(h·x) ≠ h·ã(x)");
  return r;
}

HopfModule functor_F(const HomObject& n, const HomHopfAlgebra& h) {
  validate(h);
  const std::size_t dh = h.dim();
  const Matrix& nu = n.mu();
  Matrix action = kron(nu, h.algebra().mult * kron(id(dh), h.object().mu_inv()));
  // α on the last leg; without it ρ(mh) = m[0]h(1) ⊗ m[1]h(2) fails once α ≠ id
  Matrix coaction = kron(n.mu_inv(), kron(id(dh), h.alpha()) * h.coalgebra().comult);
  return {HomObject(kron(nu, h.alpha())), std::move(action), std::move(coaction)};
}

Subspace coinvariants(const HomHopfAlgebra& h, const HopfModule& m) {
  validate(h);
  const std::size_t dm = m.dim(), dh = h.dim();
  require(m.coaction.rows() == dm * dh && m.coaction.cols() == dm, "coaction has the wrong shape");
  Matrix condition = m.coaction - kron(m.object.mu_inv(), column(h.algebra().unit));
  Subspace space = Subspace::span(dm, nullspace(condition));
  if (!space.is_stable_under(m.object.mu()))
    throw InputError("coinvariants are not μ-stable, so the input is not a Hom-Hopf module");
  return space;
}

namespace {

// Coordinates of each column of `vectors` in the basis of `space`.
Matrix coordinates_of(const Subspace& space, const Matrix& vectors) {
  Matrix out(space.dim(), vectors.cols());
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    Vector x = space.coordinates(vectors.column(c));
    for (std::size_t r = 0; r < space.dim(); ++r) out(r, c) = x[r];
  }
  return out;
}

}  // namespace

FundamentalMaps fundamental_maps(const HomHopfAlgebra& h, const HopfModule& m, const HomObject& n) {
  validate(h);
  const std::size_t dh = h.dim(), dm = m.dim(), dn = n.dim();
  const Matrix idh = id(dh);
  FundamentalMaps out;
  Report& r = out.report;

  out.coinvariants = coinvariants(h, m);
  const Subspace& co = out.coinvariants;
  const std::size_t k = co.dim();
  const Matrix basis = co.basis_matrix();

  out.counit = m.action * kron(basis, idh);
  out.projection = m.action * kron(id(dm), h.antipode) * m.coaction;
  {
    AxiomResult& a = r.axiom("projection_coinvariant");
    for (std::size_t c = 0; c < dm && a.passed; ++c)
      if (!co.contains(out.projection.column(c))) a.fail({c}, "m[0]S(m[1]) ∉ M^coH");
  }
  if (r.find("projection_coinvariant")->passed) {
    out.counit_inverse = kron(coordinates_of(co, out.projection), idh) * m.coaction;
    compare(r, "counit_round_trip", out.counit * out.counit_inverse, id(dm), {dm}, "ε∘α̂ ≠ id");
    compare(r, "counit_inverse_round_trip", out.counit_inverse * out.counit, id(k * dh), {k, dh}, "α̂∘ε ≠ id");
  }

  HopfModule fn = functor_F(n, h);
  out.unit_coinvariants = coinvariants(h, fn);
  const Subspace& uco = out.unit_coinvariants;
  const Matrix ubasis = uco.basis_matrix();
  const Matrix eta_full = kron(n.mu_inv(), column(h.algebra().unit));
  {
    AxiomResult& a = r.axiom("unit_lands_in_coinvariants");
    for (std::size_t c = 0; c < dn && a.passed; ++c)
      if (!uco.contains(eta_full.column(c))) a.fail({c}, "ν⁻¹(n)⊗1 ∉ (N⊗H)^coH");
  }
  if (r.find("unit_lands_in_coinvariants")->passed) {
    out.unit = coordinates_of(uco, eta_full);
    out.unit_inverse = kron(n.mu(), row(h.coalgebra().counit)) * ubasis;
    compare(r, "unit_round_trip", out.unit_inverse * out.unit, id(dn), {dn}, "β∘η ≠ id");
    compare(r, "unit_inverse_round_trip", out.unit * out.unit_inverse, id(uco.dim()), {uco.dim()}, "η∘β ≠ id");
    // ε_{F(N)} ∘ F(η): n⊗h ↦ (ν⁻¹(n)⊗1)h
    compare(r, "triangle_F", fn.action * kron(ubasis * out.unit, idh), id(dn * dh), {dn, dh},
            "(ν⁻¹(n)⊗1)h ≠ n⊗h");
  }
  // G(ε_M) ∘ η_{G(M)}: m ↦ μ⁻¹(m)1 on M^coH
  compare(r, "triangle_G", m.action * kron(m.object.mu_inv() * basis, column(h.algebra().unit)), basis, {k},
          "μ⁻¹(m)1 ≠ m");
  return out;
}

}  // namespace homcas
