#include "homcas/homlie.hpp"

#include "homcas/coherence.hpp"
#include "homcas/errors.hpp"

namespace homcas {

namespace {

Matrix bracket_from(std::size_t d, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, int>>& rules) {
  Matrix b(d, d * d);
  for (auto [i, j, k, c] : rules) {
    b(k, i * d + j) = c;
    b(k, j * d + i) = -c;
  }
  return b;
}

const CoherenceMap& cyclic_map(int power) {
  static const CoherenceMap maps[2] = {
      reassociate(ShuffledWord(right_comb(3)), ShuffledWord(right_comb(3), {1, 2, 0})),
      reassociate(ShuffledWord(right_comb(3)), ShuffledWord(right_comb(3), {2, 0, 1})),
  };
  return maps[power - 1];
}

}  // namespace

void validate(const HomLieAlgebra& l) {
  const std::size_t d = l.dim();
  if (l.bracket.rows() != d || l.bracket.cols() != d * d) throw InputError("bracket must be d x d^2");
}

Report check_classical_lie(const Matrix& bracket, std::size_t d) {
  if (bracket.rows() != d || bracket.cols() != d * d) throw InputError("bracket must be d x d^2");
  Bilinear l(bracket, d, d);
  Report r;
  AxiomResult& anti = r.axiom("antisymmetry");
  for (std::size_t i = 0; i < d && anti.passed; ++i)
    for (std::size_t j = i; j < d && anti.passed; ++j)
      if (!is_zero(l.basis(i, j) + l.basis(j, i))) anti.fail({i, j}, "[x,y] + [y,x] ≠ 0");
  AxiomResult& jac = r.axiom("jacobi");
  for (std::size_t i = 0; i < d && jac.passed; ++i)
    for (std::size_t j = 0; j < d && jac.passed; ++j)
      for (std::size_t k = 0; k < d && jac.passed; ++k) {
        Vector x = unit_vector(d, i), y = unit_vector(d, j), z = unit_vector(d, k);
        if (!is_zero(l(x, l(y, z)) + l(y, l(z, x)) + l(z, l(x, y))))
          jac.fail({i, j, k}, "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] ≠ 0");
      }
  return r;
}

JacobiValues jacobi_values(const HomLieAlgebra& lie, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t d = lie.dim();
  Bilinear l(lie.bracket, d, d);
  const Matrix& al = lie.alpha();
  Vector x = unit_vector(d, i), y = unit_vector(d, j), z = unit_vector(d, k);
  JacobiValues out;
  out.elementwise = l(al.apply(x), l(y, z)) + l(al.apply(y), l(z, x)) + l(al.apply(z), l(x, y));

  // l² = l∘(L⊗l) on the right comb, evaluated at α(x)⊗(y⊗z)
  Matrix l2 = lie.bracket * kron(Matrix::identity(d), lie.bracket);
  Vector w = kron(al.apply(x), kron(y, z));
  Vector sum = w + apply_coherence(cyclic_map(1), lie.object, w) + apply_coherence(cyclic_map(2), lie.object, w);
  out.categorical = l2.apply(sum);
  return out;
}

Report check_hom_lie(const HomLieAlgebra& lie) {
  validate(lie);
  const std::size_t d = lie.dim();
  const Matrix& al = lie.alpha();
  Bilinear l(lie.bracket, d, d);
  Report r;
  {
    AxiomResult& a = r.axiom("antisymmetry");
    for (std::size_t i = 0; i < d && a.passed; ++i)
      for (std::size_t j = i; j < d && a.passed; ++j)
        if (!is_zero(l.basis(i, j) + l.basis(j, i))) a.fail({i, j}, "[x,y] + [y,x] ≠ 0");
  }
  {
    AxiomResult& a = r.axiom("alpha_multiplicative");
    for (std::size_t i = 0; i < d && a.passed; ++i)
      for (std::size_t j = 0; j < d && a.passed; ++j)
        if (al.apply(l.basis(i, j)) != l(al.column(i), al.column(j))) a.fail({i, j}, "α[x,y] ≠ [αx,αy]");
  }
  std::vector<JacobiValues> values;
  values.reserve(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) values.push_back(jacobi_values(lie, i, j, k));
  auto triple = [d](std::size_t t) { return std::vector<std::size_t>{t / (d * d), (t / d) % d, t % d}; };
  {
    AxiomResult& a = r.axiom("hom_jacobi");
    for (std::size_t t = 0; t < values.size() && a.passed; ++t)
      if (!is_zero(values[t].elementwise)) a.fail(triple(t), "[αx,[y,z]] + [αy,[z,x]] + [αz,[x,y]] ≠ 0");
  }
  {
    AxiomResult& a = r.axiom("hom_jacobi_categorical");
    for (std::size_t t = 0; t < values.size() && a.passed; ++t)
      if (!is_zero(values[t].categorical)) a.fail(triple(t), "l²∘(id + b(t³,t³s) + b(t³,t³s²)) ≠ 0 at α(x)⊗(y⊗z)");
  }
  {
    AxiomResult& a = r.axiom("jacobi_forms_agree");
    for (std::size_t t = 0; t < values.size() && a.passed; ++t)
      if (values[t].elementwise != values[t].categorical) a.fail(triple(t), "the two Jacobi forms differ");
  }
  return r;
}

HomLieAlgebra twist_lie(const Matrix& bracket, const Matrix& alpha) {
  const std::size_t d = alpha.rows();
  if (!alpha.is_square() || bracket.rows() != d || bracket.cols() != d * d)
    throw InputError("bracket and automorphism dimensions disagree");
  HomObject obj(alpha);
  Bilinear l(bracket, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (alpha.apply(l.basis(i, j)) != l(alpha.column(i), alpha.column(j)))
        throw NotAutomorphism("α[x,y] ≠ [αx,αy] at (" + std::to_string(i) + "," + std::to_string(j) + ")", {i, j});
  return HomLieAlgebra{std::move(obj), alpha * bracket};
}

HomLieAlgebra commutator_hom_lie(const HomAlgebra& a) {
  validate(a);
  const std::size_t d = a.dim();
  HomLieAlgebra lie{a.object, a.mult - a.mult * flip_matrix(d, d)};
  Report r = check_hom_lie(lie);
  for (const auto& res : r.results())
    if (!res.passed) throw ConstructionFailed("commutator bracket fails " + res.axiom, res.witness);
  return lie;
}

namespace catalog {

Matrix sl2_bracket() {
  // e = 0, h = 1, f = 2
  return bracket_from(3, {{0, 2, 1, 1}, {1, 0, 0, 2}, {1, 2, 2, -2}});
}

Matrix sl2_scaling() { return Matrix::diagonal({2, 1, Rational(1, 2)}); }

Matrix heisenberg_bracket() { return bracket_from(3, {{0, 1, 2, 1}}); }

Matrix heisenberg_scaling() { return Matrix::diagonal({2, 1, 2}); }

}  // namespace catalog

}  // namespace homcas
