#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcas/coherence.hpp"
#include "homcas/errors.hpp"
#include "homcas/homlie.hpp"
#include "support.hpp"

using namespace homcas;

namespace {

Vector bracket(const HomLieAlgebra& l, const Vector& x, const Vector& y) {
  Vector out(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!is_zero(x[i]) && !is_zero(y[j])) axpy(out, x[i] * y[j], l.bracket.column(i * l.dim() + j));
  return out;
}

// [x,[y,z]] + [αy,[z,α⁻¹x]] + [αz,[α⁻¹x,y]]: the categorical form written out with the closed forms
Vector categorical_closed_form(const HomLieAlgebra& l, const Vector& x, const Vector& y, const Vector& z) {
  const Matrix& a = l.alpha();
  const Matrix& ai = l.object.mu_inv();
  return bracket(l, x, bracket(l, y, z)) + bracket(l, a.apply(y), bracket(l, z, ai.apply(x))) +
         bracket(l, a.apply(z), bracket(l, ai.apply(x), y));
}

HomLieAlgebra twisted_sl2() { return twist_lie(catalog::sl2_bracket(), catalog::sl2_scaling()); }

}  // namespace

TEST_CASE("sl2 and Heisenberg are classical Lie algebras") {
  CHECK(check_classical_lie(catalog::sl2_bracket(), 3).passed());
  CHECK(check_classical_lie(catalog::heisenberg_bracket(), 3).passed());
  Matrix b = catalog::sl2_bracket();
  // [e,f] = h, [h,e] = 2e, [h,f] = -2f
  CHECK(b.column(0 * 3 + 2) == unit_vector(3, 1));
  CHECK(b.column(1 * 3 + 0) == Vector{2, 0, 0});
  CHECK(b.column(1 * 3 + 2) == Vector{0, 0, -2});
}

TEST_CASE("twisted sl2 passes every check") {
  HomLieAlgebra l = twisted_sl2();
  Report r = check_hom_lie(l);
  INFO(r.to_text());
  CHECK(r.passed());
  // twisted bracket α[e,f] = h, α[h,e] = 4e
  CHECK(l.bracket.column(2) == unit_vector(3, 1));
  CHECK(l.bracket.column(3) == Vector{4, 0, 0});
}

TEST_CASE("Jacobi forms against the closed forms, triple by triple") {
  std::mt19937_64 rng(9);
  std::vector<HomLieAlgebra> algebras{
      twisted_sl2(), twist_lie(catalog::heisenberg_bracket(), catalog::heisenberg_scaling()),
      twist_lie(catalog::sl2_bracket(), Matrix::identity(3)),
      // untwisted bracket with a non-trivial α: Jacobi fails but both forms must still agree
      HomLieAlgebra{HomObject(catalog::sl2_scaling()), catalog::sl2_bracket()}};
  for (const auto& l : algebras)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          JacobiValues v = jacobi_values(l, i, j, k);
          Vector x = unit_vector(3, i), y = unit_vector(3, j), z = unit_vector(3, k);
          CHECK(v.categorical == categorical_closed_form(l, l.alpha().apply(x), y, z));
          CHECK(v.elementwise == v.categorical);
        }
}

TEST_CASE("the cyclic coherence maps match their closed forms") {
  std::mt19937_64 rng(4);
  HomObject m = testing::random_object(2, rng);
  const Matrix& a = m.mu();
  const Matrix& ai = m.mu_inv();
  CoherenceMap s1 = reassociate(ShuffledWord(right_comb(3)), ShuffledWord(right_comb(3), {1, 2, 0}));
  CoherenceMap s2 = reassociate(ShuffledWord(right_comb(3)), ShuffledWord(right_comb(3), {2, 0, 1}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        Vector x = unit_vector(2, i), y = unit_vector(2, j), z = unit_vector(2, k);
        Vector w = kron(x, kron(y, z));
        CHECK(apply_coherence(s1, m, w) == kron(a.apply(z), kron(ai.apply(x), y)));
        CHECK(apply_coherence(s2, m, w) == kron(a.apply(y), kron(z, ai.apply(x))));
      }
}

TEST_CASE("failures carry witnesses") {
  HomLieAlgebra bad{HomObject(catalog::sl2_scaling()), catalog::sl2_bracket()};
  Report r = check_hom_lie(bad);
  const AxiomResult* j = r.find("hom_jacobi");
  REQUIRE(j);
  CHECK_FALSE(j->passed);
  CHECK(j->witness.size() == 3);
  CHECK(r.find("antisymmetry")->passed);
  CHECK_FALSE(r.find("hom_jacobi_categorical")->passed);
  CHECK(r.find("jacobi_forms_agree")->passed);

  Matrix sym = catalog::sl2_bracket();
  sym(1, 2) = 5;
  CHECK_FALSE(check_hom_lie(HomLieAlgebra{HomObject::trivial(3), sym}).find("antisymmetry")->passed);
}

TEST_CASE("zero bracket passes with any automorphism") {
  std::mt19937_64 rng(3);
  HomObject m = testing::random_object(3, rng);
  CHECK(check_hom_lie(HomLieAlgebra{m, Matrix(3, 9)}).passed());
}

TEST_CASE("twist_lie rejects non-multiplicative maps") {
  try {
    twist_lie(catalog::sl2_bracket(), Matrix::diagonal({2, 1, 1}));
    FAIL("expected NotAutomorphism");
  } catch (const NotAutomorphism& e) {
    CHECK(e.witness().size() == 2);
  }
  CHECK(check_hom_lie(twist_lie(catalog::heisenberg_bracket(), catalog::heisenberg_scaling())).passed());
}

TEST_CASE("commutator Hom-Lie algebras") {
  auto m2 = twist_algebra(catalog::matrix_algebra_2(), catalog::conjugation(Matrix::from_rows({{1, 2}, {0, 1}})));
  HomLieAlgebra l = commutator_hom_lie(m2);
  CHECK(l.dim() == 4);
  CHECK(check_hom_lie(l).passed());
  // [E12, E21] = α(E11 - E22)
  CHECK(l.bracket.column(1 * 4 + 2) == m2.alpha().apply(Vector{1, 0, 0, -1}));

  auto c3 = twist_algebra(catalog::group_bialgebra(catalog::cyclic_table(3)).algebra,
                          catalog::permutation_automorphism({0, 2, 1}));
  CHECK(commutator_hom_lie(c3).bracket.is_zero());

  // a non-Hom-associative product
  HomAlgebra bad = m2;
  bad.mult = catalog::matrix_algebra_2().mult;
  CHECK_THROWS_AS(commutator_hom_lie(bad), ConstructionFailed);
}
