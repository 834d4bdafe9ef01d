#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcas/coherence.hpp"
#include "homcas/errors.hpp"
#include "homcas/homalgebra.hpp"
#include "support.hpp"

using namespace homcas;

namespace {

const auto c3 = catalog::cyclic_table(3);
// g^i ↦ g^{2i}
const Matrix phi3 = catalog::permutation_automorphism({0, 2, 1});

std::string failures(const Report& r) { return r.to_text(); }

const AxiomResult& axiom(const Report& r, const std::string& name) {
  const AxiomResult* a = r.find(name);
  REQUIRE(a != nullptr);
  return *a;
}

}  // namespace

TEST_CASE("middle-four interchange in the tensor product algebra carries no twist") {
  PTree pair = PTree::graft(PTree::leaf(), PTree::leaf());
  PTree shape = PTree::graft(pair, pair);
  // ((a b)(a' b')) -> ((a a')(b b'))
  CoherenceMap m = reassociate(ShuffledWord(shape), ShuffledWord(shape, {0, 2, 1, 3}));
  CHECK(m.exponents == std::vector<int>{0, 0, 0, 0});
  CHECK(m.perm == Permutation{0, 2, 1, 3});
}

TEST_CASE("twisting Q[C3] by g -> g^2") {
  auto b = catalog::group_bialgebra(c3);
  HomAlgebra a = twist_algebra(b.algebra, phi3);
  CHECK(check_hom_algebra(a).passed());
  // g·g = φ(g²) = g⁴ = g, g·g² = φ(1) = 1
  CHECK(multiply(a.mult, unit_vector(3, 1), unit_vector(3, 1)) == unit_vector(3, 1));
  CHECK(multiply(a.mult, unit_vector(3, 1), unit_vector(3, 2)) == unit_vector(3, 0));
  // unitality in the Hom sense: g·1 = α(g) = g², not g
  CHECK(multiply(a.mult, unit_vector(3, 1), a.unit) == unit_vector(3, 2));

  HomCoalgebra c = twist_coalgebra(b.coalgebra, phi3);
  CHECK(check_hom_coalgebra(c).passed());
  // Δ̃(g) = φ⁻¹(g)⊗φ⁻¹(g) = g²⊗g²
  CHECK(c.comult.column(1) == unit_vector(9, 2 * 3 + 2));
}

TEST_CASE("untwisted structures fail the Hom axioms with a witness") {
  auto b = catalog::group_bialgebra(c3);
  HomAlgebra bad{HomObject(phi3), b.algebra.mult, b.algebra.unit};
  Report r = check_hom_algebra(bad);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(axiom(r, "hom_unitality").passed);
  CHECK(axiom(r, "hom_unitality").witness == std::vector<std::size_t>{1});

  HomCoalgebra badc{HomObject(phi3), b.coalgebra.comult, b.coalgebra.counit};
  Report rc = check_hom_coalgebra(badc);
  CHECK_FALSE(axiom(rc, "counit_law").passed);
}

TEST_CASE("identity twist degenerates to the classical axioms") {
  auto b = catalog::group_bialgebra(catalog::symmetric3_table());
  CHECK(check_classical_bialgebra(b).passed());
  HomBialgebra h = as_hom(b);
  CHECK(h.algebra.mult == b.algebra.mult);
  CHECK(h.coalgebra.comult == b.coalgebra.comult);
  CHECK(check_hom_bialgebra(h).passed());
}

TEST_CASE("twist rejects maps that are not automorphisms") {
  auto b = catalog::group_bialgebra(c3);
  try {
    twist_algebra(b.algebra, catalog::permutation_automorphism({1, 0, 2}));
    FAIL("expected NotAutomorphism");
  } catch (const NotAutomorphism& e) {
    CHECK_FALSE(std::string(e.what()).empty());
  }
  CHECK_THROWS_AS(twist_algebra(b.algebra, Matrix(3, 3)), NotInvertible);
  // scaling g is not multiplicative: witness (g, g)
  try {
    twist_algebra(b.algebra, Matrix::diagonal({1, 2, 4}));
    FAIL("expected NotAutomorphism");
  } catch (const NotAutomorphism& e) {
    CHECK(e.witness() == std::vector<std::size_t>{1, 2});
  }
  CHECK_THROWS_AS(twist_coalgebra(b.coalgebra, Matrix::diagonal({1, 2, 1})), NotAutomorphism);
}

TEST_CASE("structure theorem round trips over the catalog") {
  struct Case {
    std::string name;
    ClassicalBialgebra b;
    Matrix alpha;
  };
  std::vector<Case> cases;
  cases.push_back({"C2", catalog::group_bialgebra(catalog::cyclic_table(2)), Matrix::identity(2)});
  cases.push_back({"C3", catalog::group_bialgebra(c3), phi3});
  cases.push_back({"C6", catalog::group_bialgebra(catalog::cyclic_table(6)),
                   catalog::permutation_automorphism({0, 5, 4, 3, 2, 1})});
  // conjugation by a transposition in S3 (lexicographic labels)
  {
    auto t = catalog::symmetric3_table();
    std::vector<std::size_t> image(6);
    const std::size_t s = 1;  // (0)(1 2)
    for (std::size_t g = 0; g < 6; ++g) image[g] = t[t[s][g]][s];
    cases.push_back({"S3", catalog::group_bialgebra(t), catalog::permutation_automorphism(image)});
  }
  cases.push_back({"H4", catalog::sweedler(), catalog::sweedler_scaling(2)});
  for (const auto& c : cases) {
    INFO(c.name);
    HomBialgebra h = twist_bialgebra(c.b, c.alpha);
    Report r = check_hom_bialgebra(h);
    INFO(failures(r));
    CHECK(r.passed());
    ClassicalBialgebra back = untwist_bialgebra(h);
    CHECK(back.algebra.mult == c.b.algebra.mult);
    CHECK(back.coalgebra.comult == c.b.coalgebra.comult);
    HomBialgebra again = twist_bialgebra(back, c.alpha);
    CHECK(again.algebra.mult == h.algebra.mult);
    CHECK(again.coalgebra.comult == h.coalgebra.comult);
    CHECK(again.algebra.unit == h.algebra.unit);
    CHECK(again.coalgebra.counit == h.coalgebra.counit);
  }
  // M2(Q) with conjugation by an invertible T
  ClassicalAlgebra m2 = catalog::matrix_algebra_2();
  CHECK(check_classical_algebra(m2).passed());
  Matrix conj = catalog::conjugation(Matrix::from_rows({{1, 1}, {0, 2}}));
  HomAlgebra hm = twist_algebra(m2, conj);
  CHECK(check_hom_algebra(hm).passed());
  CHECK(untwist_algebra(hm).mult == m2.mult);
  CHECK(twist_algebra(untwist_algebra(hm), conj).mult == hm.mult);
}

TEST_CASE("M2(Q) conjugation matches T X T^-1 directly") {
  Matrix t = Matrix::from_rows({{2, 1}, {1, 1}});
  Matrix conj = catalog::conjugation(t);
  std::mt19937_64 rng(6);
  Matrix x = testing::random_matrix(2, 2, rng);
  CHECK(conj.apply(vec(x)) == vec(t * x * invert(t)));
}

TEST_CASE("Hom-unitality direction on every verified algebra") {
  HomAlgebra a = twist_algebra(catalog::sweedler().algebra, catalog::sweedler_scaling(2));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(multiply(a.mult, unit_vector(4, i), a.unit) == a.alpha().column(i));
  CHECK(multiply(a.mult, unit_vector(4, 2), a.unit) != unit_vector(4, 2));
}

TEST_CASE("convolution") {
  HomAlgebra q{HomObject::unit(), Matrix::identity(1), {1}};
  HomCoalgebra qc{HomObject::unit(), Matrix::identity(1), {1}};
  CHECK(convolution(Matrix::identity(1), Matrix::identity(1), qc, q) == Matrix::identity(1));

  auto c2 = as_hom(catalog::group_bialgebra(catalog::cyclic_table(2)));
  Matrix s = catalog::group_inversion(catalog::cyclic_table(2));
  CHECK(convolution(Matrix::identity(2), s, c2.coalgebra, c2.algebra) ==
        unit_counit(c2.algebra.unit, c2.coalgebra.counit));
}

TEST_CASE("convolution Hom-algebra") {
  HomAlgebra q{HomObject::unit(), Matrix::identity(1), {1}};
  HomCoalgebra qc{HomObject::unit(), Matrix::identity(1), {1}};
  HomAlgebra one = convolution_hom_algebra(qc, q);
  CHECK(one.dim() == 1);
  CHECK(check_hom_algebra(one).passed());

  auto b = twist_bialgebra(catalog::group_bialgebra(catalog::cyclic_table(2)), Matrix::identity(2));
  HomAlgebra conv = convolution_hom_algebra(b.coalgebra, b.algebra);
  CHECK(conv.dim() == 4);
  CHECK(check_hom_algebra(conv).passed());

  auto h3 = twist_bialgebra(catalog::group_bialgebra(c3), phi3);
  HomAlgebra conv3 = convolution_hom_algebra(h3.coalgebra, h3.algebra);
  Report r = check_hom_algebra(conv3);
  INFO(r.to_text());
  CHECK(r.passed());
  // the product agrees with convolving the underlying matrices
  std::mt19937_64 rng(2);
  Matrix f = testing::random_matrix(3, 3, rng), g = testing::random_matrix(3, 3, rng);
  CHECK(multiply(conv3.mult, vec(f), vec(g)) == vec(convolution(f, g, h3.coalgebra, h3.algebra)));

  Report strict = check_strict_convolution(h3.coalgebra, h3.algebra);
  INFO(strict.to_text());
  CHECK(strict.passed());
  auto hs = twist_bialgebra(catalog::sweedler(), catalog::sweedler_scaling(2));
  CHECK(check_strict_convolution(hs.coalgebra, hs.algebra).passed());
}

TEST_CASE("antipode solving") {
  auto h3 = twist_bialgebra(catalog::group_bialgebra(c3), phi3);
  AntipodeResult r = solve_antipode(h3);
  REQUIRE(r.status == AntipodeResult::Status::unique);
  CHECK(r.kernel_dim == 0);
  CHECK(r.antipode == catalog::group_inversion(c3));

  auto c2 = as_hom(catalog::group_bialgebra(catalog::cyclic_table(2)));
  CHECK(solve_antipode(c2).antipode == catalog::group_inversion(catalog::cyclic_table(2)));

  CHECK(solve_antipode(as_hom(catalog::idempotent_monoid())).status == AntipodeResult::Status::none);

  auto hs = twist_bialgebra(catalog::sweedler(), catalog::sweedler_scaling(2));
  AntipodeResult rs = solve_antipode(hs);
  REQUIRE(rs.status == AntipodeResult::Status::unique);
  CHECK(rs.antipode == catalog::sweedler_antipode());
}

TEST_CASE("Hopf checks and antipode identities") {
  auto h3 = twist_hopf(catalog::group_bialgebra(c3), catalog::group_inversion(c3), phi3);
  CHECK(check_hom_hopf(h3).passed());
  CHECK(check_antipode_properties(h3).passed());
  CHECK(h3.antipode * h3.alpha() == h3.alpha() * h3.antipode);

  auto sw = twist_hopf(catalog::sweedler(), catalog::sweedler_antipode(), Matrix::identity(4));
  CHECK(check_hom_hopf(sw).passed());
  CHECK(check_antipode_properties(sw).passed());
  auto sw2 = twist_hopf(catalog::sweedler(), catalog::sweedler_antipode(), catalog::sweedler_scaling(2));
  CHECK(check_hom_hopf(sw2).passed());
  CHECK(check_antipode_properties(sw2).passed());

  // the identity is not an antipode for C3
  auto wrong = h3;
  wrong.antipode = Matrix::identity(3);
  Report r = check_hom_hopf(wrong);
  CHECK_FALSE(axiom(r, "antipode_left").passed);
}

TEST_CASE("a perturbed coefficient breaks the bialgebra axioms") {
  auto h = twist_bialgebra(catalog::group_bialgebra(c3), phi3);
  h.algebra.mult(0, 1 * 3 + 2) = 2;
  CHECK_FALSE(check_hom_bialgebra(h).passed());
}
