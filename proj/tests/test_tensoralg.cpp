#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcas/errors.hpp"
#include "homcas/tensoralg.hpp"
#include "support.hpp"

using namespace homcas;

namespace {

HomObject random_base(std::size_t d, unsigned seed) {
  std::mt19937_64 rng(seed);
  return testing::random_object(d, rng);
}

Vector e(std::size_t d, std::size_t i) { return unit_vector(d, i); }

Vector kron_all(const std::vector<Vector>& factors) {
  Vector out{1};
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

}  // namespace

TEST_CASE("component dimensions and guards") {
  TruncatedTensorHomAlgebra t(HomObject::trivial(2), 4);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(t.component_dim(n) == (std::size_t{1} << n));
  CHECK(t.total_dim() == 31);
  CHECK(t.degree_of(0) == 4);
  CHECK(t.degree_of(30) == 0);
  CHECK_THROWS_AS(TruncatedTensorHomAlgebra(HomObject::trivial(10), 6), ResourceError);
}

TEST_CASE("product closed forms") {
  HomObject m = random_base(2, 11);
  const Matrix& mu = m.mu();
  const Matrix& mi = m.mu_inv();
  TruncatedTensorHomAlgebra t(m, 4);
  CHECK(t.product_exponents(2, 1) == std::vector<int>{1, 0, -1});
  CHECK(t.product_exponents(1, 1) == std::vector<int>{0, 0});
  CHECK(t.product_exponents(2, 2) == std::vector<int>{1, 0, -1, -1});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      // x·y = x⊗y
      CHECK(t.multiply(t.generator(a), t.generator(b)) == t.from_component(2, kron(e(2, a), e(2, b))));
      for (std::size_t c = 0; c < 2; ++c) {
        // (m⊗n)p = μ(m)⊗(n⊗μ⁻¹(p))
        GradedVector mn = t.from_component(2, kron(e(2, a), e(2, b)));
        CHECK(t.multiply(mn, t.generator(c)) ==
              t.from_component(3, kron(mu.column(a), kron(e(2, b), mi.column(c)))));
        for (std::size_t d = 0; d < 2; ++d) {
          GradedVector pq = t.from_component(2, kron(e(2, c), e(2, d)));
          CHECK(t.multiply(mn, pq) ==
                t.from_component(4, kron_all({mu.column(a), e(2, b), mi.column(c), mi.column(d)})));
        }
      }
    }
  // unit acts through the automorphism
  GradedVector x = t.generator(1);
  CHECK(t.multiply(t.one(), x) == t.from_component(1, mu.column(1)));
  CHECK(t.multiply(x, t.one()) == t.from_component(1, mu.column(1)));
  CHECK_THROWS_AS(t.multiply(t.basis(3, 0), t.basis(2, 0)), DegreeOverflow);
}

TEST_CASE("truncated polynomial algebra") {
  TruncatedTensorHomAlgebra t(HomObject::trivial(1), 3);
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; a + b <= 3; ++b) CHECK(t.multiply(t.basis(a, 0), t.basis(b, 0)) == t.basis(a + b, 0));
  CHECK(check_tensor_algebra(t).passed());
}

TEST_CASE("comultiplication and antipode closed forms") {
  HomObject m = random_base(2, 5);
  const Matrix& mu = m.mu();
  const Matrix& mi = m.mu_inv();
  const Matrix mi2 = mi * mi;
  TruncatedTensorHomAlgebra t(m, 3);
  for (std::size_t a = 0; a < 2; ++a) {
    MultiGraded expected{2, {}};
    expected.add({0, 1}, mi.column(a));
    expected.add({1, 0}, mi.column(a));
    CHECK(t.comultiply(t.generator(a)) == expected);

    const auto inv = t.automorphism_matrices(-1);
    MultiGraded delta = t.comultiply(t.generator(a));
    MultiGraded lhs = t.apply_factor(t.comultiply_factor(delta, 1), 0, inv);
    MultiGraded rhs = t.apply_factor(t.comultiply_factor(delta, 0), 2, inv);
    MultiGraded display{3, {}};
    display.add({0, 0, 1}, mi2.column(a));
    display.add({0, 1, 0}, mi2.column(a));
    display.add({1, 0, 0}, mi2.column(a));
    CHECK(lhs == display);
    CHECK(rhs == display);

    CHECK(t.antipode(t.generator(a)) == Rational(-1) * t.generator(a));
    for (std::size_t b = 0; b < 2; ++b) {
      CHECK(t.antipode(t.from_component(2, kron(e(2, a), e(2, b)))) == t.from_component(2, kron(e(2, b), e(2, a))));
      for (std::size_t c = 0; c < 2; ++c)
        CHECK(t.antipode(t.from_component(3, kron_all({e(2, a), e(2, b), e(2, c)}))) ==
              t.from_component(3, -kron_all({mu.column(c), e(2, b), mi.column(a)})));
    }
  }
  MultiGraded unit{2, {{{0, 0}, Vector{1}}}};
  CHECK(t.comultiply(t.one()) == unit);
  CHECK(t.counit(t.one()) == 1);
  CHECK(t.counit(t.generator(0)) == 0);
}

TEST_CASE("all axioms on random bases") {
  for (unsigned seed : {1u, 2u}) {
    TruncatedTensorHomAlgebra t(random_base(2, seed), 4);
    Report r = check_tensor_algebra(t);
    INFO(r.to_text());
    CHECK(r.passed());
    CHECK(r.results().size() == 13);
  }
  TruncatedTensorHomAlgebra t3(random_base(3, 8), 3);
  CHECK(check_tensor_algebra(t3).passed());
}

TEST_CASE("universal lift") {
  HomObject m = random_base(2, 3);
  TruncatedTensorHomAlgebra t(m, 4);
  HomAlgebra a = twist_algebra(catalog::matrix_algebra_2(),
                               catalog::conjugation(Matrix::from_rows({{1, 1}, {0, 1}})));
  // f = 0 gives η∘ε
  AlgebraLift zero = universal_lift(Matrix(4, 2), a, t);
  CHECK(zero.apply(t.one()) == a.unit);
  CHECK(is_zero(zero.apply(t.basis(2, 3))));
  CHECK_THROWS_AS(universal_lift(Matrix::from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 0}}), a, t), InputError);

  // M = (Q^4, α) itself with f = id; the lift is multiplicative wherever degrees fit
  TruncatedTensorHomAlgebra ta(a.object, 3);
  AlgebraLift f = universal_lift(Matrix::identity(4), a, ta);
  CHECK(f.apply(ta.generator(2)) == unit_vector(4, 2));
  std::vector<GradedVector> basis;
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t i = 0; i < ta.component_dim(n); ++i) basis.push_back(ta.basis(n, i));
  for (const auto& u : basis)
    for (const auto& v : basis)
      if (u.top_degree() + v.top_degree() <= 3)
        CHECK(f.apply(ta.multiply(u, v)) == multiply(a.mult, f.apply(u), f.apply(v)));
}

TEST_CASE("ideal generation") {
  HomObject m(Matrix::diagonal({2, 3}));
  TruncatedTensorHomAlgebra t(m, 2);
  CHECK(ideal_generated(t, {t.zero()}).space.dim() == 0);
  HomIdeal all = ideal_generated(t, {t.generator(0), t.generator(1)});
  CHECK(all.space.dim() == 2 + 4);
  CHECK(check_hopf_ideal(t, all).passed());
  std::vector<GradedVector> again;
  for (const auto& v : all.space.basis()) again.push_back(t.unflatten(v));
  CHECK(ideal_generated(t, again).space == all.space);

  // x⊗x is not a coideal generator: Δ(x⊗x) has the cross term x⊗̄x
  HomIdeal square = ideal_generated(t, {t.from_component(2, kron(e(2, 0), e(2, 0)))});
  Report r = check_hopf_ideal(t, square);
  CHECK(r.find("alpha_stable")->passed);
  CHECK_FALSE(r.find("coideal")->passed);

  // not T(μ)-stable
  HomObject rot(Matrix::from_rows({{0, -1}, {1, 0}}));
  TruncatedTensorHomAlgebra tr(rot, 2);
  CHECK_THROWS_AS(ideal_generated(tr, {tr.generator(0)}), InputError);
}

TEST_CASE("enveloping algebras") {
  HomLieAlgebra abelian{HomObject::trivial(1), Matrix(1, 1)};
  EnvelopingAlgebra u1 = enveloping(abelian, 3);
  CHECK(u1.quotient.degree_dims == std::vector<std::size_t>{1, 1, 1, 1});

  HomLieAlgebra sl2 = twist_lie(catalog::sl2_bracket(), catalog::sl2_scaling());
  EnvelopingAlgebra u2 = enveloping(sl2, 2);
  CHECK(u2.quotient.dim() == 10);
  CHECK(u2.quotient.degree_dims == std::vector<std::size_t>{1, 3, 6});

  EnvelopingAlgebra u4 = enveloping(sl2, 4);
  CHECK(u4.report.passed());
  // T(α)(X) = X
  Subspace span_x(u4.tensor.total_dim());
  {
    std::vector<Vector> flat;
    for (const auto& g : u4.generators) flat.push_back(u4.tensor.flatten(g));
    span_x = Subspace::span(u4.tensor.total_dim(), flat);
  }
  for (const auto& g : u4.generators) CHECK(span_x.contains(u4.tensor.flatten(u4.tensor.automorphism(g))));
  MESSAGE("sl2 enveloping per-degree dims at N=4: " << u4.quotient.degree_dims[0] << ","
          << u4.quotient.degree_dims[1] << "," << u4.quotient.degree_dims[2] << ","
          << u4.quotient.degree_dims[3] << "," << u4.quotient.degree_dims[4]);
  // lower truncations agree on the degrees they share
  EnvelopingAlgebra u3 = enveloping(sl2, 3);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(u3.quotient.degree_dims[n] == u4.quotient.degree_dims[n]);

  // the quotient is a Hom-algebra wherever products fit
  const auto& q = u3.quotient;
  const auto& t = u3.tensor;
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = 0; j < q.dim(); ++j)
      for (std::size_t k = 0; k < q.dim(); ++k) {
        if (q.degree_of[i] + q.degree_of[j] + q.degree_of[k] > 3) continue;
        Vector a = unit_vector(q.dim(), i), b = unit_vector(q.dim(), j), c = unit_vector(q.dim(), k);
        CHECK(q.multiply(t, q.alpha.apply(a), q.multiply(t, b, c)) == q.multiply(t, q.multiply(t, a, b), q.alpha.apply(c)));
      }
  // ε and S descend
  CHECK(q.counit[0] + q.counit[q.dim() - 1] == 1);
  // with the other sign x⊗x and [x,y] fall into the ideal; sl2 is perfect, so everything of positive degree does
  EnvelopingAlgebra other = enveloping(sl2, 3, GeneratorSign::bracket_minus_sum);
  CHECK(other.quotient.degree_dims == std::vector<std::size_t>{1, 0, 0, 0});
  HomLieAlgebra bad{HomObject(catalog::sl2_scaling()), catalog::sl2_bracket()};
  CHECK_THROWS_AS(enveloping(bad, 2), InputError);
}
