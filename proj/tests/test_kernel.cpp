#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcas/errors.hpp"
#include "homcas/kernel.hpp"
#include "support.hpp"

using namespace homcas;

TEST_CASE("rationals parse strictly and print canonically") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(to_string(parse_rational("+5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("solve_linear") {
  auto unique = solve_linear(Matrix::identity(2), {3, 5});
  CHECK(unique.kind == LinearSolution::Kind::unique);
  CHECK(unique.particular == Vector{3, 5});

  Matrix a = Matrix::from_rows({{1, 1}, {2, 2}});
  auto fam = solve_linear(a, {1, 2});
  REQUIRE(fam.kind == LinearSolution::Kind::family);
  CHECK(fam.particular == Vector{1, 0});
  REQUIRE(fam.kernel.size() == 1);
  // kernel basis {(1,-1)} up to scale
  CHECK(fam.kernel[0][0] == -fam.kernel[0][1]);

  CHECK(solve_linear(a, {1, 3}).kind == LinearSolution::Kind::none);
  CHECK_THROWS_AS(solve_linear(a, {1, 2, 3}), InputError);
}

TEST_CASE("solve_linear results satisfy the system") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    Matrix a = testing::random_matrix(r, c, rng);
    if (trial % 3 == 0)
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j);
    Vector b = testing::random_vector(r, rng);
    auto sol = solve_linear(a, b);
    if (sol.kind == LinearSolution::Kind::none) {
      CHECK(rank(a) < rank(vstack({a.transpose(), Matrix::row_vector(b)}).transpose()));
      continue;
    }
    CHECK(a.apply(sol.particular) == b);
    for (const auto& k : sol.kernel) CHECK(is_zero(a.apply(k)));
    CHECK(sol.kernel.size() == c - rank(a));
  }
}

TEST_CASE("invert") {
  CHECK(invert(Matrix::identity(3)) == Matrix::identity(3));
  Matrix d = Matrix::from_rows({{2, 0}, {0, Rational(1, 2)}});
  CHECK(invert(d) == Matrix::from_rows({{Rational(1, 2), 0}, {0, 2}}));
  CHECK_THROWS_AS(invert(Matrix::from_rows({{1, 1}, {1, 1}})), NotInvertible);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Matrix m = testing::random_invertible(1 + t % 4, rng);
    CHECK(invert(m) * m == Matrix::identity(m.rows()));
    CHECK(m * invert(m) == Matrix::identity(m.rows()));
  }
}

TEST_CASE("subspace operations") {
  Subspace diag = Subspace::span(2, {{1, 1}});
  CHECK(diag.contains(Vector{1, 1}));
  CHECK_FALSE(diag.contains(Vector{1, 0}));

  auto q = Subspace::span(2, {{1, 0}}).quotient_projection();
  CHECK(rank(q.projection) == 1);
  CHECK(is_zero(q.projection.apply({1, 0})));
  CHECK((q.projection * q.section).is_identity());

  Subspace all = Subspace::span(2, {{1, 0}, {0, 1}});
  CHECK(all.intersection(diag) == diag);
  CHECK(Subspace::span(2, {{1, 0}}).intersection(diag).dim() == 0);
  CHECK(Subspace::span(3, {{1, 0, 0}}).sum(Subspace::span(3, {{0, 1, 0}})).dim() == 2);
  CHECK_THROWS_AS(diag.sum(Subspace::span(3, {})), InputError);
}

TEST_CASE("RREF canonicality: different spanning sets give identical bases") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vector> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(testing::random_vector(5, rng));
    std::vector<Vector> mixed = {gens[0] + gens[1], Rational(2) * gens[2] - gens[0], gens[1],
                                 gens[0] + gens[1] + gens[2]};
    CHECK(Subspace::span(5, gens) == Subspace::span(5, mixed));
  }
}

TEST_CASE("intersection agrees with a direct kernel computation") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 15; ++t) {
    std::vector<Vector> a, b;
    for (int i = 0; i < 3; ++i) a.push_back(testing::random_vector(4, rng));
    for (int i = 0; i < 2; ++i) b.push_back(testing::random_vector(4, rng));
    Subspace u = Subspace::span(4, a), w = Subspace::span(4, b);
    // oracle: solve sum x_i a_i = sum y_j b_j
    std::vector<Vector> cols = a;
    for (auto& v : b) cols.push_back(-v);
    Matrix m = Matrix::from_columns(cols, 4);
    std::vector<Vector> meet;
    for (const auto& k : nullspace(m)) {
      Vector v = zero_vector(4);
      for (std::size_t i = 0; i < a.size(); ++i) axpy(v, k[i], a[i]);
      meet.push_back(v);
    }
    CHECK(u.intersection(w) == Subspace::span(4, meet));
  }
}

TEST_CASE("Tensor3 readings round trip and never store zeros") {
  Tensor3 t(2, 2, 2);
  t.set(0, 1, 1, 3);
  t.set(1, 1, 0, 0);
  t.add(0, 1, 1, -3);
  CHECK(t.entries().empty());
  t.set(1, 0, 1, Rational(1, 2));
  CHECK(Tensor3::from_bilinear(t.to_bilinear(), 2, 2) == t);
  CHECK(Tensor3::from_colinear(t.to_colinear(), 2, 2) == t);
  CHECK_THROWS_AS(t.set(2, 0, 0, 1), InputError);
}

TEST_CASE("kron matches the lexicographic index convention") {
  Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  Matrix k = kron(swap, Matrix::identity(2));
  CHECK(k(2, 0) == 1);
  CHECK(k(0, 2) == 1);
  CHECK(k(3, 1) == 1);
  std::mt19937_64 rng(2);
  Matrix a = testing::random_matrix(2, 3, rng), b = testing::random_matrix(3, 2, rng);
  Vector v = testing::random_vector(6, rng);
  CHECK(kron_apply(a, b, v) == kron(a, b).apply(v));
}
