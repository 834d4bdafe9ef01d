#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "homcas/coherence.hpp"
#include "homcas/errors.hpp"
#include "support.hpp"

using namespace homcas;

namespace {

HomObject power(const HomObject& m, std::size_t k) {
  HomObject r = HomObject::unit();
  for (std::size_t i = 0; i < k; ++i) r = tensor(r, m);
  return r;
}

// Matrix of one elementary move on M^{⊗n}, assembled from the category's own
// associator and braiding rather than from exponent bookkeeping.
Matrix move_matrix(const PTree& tree, const Move& move, const HomObject& m) {
  PTree sub = tree;
  std::size_t offset = 0;
  for (bool right : move.address) {
    if (right) {
      offset += sub.left().leaves();
      sub = sub.right();
    } else {
      sub = sub.left();
    }
  }
  Matrix local;
  switch (move.kind) {
    case MoveKind::associate:
      local = associator(power(m, sub.left().left().leaves()), power(m, sub.left().right().leaves()),
                         power(m, sub.right().leaves()))
                  .map();
      break;
    case MoveKind::unassociate:
      local = associator_inverse(power(m, sub.left().leaves()), power(m, sub.right().left().leaves()),
                                 power(m, sub.right().right().leaves()))
                  .map();
      break;
    case MoveKind::flip:
      local = braiding(power(m, sub.left().leaves()), power(m, sub.right().leaves())).map();
      break;
  }
  const std::size_t after = tree.leaves() - offset - sub.leaves();
  return kron({Matrix::identity(power(m, offset).dim()), local, Matrix::identity(power(m, after).dim())});
}

Matrix path_matrix(const ShuffledWord& u, const std::vector<Move>& path, const HomObject& m) {
  std::size_t total = power(m, u.size()).dim();
  Matrix acc = Matrix::identity(total);
  ShuffledWord cur = u;
  for (const Move& mv : path) {
    acc = move_matrix(cur.tree, mv, m) * acc;
    cur = apply_path(cur, {mv});
  }
  return acc;
}

std::vector<ShuffledWord> all_words(std::size_t n) {
  std::vector<ShuffledWord> out;
  Permutation p = identity_permutation(n);
  std::vector<Permutation> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (const auto& t : enumerate_trees(n))
    for (const auto& q : perms) out.emplace_back(t, q);
  return out;
}

const Permutation s3 = {1, 2, 0};  // 0 -> 1 -> 2 -> 0

}  // namespace

TEST_CASE("trees") {
  CHECK(right_comb(1).is_leaf());
  CHECK(right_comb(3) == PTree::graft(PTree::leaf(), PTree::graft(PTree::leaf(), PTree::leaf())));
  CHECK(right_comb(4).to_string() == "(x(x(xx)))");
  CHECK(right_comb(5) == PTree::graft(right_comb(1), right_comb(4)));
  CHECK(PTree::parse("((xx)(xx))").leaves() == 4);
  CHECK_THROWS_AS(PTree::parse("(xx"), InputError);
  CHECK_THROWS_AS(right_comb(0), InputError);
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(3).size() == 2);
  CHECK(enumerate_trees(4).size() == 5);
  CHECK_THROWS_AS(enumerate_trees(9), ResourceError);
  const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (std::size_t n = 1; n <= 8; ++n) {
    auto trees = enumerate_trees(n);
    CHECK(trees.size() == catalan_count(n));
    CHECK(catalan_count(n) == catalan[n - 1]);
    std::set<std::string> distinct;
    for (const auto& t : trees) distinct.insert(t.to_string());
    CHECK(distinct.size() == trees.size());
  }
}

TEST_CASE("words render the placement convention") {
  CHECK(ShuffledWord(right_comb(3), s3).to_string() == "(X3 (X1 X2))");
  CHECK(ShuffledWord(right_comb(3), compose(s3, s3)).to_string() == "(X2 (X3 X1))");
  CHECK_THROWS_AS(ShuffledWord(right_comb(3), {0, 0, 1}), InputError);
}

TEST_CASE("reassociate on small words") {
  ShuffledWord t3(right_comb(3));
  CHECK(reassociate(t3, t3) == CoherenceMap::identity(3));

  CoherenceMap a = reassociate(ShuffledWord(left_comb(3)), t3);
  CHECK(a.perm == identity_permutation(3));
  CHECK(a.exponents == std::vector<int>{1, 0, -1});

  CoherenceMap b = reassociate(t3, ShuffledWord(right_comb(3), s3));
  CHECK(b.perm == Permutation{1, 2, 0});  // slot 3 -> 1, 1 -> 2, 2 -> 3
  CHECK(b.exponents == std::vector<int>{1, -1, 0});

  CoherenceMap flip = reassociate(ShuffledWord(right_comb(2)), ShuffledWord(right_comb(2), {1, 0}));
  CHECK(flip.perm == Permutation{1, 0});
  CHECK(flip.exponents == std::vector<int>{0, 0});
  CHECK_THROWS_AS(reassociate(ShuffledWord(right_comb(9)), ShuffledWord(right_comb(9))), ResourceError);
}

TEST_CASE("closed forms of b(t3, t3 s) and b(t3, t3 s^2)") {
  std::mt19937_64 rng(1);
  ShuffledWord t3(right_comb(3));
  CoherenceMap b1 = reassociate(t3, ShuffledWord(right_comb(3), s3));
  CoherenceMap b2 = reassociate(t3, ShuffledWord(right_comb(3), compose(s3, s3)));
  for (int trial = 0; trial < 5; ++trial) {
    HomObject m = testing::random_object(2, rng);
    Vector x = testing::random_vector(2, rng), y = testing::random_vector(2, rng),
           z = testing::random_vector(2, rng);
    Vector xyz = kron(x, kron(y, z));
    CHECK(apply_coherence(b1, m, xyz) == kron(m.mu().apply(z), kron(m.mu_inv().apply(x), y)));
    CHECK(apply_coherence(b2, m, xyz) == kron(m.mu().apply(y), kron(z, m.mu_inv().apply(x))));
  }
}

TEST_CASE("apply_coherence evaluates slot exponents") {
  HomObject m(Matrix::diagonal({2, 1}));
  CoherenceMap a = reassociate(ShuffledWord(left_comb(3)), ShuffledWord(right_comb(3)));
  Vector e000 = unit_vector(8, 0);
  CHECK(apply_coherence(a, m, e000) == e000);
  CHECK(apply_coherence(CoherenceMap::identity(3), m, unit_vector(8, 5)) == unit_vector(8, 5));
}

TEST_CASE("coherence maps compose and invert") {
  std::mt19937_64 rng(4);
  auto words = all_words(4);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int t = 0; t < 30; ++t) {
    const auto &u = words[pick(rng)], &v = words[pick(rng)], &w = words[pick(rng)];
    CHECK(reassociate(u, w) == reassociate(v, w) * reassociate(u, v));
    CHECK(reassociate(v, u) == reassociate(u, v).inverse());
  }
  CoherenceMap a = reassociate(words[3], words[40]);
  CoherenceMap b = reassociate(words[40], words[77]);
  CoherenceMap c = reassociate(words[77], words[12]);
  CHECK((c * b) * a == c * (b * a));
}

TEST_CASE("path independence over distinct rewrite paths") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 2; n <= 5; ++n) {
    auto words = all_words(n);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int t = 0; t < 6; ++t) {
      const auto &u = words[pick(rng)], &v = words[pick(rng)];
      std::vector<std::vector<Move>> paths = {
          path_between(u, v, PathStrategy::right_comb, PathStrategy::right_comb),
          path_between(u, v, PathStrategy::left_comb, PathStrategy::right_comb),
          path_between(u, v, PathStrategy::random_detour, PathStrategy::left_comb, 100 + t),
          path_between(u, v, PathStrategy::random_detour, PathStrategy::random_detour, 200 + t),
      };
      CoherenceMap first = follow_path(u, v, paths[0]);
      for (const auto& p : paths) CHECK(follow_path(u, v, p) == first);
    }
  }
}

TEST_CASE("coherence maps agree with composed category matrices") {
  std::mt19937_64 rng(12);
  HomObject m = testing::random_object(2, rng);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto words = all_words(n);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int t = 0; t < 4; ++t) {
      const auto &u = words[pick(rng)], &v = words[pick(rng)];
      auto path = path_between(u, v, PathStrategy::random_detour, PathStrategy::left_comb, t);
      CHECK(materialize(follow_path(u, v, path), m) == path_matrix(u, path, m));
    }
  }
}

TEST_CASE("a path that misses the target is rejected") {
  ShuffledWord u(right_comb(3)), v(left_comb(3));
  CHECK_THROWS_AS(follow_path(u, v, {}), InternalError);
  CHECK_THROWS_AS(apply_path(u, {{MoveKind::associate, {}}}), InternalError);
}

TEST_CASE("path verification report") {
  Report r = verify_paths(4);
  CHECK(r.passed());
  REQUIRE(r.notes().size() == 2);
  CHECK(r.notes()[0] == std::pair<std::string, std::string>{"trees", "5"});
  CHECK(r.notes()[1].second == std::to_string(5 * 5 * 3));
  CHECK(verify_paths(1).passed());
}
