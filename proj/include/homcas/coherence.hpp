#pragma once

// Parenthesized tensor words over a single object (M, mu) and the structural
// isomorphisms between them. Every composite of twisted associators and flips
// acts on M^{⊗n} as "permute the slots, then apply a power of mu to each
// slot", so a coherence map is stored as a permutation plus an exponent per
// output slot.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "homcas/homspace.hpp"
#include "homcas/kernel.hpp"
#include "homcas/report.hpp"

namespace homcas {

/// Planar full binary tree; leaves are unlabeled.
class PTree {
 public:
  PTree() = default;  // a single leaf
  static PTree leaf() { return PTree(); }
  static PTree graft(const PTree& left, const PTree& right);
  /// Parses the bracket notation produced by to_string(), e.g. "(x(xx))".
  static PTree parse(const std::string& text);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  const PTree& left() const;
  const PTree& right() const;
  std::size_t leaves() const noexcept;
  std::string to_string() const;

  friend bool operator==(const PTree& a, const PTree& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// X1(X2(...(X_{n-1} X_n))). Throws InputError for n = 0.
PTree right_comb(std::size_t n);
/// ((X1 X2) X3)...X_n.
PTree left_comb(std::size_t n);
/// All trees with n leaves, split point ascending. Throws ResourceError past 8.
std::vector<PTree> enumerate_trees(std::size_t n);
/// (2n-2)! / ((n-1)! n!)
std::uint64_t catalan_count(std::size_t n);

/// Zero-based permutation; perm[i] is the image of i.
using Permutation = std::vector<std::size_t>;
Permutation identity_permutation(std::size_t n);
Permutation inverse(const Permutation& p);
/// (a ∘ b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
bool is_permutation(const Permutation& p);

/// A tree together with a placement of the variables X_1..X_n: variable i
/// sits at leaf position perm[i]. With s the 3-cycle 0->1->2->0, the word
/// (right_comb(3), s) reads X3(X1 X2).
struct ShuffledWord {
  PTree tree;
  Permutation perm;

  ShuffledWord(PTree t, Permutation p);
  explicit ShuffledWord(PTree t);
  std::size_t size() const noexcept { return perm.size(); }
  /// Variable sitting at each leaf position.
  std::vector<std::size_t> arrangement() const;
  std::string to_string() const;
  friend bool operator==(const ShuffledWord& a, const ShuffledWord& b) = default;
};

/// Output slot i receives mu^{exponents[i]} applied to input slot perm^{-1}(i).
struct CoherenceMap {
  std::size_t n = 0;
  Permutation perm;
  std::vector<int> exponents;

  static CoherenceMap identity(std::size_t n);
  CoherenceMap inverse() const;
  std::string to_string() const;
  friend bool operator==(const CoherenceMap& a, const CoherenceMap& b) = default;
};
/// b ∘ a
CoherenceMap operator*(const CoherenceMap& b, const CoherenceMap& a);

/// Elementary structural moves applied at the node reached by `address`
/// (false = left child, true = right child).
enum class MoveKind {
  associate,    // ((A B) C) -> (A (B C)) via ã: A gets +1, C gets -1
  unassociate,  // (A (B C)) -> ((A B) C) via ã^{-1}: A gets -1, C gets +1
  flip,         // (A B) -> (B A) via c
};
struct Move {
  MoveKind kind;
  std::vector<bool> address;
  friend bool operator==(const Move& a, const Move& b) = default;
};
Move inverse(const Move& m);
std::vector<Move> inverse_path(const std::vector<Move>& path);

/// Strategy used to reach the canonical word (right comb, identity placement).
enum class PathStrategy {
  right_comb,     // rotate to the right comb, bubble-sort with adjacent swaps
  left_comb,      // rotate to the left comb, sort there, then rotate right
  random_detour,  // random valid moves first, then right_comb
};

/// Moves taking `word` to the canonical word.
std::vector<Move> canonical_path(const ShuffledWord& word, PathStrategy strategy,
                                 std::uint64_t seed = 0);
/// Moves from u to v: canonical_path(u, forward) followed by the inverse of
/// canonical_path(v, backward).
std::vector<Move> path_between(const ShuffledWord& u, const ShuffledWord& v,
                               PathStrategy forward, PathStrategy backward,
                               std::uint64_t seed = 0);

/// Applies the moves to u, checks that the result is v, and returns the
/// composed map. Throws InternalError if the path does not end at v.
CoherenceMap follow_path(const ShuffledWord& u, const ShuffledWord& v, const std::vector<Move>& path);
/// Applies moves to u and returns the word reached.
ShuffledWord apply_path(const ShuffledWord& u, const std::vector<Move>& path);

/// b(u, v) along the default path. Throws ResourceError for n > 8.
CoherenceMap reassociate(const ShuffledWord& u, const ShuffledWord& v);

/// The map on M^{⊗n} (slot 0 most significant in the flat index).
Vector apply_coherence(const CoherenceMap& map, const HomObject& m, const Vector& x);
Matrix materialize(const CoherenceMap& map, const HomObject& m);

/// Applies mu^{exponents[i]} to slot i of x ∈ M^{⊗n}. The blocks may be
/// different objects: slot i lives in objects[i].
Vector apply_slot_powers(const std::vector<const HomObject*>& objects,
                         const std::vector<int>& exponents, const Vector& x);

/// For every ordered pair of trees on n leaves and three placements of the
/// target (identity, reversal, cyclic shift), composes four rewrite paths
/// and checks they give one map. Axioms tree_count (against the Catalan
/// number) and path_independence, witness (source tree, target tree,
/// placement).
Report verify_paths(std::size_t leaves);

}  // namespace homcas
