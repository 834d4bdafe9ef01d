#include "homcas/coherence.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "homcas/errors.hpp"

namespace homcas {

struct PTree::Node {
  PTree left;
  PTree right;
  std::size_t leaves;
};

PTree PTree::graft(const PTree& left, const PTree& right) {
  PTree t;
  t.node_ = std::make_shared<const Node>(Node{left, right, left.leaves() + right.leaves()});
  return t;
}

const PTree& PTree::left() const {
  if (is_leaf()) throw InputError("a leaf has no children");
  return node_->left;
}

const PTree& PTree::right() const {
  if (is_leaf()) throw InputError("a leaf has no children");
  return node_->right;
}

std::size_t PTree::leaves() const noexcept { return is_leaf() ? 1 : node_->leaves; }

std::string PTree::to_string() const {
  if (is_leaf()) return "x";
  return "(" + node_->left.to_string() + node_->right.to_string() + ")";
}

bool operator==(const PTree& a, const PTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return false;
  return a.node_->leaves == b.node_->leaves && a.node_->left == b.node_->left &&
         a.node_->right == b.node_->right;
}

namespace {

PTree parse_tree(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size()) throw InputError("tree text ends early");
  if (s[pos] == 'x') {
    ++pos;
    return PTree::leaf();
  }
  if (s[pos] != '(') throw InputError("unexpected character in tree at offset " + std::to_string(pos));
  ++pos;
  PTree l = parse_tree(s, pos);
  PTree r = parse_tree(s, pos);
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size() || s[pos] != ')') throw InputError("expected ')' in tree at offset " + std::to_string(pos));
  ++pos;
  return PTree::graft(l, r);
}

}  // namespace

PTree PTree::parse(const std::string& text) {
  std::size_t pos = 0;
  PTree t = parse_tree(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) throw InputError("trailing characters after tree");
  return t;
}

PTree right_comb(std::size_t n) {
  if (n == 0) throw InputError("a tree needs at least one leaf");
  PTree t;
  for (std::size_t i = 1; i < n; ++i) t = PTree::graft(PTree::leaf(), t);
  return t;
}

PTree left_comb(std::size_t n) {
  if (n == 0) throw InputError("a tree needs at least one leaf");
  PTree t;
  for (std::size_t i = 1; i < n; ++i) t = PTree::graft(t, PTree::leaf());
  return t;
}

std::vector<PTree> enumerate_trees(std::size_t n) {
  if (n == 0) throw InputError("a tree needs at least one leaf");
  if (n > 8) throw ResourceError("tree enumeration is limited to 8 leaves");
  std::vector<std::vector<PTree>> by_size(n + 1);
  by_size[1] = {PTree::leaf()};
  for (std::size_t m = 2; m <= n; ++m)
    for (std::size_t k = 1; k < m; ++k)
      for (const PTree& l : by_size[k])
        for (const PTree& r : by_size[m - k]) by_size[m].push_back(PTree::graft(l, r));
  return by_size[n];
}

std::uint64_t catalan_count(std::size_t n) {
  if (n == 0) throw InputError("a tree needs at least one leaf");
  // binom(2n-2, n-1) / n
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i < n; ++i) c = c * (n - 1 + i) / i;
  return c / n;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InputError("permutation sizes differ");
  Permutation c(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

ShuffledWord::ShuffledWord(PTree t, Permutation p) : tree(std::move(t)), perm(std::move(p)) {
  if (!is_permutation(perm)) throw InputError("word placement is not a permutation");
  if (tree.leaves() != perm.size()) throw InputError("placement size differs from leaf count");
}

ShuffledWord::ShuffledWord(PTree t) : tree(std::move(t)), perm(identity_permutation(tree.leaves())) {}

std::vector<std::size_t> ShuffledWord::arrangement() const { return homcas::inverse(perm); }

namespace {

std::string render(const PTree& t, const std::vector<std::size_t>& vars, std::size_t& pos) {
  if (t.is_leaf()) return "X" + std::to_string(vars[pos++] + 1);
  std::string l = render(t.left(), vars, pos);
  std::string r = render(t.right(), vars, pos);
  return "(" + l + " " + r + ")";
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string ShuffledWord::to_string() const {
  std::size_t pos = 0;
  return render(tree, arrangement(), pos);
}

CoherenceMap CoherenceMap::identity(std::size_t n) {
  return CoherenceMap{n, identity_permutation(n), std::vector<int>(n, 0)};
}

CoherenceMap CoherenceMap::inverse() const {
  CoherenceMap r{n, homcas::inverse(perm), std::vector<int>(n, 0)};
  for (std::size_t j = 0; j < n; ++j) r.exponents[j] = -exponents[perm[j]];
  return r;
}

std::string CoherenceMap::to_string() const {
  return "perm=(" + join(perm) + ") exponents=(" + join(exponents) + ")";
}

CoherenceMap operator*(const CoherenceMap& b, const CoherenceMap& a) {
  if (a.n != b.n) throw InputError("coherence maps of different arity");
  CoherenceMap c{a.n, compose(b.perm, a.perm), std::vector<int>(a.n, 0)};
  const Permutation binv = inverse(b.perm);
  for (std::size_t i = 0; i < a.n; ++i) c.exponents[i] = b.exponents[i] + a.exponents[binv[i]];
  return c;
}

Move inverse(const Move& m) {
  switch (m.kind) {
    case MoveKind::associate:
      return {MoveKind::unassociate, m.address};
    case MoveKind::unassociate:
      return {MoveKind::associate, m.address};
    case MoveKind::flip:
      return m;
  }
  throw InternalError("unknown move kind");
}

std::vector<Move> inverse_path(const std::vector<Move>& path) {
  std::vector<Move> out;
  out.reserve(path.size());
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

namespace {

// Leaf order, variable labels and accumulated exponents of a word in motion.
struct State {
  PTree tree;
  std::vector<std::size_t> vars;
  std::vector<int> exps;
};

State start(const ShuffledWord& w) {
  return State{w.tree, w.arrangement(), std::vector<int>(w.size(), 0)};
}

struct Site {
  PTree sub;
  std::size_t offset;
};

Site locate(const PTree& t, const std::vector<bool>& address) {
  PTree cur = t;
  std::size_t offset = 0;
  for (bool go_right : address) {
    if (cur.is_leaf()) throw InternalError("move address runs past a leaf");
    if (go_right) {
      offset += cur.left().leaves();
      cur = cur.right();
    } else {
      cur = cur.left();
    }
  }
  return {cur, offset};
}

PTree rebuild(const PTree& t, const std::vector<bool>& address, std::size_t depth,
              const PTree& replacement) {
  if (depth == address.size()) return replacement;
  if (address[depth]) return PTree::graft(t.left(), rebuild(t.right(), address, depth + 1, replacement));
  return PTree::graft(rebuild(t.left(), address, depth + 1, replacement), t.right());
}

void shift(std::vector<int>& exps, std::size_t from, std::size_t count, int delta) {
  for (std::size_t i = from; i < from + count; ++i) exps[i] += delta;
}

void apply_move(State& s, const Move& m) {
  Site site = locate(s.tree, m.address);
  if (site.sub.is_leaf()) throw InternalError("move applied at a leaf");
  const PTree& l = site.sub.left();
  const PTree& r = site.sub.right();
  const std::size_t o = site.offset;
  PTree next;
  switch (m.kind) {
    case MoveKind::associate: {
      if (l.is_leaf()) throw InternalError("associate needs a left subtree");
      const PTree &a = l.left(), &b = l.right();
      next = PTree::graft(a, PTree::graft(b, r));
      shift(s.exps, o, a.leaves(), +1);
      shift(s.exps, o + l.leaves(), r.leaves(), -1);
      break;
    }
    case MoveKind::unassociate: {
      if (r.is_leaf()) throw InternalError("unassociate needs a right subtree");
      const PTree &b = r.left(), &c = r.right();
      next = PTree::graft(PTree::graft(l, b), c);
      shift(s.exps, o, l.leaves(), -1);
      shift(s.exps, o + l.leaves() + b.leaves(), c.leaves(), +1);
      break;
    }
    case MoveKind::flip: {
      next = PTree::graft(r, l);
      const std::size_t mid = o + l.leaves();
      const std::size_t end = o + site.sub.leaves();
      std::rotate(s.vars.begin() + o, s.vars.begin() + mid, s.vars.begin() + end);
      std::rotate(s.exps.begin() + o, s.exps.begin() + mid, s.exps.begin() + end);
      break;
    }
  }
  s.tree = rebuild(s.tree, m.address, 0, next);
}

void emit(State& s, std::vector<Move>& out, MoveKind kind, std::vector<bool> address) {
  Move m{kind, std::move(address)};
  apply_move(s, m);
  out.push_back(std::move(m));
}

void rotate_to_right_comb(State& s, std::vector<Move>& out) {
  std::vector<bool> addr;
  for (;;) {
    Site site = locate(s.tree, addr);
    if (site.sub.is_leaf()) return;
    if (!site.sub.left().is_leaf()) {
      emit(s, out, MoveKind::associate, addr);
      continue;
    }
    addr.push_back(true);
  }
}

void rotate_to_left_comb(State& s, std::vector<Move>& out) {
  std::vector<bool> addr;
  for (;;) {
    Site site = locate(s.tree, addr);
    if (site.sub.is_leaf()) return;
    if (!site.sub.right().is_leaf()) {
      emit(s, out, MoveKind::unassociate, addr);
      continue;
    }
    addr.push_back(false);
  }
}

// Bubble sort by adjacent swaps on a right comb.
void sort_right_comb(State& s, std::vector<Move>& out) {
  const std::size_t n = s.vars.size();
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      if (s.vars[p] < s.vars[p + 1]) continue;
      std::vector<bool> addr(p, true);
      if (p + 2 == n) {
        emit(s, out, MoveKind::flip, addr);
      } else {
        emit(s, out, MoveKind::unassociate, addr);
        std::vector<bool> inner = addr;
        inner.push_back(false);
        emit(s, out, MoveKind::flip, inner);
        emit(s, out, MoveKind::associate, addr);
      }
      swapped = true;
    }
  }
}

// Bubble sort by adjacent swaps on a left comb; the subtree holding leaves
// 0..p+1 sits at n-2-p left steps from the root.
void sort_left_comb(State& s, std::vector<Move>& out) {
  const std::size_t n = s.vars.size();
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      if (s.vars[p] < s.vars[p + 1]) continue;
      std::vector<bool> addr(n - 2 - p, false);
      if (p == 0) {
        emit(s, out, MoveKind::flip, addr);
      } else {
        emit(s, out, MoveKind::associate, addr);
        std::vector<bool> inner = addr;
        inner.push_back(true);
        emit(s, out, MoveKind::flip, inner);
        emit(s, out, MoveKind::unassociate, addr);
      }
      swapped = true;
    }
  }
}

void collect_moves(const PTree& t, std::vector<bool>& addr, std::vector<Move>& out) {
  if (t.is_leaf()) return;
  out.push_back({MoveKind::flip, addr});
  if (!t.left().is_leaf()) out.push_back({MoveKind::associate, addr});
  if (!t.right().is_leaf()) out.push_back({MoveKind::unassociate, addr});
  addr.push_back(false);
  collect_moves(t.left(), addr, out);
  addr.back() = true;
  collect_moves(t.right(), addr, out);
  addr.pop_back();
}

void random_walk(State& s, std::vector<Move>& out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t steps = 3 * s.vars.size();
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<Move> options;
    std::vector<bool> addr;
    collect_moves(s.tree, addr, options);
    if (options.empty()) return;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    Move m = options[pick(rng)];
    apply_move(s, m);
    out.push_back(std::move(m));
  }
}

void check_arity(std::size_t n) {
  if (n > 8) throw ResourceError("coherence search is limited to 8 leaves");
}

}  // namespace

std::vector<Move> canonical_path(const ShuffledWord& word, PathStrategy strategy, std::uint64_t seed) {
  check_arity(word.size());
  State s = start(word);
  std::vector<Move> out;
  switch (strategy) {
    case PathStrategy::right_comb:
      rotate_to_right_comb(s, out);
      sort_right_comb(s, out);
      break;
    case PathStrategy::left_comb:
      rotate_to_left_comb(s, out);
      sort_left_comb(s, out);
      rotate_to_right_comb(s, out);
      break;
    case PathStrategy::random_detour:
      random_walk(s, out, seed);
      rotate_to_right_comb(s, out);
      sort_right_comb(s, out);
      break;
  }
  return out;
}

std::vector<Move> path_between(const ShuffledWord& u, const ShuffledWord& v, PathStrategy forward,
                               PathStrategy backward, std::uint64_t seed) {
  if (u.size() != v.size()) throw InputError("words have different leaf counts");
  std::vector<Move> path = canonical_path(u, forward, seed);
  std::vector<Move> back = inverse_path(canonical_path(v, backward, seed + 1));
  path.insert(path.end(), back.begin(), back.end());
  return path;
}

ShuffledWord apply_path(const ShuffledWord& u, const std::vector<Move>& path) {
  State s = start(u);
  for (const Move& m : path) apply_move(s, m);
  return ShuffledWord(s.tree, inverse(s.vars));
}

CoherenceMap follow_path(const ShuffledWord& u, const ShuffledWord& v, const std::vector<Move>& path) {
  if (u.size() != v.size()) throw InputError("words have different leaf counts");
  State s = start(u);
  for (const Move& m : path) apply_move(s, m);
  if (!(s.tree == v.tree) || s.vars != v.arrangement())
    throw InternalError("rewrite path does not reach the target word");
  const std::size_t n = u.size();
  CoherenceMap map{n, Permutation(n), s.exps};
  for (std::size_t q = 0; q < n; ++q) map.perm[u.perm[s.vars[q]]] = q;
  return map;
}

CoherenceMap reassociate(const ShuffledWord& u, const ShuffledWord& v) {
  if (u.size() != v.size()) throw InputError("words have different leaf counts");
  check_arity(u.size());
  return follow_path(u, v, path_between(u, v, PathStrategy::right_comb, PathStrategy::right_comb));
}

Vector apply_slot_powers(const std::vector<const HomObject*>& objects, const std::vector<int>& exponents,
                         const Vector& x) {
  if (objects.size() != exponents.size()) throw InputError("one exponent per slot is required");
  std::size_t total = 1;
  for (const HomObject* o : objects) total *= o->dim();
  if (x.size() != total) throw InputError("vector length does not match the tensor power");
  Vector cur = x;
  std::size_t pre = 1;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::size_t d = objects[i]->dim();
    const std::size_t post = total / (pre * d);
    if (exponents[i] != 0) {
      const SparseColumns a(objects[i]->mu_power(exponents[i]));
      Vector next(total);
      for (std::size_t p = 0; p < pre; ++p)
        for (std::size_t s = 0; s < d; ++s)
          for (std::size_t q = 0; q < post; ++q) {
            const Rational& v = cur[(p * d + s) * post + q];
            if (is_zero(v)) continue;
            for (const auto& e : a.column(s)) next[(p * d + e.row) * post + q] += e.value * v;
          }
      cur = std::move(next);
    }
    pre *= d;
  }
  return cur;
}

Vector apply_coherence(const CoherenceMap& map, const HomObject& m, const Vector& x) {
  const std::size_t n = map.n;
  const std::size_t d = m.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= d;
  if (x.size() != total) throw InputError("vector length does not match the tensor power");
  std::vector<std::size_t> weight(n, 1);
  for (std::size_t i = n; i-- > 1;) weight[i - 1] = weight[i] * d;
  Vector permuted(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (is_zero(x[flat])) continue;
    std::size_t rest = flat;
    std::size_t target = 0;
    for (std::size_t j = 0; j < n; ++j) {
      target += (rest / weight[j]) * weight[map.perm[j]];
      rest %= weight[j];
    }
    permuted[target] = x[flat];
  }
  return apply_slot_powers(std::vector<const HomObject*>(n, &m), map.exponents, permuted);
}

Matrix materialize(const CoherenceMap& map, const HomObject& m) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < map.n; ++i) total *= m.dim();
  Matrix out(total, total);
  for (std::size_t c = 0; c < total; ++c) {
    Vector col = apply_coherence(map, m, unit_vector(total, c));
    for (std::size_t r = 0; r < total; ++r)
      if (!is_zero(col[r])) out(r, c) = col[r];
  }
  return out;
}

Report verify_paths(std::size_t leaves) {
  const std::vector<PTree> trees = enumerate_trees(leaves);
  Report r;
  r.note("trees", std::to_string(trees.size()));
  if (trees.size() != catalan_count(leaves)) r.axiom("tree_count").fail({trees.size()}, "tree count is not Catalan");
  else r.axiom("tree_count");

  std::vector<Permutation> placements{identity_permutation(leaves)};
  Permutation reversal(leaves), shift(leaves);
  for (std::size_t i = 0; i < leaves; ++i) {
    reversal[i] = leaves - 1 - i;
    shift[i] = (i + 1) % leaves;
  }
  placements.push_back(reversal);
  placements.push_back(shift);

  AxiomResult& a = r.axiom("path_independence");
  std::size_t pairs = 0;
  for (std::size_t s = 0; s < trees.size() && a.passed; ++s)
    for (std::size_t t = 0; t < trees.size() && a.passed; ++t)
      for (std::size_t p = 0; p < placements.size() && a.passed; ++p) {
        ShuffledWord u(trees[s]);
        ShuffledWord v(trees[t], placements[p]);
        const std::uint64_t seed = (s * trees.size() + t) * placements.size() + p;
        const std::vector<std::vector<Move>> paths{
            path_between(u, v, PathStrategy::right_comb, PathStrategy::right_comb),
            path_between(u, v, PathStrategy::left_comb, PathStrategy::right_comb),
            path_between(u, v, PathStrategy::random_detour, PathStrategy::left_comb, seed),
            path_between(u, v, PathStrategy::random_detour, PathStrategy::random_detour, seed + 1),
        };
        const CoherenceMap first = follow_path(u, v, paths[0]);
        for (std::size_t k = 1; k < paths.size(); ++k)
          if (follow_path(u, v, paths[k]) != first) a.fail({s, t, p}, "rewrite paths disagree");
        ++pairs;
      }
  r.note("word_pairs", std::to_string(pairs));
  return r;
}

}  // namespace homcas
