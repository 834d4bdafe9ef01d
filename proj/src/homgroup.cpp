#include "homcas/homgroup.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "homcas/errors.hpp"

namespace homcas {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> cayley, std::string name)
    : table_(std::move(cayley)), name_(std::move(name)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InputError("a group needs at least one element");
  for (const auto& row : table_) {
    if (row.size() != n) throw InputError("Cayley table is not square");
    for (std::size_t v : row)
      if (v >= n) throw InputError("Cayley table entry out of range");
  }
  identity_ = n;
  for (std::size_t e = 0; e < n && identity_ == n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) identity_ = e;
  }
  if (identity_ == n) throw InputError("Cayley table has no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InputError("Cayley table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
  for (std::size_t g = 0; g < n; ++g)
    if (inverse_[g] == n) throw InputError("element " + std::to_string(g) + " has no inverse");
}

FiniteGroup cyclic_group(std::size_t n) {
  return FiniteGroup(catalog::cyclic_table(n), "C" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw InputError("dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      // (r^a s^b)(r^c s^d) = r^{a ± c} s^{b+d}
      const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      t[x][y] = rot + n * ((b + d) % 2);
    }
  return FiniteGroup(std::move(t), "D" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // units 1, i, j, k as 0..3; unit_table gives (sign, unit) of u*v
  const std::array<std::array<std::pair<int, std::size_t>, 4>, 4> unit_table{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const int sx = x % 2 ? -1 : 1, sy = y % 2 ? -1 : 1;
      const auto [s, u] = unit_table[x / 2][y / 2];
      const int sign = sx * sy * s;
      t[x][y] = 2 * u + (sign < 0 ? 1 : 0);
    }
  return FiniteGroup(std::move(t), "Q8");
}

FiniteGroup symmetric_group_3() { return FiniteGroup(catalog::symmetric3_table(), "S3"); }

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = g.multiply(x / m, y / m) * m + h.multiply(x % m, y % m);
  return FiniteGroup(std::move(t), g.name() + "x" + h.name());
}

std::vector<FiniteGroup> group_catalog(std::size_t max_order) {
  if (max_order > 8) throw InputError("the group catalog stops at order 8");
  std::vector<FiniteGroup> all;
  for (std::size_t n = 1; n <= max_order; ++n) all.push_back(cyclic_group(n));
  if (max_order >= 4) all.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  if (max_order >= 6) all.push_back(symmetric_group_3());
  if (max_order >= 8) {
    all.push_back(direct_product(cyclic_group(4), cyclic_group(2)));
    all.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
    all.push_back(dihedral_group(4));
    all.push_back(quaternion_group());
  }
  return all;
}

bool is_automorphism(const FiniteGroup& g, const std::vector<std::size_t>& image) {
  const std::size_t n = g.order();
  if (image.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : image) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (image[g.multiply(a, b)] != g.multiply(image[a], image[b])) return false;
  return true;
}

GroupAutomorphism automorphism_from_exponent(const FiniteGroup& cyclic, long k) {
  const long n = static_cast<long>(cyclic.order());
  const long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1)
    throw NotAutomorphism("g -> g^" + std::to_string(k) + " is not bijective on C" + std::to_string(n));
  GroupAutomorphism phi;
  phi.image.resize(cyclic.order());
  for (long i = 0; i < n; ++i) phi.image[static_cast<std::size_t>(i)] = static_cast<std::size_t>((i * kk) % n);
  if (!is_automorphism(cyclic, phi.image)) throw InputError("group is not indexed as a cyclic group");
  return phi;
}

std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 8) throw ResourceError("automorphism search is limited to order 8");
  std::vector<std::size_t> others;
  for (std::size_t x = 0; x < n; ++x)
    if (x != g.identity()) others.push_back(x);
  std::vector<GroupAutomorphism> out;
  std::vector<std::size_t> perm = others;
  do {
    std::vector<std::size_t> image(n);
    image[g.identity()] = g.identity();
    for (std::size_t i = 0; i < others.size(); ++i) image[others[i]] = perm[i];
    if (is_automorphism(g, image)) out.push_back({std::move(image)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

HomGroup::HomGroup(FiniteGroup group, GroupAutomorphism phi) : group_(std::move(group)), phi_(std::move(phi)) {
  if (!is_automorphism(group_, phi_.image)) throw NotAutomorphism("map is not a group automorphism");
  phi_inv_.resize(group_.order());
  for (std::size_t g = 0; g < group_.order(); ++g) phi_inv_[phi_.image[g]] = g;
}

std::size_t HomGroup::product(std::size_t g, std::size_t h) const { return phi_.image[group_.multiply(g, h)]; }

std::pair<std::size_t, std::size_t> HomGroup::comultiply(std::size_t g) const {
  return {phi_inv_.at(g), phi_inv_.at(g)};
}

Report HomGroup::verify() const {
  const std::size_t n = group_.order();
  const auto& phi = phi_.image;
  Report r;
  {
    AxiomResult& a = r.axiom("phi_multiplicative");
    for (std::size_t g = 0; g < n && a.passed; ++g)
      for (std::size_t h = 0; h < n && a.passed; ++h)
        if (phi[product(g, h)] != product(phi[g], phi[h])) a.fail({g, h}, "φ(g·h) ≠ φ(g)·φ(h)");
  }
  {
    AxiomResult& a = r.axiom("hom_associativity");
    for (std::size_t g = 0; g < n && a.passed; ++g)
      for (std::size_t h = 0; h < n && a.passed; ++h)
        for (std::size_t k = 0; k < n && a.passed; ++k)
          if (product(phi[g], product(h, k)) != product(product(g, h), phi[k]))
            a.fail({g, h, k}, "φ(g)·(h·k) ≠ (g·h)·φ(k)");
  }
  {
    AxiomResult& a = r.axiom("hom_unitality");
    for (std::size_t g = 0; g < n && a.passed; ++g)
      if (product(g, unit()) != phi[g] || product(unit(), g) != phi[g]) a.fail({g}, "g·1 = 1·g = φ(g) fails");
  }
  {
    AxiomResult& a = r.axiom("hom_coassociativity");
    for (std::size_t g = 0; g < n && a.passed; ++g) {
      auto [g1, g2] = comultiply(g);
      // (φ⁻¹ × δ)δ(g) versus (δ × φ⁻¹)δ(g)
      auto [g21, g22] = comultiply(g2);
      auto [g11, g12] = comultiply(g1);
      if (phi_inv_[g1] != g11 || g21 != g12 || g22 != phi_inv_[g2]) a.fail({g}, "δ is not Hom-coassociative");
    }
  }
  {
    AxiomResult& a = r.axiom("antipode");
    for (std::size_t g = 0; g < n && a.passed; ++g) {
      auto [g1, g2] = comultiply(g);
      if (product(antipode(g1), g2) != unit() || product(g1, antipode(g2)) != unit())
        a.fail({g}, "S(g1)·g2 = g1·S(g2) = 1 fails");
    }
  }
  {
    AxiomResult& a = r.axiom("antipode_commutes");
    for (std::size_t g = 0; g < n && a.passed; ++g)
      if (antipode(phi[g]) != phi[antipode(g)]) a.fail({g}, "S∘φ ≠ φ∘S");
  }
  return r;
}

HomHopfAlgebra linearize(const HomGroup& h) {
  const FiniteGroup& g = h.group();
  const std::size_t n = g.order();
  Matrix mult(n, n * n);
  Matrix comult(n * n, n);
  std::vector<std::size_t> inversion(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) mult(h.product(x, y), x * n + y) = 1;
    auto [a, b] = h.comultiply(x);
    comult(a * n + b, x) = 1;
    inversion[x] = h.antipode(x);
  }
  HomObject obj(Matrix::permutation(h.phi().image));
  HomBialgebra b{HomAlgebra{obj, std::move(mult), unit_vector(n, h.unit())},
                 HomCoalgebra{obj, std::move(comult), Vector(n, Rational(1))}};
  return HomHopfAlgebra{std::move(b), Matrix::permutation(inversion)};
}

}  // namespace homcas
