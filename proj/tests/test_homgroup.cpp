#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "homcas/errors.hpp"
#include "homcas/homgroup.hpp"

using namespace homcas;

namespace {

// |Aut| counted by images of a generating set, independent of the search
std::size_t count_by_generators(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    // extend gens[i] -> choice[i] to words; accept if well defined and bijective
    std::vector<std::size_t> image(n, n);
    image[g.identity()] = g.identity();
    std::vector<std::size_t> frontier{g.identity()};
    bool ok = true;
    while (!frontier.empty() && ok) {
      std::vector<std::size_t> next;
      for (std::size_t x : frontier)
        for (std::size_t i = 0; i < gens.size() && ok; ++i) {
          std::size_t y = g.multiply(x, gens[i]);
          std::size_t fy = g.multiply(image[x], choice[i]);
          if (image[y] == n) {
            image[y] = fy;
            next.push_back(y);
          } else if (image[y] != fy) {
            ok = false;
          }
        }
      frontier = std::move(next);
    }
    if (ok) ok = std::set<std::size_t>(image.begin(), image.end()).size() == n && is_automorphism(g, image);
    if (ok) ++count;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == n) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("group constructors") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), InputError);
  FiniteGroup q8 = quaternion_group();
  // i*j = k, j*i = -k, i² = -1
  CHECK(q8.multiply(2, 4) == 6);
  CHECK(q8.multiply(4, 2) == 7);
  CHECK(q8.multiply(2, 2) == 1);
  FiniteGroup d4 = dihedral_group(4);
  // s r s = r⁻¹
  CHECK(d4.multiply(d4.multiply(4, 1), 4) == 3);
  CHECK(group_catalog(6).size() == 8);
  CHECK(group_catalog(8).size() == 14);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphisms(cyclic_group(1)).size() == 1);
  CHECK(automorphisms(cyclic_group(5)).size() == 4);
  CHECK(automorphisms(cyclic_group(6)).size() == 2);
  CHECK(automorphisms(cyclic_group(8)).size() == 4);
  CHECK(automorphisms(direct_product(cyclic_group(2), cyclic_group(2))).size() == 6);
  CHECK(automorphisms(symmetric_group_3()).size() == 6);
  CHECK(automorphisms(dihedral_group(4)).size() == 8);
  CHECK(automorphisms(quaternion_group()).size() == 24);
  CHECK(automorphisms(direct_product(cyclic_group(4), cyclic_group(2))).size() == 8);
  for (const auto& g : group_catalog(8)) {
    INFO(g.name());
    auto all = automorphisms(g);
    std::vector<std::size_t> id(g.order());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    CHECK(all.front().image == id);
    std::vector<std::size_t> gens;
    for (std::size_t x = 0; x < g.order(); ++x) gens.push_back(x);
    if (g.order() <= 6) CHECK(all.size() == count_by_generators(g, gens));
  }
  CHECK(count_by_generators(quaternion_group(), {2, 4}) == 24);
  CHECK(count_by_generators(dihedral_group(4), {1, 4}) == 8);
}

TEST_CASE("exponent automorphisms of cyclic groups") {
  FiniteGroup c6 = cyclic_group(6);
  CHECK(automorphism_from_exponent(c6, 5).image == std::vector<std::size_t>{0, 5, 4, 3, 2, 1});
  CHECK(automorphism_from_exponent(c6, -1).image == std::vector<std::size_t>{0, 5, 4, 3, 2, 1});
  CHECK_THROWS_AS(automorphism_from_exponent(c6, 2), NotAutomorphism);
}

TEST_CASE("Hom-groups satisfy their laws and linearize to the twisted group algebra") {
  for (const auto& g : group_catalog(6))
    for (const auto& phi : automorphisms(g)) {
      HomGroup h(g, phi);
      INFO(g.name());
      CHECK(h.verify().passed());
      HomHopfAlgebra lin = linearize(h);
      auto twisted = twist_hopf(catalog::group_bialgebra(g.cayley()), catalog::group_inversion(g.cayley()),
                                catalog::permutation_automorphism(phi.image));
      CHECK(lin.algebra().mult == twisted.algebra().mult);
      CHECK(lin.coalgebra().comult == twisted.coalgebra().comult);
      CHECK(lin.coalgebra().counit == twisted.coalgebra().counit);
      CHECK(lin.antipode == twisted.antipode);
      CHECK(check_hom_hopf(lin).passed());
    }
}

TEST_CASE("non-automorphisms are rejected") {
  FiniteGroup c4 = cyclic_group(4);
  CHECK_THROWS_AS(HomGroup(c4, GroupAutomorphism{{0, 2, 1, 3}}), NotAutomorphism);
}

TEST_CASE("the antipode of every small Hom-group algebra is inversion") {
  for (const auto& g : group_catalog(6))
    for (const auto& phi : automorphisms(g)) {
      HomHopfAlgebra lin = linearize(HomGroup(g, phi));
      AntipodeResult r = solve_antipode(lin.bialgebra);
      INFO(g.name());
      REQUIRE(r.status == AntipodeResult::Status::unique);
      CHECK(r.antipode == lin.antipode);
    }
}
