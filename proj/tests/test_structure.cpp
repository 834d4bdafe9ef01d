#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcas/errors.hpp"
#include "homcas/structure.hpp"

using namespace homcas;

namespace {

const auto c3 = catalog::cyclic_table(3);

HomHopfAlgebra twisted_c3() {
  return twist_hopf(catalog::group_bialgebra(c3), catalog::group_inversion(c3),
                    catalog::permutation_automorphism({0, 2, 1}));
}

std::vector<Structure> samples() {
  HomHopfAlgebra h = twisted_c3();
  HomObject swap(Matrix::from_rows({{0, 1}, {1, 0}}));
  auto s = catalog::sweedler();
  std::vector<Structure> out;
  out.push_back({"m2", catalog::matrix_algebra_2()});
  out.push_back({"", twist_algebra(s.algebra, catalog::sweedler_scaling(Rational(1, 3)))});
  out.push_back({"", twist_coalgebra(s.coalgebra, catalog::sweedler_scaling(-2))});
  out.push_back({"c3", h.bialgebra});
  out.push_back({"c3 hopf", h});
  out.push_back({"sl2", twist_lie(catalog::sl2_bracket(), catalog::sl2_scaling())});
  out.push_back({"", LeftModuleOver{h.algebra(), LeftHomModule{h.object(), h.algebra().mult}}});
  out.push_back({"", ComoduleOver{h.coalgebra(), RightHomComodule{h.object(), h.coalgebra().comult}}});
  out.push_back({"free", HopfModuleOver{h, functor_F(swap, h)}});
  out.push_back({"q8", GroupWithAutomorphism{quaternion_group(), automorphisms(quaternion_group())[5]}});
  return out;
}

std::string c3_text() { return serialize({"", twisted_c3()}); }

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

std::string error_of(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("every kind round trips byte for byte and checks clean") {
  auto all = samples();
  REQUIRE(all.size() == 10);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const Structure& s = all[k];
    CHECK(s.kind() == static_cast<StructureKind>(k));
    CHECK(structure_kind(to_string(s.kind())) == s.kind());
    const std::string text = serialize(s);
    Structure back = parse_structure(text);
    CHECK(back.kind() == s.kind());
    CHECK(back.name == s.name);
    CHECK(serialize(back) == text);
    Report r = check_structure(back);
    CHECK_MESSAGE(r.passed(), to_string(s.kind()), "\n", r.to_text());
  }
}

TEST_CASE("serialized layout") {
  const std::string text = serialize({"", catalog::matrix_algebra_2()});
  // keys sorted, one compact triple per line, E11·E11 = E11 first
  CHECK(text.rfind("{\n  \"dim\": 4,\n  \"kind\": \"classical_algebra\",\n  \"mult\": [\n", 0) == 0);
  CHECK(text.find("    {\"c\":\"1\",\"i\":0,\"j\":0,\"k\":0},\n") != std::string::npos);
  CHECK(text.find("\"unit\": [\"1\",\"0\",\"0\",\"1\"]\n}\n") != std::string::npos);

  Structure lie = samples()[5];
  const std::string l = serialize(lie);
  CHECK(l.find("[\"1/2\",\"0\",\"0\"]") == std::string::npos);
  CHECK(l.find("[\"0\",\"0\",\"1/2\"]") != std::string::npos);
}

TEST_CASE("unreduced and reordered input canonicalizes") {
  const std::string text = R"({"unit": ["2/2", "0/5"], "mult": [
      {"k": 1, "c": "1", "j": 1, "i": 0}, {"i": 1, "j": 0, "k": 1, "c": "3/3"},
      {"i": 0, "j": 0, "k": 0, "c": "1"}],
    "kind": "classical_algebra", "dim": 2})";
  Structure s = parse_structure(text);
  const std::string canon = serialize(s);
  CHECK(canon.find("\"unit\": [\"1\",\"0\"]") != std::string::npos);
  CHECK(canon.find("{\"c\":\"1\",\"i\":0,\"j\":0,\"k\":0},\n    {\"c\":\"1\",\"i\":0,\"j\":1,\"k\":1}") !=
        std::string::npos);
  CHECK(serialize(parse_structure(canon)) == canon);
  // Q[ε]/(ε²) with ε² = 0 omitted
  CHECK(check_structure(s).passed());
}

TEST_CASE("malformed files name the field") {
  const std::string good = c3_text();
  CHECK(error_of(replace(good, "\"c\":\"1\"", "\"c\":\"1/0\"")).find("field 'comult[0].c'") != std::string::npos);
  CHECK(error_of(replace(good, "\"c\":\"1\"", "\"c\":1")).find("written as strings") != std::string::npos);
  CHECK(error_of(replace(good, "\"i\":0", "\"i\":3")).find("out of range") != std::string::npos);
  CHECK(error_of(replace(good, "\"kind\": \"hom_hopf\"", "\"kind\": \"hom_hopff\"")).find("field 'kind'") !=
        std::string::npos);
  CHECK(error_of(replace(good, "\"dim\": 3", "\"dim\": 3, \"extra\": 1")).find("field 'extra'") !=
        std::string::npos);
  CHECK(error_of(replace(good, "\"antipode\"", "\"antipodes\"")).find("antipodes") != std::string::npos);
  CHECK(error_of(replace(good, "[\"1\",\"0\",\"0\"],\n    [\"0\",\"0\",\"1\"]",
                         "[\"1\",\"0\",\"0\"],\n    [\"1\",\"0\",\"0\"]"))
            .find("field 'alpha': not invertible") != std::string::npos);
  CHECK(error_of(replace(good, "\"dim\": 3", "\"dim\": 3,,")).find("line 18") != std::string::npos);
  CHECK(error_of("{\"kind\": \"classical_algebra\", \"dim\": 65, \"mult\": [], \"unit\": []}").find("limit") !=
        std::string::npos);

  std::string dup = replace(good, "\"mult\": [\n", "\"mult\": [\n    {\"c\":\"1\",\"i\":0,\"j\":0,\"k\":0},\n");
  CHECK(error_of(dup).find("duplicate") != std::string::npos);

  Structure module = samples()[6];
  std::string wrong_over = replace(serialize(module), "\"kind\": \"hom_algebra\"", "\"kind\": \"hom_coalgebra\"");
  CHECK(error_of(wrong_over).find("over") != std::string::npos);

  Structure g = samples()[9];
  CHECK(error_of(replace(serialize(g), "\"phi\": [0,", "\"phi\": [1,")).find("field 'phi'") != std::string::npos);
}

TEST_CASE("a perturbed coefficient is caught by check") {
  std::string bad = replace(c3_text(), "{\"c\":\"1\",\"i\":1,\"j\":1,\"k\":", "{\"c\":\"2\",\"i\":1,\"j\":1,\"k\":");
  Report r = check_structure(parse_structure(bad));
  CHECK_FALSE(r.passed());
  bool witnessed = false;
  for (const auto& a : r.results()) witnessed = witnessed || (!a.passed && !a.witness.empty());
  CHECK(witnessed);
}

TEST_CASE("matrix files") {
  Matrix m = Matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, Rational(1, 2)}});
  const std::string text = serialize_matrix(m);
  CHECK(parse_matrix(text) == m);
  CHECK(parse_matrix(R"([["1","0"],["0","2"]])") == Matrix::diagonal({1, 2}));
  CHECK_THROWS_AS(parse_matrix(R"([["1","0"]])"), InputError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows": []})"), InputError);
}
