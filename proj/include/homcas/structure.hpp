#pragma once

// Structure files: one JSON document per structure, discriminated by "kind".
//
//   {"kind": "hom_hopf", "dim": 3, "name": "...",
//    "alpha": [["0","1","0"], ...],
//    "mult":   [{"i":0,"j":1,"k":1,"c":"1"}, ...],   m(e_i⊗e_j) ∋ c·e_k
//    "comult": [{"i":0,"j":0,"k":0,"c":"1"}, ...],   Δ(e_i) ∋ c·e_j⊗e_k
//    "unit": [...], "counit": [...], "antipode": [[...], ...]}
//
// Module kinds carry the structure they live over in "over" and their own
// automorphism in "alpha":
//   hom_module   left action   a_i·m_j ∋ c·m_k   over a hom_algebra
//   hom_comodule right coaction ρ(m_i) ∋ c·m_j⊗h_k over a hom_coalgebra
//   hopf_module  right action m_i·h_j ∋ c·m_k and coaction, over a hom_hopf
// A group file holds "table" (Cayley table) and "phi" (automorphism images).
//
// Rationals are strings. Serialization sorts keys and triples and reduces
// every rational, so it is byte-stable.

#include <string>
#include <string_view>
#include <variant>

#include "homcas/homalgebra.hpp"
#include "homcas/homgroup.hpp"
#include "homcas/homlie.hpp"
#include "homcas/hommodules.hpp"
#include "homcas/report.hpp"

namespace homcas {

enum class StructureKind {
  classical_algebra,
  hom_algebra,
  hom_coalgebra,
  hom_bialgebra,
  hom_hopf,
  hom_lie,
  hom_module,
  hom_comodule,
  hopf_module,
  group,
};
std::string to_string(StructureKind k);
/// Throws InputError for an unknown name.
StructureKind structure_kind(std::string_view name);

struct LeftModuleOver {
  HomAlgebra over;
  LeftHomModule module;
};
struct ComoduleOver {
  HomCoalgebra over;
  RightHomComodule comodule;
};
struct HopfModuleOver {
  HomHopfAlgebra over;
  HopfModule module;
};
struct GroupWithAutomorphism {
  FiniteGroup group;
  GroupAutomorphism phi;
};

/// Alternatives are in StructureKind order.
using StructureValue = std::variant<ClassicalAlgebra, HomAlgebra, HomCoalgebra, HomBialgebra, HomHopfAlgebra,
                                    HomLieAlgebra, LeftModuleOver, ComoduleOver, HopfModuleOver,
                                    GroupWithAutomorphism>;

struct Structure {
  std::string name;
  StructureValue value;
  StructureKind kind() const noexcept { return static_cast<StructureKind>(value.index()); }
};

/// Throws InputError naming the offending field (or the JSON line/column).
Structure parse_structure(std::string_view text);
std::string serialize(const Structure& s);
Structure read_structure(const std::string& path);
void write_structure(const std::string& path, const Structure& s);

/// A square matrix file: a JSON array of rows of rational strings, or an
/// object holding such an array under "matrix".
Matrix parse_matrix(std::string_view text);
std::string serialize_matrix(const Matrix& m);

/// Runs the checker for the structure's kind.
Report check_structure(const Structure& s);

}  // namespace homcas
