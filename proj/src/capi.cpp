#include "homcas/homcas.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "homcas/coherence.hpp"
#include "homcas/errors.hpp"
#include "homcas/structure.hpp"
#include "homcas/tensoralg.hpp"

struct homcas_structure {
  homcas::Structure value;
};

struct homcas_report {
  homcas::Report value;
};

namespace {

using namespace homcas;

thread_local std::string last_error;

homcas_status fail(homcas_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
homcas_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const InputError& e) {
    return fail(HOMCAS_ERR_INPUT, e.what());
  } catch (const NotInvertible& e) {
    return fail(HOMCAS_ERR_NOT_INVERTIBLE, e.what());
  } catch (const NotAutomorphism& e) {
    return fail(HOMCAS_ERR_NOT_AUTOMORPHISM, e.what());
  } catch (const NotAMorphism& e) {
    return fail(HOMCAS_ERR_NOT_MORPHISM, e.what());
  } catch (const ResourceError& e) {
    return fail(HOMCAS_ERR_RESOURCE, e.what());
  } catch (const DegreeOverflow& e) {
    return fail(HOMCAS_ERR_DEGREE_OVERFLOW, e.what());
  } catch (const ConstructionFailed& e) {
    return fail(HOMCAS_ERR_CONSTRUCTION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HOMCAS_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(HOMCAS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HOMCAS_ERR_INTERNAL, "unknown exception");
  }
}

#define HOMCAS_REQUIRE(p) \
  if (!(p)) return fail(HOMCAS_ERR_NULL_ARGUMENT, "null argument: " #p)

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

homcas_structure* wrap(Structure s) { return new homcas_structure{std::move(s)}; }

void emit(homcas_report** out, Report r, std::chrono::steady_clock::time_point start) {
  if (!out) return;
  r.set_elapsed_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  *out = new homcas_report{std::move(r)};
}

bool is_identity(const Matrix& m) { return m == Matrix::identity(m.rows()); }

void require_classical(const HomObject& o) {
  if (!is_identity(o.mu())) throw InputError("twist expects a classical structure (alpha = identity)");
}

ClassicalAlgebra classical(const HomAlgebra& a) { return {a.mult, a.unit}; }
ClassicalCoalgebra classical(const HomCoalgebra& c) { return {c.comult, c.counit}; }
ClassicalBialgebra classical(const HomBialgebra& b) { return {classical(b.algebra), classical(b.coalgebra)}; }

StructureValue twist_value(const StructureValue& v, const Matrix& m) {
  return std::visit(
      [&](const auto& x) -> StructureValue {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ClassicalAlgebra>) {
          return twist_algebra(x, m);
        } else if constexpr (std::is_same_v<T, HomAlgebra>) {
          require_classical(x.object);
          return twist_algebra(classical(x), m);
        } else if constexpr (std::is_same_v<T, HomCoalgebra>) {
          require_classical(x.object);
          return twist_coalgebra(classical(x), m);
        } else if constexpr (std::is_same_v<T, HomBialgebra>) {
          require_classical(x.object());
          return twist_bialgebra(classical(x), m);
        } else if constexpr (std::is_same_v<T, HomHopfAlgebra>) {
          require_classical(x.object());
          return twist_hopf(classical(x.bialgebra), x.antipode, m);
        } else if constexpr (std::is_same_v<T, HomLieAlgebra>) {
          require_classical(x.object);
          return twist_lie(x.bracket, m);
        } else {
          throw InputError("twist does not apply to modules or groups");
          return x;
        }
      },
      v);
}

const HomHopfAlgebra& hopf_of(const homcas_structure* s) {
  if (s->value.kind() != StructureKind::hom_hopf)
    throw InputError("expected a hom_hopf structure, found " + to_string(s->value.kind()));
  return std::get<HomHopfAlgebra>(s->value.value);
}

// μ restricted to a μ-stable subspace, in the subspace's basis.
HomObject restrict_object(const Subspace& space, const Matrix& mu) {
  const std::size_t k = space.dim();
  Matrix out(k, k);
  for (std::size_t c = 0; c < k; ++c) {
    Vector x = space.coordinates(mu.apply(space.basis()[c]));
    for (std::size_t r = 0; r < k; ++r) out(r, c) = x[r];
  }
  return HomObject(std::move(out));
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

extern "C" {

const char* homcas_version(void) { return "1.0.0"; }

const char* homcas_status_name(homcas_status status) {
  switch (status) {
    case HOMCAS_OK: return "ok";
    case HOMCAS_ERR_NULL_ARGUMENT: return "null_argument";
    case HOMCAS_ERR_INPUT: return "input_error";
    case HOMCAS_ERR_NOT_INVERTIBLE: return "not_invertible";
    case HOMCAS_ERR_NOT_AUTOMORPHISM: return "not_automorphism";
    case HOMCAS_ERR_NOT_MORPHISM: return "not_a_morphism";
    case HOMCAS_ERR_RESOURCE: return "resource_error";
    case HOMCAS_ERR_DEGREE_OVERFLOW: return "degree_overflow";
    case HOMCAS_ERR_CONSTRUCTION: return "construction_failed";
    case HOMCAS_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* homcas_last_error(void) { return last_error.c_str(); }

void homcas_string_free(char* text) { std::free(text); }

homcas_status homcas_structure_parse(const char* text, homcas_structure** out) {
  HOMCAS_REQUIRE(text);
  HOMCAS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = wrap(parse_structure(text));
    return HOMCAS_OK;
  });
}

homcas_status homcas_structure_read(const char* path, homcas_structure** out) {
  HOMCAS_REQUIRE(path);
  HOMCAS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = wrap(read_structure(path));
    return HOMCAS_OK;
  });
}

homcas_status homcas_structure_serialize(const homcas_structure* s, char** out) {
  HOMCAS_REQUIRE(s);
  HOMCAS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(serialize(s->value));
    return HOMCAS_OK;
  });
}

homcas_status homcas_structure_write(const homcas_structure* s, const char* path) {
  HOMCAS_REQUIRE(s);
  HOMCAS_REQUIRE(path);
  return guarded([&] {
    write_structure(path, s->value);
    return HOMCAS_OK;
  });
}

const char* homcas_structure_kind(const homcas_structure* s) {
  if (!s) return nullptr;
  static const std::string names[] = {
      to_string(StructureKind::classical_algebra), to_string(StructureKind::hom_algebra),
      to_string(StructureKind::hom_coalgebra),     to_string(StructureKind::hom_bialgebra),
      to_string(StructureKind::hom_hopf),          to_string(StructureKind::hom_lie),
      to_string(StructureKind::hom_module),        to_string(StructureKind::hom_comodule),
      to_string(StructureKind::hopf_module),       to_string(StructureKind::group),
  };
  return names[static_cast<std::size_t>(s->value.kind())].c_str();
}

size_t homcas_structure_dim(const homcas_structure* s) {
  if (!s) return 0;
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LeftModuleOver> || std::is_same_v<T, HopfModuleOver>) {
          return v.module.dim();
        } else if constexpr (std::is_same_v<T, ComoduleOver>) {
          return v.comodule.dim();
        } else if constexpr (std::is_same_v<T, GroupWithAutomorphism>) {
          return v.group.order();
        } else {
          return v.dim();
        }
      },
      s->value.value);
}

void homcas_structure_free(homcas_structure* s) { delete s; }

homcas_status homcas_check(const homcas_structure* s, homcas_report** report) {
  HOMCAS_REQUIRE(s);
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    emit(report, check_structure(s->value), start);
    return HOMCAS_OK;
  });
}

homcas_status homcas_group_algebra(size_t order, long aut_exp, homcas_structure** out) {
  HOMCAS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    if (order == 0 || order > 64) throw InputError("order must be between 1 and 64");
    FiniteGroup g = cyclic_group(order);
    HomGroup hg(g, automorphism_from_exponent(g, aut_exp));
    HomHopfAlgebra h = linearize(hg);
    *out = wrap({"Q[C" + std::to_string(order) + "], g -> g^" + std::to_string(aut_exp), h.bialgebra});
    return HOMCAS_OK;
  });
}

homcas_status homcas_twist(const homcas_structure* classical_structure, const char* matrix_text,
                           homcas_structure** out) {
  HOMCAS_REQUIRE(classical_structure);
  HOMCAS_REQUIRE(matrix_text);
  HOMCAS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    Matrix m = parse_matrix(matrix_text);
    *out = wrap({classical_structure->value.name, twist_value(classical_structure->value.value, m)});
    return HOMCAS_OK;
  });
}

homcas_status homcas_antipode(const homcas_structure* bialgebra, homcas_structure** out, homcas_report** report) {
  HOMCAS_REQUIRE(bialgebra);
  if (out) *out = nullptr;
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    const auto& v = bialgebra->value.value;
    HomBialgebra b;
    if (const auto* x = std::get_if<HomBialgebra>(&v)) b = *x;
    else if (const auto* h = std::get_if<HomHopfAlgebra>(&v)) b = h->bialgebra;
    else throw InputError("antipode expects a hom_bialgebra or hom_hopf structure");

    AntipodeResult res = solve_antipode(b);
    Report r;
    r.note("status", to_string(res.status));
    r.note("kernel_dim", std::to_string(res.kernel_dim));
    if (!res.detail.empty()) r.note("detail", res.detail);
    if (res.status != AntipodeResult::Status::unique) {
      r.axiom("antipode_unique").fail({}, "solver status " + to_string(res.status));
    } else {
      r.axiom("antipode_unique");
      HomHopfAlgebra h{b, res.antipode};
      r.merge(check_hom_hopf(h));
      r.merge(check_antipode_properties(h));
      if (out) *out = wrap({bialgebra->value.name, std::move(h)});
    }
    emit(report, std::move(r), start);
    return HOMCAS_OK;
  });
}

homcas_status homcas_enveloping(const homcas_structure* lie, size_t max_degree, homcas_report** report) {
  HOMCAS_REQUIRE(lie);
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    const auto* l = std::get_if<HomLieAlgebra>(&lie->value.value);
    if (!l) throw InputError("enveloping expects a hom_lie structure");
    Report r;
    try {
      EnvelopingAlgebra u = enveloping(*l, max_degree);
      r = u.report;
      r.note("tensor_dim", std::to_string(u.tensor.total_dim()));
      r.note("generators", std::to_string(u.generators.size()));
      r.note("ideal_dim", std::to_string(u.ideal.space.dim()));
      r.note("quotient_dim", std::to_string(u.quotient.dim()));
      r.note("degree_dims", join(u.quotient.degree_dims));
    } catch (const ConstructionFailed& e) {
      r.axiom("hopf_ideal").fail(e.witness(), e.what());
    }
    emit(report, std::move(r), start);
    return HOMCAS_OK;
  });
}

homcas_status homcas_coherence(size_t leaves, int verify_paths_flag, homcas_report** report) {
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    if (leaves == 0) throw InputError("leaves must be positive");
    Report r;
    if (verify_paths_flag) {
      r = verify_paths(leaves);
    } else {
      const auto trees = enumerate_trees(leaves);
      r.note("trees", std::to_string(trees.size()));
      if (trees.size() == catalan_count(leaves)) r.axiom("tree_count");
      else r.axiom("tree_count").fail({trees.size()}, "tree count is not Catalan");
    }
    for (const auto& t : enumerate_trees(leaves)) r.note("tree", t.to_string());
    emit(report, std::move(r), start);
    return HOMCAS_OK;
  });
}

homcas_status homcas_hopfmod(const homcas_structure* hopf, const homcas_structure* module, homcas_report** report) {
  HOMCAS_REQUIRE(hopf);
  HOMCAS_REQUIRE(module);
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    const HomHopfAlgebra& h = hopf_of(hopf);
    const auto* m = std::get_if<HopfModuleOver>(&module->value.value);
    if (!m) throw InputError("expected a hopf_module structure, found " + to_string(module->value.kind()));
    if (serialize({{}, m->over}) != serialize({{}, h}))
      throw InputError("the module's 'over' structure differs from the given Hom-Hopf algebra");
    Report r;
    r.merge(check_hom_hopf(h), "hopf.");
    r.merge(check_hopf_module(h, m->module));
    if (r.passed()) {
      Subspace co = coinvariants(h, m->module);
      r.note("coinvariants_dim", std::to_string(co.dim()));
      HomObject n = co.dim() ? restrict_object(co, m->module.object.mu()) : HomObject::unit();
      r.merge(fundamental_maps(h, m->module, n).report);
    }
    emit(report, std::move(r), start);
    return HOMCAS_OK;
  });
}

homcas_status homcas_regular_hopf_module(const homcas_structure* hopf, homcas_structure** out) {
  HOMCAS_REQUIRE(hopf);
  HOMCAS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const HomHopfAlgebra& h = hopf_of(hopf);
    *out = wrap({"regular", HopfModuleOver{h, regular_hopf_module(h)}});
    return HOMCAS_OK;
  });
}

homcas_status homcas_free_hopf_module(const homcas_structure* hopf, const char* matrix_text,
                                      homcas_structure** out) {
  HOMCAS_REQUIRE(hopf);
  HOMCAS_REQUIRE(matrix_text);
  HOMCAS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const HomHopfAlgebra& h = hopf_of(hopf);
    HomObject n(parse_matrix(matrix_text));
    *out = wrap({"free", HopfModuleOver{h, functor_F(n, h)}});
    return HOMCAS_OK;
  });
}

int homcas_report_passed(const homcas_report* r) { return r && r->value.passed() ? 1 : 0; }

size_t homcas_report_axioms(const homcas_report* r) { return r ? r->value.results().size() : 0; }

double homcas_report_elapsed_ms(const homcas_report* r) { return r ? r->value.elapsed_ms() : 0.0; }

homcas_status homcas_report_text(const homcas_report* r, char** out) {
  HOMCAS_REQUIRE(r);
  HOMCAS_REQUIRE(out);
  return guarded([&] {
    *out = copy_string(r->value.to_text());
    return HOMCAS_OK;
  });
}

homcas_status homcas_report_jsonl(const homcas_report* r, char** out) {
  HOMCAS_REQUIRE(r);
  HOMCAS_REQUIRE(out);
  return guarded([&] {
    *out = copy_string(r->value.to_jsonl());
    return HOMCAS_OK;
  });
}

void homcas_report_free(homcas_report* r) { delete r; }

}  // extern "C"
