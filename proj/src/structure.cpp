#include "homcas/structure.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "homcas/errors.hpp"
#include "json.hpp"

namespace homcas {

using json = nlohmann::json;

namespace {

constexpr std::array<std::string_view, 10> kind_names{
    "classical_algebra", "hom_algebra",  "hom_coalgebra", "hom_bialgebra", "hom_hopf",
    "hom_lie",           "hom_module",   "hom_comodule",  "hopf_module",   "group",
};

// Structure maps are stored densely, so a d x d² product table must stay small.
constexpr std::size_t max_dim = 64;

[[noreturn]] void bad(const std::string& path, const std::string& why) {
  throw InputError("field '" + path + "': " + why);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void allow_keys(const json& obj, std::initializer_list<std::string_view> keys, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (auto k : keys) known = known || it.key() == k;
    if (!known) bad(sub(path, it.key()), "unknown field");
  }
}

std::size_t index(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) bad(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Rational rational(const json& v, const std::string& path) {
  if (!v.is_string()) bad(path, "rationals are written as strings");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    bad(path, e.what());
  }
}

Vector vector(const json& v, std::size_t n, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array");
  if (v.size() != n) bad(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(v.size()));
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rational(v[i], at(path, i));
  return out;
}

Matrix matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of rows");
  if (v.size() != rows) bad(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(v.size()));
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = vector(v[r], cols, at(path, r));
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = row[c];
  }
  return out;
}

Tensor3 triples(const json& v, std::size_t d1, std::size_t d2, std::size_t d3, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of triples");
  Tensor3 t(d1, d2, d3);
  std::set<Tensor3::Key> seen;
  for (std::size_t n = 0; n < v.size(); ++n) {
    const std::string p = at(path, n);
    const json& e = v[n];
    if (!e.is_object()) bad(p, "expected {\"i\",\"j\",\"k\",\"c\"}");
    allow_keys(e, {"i", "j", "k", "c"}, p);
    const std::size_t i = index(field(e, "i", p), p + ".i");
    const std::size_t j = index(field(e, "j", p), p + ".j");
    const std::size_t k = index(field(e, "k", p), p + ".k");
    if (i >= d1) bad(p + ".i", "index " + std::to_string(i) + " out of range " + std::to_string(d1));
    if (j >= d2) bad(p + ".j", "index " + std::to_string(j) + " out of range " + std::to_string(d2));
    if (k >= d3) bad(p + ".k", "index " + std::to_string(k) + " out of range " + std::to_string(d3));
    if (!seen.insert({i, j, k}).second) bad(p, "duplicate triple");
    t.set(i, j, k, rational(field(e, "c", p), p + ".c"));
  }
  return t;
}

HomObject object(const json& obj, std::size_t dim, const std::string& path) {
  Matrix alpha = matrix(field(obj, "alpha", path), dim, dim, sub(path, "alpha"));
  try {
    return HomObject(std::move(alpha));
  } catch (const NotInvertible&) {
    bad(sub(path, "alpha"), "not invertible");
  }
}

std::size_t dimension(const json& obj, const std::string& path) {
  const std::size_t d = index(field(obj, "dim", path), sub(path, "dim"));
  if (d == 0) bad(sub(path, "dim"), "must be positive");
  if (d > max_dim) bad(sub(path, "dim"), "exceeds the limit of " + std::to_string(max_dim));
  return d;
}

Matrix mult(const json& obj, std::size_t d, const std::string& path, const char* key = "mult") {
  return triples(field(obj, key, path), d, d, d, sub(path, key)).to_bilinear();
}
Matrix comult(const json& obj, std::size_t d, const std::string& path) {
  return triples(field(obj, "comult", path), d, d, d, sub(path, "comult")).to_colinear();
}
Vector vec_field(const json& obj, const char* key, std::size_t d, const std::string& path) {
  return vector(field(obj, key, path), d, sub(path, key));
}

// Shape errors from validate() are rethrown with the structure's path.
template <class T>
T validated(T value, const std::string& path) {
  try {
    validate(value);
  } catch (const InputError& e) {
    bad(path.empty() ? "<root>" : path, e.what());
  }
  return value;
}

StructureValue parse_value(const json& obj, const std::string& path);

template <class T>
T nested(const json& obj, StructureKind want, const std::string& path) {
  const json& over = field(obj, "over", path);
  StructureValue v = parse_value(over, sub(path, "over"));
  if (static_cast<StructureKind>(v.index()) != want)
    bad(sub(path, "over"), "expected kind " + to_string(want));
  return std::get<T>(std::move(v));
}

StructureValue parse_value(const json& obj, const std::string& path) {
  if (!obj.is_object()) bad(path.empty() ? "<root>" : path, "expected a JSON object");
  const json& kind_json = field(obj, "kind", path);
  if (!kind_json.is_string()) bad(sub(path, "kind"), "expected a string");
  StructureKind kind;
  try {
    kind = structure_kind(kind_json.get<std::string>());
  } catch (const InputError& e) {
    bad(sub(path, "kind"), e.what());
  }
  if (auto it = obj.find("name"); it != obj.end() && !it->is_string()) bad(sub(path, "name"), "expected a string");

  switch (kind) {
    case StructureKind::classical_algebra: {
      allow_keys(obj, {"kind", "name", "dim", "mult", "unit"}, path);
      const std::size_t d = dimension(obj, path);
      return validated(ClassicalAlgebra{mult(obj, d, path), vec_field(obj, "unit", d, path)}, path);
    }
    case StructureKind::hom_algebra: {
      allow_keys(obj, {"kind", "name", "dim", "alpha", "mult", "unit"}, path);
      const std::size_t d = dimension(obj, path);
      return validated(HomAlgebra{object(obj, d, path), mult(obj, d, path), vec_field(obj, "unit", d, path)}, path);
    }
    case StructureKind::hom_coalgebra: {
      allow_keys(obj, {"kind", "name", "dim", "alpha", "comult", "counit"}, path);
      const std::size_t d = dimension(obj, path);
      return validated(HomCoalgebra{object(obj, d, path), comult(obj, d, path), vec_field(obj, "counit", d, path)},
                       path);
    }
    case StructureKind::hom_bialgebra:
    case StructureKind::hom_hopf: {
      if (kind == StructureKind::hom_bialgebra)
        allow_keys(obj, {"kind", "name", "dim", "alpha", "mult", "unit", "comult", "counit"}, path);
      else
        allow_keys(obj, {"kind", "name", "dim", "alpha", "mult", "unit", "comult", "counit", "antipode"}, path);
      const std::size_t d = dimension(obj, path);
      HomObject o = object(obj, d, path);
      HomBialgebra b{HomAlgebra{o, mult(obj, d, path), vec_field(obj, "unit", d, path)},
                     HomCoalgebra{o, comult(obj, d, path), vec_field(obj, "counit", d, path)}};
      if (kind == StructureKind::hom_bialgebra) return validated(std::move(b), path);
      Matrix s = matrix(field(obj, "antipode", path), d, d, sub(path, "antipode"));
      return validated(HomHopfAlgebra{std::move(b), std::move(s)}, path);
    }
    case StructureKind::hom_lie: {
      allow_keys(obj, {"kind", "name", "dim", "alpha", "bracket"}, path);
      const std::size_t d = dimension(obj, path);
      return validated(HomLieAlgebra{object(obj, d, path), mult(obj, d, path, "bracket")}, path);
    }
    case StructureKind::hom_module: {
      allow_keys(obj, {"kind", "name", "dim", "alpha", "action", "over"}, path);
      const std::size_t d = dimension(obj, path);
      HomAlgebra a = nested<HomAlgebra>(obj, StructureKind::hom_algebra, path);
      Matrix act = triples(field(obj, "action", path), a.dim(), d, d, sub(path, "action")).to_bilinear();
      return LeftModuleOver{std::move(a), LeftHomModule{object(obj, d, path), std::move(act)}};
    }
    case StructureKind::hom_comodule: {
      allow_keys(obj, {"kind", "name", "dim", "alpha", "coaction", "over"}, path);
      const std::size_t d = dimension(obj, path);
      HomCoalgebra c = nested<HomCoalgebra>(obj, StructureKind::hom_coalgebra, path);
      Matrix co = triples(field(obj, "coaction", path), d, d, c.dim(), sub(path, "coaction")).to_colinear();
      return ComoduleOver{std::move(c), RightHomComodule{object(obj, d, path), std::move(co)}};
    }
    case StructureKind::hopf_module: {
      allow_keys(obj, {"kind", "name", "dim", "alpha", "action", "coaction", "over"}, path);
      const std::size_t d = dimension(obj, path);
      HomHopfAlgebra h = nested<HomHopfAlgebra>(obj, StructureKind::hom_hopf, path);
      Matrix act = triples(field(obj, "action", path), d, h.dim(), d, sub(path, "action")).to_bilinear();
      Matrix co = triples(field(obj, "coaction", path), d, d, h.dim(), sub(path, "coaction")).to_colinear();
      return HopfModuleOver{std::move(h), HopfModule{object(obj, d, path), std::move(act), std::move(co)}};
    }
    case StructureKind::group: {
      allow_keys(obj, {"kind", "name", "dim", "table", "phi"}, path);
      const std::size_t d = dimension(obj, path);
      const json& table = field(obj, "table", path);
      const std::string tp = sub(path, "table");
      if (!table.is_array() || table.size() != d) bad(tp, "expected " + std::to_string(d) + " rows");
      std::vector<std::vector<std::size_t>> cayley(d);
      for (std::size_t r = 0; r < d; ++r) {
        if (!table[r].is_array() || table[r].size() != d) bad(at(tp, r), "expected " + std::to_string(d) + " entries");
        for (std::size_t c = 0; c < d; ++c) cayley[r].push_back(index(table[r][c], at(at(tp, r), c)));
      }
      std::string name = obj.value("name", std::string());
      std::optional<FiniteGroup> g;
      try {
        g.emplace(std::move(cayley), name);
      } catch (const InputError& e) {
        bad(tp, e.what());
      }
      GroupAutomorphism phi;
      if (auto it = obj.find("phi"); it != obj.end()) {
        if (!it->is_array() || it->size() != d) bad(sub(path, "phi"), "expected " + std::to_string(d) + " images");
        for (std::size_t i = 0; i < d; ++i) phi.image.push_back(index((*it)[i], at(sub(path, "phi"), i)));
        if (!is_automorphism(*g, phi.image)) bad(sub(path, "phi"), "not a group automorphism");
      } else {
        for (std::size_t i = 0; i < d; ++i) phi.image.push_back(i);
      }
      return GroupWithAutomorphism{std::move(*g), std::move(phi)};
    }
  }
  throw InternalError("unhandled structure kind");
}

// ---- output

json rational_json(const Rational& q) { return to_string(q); }

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json triples_json(const Tensor3& t) {
  json out = json::array();
  for (const auto& [key, c] : t.entries()) {
    const auto& [i, j, k] = key;
    out.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", rational_json(c)}});
  }
  return out;
}

json bilinear_json(const Matrix& m, std::size_t d1, std::size_t d2) {
  return triples_json(Tensor3::from_bilinear(m, d1, d2));
}
json colinear_json(const Matrix& m, std::size_t d2, std::size_t d3) {
  return triples_json(Tensor3::from_colinear(m, d2, d3));
}

json to_json(const StructureValue& value, const std::string& name);

json hom_algebra_json(const HomAlgebra& a) {
  return {{"kind", "hom_algebra"},
          {"dim", a.dim()},
          {"alpha", matrix_json(a.alpha())},
          {"mult", bilinear_json(a.mult, a.dim(), a.dim())},
          {"unit", vector_json(a.unit)}};
}

json hom_coalgebra_json(const HomCoalgebra& c) {
  return {{"kind", "hom_coalgebra"},
          {"dim", c.dim()},
          {"alpha", matrix_json(c.gamma())},
          {"comult", colinear_json(c.comult, c.dim(), c.dim())},
          {"counit", vector_json(c.counit)}};
}

json bialgebra_json(const HomBialgebra& b) {
  json out = hom_algebra_json(b.algebra);
  out["kind"] = "hom_bialgebra";
  out["comult"] = colinear_json(b.coalgebra.comult, b.dim(), b.dim());
  out["counit"] = vector_json(b.coalgebra.counit);
  return out;
}

json to_json(const StructureValue& value, const std::string& name) {
  json out = std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ClassicalAlgebra>) {
          return {{"kind", "classical_algebra"},
                  {"dim", v.dim()},
                  {"mult", bilinear_json(v.mult, v.dim(), v.dim())},
                  {"unit", vector_json(v.unit)}};
        } else if constexpr (std::is_same_v<T, HomAlgebra>) {
          return hom_algebra_json(v);
        } else if constexpr (std::is_same_v<T, HomCoalgebra>) {
          return hom_coalgebra_json(v);
        } else if constexpr (std::is_same_v<T, HomBialgebra>) {
          return bialgebra_json(v);
        } else if constexpr (std::is_same_v<T, HomHopfAlgebra>) {
          json o = bialgebra_json(v.bialgebra);
          o["kind"] = "hom_hopf";
          o["antipode"] = matrix_json(v.antipode);
          return o;
        } else if constexpr (std::is_same_v<T, HomLieAlgebra>) {
          return {{"kind", "hom_lie"},
                  {"dim", v.dim()},
                  {"alpha", matrix_json(v.alpha())},
                  {"bracket", bilinear_json(v.bracket, v.dim(), v.dim())}};
        } else if constexpr (std::is_same_v<T, LeftModuleOver>) {
          return {{"kind", "hom_module"},
                  {"dim", v.module.dim()},
                  {"alpha", matrix_json(v.module.object.mu())},
                  {"action", bilinear_json(v.module.action, v.over.dim(), v.module.dim())},
                  {"over", hom_algebra_json(v.over)}};
        } else if constexpr (std::is_same_v<T, ComoduleOver>) {
          return {{"kind", "hom_comodule"},
                  {"dim", v.comodule.dim()},
                  {"alpha", matrix_json(v.comodule.object.mu())},
                  {"coaction", colinear_json(v.comodule.coaction, v.comodule.dim(), v.over.dim())},
                  {"over", hom_coalgebra_json(v.over)}};
        } else if constexpr (std::is_same_v<T, HopfModuleOver>) {
          return {{"kind", "hopf_module"},
                  {"dim", v.module.dim()},
                  {"alpha", matrix_json(v.module.object.mu())},
                  {"action", bilinear_json(v.module.action, v.module.dim(), v.over.dim())},
                  {"coaction", colinear_json(v.module.coaction, v.module.dim(), v.over.dim())},
                  {"over", to_json(v.over, {})}};
        } else {
          return {{"kind", "group"}, {"dim", v.group.order()}, {"table", v.group.cayley()}, {"phi", v.phi.image}};
        }
      },
      value);
  if (!name.empty()) out["name"] = name;
  return out;
}

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

// Objects are indented one key per line; arrays of scalars stay on one
// line; other arrays put one compact element per line.
void write(std::ostream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t n = 0;
    for (auto it = v.begin(); it != v.end(); ++it) {
      os << pad << "  " << json(it.key()).dump() << ": ";
      write(os, it.value(), indent + 2);
      os << (++n < v.size() ? ",\n" : "\n");
    }
    os << pad << "}";
  } else if (v.is_array() && !v.empty() && !std::all_of(v.begin(), v.end(), is_scalar)) {
    os << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i)
      os << pad << "  " << v[i].dump() << (i + 1 < v.size() ? ",\n" : "\n");
    os << pad << "]";
  } else {
    os << v.dump();
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string to_string(StructureKind k) { return std::string(kind_names.at(static_cast<std::size_t>(k))); }

StructureKind structure_kind(std::string_view name) {
  for (std::size_t i = 0; i < kind_names.size(); ++i)
    if (kind_names[i] == name) return static_cast<StructureKind>(i);
  throw InputError("unknown structure kind \"" + std::string(name) + "\"");
}

Structure parse_structure(std::string_view text) {
  json doc = parse_json(text);
  Structure s{{}, parse_value(doc, {})};
  s.name = doc.value("name", std::string());
  return s;
}

std::string serialize(const Structure& s) {
  std::ostringstream os;
  write(os, to_json(s.value, s.name), 0);
  os << "\n";
  return os.str();
}

Structure read_structure(const std::string& path) { return parse_structure(read_file(path)); }

void write_structure(const std::string& path, const Structure& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << serialize(s);
}

Matrix parse_matrix(std::string_view text) {
  json doc = parse_json(text);
  std::string path = "<root>";
  if (doc.is_object()) {
    allow_keys(doc, {"matrix"}, {});
    doc = field(doc, "matrix", {});
    path = "matrix";
  }
  if (!doc.is_array() || doc.empty()) bad(path, "expected a non-empty array of rows");
  return matrix(doc, doc.size(), doc.size(), path);
}

std::string serialize_matrix(const Matrix& m) {
  std::ostringstream os;
  write(os, json{{"matrix", matrix_json(m)}}, 0);
  os << "\n";
  return os.str();
}

Report check_structure(const Structure& s) {
  return std::visit(
      [](const auto& v) -> Report {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ClassicalAlgebra>) {
          return check_classical_algebra(v);
        } else if constexpr (std::is_same_v<T, HomAlgebra>) {
          return check_hom_algebra(v);
        } else if constexpr (std::is_same_v<T, HomCoalgebra>) {
          return check_hom_coalgebra(v);
        } else if constexpr (std::is_same_v<T, HomBialgebra>) {
          return check_hom_bialgebra(v);
        } else if constexpr (std::is_same_v<T, HomHopfAlgebra>) {
          Report r = check_hom_hopf(v);
          r.merge(check_antipode_properties(v));
          return r;
        } else if constexpr (std::is_same_v<T, HomLieAlgebra>) {
          return check_hom_lie(v);
        } else if constexpr (std::is_same_v<T, LeftModuleOver>) {
          Report r;
          r.merge(check_hom_algebra(v.over), "over.");
          r.merge(check_left_module(v.over, v.module));
          return r;
        } else if constexpr (std::is_same_v<T, ComoduleOver>) {
          Report r;
          r.merge(check_hom_coalgebra(v.over), "over.");
          r.merge(check_right_comodule(v.over, v.comodule));
          return r;
        } else if constexpr (std::is_same_v<T, HopfModuleOver>) {
          Report r;
          r.merge(check_hom_hopf(v.over), "over.");
          r.merge(check_hopf_module(v.over, v.module));
          return r;
        } else {
          return HomGroup(v.group, v.phi).verify();
        }
      },
      s.value);
}

}  // namespace homcas
