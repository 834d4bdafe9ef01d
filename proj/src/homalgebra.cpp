#include "homcas/homalgebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "homcas/errors.hpp"

namespace homcas {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void validate_parts(std::size_t d, const Matrix* mult, const Vector* unit, const Matrix* comult,
                    const Vector* counit) {
  if (mult) require(mult->rows() == d && mult->cols() == d * d, "multiplication must be d x d^2");
  if (unit) require(unit->size() == d, "unit has the wrong length");
  if (comult) require(comult->rows() == d * d && comult->cols() == d, "comultiplication must be d^2 x d");
  if (counit) require(counit->size() == d, "counit has the wrong length");
}

// Basis products e_i e_j, computed once per check.
class ProductTable {
 public:
  ProductTable(const Matrix& mult, std::size_t d) : d_(d), bil_(mult, d, d), table_(d * d) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) table_[i * d + j] = bil_.basis(i, j);
  }
  const Vector& at(std::size_t i, std::size_t j) const { return table_[i * d_ + j]; }
  Vector operator()(const Vector& x, const Vector& y) const { return bil_(x, y); }
  /// (x⊗y)(x'⊗y') on the flattened A⊗A.
  Vector tensor(const Vector& x, const Vector& y) const {
    Vector out(d_ * d_);
    for (std::size_t p = 0; p < d_; ++p)
      for (std::size_t q = 0; q < d_; ++q) {
        const Rational& a = x[p * d_ + q];
        if (is_zero(a)) continue;
        for (std::size_t r = 0; r < d_; ++r)
          for (std::size_t s = 0; s < d_; ++s) {
            const Rational& b = y[r * d_ + s];
            if (is_zero(b)) continue;
            const Rational c = a * b;
            const Vector& u = at(p, r);
            const Vector& w = at(q, s);
            for (std::size_t k = 0; k < d_; ++k) {
              if (is_zero(u[k])) continue;
              for (std::size_t l = 0; l < d_; ++l)
                if (!is_zero(w[l])) out[k * d_ + l] += c * u[k] * w[l];
            }
          }
      }
    return out;
  }

 private:
  std::size_t d_;
  Bilinear bil_;
  std::vector<Vector> table_;
};

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

Vector swap_factors(const Vector& v, std::size_t p, std::size_t q) {
  Vector out(v.size());
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) out[j * p + i] = v[i * q + j];
  return out;
}

template <class Body>
void run(Report& r, const std::string& name, Body&& body) {
  AxiomResult& a = r.axiom(name);
  body(a);
}

void compatibility_axioms(Report& r, const Matrix& mult, const Vector& unit, const Matrix& comult,
                          const Vector& counit) {
  const std::size_t d = unit.size();
  ProductTable m(mult, d);
  const auto delta = columns(comult);
  run(r, "comult_multiplicative", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (comult.apply(m.at(i, j)) != m.tensor(delta[i], delta[j]))
          return a.fail({i, j}, "Δ(e_i e_j) ≠ Δ(e_i)Δ(e_j)");
  });
  run(r, "comult_unit", [&](AxiomResult& a) {
    if (comult.apply(unit) != kron(unit, unit)) a.fail({}, "Δ(1) ≠ 1⊗1");
  });
  run(r, "counit_multiplicative", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (dot(counit, m.at(i, j)) != counit[i] * counit[j])
          return a.fail({i, j}, "ε(e_i e_j) ≠ ε(e_i)ε(e_j)");
  });
  run(r, "counit_unit", [&](AxiomResult& a) {
    if (dot(counit, unit) != 1) a.fail({}, "ε(1) ≠ 1");
  });
}

Report matrix_equal(const std::string& name, const Matrix& lhs, const Matrix& rhs, const std::string& why) {
  Report r;
  run(r, name, [&](AxiomResult& a) {
    std::size_t c = lhs.first_differing_column(rhs);
    if (c < lhs.cols()) a.fail({c}, why);
  });
  return r;
}

}  // namespace

void validate(const ClassicalAlgebra& a) { validate_parts(a.dim(), &a.mult, &a.unit, nullptr, nullptr); }
void validate(const ClassicalCoalgebra& c) {
  validate_parts(c.dim(), nullptr, nullptr, &c.comult, &c.counit);
}
void validate(const ClassicalBialgebra& b) {
  validate(b.algebra);
  validate(b.coalgebra);
  require(b.algebra.dim() == b.coalgebra.dim(), "algebra and coalgebra dimensions differ");
}
void validate(const HomAlgebra& a) { validate_parts(a.dim(), &a.mult, &a.unit, nullptr, nullptr); }
void validate(const HomCoalgebra& c) { validate_parts(c.dim(), nullptr, nullptr, &c.comult, &c.counit); }
void validate(const HomBialgebra& b) {
  validate(b.algebra);
  validate(b.coalgebra);
  require(b.algebra.object == b.coalgebra.object, "algebra and coalgebra automorphisms differ");
}
void validate(const HomHopfAlgebra& h) {
  validate(h.bialgebra);
  require(h.antipode.rows() == h.dim() && h.antipode.cols() == h.dim(), "antipode must be d x d");
}

Vector multiply(const Matrix& mult, const Vector& a, const Vector& b) {
  return Bilinear(mult, a.size(), b.size())(a, b);
}

Matrix flip_matrix(std::size_t p, std::size_t q) {
  std::vector<std::size_t> image(p * q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) image[i * q + j] = j * p + i;
  return Matrix::permutation(image);
}

Matrix tensor_product_mult(const Matrix& mult_a, std::size_t da, const Matrix& mult_b, std::size_t db) {
  const std::size_t n = da * db;
  Matrix out(n, n * n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t i2 = 0; i2 < da; ++i2)
        for (std::size_t j2 = 0; j2 < db; ++j2) {
          const std::size_t col = (i * db + j) * n + (i2 * db + j2);
          for (std::size_t k = 0; k < da; ++k) {
            const Rational& x = mult_a(k, i * da + i2);
            if (is_zero(x)) continue;
            for (std::size_t l = 0; l < db; ++l) {
              const Rational& y = mult_b(l, j * db + j2);
              if (!is_zero(y)) out(k * db + l, col) = x * y;
            }
          }
        }
  return out;
}

Report check_classical_algebra(const ClassicalAlgebra& alg) {
  validate(alg);
  const std::size_t d = alg.dim();
  ProductTable m(alg.mult, d);
  Report r;
  run(r, "associativity", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (m(m.at(i, j), unit_vector(d, k)) != m(unit_vector(d, i), m.at(j, k)))
            return a.fail({i, j, k}, "(e_i e_j) e_k ≠ e_i (e_j e_k)");
  });
  run(r, "unitality", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i) {
      Vector e = unit_vector(d, i);
      if (m(e, alg.unit) != e || m(alg.unit, e) != e) return a.fail({i}, "1 is not a two-sided unit");
    }
  });
  return r;
}

Report check_classical_coalgebra(const ClassicalCoalgebra& co) {
  validate(co);
  const std::size_t d = co.dim();
  const Matrix id = Matrix::identity(d);
  const Matrix eps = Matrix::row_vector(co.counit);
  const auto delta = columns(co.comult);
  Report r;
  run(r, "coassociativity", [&](AxiomResult& a) {
    for (std::size_t c = 0; c < d; ++c)
      if (kron_apply(co.comult, id, delta[c]) != kron_apply(id, co.comult, delta[c]))
        return a.fail({c}, "(Δ⊗id)Δ ≠ (id⊗Δ)Δ");
  });
  run(r, "counit", [&](AxiomResult& a) {
    for (std::size_t c = 0; c < d; ++c) {
      Vector e = unit_vector(d, c);
      if (kron_apply(eps, id, delta[c]) != e || kron_apply(id, eps, delta[c]) != e)
        return a.fail({c}, "counit law fails");
    }
  });
  return r;
}

Report check_classical_bialgebra(const ClassicalBialgebra& b) {
  validate(b);
  Report r = check_classical_algebra(b.algebra);
  r.merge(check_classical_coalgebra(b.coalgebra));
  compatibility_axioms(r, b.algebra.mult, b.algebra.unit, b.coalgebra.comult, b.coalgebra.counit);
  return r;
}

Report check_hom_algebra(const HomAlgebra& alg) {
  validate(alg);
  const std::size_t d = alg.dim();
  const Matrix& al = alg.alpha();
  const auto acol = columns(al);
  ProductTable m(alg.mult, d);
  Report r;
  run(r, "alpha_multiplicative", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (al.apply(m.at(i, j)) != m(acol[i], acol[j])) return a.fail({i, j}, "α(e_i e_j) ≠ α(e_i)α(e_j)");
  });
  run(r, "alpha_unit", [&](AxiomResult& a) {
    if (al.apply(alg.unit) != alg.unit) a.fail({}, "α(1) ≠ 1");
  });
  run(r, "hom_associativity", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (m(acol[i], m.at(j, k)) != m(m.at(i, j), acol[k]))
            return a.fail({i, j, k}, "α(e_i)(e_j e_k) ≠ (e_i e_j)α(e_k)");
  });
  run(r, "hom_unitality", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i) {
      Vector e = unit_vector(d, i);
      if (m(e, alg.unit) != acol[i] || m(alg.unit, e) != acol[i]) return a.fail({i}, "e_i 1 = 1 e_i = α(e_i) fails");
    }
  });
  return r;
}

Report check_hom_coalgebra(const HomCoalgebra& co) {
  validate(co);
  const std::size_t d = co.dim();
  const Matrix& g = co.gamma();
  const Matrix& ginv = co.object.mu_inv();
  const Matrix id = Matrix::identity(d);
  const Matrix eps = Matrix::row_vector(co.counit);
  const auto delta = columns(co.comult);
  Report r;
  run(r, "gamma_comultiplicative", [&](AxiomResult& a) {
    for (std::size_t c = 0; c < d; ++c)
      if (co.comult.apply(g.column(c)) != kron_apply(g, g, delta[c]))
        return a.fail({c}, "Δ(γ(c)) ≠ γ(c1)⊗γ(c2)");
  });
  run(r, "counit_invariant", [&](AxiomResult& a) {
    std::size_t c = (eps * g).first_differing_column(eps);
    if (c < d) a.fail({c}, "ε∘γ ≠ ε");
  });
  run(r, "hom_coassociativity", [&](AxiomResult& a) {
    for (std::size_t c = 0; c < d; ++c)
      if (kron_apply(ginv, co.comult, delta[c]) != kron_apply(co.comult, ginv, delta[c]))
        return a.fail({c}, "γ⁻¹(c1)⊗Δ(c2) ≠ Δ(c1)⊗γ⁻¹(c2)");
  });
  run(r, "counit_law", [&](AxiomResult& a) {
    for (std::size_t c = 0; c < d; ++c) {
      Vector target = ginv.column(c);
      if (kron_apply(id, eps, delta[c]) != target || kron_apply(eps, id, delta[c]) != target)
        return a.fail({c}, "c1 ε(c2) = ε(c1) c2 = γ⁻¹(c) fails");
    }
  });
  return r;
}

Report check_hom_bialgebra(const HomBialgebra& b) {
  validate(b);
  Report r = check_hom_algebra(b.algebra);
  r.merge(check_hom_coalgebra(b.coalgebra));
  compatibility_axioms(r, b.algebra.mult, b.algebra.unit, b.coalgebra.comult, b.coalgebra.counit);
  return r;
}

Report check_hom_hopf(const HomHopfAlgebra& h) {
  validate(h);
  Report r = check_hom_bialgebra(h.bialgebra);
  const Matrix& s = h.antipode;
  const Matrix id = Matrix::identity(h.dim());
  const Matrix ue = unit_counit(h.algebra().unit, h.coalgebra().counit);
  r.merge(matrix_equal("antipode_morphism", s * h.alpha(), h.alpha() * s, "S∘α ≠ α∘S"));
  r.merge(matrix_equal("antipode_left", convolution(s, id, h.coalgebra(), h.algebra()), ue, "S∗id ≠ η∘ε"));
  r.merge(matrix_equal("antipode_right", convolution(id, s, h.coalgebra(), h.algebra()), ue, "id∗S ≠ η∘ε"));
  return r;
}

Report check_antipode_properties(const HomHopfAlgebra& h) {
  validate(h);
  const std::size_t d = h.dim();
  const Matrix& s = h.antipode;
  const auto scol = columns(s);
  ProductTable m(h.algebra().mult, d);
  const Matrix& comult = h.coalgebra().comult;
  const Vector& counit = h.coalgebra().counit;
  Report r;
  run(r, "antipode_antimultiplicative", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (s.apply(m.at(i, j)) != m(scol[j], scol[i])) return a.fail({i, j}, "S(hk) ≠ S(k)S(h)");
  });
  run(r, "antipode_unit", [&](AxiomResult& a) {
    if (s.apply(h.algebra().unit) != h.algebra().unit) a.fail({}, "S(1) ≠ 1");
  });
  run(r, "antipode_anticomultiplicative", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i)
      if (comult.apply(scol[i]) != swap_factors(kron_apply(s, s, comult.column(i)), d, d))
        return a.fail({i}, "Δ(S(h)) ≠ S(h2)⊗S(h1)");
  });
  run(r, "counit_antipode", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i)
      if (dot(counit, scol[i]) != counit[i]) return a.fail({i}, "ε∘S ≠ ε");
  });
  return r;
}

Report check_algebra_map(const Matrix& alpha, const Matrix& mult_src, const Vector& unit_src,
                         const Matrix& mult_dst, const Vector& unit_dst) {
  const std::size_t d = unit_src.size();
  require(alpha.cols() == d && alpha.rows() == unit_dst.size(), "algebra map has the wrong shape");
  ProductTable src(mult_src, d);
  ProductTable dst(mult_dst, unit_dst.size());
  const auto acol = columns(alpha);
  Report r;
  run(r, "map_multiplicative", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (alpha.apply(src.at(i, j)) != dst(acol[i], acol[j]))
          return a.fail({i, j}, "f(e_i e_j) ≠ f(e_i) f(e_j)");
  });
  run(r, "map_unit", [&](AxiomResult& a) {
    if (alpha.apply(unit_src) != unit_dst) a.fail({}, "f(1) ≠ 1");
  });
  return r;
}

Report check_coalgebra_map(const Matrix& gamma, const Matrix& comult_src, const Vector& counit_src,
                           const Matrix& comult_dst, const Vector& counit_dst) {
  const std::size_t d = counit_src.size();
  require(gamma.cols() == d && gamma.rows() == counit_dst.size(), "coalgebra map has the wrong shape");
  Report r;
  run(r, "map_comultiplicative", [&](AxiomResult& a) {
    for (std::size_t c = 0; c < d; ++c)
      if (comult_dst.apply(gamma.column(c)) != kron_apply(gamma, gamma, comult_src.column(c)))
        return a.fail({c}, "Δ(f(c)) ≠ (f⊗f)Δ(c)");
  });
  run(r, "map_counit", [&](AxiomResult& a) {
    for (std::size_t c = 0; c < d; ++c)
      if (dot(counit_dst, gamma.column(c)) != counit_src[c]) return a.fail({c}, "ε∘f ≠ ε");
  });
  return r;
}

namespace {

void throw_if_failed(const Report& r, const std::string& what) {
  for (const auto& a : r.results())
    if (!a.passed) throw NotAutomorphism(what + ": " + a.axiom + " (" + a.detail + ")", a.witness);
}

void require_square(const Matrix& m, std::size_t d, const std::string& what) {
  require(m.rows() == d && m.cols() == d, what + " must be " + std::to_string(d) + " x " + std::to_string(d));
}

}  // namespace

HomAlgebra twist_algebra(const ClassicalAlgebra& a, const Matrix& alpha) {
  validate(a);
  require_square(alpha, a.dim(), "automorphism");
  HomObject obj(alpha);
  throw_if_failed(check_algebra_map(alpha, a.mult, a.unit, a.mult, a.unit), "not an algebra automorphism");
  return HomAlgebra{obj, alpha * a.mult, a.unit};
}

ClassicalAlgebra untwist_algebra(const HomAlgebra& a) {
  validate(a);
  ClassicalAlgebra out{a.object.mu_inv() * a.mult, a.unit};
  Report r = check_classical_algebra(out);
  for (const auto& x : r.results())
    if (!x.passed) throw ConstructionFailed("untwisted product fails " + x.axiom, x.witness);
  return out;
}

HomCoalgebra twist_coalgebra(const ClassicalCoalgebra& c, const Matrix& gamma) {
  validate(c);
  require_square(gamma, c.dim(), "automorphism");
  HomObject obj(gamma);
  throw_if_failed(check_coalgebra_map(gamma, c.comult, c.counit, c.comult, c.counit),
                  "not a coalgebra automorphism");
  Matrix twisted = c.comult * obj.mu_inv();
  if (!(twisted == kron(obj.mu_inv(), obj.mu_inv()) * c.comult))
    throw InternalError("Δ∘γ⁻¹ and (γ⁻¹⊗γ⁻¹)∘Δ disagree for a coalgebra automorphism");
  return HomCoalgebra{obj, std::move(twisted), c.counit};
}

ClassicalCoalgebra untwist_coalgebra(const HomCoalgebra& c) {
  validate(c);
  ClassicalCoalgebra out{c.comult * c.gamma(), c.counit};
  Report r = check_classical_coalgebra(out);
  for (const auto& x : r.results())
    if (!x.passed) throw ConstructionFailed("untwisted coproduct fails " + x.axiom, x.witness);
  return out;
}

HomBialgebra twist_bialgebra(const ClassicalBialgebra& b, const Matrix& alpha) {
  validate(b);
  return HomBialgebra{twist_algebra(b.algebra, alpha), twist_coalgebra(b.coalgebra, alpha)};
}

ClassicalBialgebra untwist_bialgebra(const HomBialgebra& b) {
  validate(b);
  ClassicalBialgebra out{untwist_algebra(b.algebra), untwist_coalgebra(b.coalgebra)};
  Report r = check_classical_bialgebra(out);
  for (const auto& x : r.results())
    if (!x.passed) throw ConstructionFailed("untwisted bialgebra fails " + x.axiom, x.witness);
  return out;
}

HomHopfAlgebra twist_hopf(const ClassicalBialgebra& b, const Matrix& antipode, const Matrix& alpha) {
  HomHopfAlgebra h{twist_bialgebra(b, alpha), antipode};
  validate(h);
  return h;
}

HomBialgebra as_hom(const ClassicalBialgebra& b) { return twist_bialgebra(b, Matrix::identity(b.dim())); }

Matrix convolution(const Matrix& f, const Matrix& g, const Matrix& comult, const Matrix& mult) {
  const std::size_t c = comult.cols();
  const std::size_t a = mult.rows();
  require(f.rows() == a && g.rows() == a && f.cols() == c && g.cols() == c, "convolution: map shapes");
  require(comult.rows() == c * c && mult.cols() == a * a, "convolution: structure shapes");
  const SparseColumns m(mult);
  Matrix out(a, c);
  for (std::size_t s = 0; s < c; ++s) {
    Vector col = m.apply(kron_apply(f, g, comult.column(s)));
    for (std::size_t t = 0; t < a; ++t) out(t, s) = col[t];
  }
  return out;
}

Matrix convolution(const Matrix& f, const Matrix& g, const HomCoalgebra& c, const HomAlgebra& a) {
  return convolution(f, g, c.comult, a.mult);
}

Matrix unit_counit(const Vector& unit, const Vector& counit) {
  return Matrix::column_vector(unit) * Matrix::row_vector(counit);
}

Vector vec(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m(r, c);
  return v;
}

Matrix unvec(const Vector& v, std::size_t rows, std::size_t cols) {
  require(v.size() == rows * cols, "unvec: length mismatch");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

HomAlgebra convolution_hom_algebra(const HomCoalgebra& co, const HomAlgebra& alg) {
  validate(co);
  validate(alg);
  const std::size_t nc = co.dim();
  const std::size_t na = alg.dim();
  const std::size_t n = na * nc;
  ProductTable m(alg.mult, na);
  Matrix mult(n, n * n);
  // E_{rs} ∗ E_{r's'} has column t equal to δ_t^{s s'} e_r e_{r'}.
  for (std::size_t t = 0; t < nc; ++t)
    for (std::size_t s = 0; s < nc; ++s)
      for (std::size_t s2 = 0; s2 < nc; ++s2) {
        const Rational& coef = co.comult(s * nc + s2, t);
        if (is_zero(coef)) continue;
        for (std::size_t r = 0; r < na; ++r)
          for (std::size_t r2 = 0; r2 < na; ++r2) {
            const Vector& prod = m.at(r, r2);
            const std::size_t col = (r * nc + s) * n + (r2 * nc + s2);
            for (std::size_t k = 0; k < na; ++k)
              if (!is_zero(prod[k])) mult(k * nc + t, col) += coef * prod[k];
          }
      }
  HomObject obj(kron(alg.alpha(), co.object.mu_inv().transpose()));
  return HomAlgebra{obj, std::move(mult), vec(unit_counit(alg.unit, co.counit))};
}

Subspace strict_morphisms(const HomCoalgebra& co, const HomAlgebra& alg) {
  const std::size_t nc = co.dim();
  const std::size_t na = alg.dim();
  Matrix eq = kron(alg.alpha(), Matrix::identity(nc)) - kron(Matrix::identity(na), co.gamma().transpose());
  return Subspace::span(na * nc, nullspace(eq));
}

Report check_strict_convolution(const HomCoalgebra& co, const HomAlgebra& alg) {
  const std::size_t nc = co.dim();
  const std::size_t na = alg.dim();
  Subspace strict = strict_morphisms(co, alg);
  std::vector<Matrix> basis;
  for (const auto& v : strict.basis()) basis.push_back(unvec(v, na, nc));
  const Matrix ue = unit_counit(alg.unit, co.counit);
  auto conv = [&](const Matrix& f, const Matrix& g) { return convolution(f, g, co, alg); };
  Report r;
  r.note("strict_dim", std::to_string(basis.size()));
  run(r, "strict_closure", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (!strict.contains(vec(conv(basis[i], basis[j])))) return a.fail({i, j}, "f∗g leaves Hom^H");
  });
  run(r, "strict_unit", [&](AxiomResult& a) {
    if (!strict.contains(vec(ue))) return a.fail({}, "η∘ε is not in Hom^H");
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!(conv(ue, basis[i]) == basis[i]) || !(conv(basis[i], ue) == basis[i]))
        return a.fail({i}, "η∘ε is not a two-sided unit");
  });
  run(r, "strict_associativity", [&](AxiomResult& a) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Matrix ij = conv(basis[i], basis[j]);
        for (std::size_t k = 0; k < basis.size(); ++k)
          if (!(conv(ij, basis[k]) == conv(basis[i], conv(basis[j], basis[k]))))
            return a.fail({i, j, k}, "(f∗g)∗h ≠ f∗(g∗h)");
      }
  });
  return r;
}

std::string to_string(AntipodeResult::Status s) {
  switch (s) {
    case AntipodeResult::Status::unique:
      return "unique";
    case AntipodeResult::Status::none:
      return "none";
    case AntipodeResult::Status::underdetermined:
      return "underdetermined";
    case AntipodeResult::Status::one_sided:
      return "one_sided";
  }
  return "unknown";
}

AntipodeResult solve_antipode(const HomBialgebra& b) {
  validate(b);
  const std::size_t n = b.dim();
  const std::size_t nn = n * n;
  const Matrix& mult = b.algebra.mult;
  const Matrix& comult = b.coalgebra.comult;
  const Matrix& al = b.alpha();
  // Unknown s_{rc} sits at index r*n + c; equation (t, c) at row t*n + c.
  Matrix left(nn, nn), right(nn, nn), commute(nn, nn);
  Vector rhs(nn);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t row = t * n + c;
      rhs[row] = b.algebra.unit[t] * b.coalgebra.counit[c];
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& delta = comult(j * n + k, c);
          if (is_zero(delta)) continue;
          for (std::size_t r = 0; r < n; ++r) {
            // S∗id: m(S e_j ⊗ e_k); id∗S: m(e_j ⊗ S e_k)
            const Rational& ml = mult(t, r * n + k);
            if (!is_zero(ml)) left(row, r * n + j) += delta * ml;
            const Rational& mr = mult(t, j * n + r);
            if (!is_zero(mr)) right(row, r * n + k) += delta * mr;
          }
        }
      for (std::size_t r = 0; r < n; ++r) {
        commute(row, t * n + r) += al(r, c);
        commute(row, r * n + c) -= al(t, r);
      }
    }
  const Vector zero(nn);
  auto join = [&](const std::vector<Matrix>& blocks, const std::vector<Vector>& rhss) {
    Vector all;
    for (const auto& v : rhss) all.insert(all.end(), v.begin(), v.end());
    return solve_linear(vstack(blocks), all);
  };
  AntipodeResult out;
  LinearSolution joint = join({left, right, commute}, {rhs, rhs, zero});
  out.kernel_dim = joint.kernel.size();
  if (joint.kind == LinearSolution::Kind::unique) {
    out.status = AntipodeResult::Status::unique;
    out.antipode = unvec(joint.particular, n, n);
    return out;
  }
  if (joint.kind == LinearSolution::Kind::family) {
    out.status = AntipodeResult::Status::underdetermined;
    out.detail = "homogeneous kernel of dimension " + std::to_string(joint.kernel.size());
    return out;
  }
  const bool left_ok = join({left, commute}, {rhs, zero}).kind != LinearSolution::Kind::none;
  const bool right_ok = join({right, commute}, {rhs, zero}).kind != LinearSolution::Kind::none;
  if (left_ok || right_ok) {
    out.status = AntipodeResult::Status::one_sided;
    out.detail = left_ok ? "S∗id = η∘ε is solvable but id∗S = η∘ε is not"
                         : "id∗S = η∘ε is solvable but S∗id = η∘ε is not";
    if (left_ok && right_ok) out.detail = "each side is solvable separately but not jointly";
  } else {
    out.status = AntipodeResult::Status::none;
    out.detail = "no convolution inverse of the identity";
  }
  return out;
}

namespace catalog {

ClassicalBialgebra group_bialgebra(const std::vector<std::vector<std::size_t>>& cayley) {
  const std::size_t n = cayley.size();
  require(n > 0, "empty Cayley table");
  for (const auto& row : cayley) {
    require(row.size() == n, "Cayley table is not square");
    for (std::size_t v : row) require(v < n, "Cayley table entry out of range");
  }
  std::size_t e = n;
  for (std::size_t g = 0; g < n && e == n; ++g) {
    bool left_identity = true;
    for (std::size_t h = 0; h < n; ++h) left_identity = left_identity && cayley[g][h] == h && cayley[h][g] == h;
    if (left_identity) e = g;
  }
  require(e < n, "Cayley table has no identity");
  Matrix mult(n, n * n);
  Matrix comult(n * n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) mult(cayley[g][h], g * n + h) = 1;
    comult(g * n + g, g) = 1;
  }
  return {{std::move(mult), unit_vector(n, e)}, {std::move(comult), Vector(n, Rational(1))}};
}

Matrix group_inversion(const std::vector<std::vector<std::size_t>>& cayley) {
  const std::size_t n = cayley.size();
  ClassicalBialgebra b = group_bialgebra(cayley);
  const std::size_t e = static_cast<std::size_t>(
      std::find_if(b.algebra.unit.begin(), b.algebra.unit.end(), [](const Rational& q) { return q != 0; }) -
      b.algebra.unit.begin());
  std::vector<std::size_t> image(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (cayley[g][h] == e) image[g] = h;
  return Matrix::permutation(image);
}

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  require(n > 0, "cyclic group of order zero");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<std::size_t>> symmetric3_table() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<std::size_t, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = index(c);
    }
  return t;
}

Matrix permutation_automorphism(const std::vector<std::size_t>& image) { return Matrix::permutation(image); }

ClassicalAlgebra matrix_algebra_2() {
  Matrix mult(4, 16);
  // E_ab E_cd = δ_bc E_ad
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t d = 0; d < 2; ++d) mult(a * 2 + d, (a * 2 + b) * 4 + (b * 2 + d)) = 1;
  return {std::move(mult), Vector{1, 0, 0, 1}};
}

Matrix conjugation(const Matrix& t) {
  require_square(t, 2, "conjugating matrix");
  return kron(t, invert(t).transpose());
}

ClassicalBialgebra sweedler() {
  // basis 0 = 1, 1 = g, 2 = x, 3 = gx
  Tensor3 m(4, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    m.set(0, i, i, 1);
    m.set(i, 0, i, 1);
  }
  m.set(1, 1, 0, 1);
  m.set(1, 2, 3, 1);
  m.set(1, 3, 2, 1);
  m.set(2, 1, 3, -1);
  m.set(3, 1, 2, -1);
  Tensor3 delta(4, 4, 4);
  delta.set(0, 0, 0, 1);
  delta.set(1, 1, 1, 1);
  delta.set(2, 2, 0, 1);
  delta.set(2, 1, 2, 1);
  delta.set(3, 3, 1, 1);
  delta.set(3, 0, 3, 1);
  return {{m.to_bilinear(), unit_vector(4, 0)}, {delta.to_colinear(), Vector{1, 1, 0, 0}}};
}

Matrix sweedler_antipode() {
  return Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
}

Matrix sweedler_scaling(const Rational& c) { return Matrix::diagonal({1, 1, c, c}); }

ClassicalBialgebra idempotent_monoid() {
  return group_bialgebra({{0, 1}, {1, 1}});
}

}  // namespace catalog

}  // namespace homcas
