#include "homcas/tensoralg.hpp"

#include "homcas/coherence.hpp"
#include "homcas/errors.hpp"

namespace homcas {

namespace {

constexpr std::size_t kMaxComponent = 100000;
constexpr std::size_t kMaxIdealAmbient = 4096;

std::size_t sum(const std::vector<std::size_t>& v) {
  std::size_t s = 0;
  for (std::size_t x : v) s += x;
  return s;
}

// Applies per-slot maps to x ∈ M^{⊗n}; a null entry leaves its slot alone.
Vector apply_slots(const std::vector<const SparseColumns*>& maps, std::size_t d, const Vector& x) {
  const std::size_t total = x.size();
  Vector cur = x;
  std::size_t pre = 1;
  for (const SparseColumns* a : maps) {
    const std::size_t post = total / (pre * d);
    if (a) {
      Vector next(total);
      for (std::size_t p = 0; p < pre; ++p)
        for (std::size_t s = 0; s < d; ++s)
          for (std::size_t q = 0; q < post; ++q) {
            const Rational& v = cur[(p * d + s) * post + q];
            if (is_zero(v)) continue;
            for (const auto& e : a->column(s)) next[(p * d + e.row) * post + q] += e.value * v;
          }
      cur = std::move(next);
    }
    pre *= d;
  }
  return cur;
}

// Splits a flat index over factor sizes into per-factor indices.
std::vector<std::size_t> split_index(std::size_t flat, const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> out(sizes.size());
  for (std::size_t f = sizes.size(); f-- > 0;) {
    out[f] = flat % sizes[f];
    flat /= sizes[f];
  }
  return out;
}

}  // namespace

int GradedVector::top_degree() const {
  for (std::size_t n = components.size(); n-- > 0;)
    if (!homcas::is_zero(components[n])) return static_cast<int>(n);
  return -1;
}

bool GradedVector::is_zero() const { return top_degree() < 0; }

GradedVector operator+(const GradedVector& a, const GradedVector& b) {
  if (a.components.size() != b.components.size()) throw InputError("graded vectors of different truncations");
  GradedVector out = a;
  for (std::size_t n = 0; n < a.components.size(); ++n) out.components[n] = a.components[n] + b.components[n];
  return out;
}

GradedVector operator-(const GradedVector& a, const GradedVector& b) { return a + Rational(-1) * b; }

GradedVector operator*(const Rational& s, const GradedVector& a) {
  GradedVector out = a;
  for (auto& c : out.components) c = s * c;
  return out;
}

void MultiGraded::add(const std::vector<std::size_t>& degrees, const Vector& v, const Rational& scale) {
  if (degrees.size() != factors) throw InputError("wrong number of factor degrees");
  if (homcas::is_zero(v) || scale == 0) return;
  auto it = parts.find(degrees);
  if (it == parts.end()) {
    parts.emplace(degrees, scale * v);
    return;
  }
  axpy(it->second, scale, v);
  if (homcas::is_zero(it->second)) parts.erase(it);
}

MultiGraded operator+(MultiGraded a, const MultiGraded& b) {
  if (a.factors != b.factors) throw InputError("multigraded elements with different factor counts");
  for (const auto& [k, v] : b.parts) a.add(k, v);
  return a;
}

MultiGraded operator-(MultiGraded a, const MultiGraded& b) {
  if (a.factors != b.factors) throw InputError("multigraded elements with different factor counts");
  for (const auto& [k, v] : b.parts) a.add(k, v, -1);
  return a;
}

TruncatedTensorHomAlgebra::TruncatedTensorHomAlgebra(HomObject base, std::size_t max_degree)
    : base_(std::move(base)), max_degree_(max_degree) {
  const std::size_t d = base_.dim();
  const std::size_t n_max = max_degree_;
  powers_.assign(n_max + 1, 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (powers_[n - 1] > kMaxComponent / d)
      throw ResourceError("dim^N exceeds " + std::to_string(kMaxComponent));
    powers_[n] = powers_[n - 1] * d;
  }
  offsets_.assign(n_max + 1, 0);
  for (std::size_t n = n_max; n-- > 0;) offsets_[n] = offsets_[n + 1] + powers_[n + 1];
  total_ = offsets_[0] + 1;

  for (int k = -static_cast<int>(n_max); k <= static_cast<int>(n_max); ++k)
    mu_powers_.emplace_back(base_.mu_power(k));

  exponents_.assign(n_max + 1, {});
  for (std::size_t n = 0; n <= n_max; ++n) {
    exponents_[n].resize(n_max + 1 - n);
    for (std::size_t m = 0; n + m <= n_max; ++m) {
      if (n == 0 || m == 0) {
        exponents_[n][m] = std::vector<int>(n + m, 1);
        continue;
      }
      ShuffledWord from(PTree::graft(right_comb(n), right_comb(m)));
      ShuffledWord to(right_comb(n + m));
      CoherenceMap b = reassociate(from, to);
      if (b.perm != identity_permutation(n + m)) throw InternalError("tensor product map permutes slots");
      exponents_[n][m] = b.exponents;
    }
  }

  delta_.resize(n_max + 1);
  delta_[0].push_back(MultiGraded{2, {{{0, 0}, Vector{1}}}});
  if (n_max >= 1) {
    const Matrix& inv = base_.mu_inv();
    for (std::size_t i = 0; i < d; ++i) {
      MultiGraded m{2, {}};
      m.add({0, 1}, inv.column(i));
      m.add({1, 0}, inv.column(i));
      delta_[1].push_back(std::move(m));
    }
  }
  for (std::size_t n = 2; n <= n_max; ++n) {
    delta_[n].reserve(powers_[n]);
    for (std::size_t idx = 0; idx < powers_[n]; ++idx)
      delta_[n].push_back(multiply(delta_[1][idx / powers_[n - 1]], delta_[n - 1][idx % powers_[n - 1]]));
  }

  antipode_.resize(n_max + 1);
  antipode_[0] = Matrix::identity(1);
  if (n_max >= 1) antipode_[1] = Rational(-1) * Matrix::identity(d);
  for (std::size_t n = 2; n <= n_max; ++n) {
    // S(x·w) = S(w)·S(x) = −S(w)·x
    Matrix s(powers_[n], powers_[n]);
    for (std::size_t idx = 0; idx < powers_[n]; ++idx) {
      const std::size_t i = idx / powers_[n - 1], r = idx % powers_[n - 1];
      Vector col = slot_powers(exponents_[n - 1][1], kron(antipode_[n - 1].column(r), unit_vector(d, i)));
      for (std::size_t row = 0; row < powers_[n]; ++row)
        if (!homcas::is_zero(col[row])) s(row, idx) = -col[row];
    }
    antipode_[n] = std::move(s);
  }
}

const SparseColumns& TruncatedTensorHomAlgebra::mu_power(int k) const {
  const int n = static_cast<int>(max_degree_);
  if (k < -n || k > n) throw InternalError("slot exponent out of the precomputed range");
  return mu_powers_[static_cast<std::size_t>(k + n)];
}

Vector TruncatedTensorHomAlgebra::slot_powers(const std::vector<int>& exponents, const Vector& x) const {
  std::vector<const SparseColumns*> maps;
  maps.reserve(exponents.size());
  for (int k : exponents) maps.push_back(k == 0 ? nullptr : &mu_power(k));
  return apply_slots(maps, base_.dim(), x);
}

std::size_t TruncatedTensorHomAlgebra::degree_of(std::size_t flat) const {
  if (flat >= total_) throw InputError("flat coordinate out of range");
  for (std::size_t n = 0; n <= max_degree_; ++n)
    if (flat >= offsets_[n] && flat < offsets_[n] + powers_[n]) return n;
  throw InternalError("flat coordinate not covered by any degree");
}

GradedVector TruncatedTensorHomAlgebra::zero() const {
  GradedVector u;
  for (std::size_t n = 0; n <= max_degree_; ++n) u.components.emplace_back(powers_[n]);
  return u;
}

GradedVector TruncatedTensorHomAlgebra::one() const { return basis(0, 0); }

GradedVector TruncatedTensorHomAlgebra::basis(std::size_t degree, std::size_t index) const {
  if (degree > max_degree_ || index >= powers_[degree]) throw InputError("basis element out of range");
  GradedVector u = zero();
  u.components[degree][index] = 1;
  return u;
}

GradedVector TruncatedTensorHomAlgebra::from_component(std::size_t degree, const Vector& v) const {
  if (degree > max_degree_ || v.size() != powers_[degree]) throw InputError("component has the wrong size");
  GradedVector u = zero();
  u.components[degree] = v;
  return u;
}

Vector TruncatedTensorHomAlgebra::flatten(const GradedVector& u) const {
  if (u.components.size() != max_degree_ + 1) throw InputError("graded vector has the wrong truncation");
  Vector out(total_);
  for (std::size_t n = 0; n <= max_degree_; ++n) {
    if (u.components[n].size() != powers_[n]) throw InputError("component has the wrong size");
    std::copy(u.components[n].begin(), u.components[n].end(), out.begin() + static_cast<long>(offsets_[n]));
  }
  return out;
}

GradedVector TruncatedTensorHomAlgebra::unflatten(const Vector& flat) const {
  if (flat.size() != total_) throw InputError("flat vector has the wrong length");
  GradedVector u;
  for (std::size_t n = 0; n <= max_degree_; ++n) {
    auto first = flat.begin() + static_cast<long>(offsets_[n]);
    u.components.emplace_back(first, first + static_cast<long>(powers_[n]));
  }
  return u;
}

const std::vector<int>& TruncatedTensorHomAlgebra::product_exponents(std::size_t n, std::size_t m) const {
  if (n + m > max_degree_) throw DegreeOverflow(n, m, max_degree_);
  return exponents_[n][m];
}

GradedVector TruncatedTensorHomAlgebra::multiply(const GradedVector& u, const GradedVector& v) const {
  if (u.components.size() != max_degree_ + 1 || v.components.size() != max_degree_ + 1)
    throw InputError("graded vector has the wrong truncation");
  GradedVector out = zero();
  for (std::size_t n = 0; n <= max_degree_; ++n) {
    if (homcas::is_zero(u.components[n])) continue;
    for (std::size_t m = 0; m <= max_degree_; ++m) {
      if (homcas::is_zero(v.components[m])) continue;
      if (n + m > max_degree_) throw DegreeOverflow(n, m, max_degree_);
      axpy(out.components[n + m], 1, slot_powers(exponents_[n][m], kron(u.components[n], v.components[m])));
    }
  }
  return out;
}

MultiGraded TruncatedTensorHomAlgebra::multiply(const MultiGraded& u, const MultiGraded& v) const {
  if (u.factors != v.factors) throw InputError("multigraded elements with different factor counts");
  const std::size_t k = u.factors;
  MultiGraded out{k, {}};
  for (const auto& [a, x] : u.parts)
    for (const auto& [b, y] : v.parts) {
      if (sum(a) + sum(b) > max_degree_) throw DegreeOverflow(sum(a), sum(b), max_degree_);
      std::vector<std::size_t> c(k), sa(k), sb(k), sc(k);
      std::vector<int> exps;
      for (std::size_t f = 0; f < k; ++f) {
        c[f] = a[f] + b[f];
        sa[f] = powers_[a[f]];
        sb[f] = powers_[b[f]];
        sc[f] = powers_[c[f]];
        const auto& e = exponents_[a[f]][b[f]];
        exps.insert(exps.end(), e.begin(), e.end());
      }
      Vector z(powers_[sum(c)]);
      for (std::size_t ix = 0; ix < x.size(); ++ix) {
        if (homcas::is_zero(x[ix])) continue;
        const auto pa = split_index(ix, sa);
        for (std::size_t iy = 0; iy < y.size(); ++iy) {
          if (homcas::is_zero(y[iy])) continue;
          const auto pb = split_index(iy, sb);
          std::size_t flat = 0;
          for (std::size_t f = 0; f < k; ++f) flat = flat * sc[f] + pa[f] * sb[f] + pb[f];
          z[flat] += x[ix] * y[iy];
        }
      }
      out.add(c, slot_powers(exps, z));
    }
  return out;
}

GradedVector TruncatedTensorHomAlgebra::automorphism(const GradedVector& u, int power) const {
  const SparseColumns mu(base_.mu_power(power));
  GradedVector out = u;
  for (std::size_t n = 1; n <= max_degree_; ++n)
    out.components[n] = apply_slots(std::vector<const SparseColumns*>(n, &mu), base_.dim(), u.components[n]);
  return out;
}

MultiGraded TruncatedTensorHomAlgebra::automorphism(const MultiGraded& u, int power) const {
  const SparseColumns mu(base_.mu_power(power));
  MultiGraded out{u.factors, {}};
  for (const auto& [key, x] : u.parts)
    out.add(key, apply_slots(std::vector<const SparseColumns*>(sum(key), &mu), base_.dim(), x));
  return out;
}

MultiGraded TruncatedTensorHomAlgebra::comultiply(const GradedVector& u) const {
  if (u.components.size() != max_degree_ + 1) throw InputError("graded vector has the wrong truncation");
  MultiGraded out{2, {}};
  for (std::size_t n = 0; n <= max_degree_; ++n)
    for (std::size_t i = 0; i < powers_[n]; ++i) {
      const Rational& c = u.components[n][i];
      if (homcas::is_zero(c)) continue;
      for (const auto& [key, v] : delta_[n][i].parts) out.add(key, v, c);
    }
  return out;
}

MultiGraded TruncatedTensorHomAlgebra::comultiply_factor(const MultiGraded& u, std::size_t factor) const {
  if (factor >= u.factors) throw InputError("factor index out of range");
  MultiGraded out{u.factors + 1, {}};
  for (const auto& [key, x] : u.parts) {
    std::size_t pre_deg = 0, post_deg = 0;
    for (std::size_t f = 0; f < factor; ++f) pre_deg += key[f];
    for (std::size_t f = factor + 1; f < key.size(); ++f) post_deg += key[f];
    const std::size_t mid = powers_[key[factor]], post = powers_[post_deg];
    for (std::size_t ix = 0; ix < x.size(); ++ix) {
      if (homcas::is_zero(x[ix])) continue;
      const std::size_t p = ix / (mid * post), m = (ix / post) % mid, q = ix % post;
      for (const auto& [dk, w] : delta_[key[factor]][m].parts) {
        std::vector<std::size_t> nk(key.begin(), key.begin() + static_cast<long>(factor));
        nk.push_back(dk[0]);
        nk.push_back(dk[1]);
        nk.insert(nk.end(), key.begin() + static_cast<long>(factor) + 1, key.end());
        const std::size_t wsize = w.size();
        Vector z(powers_[pre_deg] * wsize * post);
        for (std::size_t iw = 0; iw < wsize; ++iw)
          if (!homcas::is_zero(w[iw])) z[(p * wsize + iw) * post + q] = x[ix] * w[iw];
        out.add(nk, z);
      }
    }
  }
  return out;
}

Rational TruncatedTensorHomAlgebra::counit(const GradedVector& u) const {
  if (u.components.empty()) throw InputError("graded vector has no components");
  return u.components[0][0];
}

GradedVector TruncatedTensorHomAlgebra::antipode(const GradedVector& u) const {
  GradedVector out = u;
  for (std::size_t n = 0; n <= max_degree_; ++n) out.components[n] = antipode_[n].apply(u.components[n]);
  return out;
}

MultiGraded TruncatedTensorHomAlgebra::apply_factor(const MultiGraded& u, std::size_t factor,
                                                    const std::vector<Matrix>& maps) const {
  if (factor >= u.factors) throw InputError("factor index out of range");
  MultiGraded out{u.factors, {}};
  for (const auto& [key, x] : u.parts) {
    const Matrix& a = maps.at(key[factor]);
    std::size_t post_deg = 0;
    for (std::size_t f = factor + 1; f < key.size(); ++f) post_deg += key[f];
    const std::size_t mid = powers_[key[factor]], post = powers_[post_deg];
    if (a.rows() != mid || a.cols() != mid) throw InputError("factor map has the wrong size");
    const SparseColumns sa(a);
    Vector z(x.size());
    for (std::size_t ix = 0; ix < x.size(); ++ix) {
      if (homcas::is_zero(x[ix])) continue;
      const std::size_t p = ix / (mid * post), m = (ix / post) % mid, q = ix % post;
      for (const auto& e : sa.column(m)) z[(p * mid + e.row) * post + q] += e.value * x[ix];
    }
    out.add(key, z);
  }
  return out;
}

GradedVector TruncatedTensorHomAlgebra::multiply_factors(const MultiGraded& u) const {
  if (u.factors != 2) throw InputError("multiplication needs two factors");
  GradedVector out = zero();
  for (const auto& [key, x] : u.parts) {
    if (key[0] + key[1] > max_degree_) throw DegreeOverflow(key[0], key[1], max_degree_);
    axpy(out.components[key[0] + key[1]], 1, slot_powers(exponents_[key[0]][key[1]], x));
  }
  return out;
}

MultiGraded TruncatedTensorHomAlgebra::as_multigraded(const GradedVector& u) const {
  MultiGraded out{1, {}};
  for (std::size_t n = 0; n < u.components.size(); ++n) out.add({n}, u.components[n]);
  return out;
}

MultiGraded TruncatedTensorHomAlgebra::tensor(const GradedVector& u, const GradedVector& v) const {
  MultiGraded out{2, {}};
  for (std::size_t n = 0; n < u.components.size(); ++n) {
    if (homcas::is_zero(u.components[n])) continue;
    for (std::size_t m = 0; m < v.components.size(); ++m) {
      if (homcas::is_zero(v.components[m])) continue;
      if (n + m > max_degree_) throw DegreeOverflow(n, m, max_degree_);
      out.add({n, m}, kron(u.components[n], v.components[m]));
    }
  }
  return out;
}

std::vector<Matrix> TruncatedTensorHomAlgebra::automorphism_matrices(int power) const {
  const Matrix mu = base_.mu_power(power);
  std::vector<Matrix> out{Matrix::identity(1)};
  for (std::size_t n = 1; n <= max_degree_; ++n) out.push_back(kron(out.back(), mu));
  return out;
}

namespace {

std::vector<GradedVector> all_basis(const TruncatedTensorHomAlgebra& t, std::vector<std::size_t>& degrees) {
  std::vector<GradedVector> out;
  for (std::size_t n = 0; n <= t.max_degree(); ++n)
    for (std::size_t i = 0; i < t.component_dim(n); ++i) {
      out.push_back(t.basis(n, i));
      degrees.push_back(n);
    }
  return out;
}

// (ε ⊗ id) or (id ⊗ ε) of a two-factor element.
GradedVector counit_factor(const TruncatedTensorHomAlgebra& t, const MultiGraded& u, std::size_t factor) {
  GradedVector out = t.zero();
  for (const auto& [key, x] : u.parts)
    if (key[factor] == 0) axpy(out.components[key[1 - factor]], 1, x);
  return out;
}

}  // namespace

Report check_tensor_algebra(const TruncatedTensorHomAlgebra& t) {
  const std::size_t n_max = t.max_degree();
  std::vector<std::size_t> deg;
  const auto basis = all_basis(t, deg);
  const std::size_t b = basis.size();
  const GradedVector one = t.one();
  Report r;

  std::vector<GradedVector> alpha(b), alpha_inv(b), anti(b);
  std::vector<MultiGraded> delta(b);
  for (std::size_t i = 0; i < b; ++i) {
    alpha[i] = t.automorphism(basis[i], 1);
    alpha_inv[i] = t.automorphism(basis[i], -1);
    anti[i] = t.antipode(basis[i]);
    delta[i] = t.comultiply(basis[i]);
  }
  // products of basis pairs in range, indexed [i * b + j]
  std::vector<GradedVector> prod(b * b);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (deg[i] + deg[j] <= n_max) prod[i * b + j] = t.multiply(basis[i], basis[j]);

  {
    AxiomResult& a = r.axiom("hom_associativity");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      for (std::size_t j = 0; j < b && a.passed; ++j)
        for (std::size_t k = 0; k < b && a.passed; ++k) {
          if (deg[i] + deg[j] + deg[k] > n_max) continue;
          if (t.multiply(alpha[i], prod[j * b + k]) != t.multiply(prod[i * b + j], alpha[k]))
            a.fail({i, j, k}, "T(μ)(u)(vw) ≠ (uv)T(μ)(w)");
        }
  }
  {
    AxiomResult& a = r.axiom("untwisted_associativity");
    auto m = [&](const GradedVector& u, const GradedVector& v) { return t.automorphism(t.multiply(u, v), -1); };
    for (std::size_t i = 0; i < b && a.passed; ++i)
      for (std::size_t j = 0; j < b && a.passed; ++j)
        for (std::size_t k = 0; k < b && a.passed; ++k) {
          if (deg[i] + deg[j] + deg[k] > n_max) continue;
          if (m(m(basis[i], basis[j]), basis[k]) != m(basis[i], m(basis[j], basis[k])))
            a.fail({i, j, k}, "T(μ)⁻¹∘m is not associative");
        }
  }
  {
    AxiomResult& a = r.axiom("hom_unitality");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      if (t.multiply(one, basis[i]) != alpha[i] || t.multiply(basis[i], one) != alpha[i])
        a.fail({i}, "1·u = u·1 = T(μ)(u) fails");
  }
  {
    AxiomResult& a = r.axiom("alpha_multiplicative");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      for (std::size_t j = 0; j < b && a.passed; ++j)
        if (deg[i] + deg[j] <= n_max && t.automorphism(prod[i * b + j]) != t.multiply(alpha[i], alpha[j]))
          a.fail({i, j}, "T(μ)(uv) ≠ T(μ)(u)T(μ)(v)");
  }
  {
    AxiomResult& a = r.axiom("comult_multiplicative");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      for (std::size_t j = 0; j < b && a.passed; ++j)
        if (deg[i] + deg[j] <= n_max && t.comultiply(prod[i * b + j]) != t.multiply(delta[i], delta[j]))
          a.fail({i, j}, "Δ(uv) ≠ Δ(u)Δ(v)");
  }
  {
    AxiomResult& a = r.axiom("comult_alpha");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      if (t.comultiply(alpha[i]) != t.automorphism(delta[i])) a.fail({i}, "Δ∘T(μ) ≠ (T(μ)⊗̄T(μ))∘Δ");
  }
  {
    AxiomResult& a = r.axiom("hom_coassociativity");
    const auto inv = t.automorphism_matrices(-1);
    for (std::size_t i = 0; i < b && a.passed; ++i) {
      MultiGraded lhs = t.apply_factor(t.comultiply_factor(delta[i], 1), 0, inv);
      MultiGraded rhs = t.apply_factor(t.comultiply_factor(delta[i], 0), 2, inv);
      if (lhs != rhs) a.fail({i}, "(T(μ)⁻¹⊗̄Δ)Δ ≠ (Δ⊗̄T(μ)⁻¹)Δ");
    }
  }
  {
    AxiomResult& a = r.axiom("counit_law");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      if (counit_factor(t, delta[i], 0) != alpha_inv[i] || counit_factor(t, delta[i], 1) != alpha_inv[i])
        a.fail({i}, "(ε⊗̄id)Δ = (id⊗̄ε)Δ = T(μ)⁻¹ fails");
  }
  {
    AxiomResult& a = r.axiom("counit_multiplicative");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      for (std::size_t j = 0; j < b && a.passed; ++j)
        if (deg[i] + deg[j] <= n_max && t.counit(prod[i * b + j]) != t.counit(basis[i]) * t.counit(basis[j]))
          a.fail({i, j}, "ε(uv) ≠ ε(u)ε(v)");
  }
  {
    std::vector<Matrix> s;
    for (std::size_t n = 0; n <= n_max; ++n) s.push_back(t.antipode_matrix(n));
    AxiomResult& left = r.axiom("antipode_left");
    for (std::size_t i = 0; i < b && left.passed; ++i)
      if (t.multiply_factors(t.apply_factor(delta[i], 0, s)) != t.counit(basis[i]) * one)
        left.fail({i}, "S∗id ≠ η∘ε");
    AxiomResult& right = r.axiom("antipode_right");
    for (std::size_t i = 0; i < b && right.passed; ++i)
      if (t.multiply_factors(t.apply_factor(delta[i], 1, s)) != t.counit(basis[i]) * one)
        right.fail({i}, "id∗S ≠ η∘ε");
  }
  {
    AxiomResult& a = r.axiom("antipode_morphism");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      if (t.antipode(alpha[i]) != t.automorphism(anti[i])) a.fail({i}, "S∘T(μ) ≠ T(μ)∘S");
  }
  {
    AxiomResult& a = r.axiom("antipode_antimultiplicative");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      for (std::size_t j = 0; j < b && a.passed; ++j)
        if (deg[i] + deg[j] <= n_max && t.antipode(prod[i * b + j]) != t.multiply(anti[j], anti[i]))
          a.fail({i, j}, "S(uv) ≠ S(v)S(u)");
  }
  return r;
}

Vector AlgebraLift::apply(const GradedVector& u) const {
  if (u.components.size() != components.size()) throw InputError("graded vector has the wrong truncation");
  Vector out(components.empty() ? 0 : components[0].rows());
  for (std::size_t n = 0; n < components.size(); ++n) axpy(out, 1, components[n].apply(u.components[n]));
  return out;
}

AlgebraLift universal_lift(const Matrix& f, const HomAlgebra& a, const TruncatedTensorHomAlgebra& t) {
  validate(a);
  const std::size_t d = t.base().dim();
  if (f.rows() != a.dim() || f.cols() != d) throw InputError("f must be dim(A) x dim(M)");
  if (a.alpha() * f != f * t.base().mu()) throw InputError("f does not commute with the automorphisms");
  AlgebraLift lift;
  lift.components.push_back(Matrix::column_vector(a.unit));
  if (t.max_degree() >= 1) lift.components.push_back(f);
  for (std::size_t n = 2; n <= t.max_degree(); ++n) {
    const Matrix& prev = lift.components.back();
    const std::size_t size = t.component_dim(n), tail = t.component_dim(n - 1);
    Matrix fn(a.dim(), size);
    for (std::size_t idx = 0; idx < size; ++idx) {
      Vector col = multiply(a.mult, f.column(idx / tail), prev.column(idx % tail));
      for (std::size_t r = 0; r < a.dim(); ++r) fn(r, idx) = col[r];
    }
    lift.components.push_back(std::move(fn));
  }
  return lift;
}

HomIdeal ideal_generated(const TruncatedTensorHomAlgebra& t, const std::vector<GradedVector>& x) {
  const std::size_t amb = t.total_dim();
  if (amb > kMaxIdealAmbient) throw ResourceError("ideal computations are limited to " +
                                                  std::to_string(kMaxIdealAmbient) + " coordinates");
  EchelonBuilder span_x(amb);
  for (const auto& g : x) span_x.insert(t.flatten(g));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!span_x.contains(t.flatten(t.automorphism(x[i], 1))))
      throw InputError("span of the generators is not T(μ)-stable at generator " + std::to_string(i));

  // Sweeps run over the echelon basis rather than the vectors that were
  // inserted: a combination can lose its top degree and become multipliable.
  EchelonBuilder ideal(amb);
  for (const auto& g : x) ideal.insert(t.flatten(g));
  const std::size_t d = t.base().dim();
  for (bool grew = true; grew;) {
    grew = false;
    const Subspace current = ideal.to_subspace();
    for (const auto& v : current.basis()) {
      const GradedVector u = t.unflatten(v);
      auto offer = [&](const GradedVector& w) { grew = ideal.insert(t.flatten(w)) || grew; };
      offer(t.automorphism(u, 1));
      offer(t.automorphism(u, -1));
      if (u.top_degree() + 1 > static_cast<int>(t.max_degree())) continue;
      for (std::size_t i = 0; i < d; ++i) {
        offer(t.multiply(t.generator(i), u));
        offer(t.multiply(u, t.generator(i)));
      }
    }
  }
  return HomIdeal{ideal.to_subspace()};
}

Vector TruncatedQuotient::project(const TruncatedTensorHomAlgebra& t, const GradedVector& u) const {
  return maps.projection.apply(t.flatten(u));
}

GradedVector TruncatedQuotient::lift(const TruncatedTensorHomAlgebra& t, const Vector& q) const {
  return t.unflatten(maps.section.apply(q));
}

Vector TruncatedQuotient::multiply(const TruncatedTensorHomAlgebra& t, const Vector& a, const Vector& b) const {
  return project(t, t.multiply(lift(t, a), lift(t, b)));
}

Vector TruncatedQuotient::project_pair(const TruncatedTensorHomAlgebra& t, const MultiGraded& u) const {
  if (u.factors != 2) throw InputError("pair projection needs two factors");
  (void)t;
  Vector out(dim() * dim());
  for (const auto& [key, x] : u.parts)
    axpy(out, 1, kron_apply(projection_blocks.at(key[0]), projection_blocks.at(key[1]), x));
  return out;
}

Vector TruncatedQuotient::comultiply(const TruncatedTensorHomAlgebra& t, const Vector& a) const {
  return project_pair(t, t.comultiply(lift(t, a)));
}

TruncatedQuotient quotient(const TruncatedTensorHomAlgebra& t, const HomIdeal& ideal) {
  if (ideal.space.ambient_dim() != t.total_dim()) throw InputError("ideal lives in a different tensor algebra");
  TruncatedQuotient q;
  q.maps = ideal.space.quotient_projection();
  q.degree_dims.assign(t.max_degree() + 1, 0);
  for (std::size_t c : q.maps.complement) {
    const std::size_t n = t.degree_of(c);
    q.degree_of.push_back(n);
    ++q.degree_dims[n];
  }
  for (std::size_t n = 0; n <= t.max_degree(); ++n) {
    Matrix block(q.dim(), t.component_dim(n));
    for (std::size_t r = 0; r < q.dim(); ++r)
      for (std::size_t c = 0; c < t.component_dim(n); ++c) block(r, c) = q.maps.projection(r, t.offset(n) + c);
    q.projection_blocks.push_back(std::move(block));
  }
  const std::size_t k = q.dim();
  q.alpha = Matrix(k, k);
  q.antipode = Matrix(k, k);
  q.counit = Vector(k);
  for (std::size_t c = 0; c < k; ++c) {
    GradedVector u = q.lift(t, unit_vector(k, c));
    Vector a = q.project(t, t.automorphism(u));
    Vector s = q.project(t, t.antipode(u));
    for (std::size_t r = 0; r < k; ++r) {
      q.alpha(r, c) = a[r];
      q.antipode(r, c) = s[r];
    }
    q.counit[c] = t.counit(u);
  }
  q.unit = q.project(t, t.one());
  return q;
}

Report check_hopf_ideal(const TruncatedTensorHomAlgebra& t, const HomIdeal& ideal) {
  const Subspace& space = ideal.space;
  std::vector<GradedVector> basis;
  for (const auto& v : space.basis()) basis.push_back(t.unflatten(v));
  const std::size_t b = basis.size();
  auto in = [&](const GradedVector& u) { return space.contains(t.flatten(u)); };
  Report r;
  {
    AxiomResult& a = r.axiom("alpha_stable");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      if (!in(t.automorphism(basis[i], 1)) || !in(t.automorphism(basis[i], -1)))
        a.fail({i}, "T(μ)^{±1}(u) ∉ I");
  }
  const std::size_t d = t.base().dim();
  for (bool left : {true, false}) {
    AxiomResult& a = r.axiom(left ? "left_closed" : "right_closed");
    for (std::size_t i = 0; i < b && a.passed; ++i) {
      if (basis[i].top_degree() + 1 > static_cast<int>(t.max_degree())) continue;
      for (std::size_t g = 0; g < d && a.passed; ++g) {
        GradedVector p = left ? t.multiply(t.generator(g), basis[i]) : t.multiply(basis[i], t.generator(g));
        if (!in(p)) a.fail({i, g}, left ? "x·u ∉ I" : "u·x ∉ I");
      }
    }
  }
  {
    AxiomResult& a = r.axiom("counit_vanishes");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      if (t.counit(basis[i]) != 0) a.fail({i}, "ε(u) ≠ 0");
  }
  {
    TruncatedQuotient q = quotient(t, ideal);
    AxiomResult& a = r.axiom("coideal");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      if (!is_zero(q.project_pair(t, t.comultiply(basis[i])))) a.fail({i}, "Δ(u) ∉ I⊗̄T + T⊗̄I");
  }
  {
    AxiomResult& a = r.axiom("antipode_stable");
    for (std::size_t i = 0; i < b && a.passed; ++i)
      if (!in(t.antipode(basis[i]))) a.fail({i}, "S(u) ∉ I");
  }
  return r;
}

std::vector<GradedVector> enveloping_generators(const TruncatedTensorHomAlgebra& t, const HomLieAlgebra& l,
                                                GeneratorSign sign) {
  validate(l);
  const std::size_t d = l.dim();
  if (t.base().dim() != d) throw InputError("Lie algebra and tensor algebra dimensions differ");
  if (t.max_degree() < 2) throw InputError("enveloping generators need degree 2");
  std::vector<GradedVector> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (sign == GeneratorSign::commutator_minus_bracket && i >= j) continue;
      Vector xy = kron(unit_vector(d, i), unit_vector(d, j));
      Vector yx = kron(unit_vector(d, j), unit_vector(d, i));
      Vector br = l.bracket.column(i * d + j);
      GradedVector g = t.zero();
      if (sign == GeneratorSign::commutator_minus_bracket) {
        g.components[2] = xy - yx;
        g.components[1] = -br;
      } else {
        g.components[2] = -(xy + yx);
        g.components[1] = br;
      }
      out.push_back(std::move(g));
    }
  return out;
}

EnvelopingAlgebra enveloping(const HomLieAlgebra& l, std::size_t max_degree, GeneratorSign sign) {
  Report lie = check_hom_lie(l);
  if (!lie.passed()) throw InputError("not a Hom-Lie algebra:\n" + lie.to_text());
  TruncatedTensorHomAlgebra t(l.object, max_degree);
  auto gens = enveloping_generators(t, l, sign);
  HomIdeal ideal = ideal_generated(t, gens);
  Report report = check_hopf_ideal(t, ideal);
  for (const auto& res : report.results())
    if (!res.passed) throw ConstructionFailed("enveloping ideal fails " + res.axiom, res.witness);
  TruncatedQuotient q = quotient(t, ideal);
  return EnvelopingAlgebra{std::move(t), std::move(gens), std::move(ideal), std::move(report), std::move(q)};
}

}  // namespace homcas
