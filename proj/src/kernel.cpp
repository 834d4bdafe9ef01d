#include "homcas/kernel.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "homcas/errors.hpp"

namespace homcas {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
}

void axpy(Vector& y, const Rational& a, const Vector& x) {
  if (y.size() != x.size()) throw InputError("axpy: length mismatch");
  if (is_zero(a)) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i])) y[i] += a * x[i];
  }
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, 1, b);
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, -1, b);
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  if (is_zero(s)) return r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) r[i] = s * v[i];
  }
  return r;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!is_zero(b[j])) r[i * b.size() + j] = a[i] * b[j];
    }
  }
  return r;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix literal");
    std::size_t j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::permutation(const std::vector<std::size_t>& image) {
  Matrix m(image.size(), image.size());
  for (std::size_t j = 0; j < image.size(); ++j) m(image[j], j) = 1;
  return m;
}

Matrix Matrix::row_vector(const Vector& v) { return from_rows({v}, v.size()); }

Matrix Matrix::column_vector(const Vector& v) { return from_columns({v}, v.size()); }

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return homcas::is_zero(q); });
}

bool Matrix::is_identity() const { return is_square() && *this == identity(rows_); }

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw InputError("apply: dimension mismatch");
  Vector y(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (homcas::is_zero(x[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, j);
      if (!homcas::is_zero(a)) y[i] += a * x[j];
    }
  }
  return y;
}

Matrix Matrix::power(int k) const {
  if (!is_square()) throw InputError("power of non-square matrix");
  Matrix base = k < 0 ? invert(*this) : *this;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  Matrix result = identity(rows_);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (!is_zero(y)) c(i, j) += x * y;
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum: dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference: dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.entries_) x *= s;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::size_t Matrix::first_differing_column(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return 0;
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, j) != other(i, j)) return j;
  return cols_;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (is_zero(x)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Rational& y = b(k, l);
          if (!is_zero(y)) c(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return c;
}

Matrix kron(std::initializer_list<Matrix> factors) {
  Matrix r = Matrix::identity(1);
  for (const auto& f : factors) r = kron(r, f);
  return r;
}

Vector kron_apply(const Matrix& a, const Matrix& b, const Vector& v) {
  if (v.size() != a.cols() * b.cols()) throw InputError("kron_apply: dimension mismatch");
  // v viewed as an a.cols() x b.cols() array V; result is a V b^T.
  const std::size_t p = a.cols();
  const std::size_t q = b.cols();
  std::vector<Rational> vb(p * b.rows());  // V b^T, p x b.rows()
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t l = 0; l < q; ++l) {
      const Rational& x = v[i * q + l];
      if (is_zero(x)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        const Rational& y = b(k, l);
        if (!is_zero(y)) vb[i * b.rows() + k] += x * y;
      }
    }
  Vector r(a.rows() * b.rows());
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < b.rows(); ++k) {
      const Rational& x = vb[i * b.rows() + k];
      if (is_zero(x)) continue;
      for (std::size_t r0 = 0; r0 < a.rows(); ++r0) {
        const Rational& y = a(r0, i);
        if (!is_zero(y)) r[r0 * b.rows() + k] += y * x;
      }
    }
  return r;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw InputError("vstack: column mismatch");
    rows += b.rows();
  }
  Matrix m(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(off + i, j) = b(i, j);
    off += b.rows();
  }
  return m;
}

RowEchelon rref(Matrix a) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead_row, j));
    Rational inv = 1 / a(lead_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead_row || is_zero(a(i, col))) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!is_zero(a(lead_row, j))) a(i, j) -= f * a(lead_row, j);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix invert(const Matrix& a) {
  if (!a.is_square()) throw NotInvertible("non-square matrix is not invertible");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw NotInvertible();
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

LinearSolution solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw InputError("solve_linear: rows of A differ from length of b");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RowEchelon e = rref(std::move(aug));
  LinearSolution sol;
  if (!e.pivots.empty() && e.pivots.back() == n) {
    sol.kind = LinearSolution::Kind::none;
    return sol;
  }
  sol.particular = Vector(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.particular[e.pivots[r]] = e.reduced(r, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    sol.kernel.push_back(std::move(v));
  }
  sol.kind = sol.kernel.empty() ? LinearSolution::Kind::unique : LinearSolution::Kind::family;
  return sol;
}

// ---------------------------------------------------------------------------
// Tensor3

Tensor3::Tensor3(std::size_t d1, std::size_t d2, std::size_t d3) : d1_(d1), d2_(d2), d3_(d3) {}

void Tensor3::check(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= d1_ || j >= d2_ || k >= d3_)
    throw InputError("tensor index (" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + ") out of range");
}

void Tensor3::set(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  check(i, j, k);
  if (is_zero(c))
    entries_.erase({i, j, k});
  else
    entries_[{i, j, k}] = c;
}

void Tensor3::add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  set(i, j, k, get(i, j, k) + c);
}

Rational Tensor3::get(std::size_t i, std::size_t j, std::size_t k) const {
  check(i, j, k);
  auto it = entries_.find({i, j, k});
  return it == entries_.end() ? Rational(0) : it->second;
}

Matrix Tensor3::to_bilinear() const {
  Matrix m(d3_, d1_ * d2_);
  for (const auto& [key, c] : entries_) {
    auto [i, j, k] = key;
    m(k, i * d2_ + j) = c;
  }
  return m;
}

Tensor3 Tensor3::from_bilinear(const Matrix& m, std::size_t d1, std::size_t d2) {
  if (m.cols() != d1 * d2) throw InputError("from_bilinear: column count mismatch");
  Tensor3 t(d1, d2, m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(k, c))) t.set(c / d2, c % d2, k, m(k, c));
  return t;
}

Matrix Tensor3::to_colinear() const {
  Matrix m(d2_ * d3_, d1_);
  for (const auto& [key, c] : entries_) {
    auto [i, j, k] = key;
    m(j * d3_ + k, i) = c;
  }
  return m;
}

Tensor3 Tensor3::from_colinear(const Matrix& m, std::size_t d2, std::size_t d3) {
  if (m.rows() != d2 * d3) throw InputError("from_colinear: row count mismatch");
  Tensor3 t(m.cols(), d2, d3);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t i = 0; i < m.cols(); ++i)
      if (!is_zero(m(r, i))) t.set(i, r / d3, r % d3, m(r, i));
  return t;
}

// ---------------------------------------------------------------------------
// Subspace

void Subspace::check_ambient(std::size_t n) const {
  if (n != ambient_)
    throw InputError("ambient dimension mismatch: " + std::to_string(n) + " vs " +
                     std::to_string(ambient_));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Matrix m = Matrix::from_rows(vectors, ambient);
  RowEchelon e = rref(std::move(m));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient; ++i) basis.push_back(unit_vector(ambient, i));
  return span(ambient, basis);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(basis_, ambient_); }

Vector Subspace::reduce(const Vector& v) const {
  check_ambient(v.size());
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational c = r[pivots_[i]];
    if (!is_zero(c)) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_ambient(other.ambient_);
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw InputError("vector is not in the subspace");
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  check_ambient(other.ambient_);
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return whole(ambient_);
  return span(ambient_, nullspace(Matrix::from_rows(basis_, ambient_)));
}

Subspace Subspace::intersection(const Subspace& other) const {
  check_ambient(other.ambient_);
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::image(const Matrix& map) const {
  check_ambient(map.cols());
  std::vector<Vector> imgs;
  imgs.reserve(basis_.size());
  for (const auto& b : basis_) imgs.push_back(map.apply(b));
  return span(map.rows(), imgs);
}

bool Subspace::is_stable_under(const Matrix& map) const {
  if (!map.is_square()) throw InputError("stability test needs an endomorphism");
  check_ambient(map.cols());
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Vector& b) { return contains(map.apply(b)); });
}

Subspace::Quotient Subspace::quotient_projection() const {
  Quotient q;
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) q.complement.push_back(c);
  const std::size_t k = q.complement.size();
  q.projection = Matrix(k, ambient_);
  q.section = Matrix(ambient_, k);
  // v = sum_r v[p_r] b_r + sum_j c_j e_{n_j} with c_j = v[n_j] - sum_r v[p_r] b_r[n_j].
  for (std::size_t j = 0; j < k; ++j) {
    q.projection(j, q.complement[j]) = 1;
    q.section(q.complement[j], j) = 1;
    for (std::size_t r = 0; r < basis_.size(); ++r)
      q.projection(j, pivots_[r]) = -basis_[r][q.complement[j]];
  }
  return q;
}

// ---------------------------------------------------------------------------
// EchelonBuilder

Vector EchelonBuilder::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational c = v[pivots_[i]];
    if (!is_zero(c)) axpy(v, -c, rows_[i]);
  }
  return v;
}

bool EchelonBuilder::insert(const Vector& v) {
  if (v.size() != ambient_) throw InputError("EchelonBuilder: ambient mismatch");
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& q) { return !is_zero(q); });
  if (it == r.end()) return false;
  std::size_t p = static_cast<std::size_t>(it - r.begin());
  Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  // Keep earlier rows reduced at the new pivot so reduce() stays one pass.
  for (auto& row : rows_) {
    Rational c = row[p];
    if (!is_zero(c)) axpy(row, -c, r);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

bool EchelonBuilder::contains(const Vector& v) const { return is_zero(reduce(v)); }

Subspace EchelonBuilder::to_subspace() const { return Subspace::span(ambient_, rows_); }

// ---------------------------------------------------------------------------
// SparseColumns / Bilinear

SparseColumns::SparseColumns(const Matrix& m) : rows_(m.rows()), columns_(m.cols()) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!is_zero(m(r, c))) columns_[c].push_back({r, m(r, c)});
}

Vector SparseColumns::apply(const Vector& x) const {
  if (x.size() != columns_.size()) throw InputError("SparseColumns::apply: dimension mismatch");
  Vector y(rows_);
  for (std::size_t c = 0; c < x.size(); ++c)
    if (!is_zero(x[c])) accumulate(y, c, x[c]);
  return y;
}

void SparseColumns::accumulate(Vector& y, std::size_t c, const Rational& s) const {
  for (const auto& e : columns_[c]) y[e.row] += s * e.value;
}

Bilinear::Bilinear(const Matrix& m, std::size_t left_dim, std::size_t right_dim)
    : left_(left_dim), right_(right_dim), cols_(m) {
  if (m.cols() != left_dim * right_dim) throw InputError("bilinear map: column count mismatch");
}

Vector Bilinear::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != left_ || y.size() != right_) throw InputError("bilinear map: argument size");
  Vector out(cols_.rows());
  for (std::size_t i = 0; i < left_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < right_; ++j) {
      if (is_zero(y[j])) continue;
      cols_.accumulate(out, i * right_ + j, x[i] * y[j]);
    }
  }
  return out;
}

Vector Bilinear::basis(std::size_t i, std::size_t j) const {
  Vector out(cols_.rows());
  cols_.accumulate(out, i * right_ + j, 1);
  return out;
}

}  // namespace homcas
