#pragma once

// Exact rational linear algebra: dense matrices, sparse structure-constant
// tensors, subspaces in reduced row-echelon form.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace homcas {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "n", "-n" or "p/q" (q > 0 after sign handling). Throws InputError.
Rational parse_rational(std::string_view text);
/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
/// y += a * x
void axpy(Vector& y, const Rational& a, const Vector& x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
/// Tensor product a ⊗ b with index i * |b| + j.
Vector kron(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  /// Permutation matrix sending e_j to e_{image[j]}.
  static Matrix permutation(const std::vector<std::size_t>& image);
  static Matrix row_vector(const Vector& v);
  static Matrix column_vector(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Vector apply(const Vector& x) const;
  /// Integer power; negative exponents invert first.
  Matrix power(int k) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Index of the first column where the two matrices differ, or cols().
  std::size_t first_differing_column(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::string to_string(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(std::initializer_list<Matrix> factors);
/// (a ⊗ b) v without materializing the Kronecker product.
Vector kron_apply(const Matrix& a, const Matrix& b, const Vector& v);
/// Stacks blocks vertically.
Matrix vstack(const std::vector<Matrix>& blocks);

/// Throws NotInvertible for singular or non-square input.
Matrix invert(const Matrix& a);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon rref(Matrix a);
std::size_t rank(const Matrix& a);
/// Basis of {x : a x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& a);

struct LinearSolution {
  enum class Kind { unique, none, family };
  Kind kind = Kind::none;
  Vector particular;
  std::vector<Vector> kernel;
};
/// Solves a x = b exactly. Throws InputError on dimension mismatch.
LinearSolution solve_linear(const Matrix& a, const Vector& b);

/// Sparse (i, j, k) -> coefficient table holding structure constants.
/// Zero coefficients are never stored.
class Tensor3 {
 public:
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;

  Tensor3() = default;
  Tensor3(std::size_t d1, std::size_t d2, std::size_t d3);

  std::size_t d1() const noexcept { return d1_; }
  std::size_t d2() const noexcept { return d2_; }
  std::size_t d3() const noexcept { return d3_; }

  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  Rational get(std::size_t i, std::size_t j, std::size_t k) const;
  const std::map<Key, Rational>& entries() const noexcept { return entries_; }

  /// Bilinear reading: (i, j) inputs, k output. Result is d3 x (d1*d2).
  Matrix to_bilinear() const;
  static Tensor3 from_bilinear(const Matrix& m, std::size_t d1, std::size_t d2);
  /// Co-linear reading: i input, (j, k) output. Result is (d2*d3) x d1.
  Matrix to_colinear() const;
  static Tensor3 from_colinear(const Matrix& m, std::size_t d2, std::size_t d3);

  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

 private:
  void check(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  std::size_t d3_ = 0;
  std::map<Key, Rational> entries_;
};

/// Subspace of Q^n stored as a reduced row-echelon basis, which makes equal
/// subspaces produce identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Basis vectors as columns (ambient x dim).
  Matrix basis_matrix() const;

  /// Remainder of v after eliminating pivot coordinates; zero iff v is a member.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member in terms of basis(). Throws InputError otherwise.
  Vector coordinates(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  /// Vectors orthogonal to every basis vector under the standard pairing.
  Subspace annihilator() const;
  Subspace image(const Matrix& map) const;
  bool is_stable_under(const Matrix& map) const;

  /// Complement spanned by the non-pivot coordinate vectors.
  struct Quotient {
    Matrix projection;  // (ambient - dim) x ambient, kernel = this subspace
    Matrix section;     // ambient x (ambient - dim), projection * section = id
    std::vector<std::size_t> complement;
  };
  Quotient quotient_projection() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  void check_ambient(std::size_t n) const;

  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Incremental echelon builder for closure computations; basis() is not
/// reduced until to_subspace() is called.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}
  /// Adds v if independent; returns true when the span grew.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dim() const noexcept { return rows_.size(); }
  Subspace to_subspace() const;

 private:
  Vector reduce(Vector v) const;

  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Precomputed nonzero pattern of a matrix's columns for fast sparse products.
class SparseColumns {
 public:
  struct Entry {
    std::size_t row;
    Rational value;
  };
  SparseColumns() = default;
  explicit SparseColumns(const Matrix& m);
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
  Vector apply(const Vector& x) const;
  /// y += s * column(c)
  void accumulate(Vector& y, std::size_t c, const Rational& s) const;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// Evaluates a bilinear map stored as an out x (left*right) matrix.
class Bilinear {
 public:
  Bilinear() = default;
  Bilinear(const Matrix& m, std::size_t left_dim, std::size_t right_dim);
  std::size_t left_dim() const noexcept { return left_; }
  std::size_t right_dim() const noexcept { return right_; }
  std::size_t out_dim() const noexcept { return cols_.rows(); }
  Vector operator()(const Vector& x, const Vector& y) const;
  /// Image of e_i ⊗ e_j.
  Vector basis(std::size_t i, std::size_t j) const;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  SparseColumns cols_;
};

}  // namespace homcas
