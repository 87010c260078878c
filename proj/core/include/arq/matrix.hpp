#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arq {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  const std::vector<Rational>& data() const noexcept { return data_; }

  bool is_zero() const;
  Matrix transposed() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b);

  Vector apply(const Vector& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix form;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form.
Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

// Rows of the result span {x : a x = 0}; row i has a 1 at the i-th free column
// and 0 at every other free column.
Matrix kernel_basis(const Matrix& a);
std::vector<std::size_t> free_columns(const Echelon& e, std::size_t cols);

std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

Matrix hstack(std::span<const Matrix> blocks, std::size_t rows);
Matrix vstack(std::span<const Matrix> blocks, std::size_t cols);
Matrix block_diagonal(std::span<const Matrix> blocks);

Rational trace(const Matrix& m);
bool is_zero(const Vector& v);

// Subspace of Q^n kept as a reduced echelon basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vector>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Canonical representative of v modulo the subspace.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool includes(const Subspace& other) const;
  bool add(Vector v);
  void add_all(const Subspace& other);

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace arq
