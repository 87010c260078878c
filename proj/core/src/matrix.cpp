#include "arq/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace arq {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  q.canonicalize();
  return q;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix c(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) == 0) continue;
        t = x * y;
        c(i, j) += t;
      }
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Rational t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) == 0) continue;
        t = factor * m(r, j);
        m(i, j) -= t;
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.form = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<std::size_t> free_columns(const Echelon& e, std::size_t cols) {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (k < e.pivots.size() && e.pivots[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Matrix kernel_basis(const Matrix& a) {
  Echelon e = row_reduce(a);
  const std::size_t cols = a.cols();
  auto free = free_columns(e, cols);
  Matrix k(free.size(), cols);
  for (std::size_t i = 0; i < free.size(); ++i) {
    k(i, free[i]) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(i, e.pivots[r]) = -e.form(r, free[i]);
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  Echelon e = row_reduce(std::move(aug));
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t p = e.pivots[r];
    if (p >= n) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = e.form(r, n + c);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.rows()));
}

Matrix hstack(std::span<const Matrix> blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, off + c) = b(r, c);
    off += b.cols();
  }
  return m;
}

Matrix vstack(std::span<const Matrix> blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  Matrix m(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(off + r, c) = b(r, c);
    off += b.rows();
  }
  return m;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(ro + r, co + c) = b(r, c);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

Rational trace(const Matrix& m) {
  Rational t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e(ambient);
    e[i] = 1;
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.add(v);
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace: vector length mismatch");
  Rational t;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    Rational f = v[p];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (sgn(rows_[i][j]) == 0) continue;
      t = f * rows_[i][j];
      v[j] -= t;
    }
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::includes(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vector& v) { return contains(v); });
}

bool Subspace::add(Vector v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && sgn(v[p]) == 0) ++p;
  if (p == ambient_) return false;
  Rational inv = 1 / v[p];
  for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
  Rational t;
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Rational f = row[p];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (sgn(v[j]) == 0) continue;
      t = f * v[j];
      row[j] -= t;
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

void Subspace::add_all(const Subspace& other) {
  for (const auto& v : other.rows_) add(v);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
}

}  // namespace arq
