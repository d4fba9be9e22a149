#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aw/scalar.hpp"

namespace aw {

/// Dense row-major matrix over either scalar backend.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, from_int<T>(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw PreconditionError("matrix entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = from_int<T>(1);
    return m;
  }

  static Matrix scalar(std::size_t n, const T& value) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = value;
    return m;
  }

  static Matrix diagonal(std::span<const T> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t k = 0; k < values.size(); ++k) m(k, k) = values[k];
    return m;
  }

  static Matrix column(std::span<const T> values) {
    return Matrix(values.size(), 1, std::vector<T>(values.begin(), values.end()));
  }

  /// Matrix whose columns are the given column vectors.
  static Matrix from_columns(std::span<const Matrix> columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().rows(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].rows() != m.rows() || columns[j].cols() != 1) throw PreconditionError("from_columns: shape mismatch");
      for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j](i, 0);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<T>& entries() const { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix col(std::size_t j) const {
    Matrix v(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
    return v;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw PreconditionError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T t = from_int<T>(0);
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!aw::is_zero(x)) return false;
    return true;
  }

  /// The value s when this equals s*I.
  std::optional<T> scalar_value() const {
    if (!square()) return std::nullopt;
    if (rows_ == 0) return from_int<T>(0);
    const T& s = (*this)(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j ? !((*this)(i, j) == s) : !aw::is_zero((*this)(i, j))) return std::nullopt;
      }
    return s;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }

  // Zero entries are skipped: most matrices here are banded or block sparse.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix product: inner dimensions differ");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (aw::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(l, j);
          if (!aw::is_zero(y)) p(i, j) += x * y;
        }
      }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Scalar>;
using FloatMatrix = Matrix<Complex>;

template <class T>
Matrix<T> commutator(const Matrix<T>& x, const Matrix<T>& y) {
  return x * y - y * x;
}

/// Kronecker product; entry ((i1,i2),(j1,j2)) = M(i1,j1) N(i2,j2), first factor outermost.
template <class T>
Matrix<T> kron(const Matrix<T>& m, const Matrix<T>& n) {
  Matrix<T> k(m.rows() * n.rows(), m.cols() * n.cols());
  for (std::size_t i1 = 0; i1 < m.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < m.cols(); ++j1) {
      const T& x = m(i1, j1);
      if (is_zero(x)) continue;
      for (std::size_t i2 = 0; i2 < n.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < n.cols(); ++j2) k(i1 * n.rows() + i2, j1 * n.cols() + j2) = x * n(i2, j2);
    }
  return k;
}

/// Largest |entry| of a floating matrix.
inline double max_abs(const FloatMatrix& m) {
  double best = 0.0;
  for (const auto& x : m.entries()) best = std::max(best, std::abs(x));
  return best;
}

}  // namespace aw
