#pragma once

#include <cstddef>
#include <vector>

#include "polydisc/int_poly.hpp"

namespace polydisc {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  void set_row(std::size_t r, const std::vector<T>& v) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Fraction-free (Bareiss) determinant.
Integer determinant(IntMatrix m);
Rational determinant(const RatMatrix& m);
/// Inverse over Q; throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

/// Row-style Hermite normal form of an integer matrix of full column rank.
///
/// Returns the n x n upper-triangular basis (n = column count) of the row
/// lattice: positive diagonal, entries above each pivot reduced into
/// [0, pivot). Throws DomainError when the rows do not span rank n.
IntMatrix hermite_normal_form(const IntMatrix& rows);

/// Coefficients (ascending) of the unique polynomial of degree < x.size()
/// through the points (x[i], y[i]); the x[i] must be distinct.
std::vector<Rational> interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y);

}  // namespace polydisc
