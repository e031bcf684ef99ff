// ccpt/linalg.hpp

// Copyright 2026  The ccpt authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Dense row-major matrices just big enough for the projection and transform
// work in this library (dimensions on the order of the signal length).
// Solves use Gaussian elimination with partial pivoting; no factorization is
// cached because every system here is solved once.

#ifndef CCPT_LINALG_HPP_
#define CCPT_LINALG_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "ccpt/errors.hpp"

namespace ccpt {

namespace detail {

inline double conj_value(double v) { return v; }
inline std::complex<double> conj_value(const std::complex<double>& v) {
  return std::conj(v);
}

}  // namespace detail

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T value = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  // Conjugate transpose (plain transpose for real T).
  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        out(c, r) = detail::conj_value((*this)(r, c));
      }
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw LengthMismatch("matrix product: inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T ark = a(r, k);
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
  if (a.cols() != v.size())
    throw LengthMismatch("matrix-vector product: dimensions differ");
  std::vector<T> out(a.rows(), T{});
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
  }
  return out;
}

inline std::vector<std::complex<double>> operator*(
    const Matrix<double>& a, const std::vector<std::complex<double>>& v) {
  if (a.cols() != v.size())
    throw LengthMismatch("matrix-vector product: dimensions differ");
  std::vector<std::complex<double>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
  }
  return out;
}

/// Solves a * x = rhs column by column via partial-pivoting elimination.
/// Throws SingularSystem when no usable pivot remains.
template <typename T>
Matrix<T> solve(Matrix<T> a, Matrix<T> rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw LengthMismatch("solve: matrix must be square");
  if (rhs.rows() != n)
    throw LengthMismatch("solve: right-hand side height differs");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(a(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0) throw SingularSystem("solve: zero pivot");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      for (std::size_t c = 0; c < rhs.cols(); ++c)
        std::swap(rhs(col, c), rhs(pivot, c));
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const T factor = a(r, col) / a(col, col);
      if (factor == T{}) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      for (std::size_t c = 0; c < rhs.cols(); ++c)
        rhs(r, c) -= factor * rhs(col, c);
    }
  }

  Matrix<T> x(n, rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (std::size_t ri = n; ri-- > 0;) {
      T sum = rhs(ri, c);
      for (std::size_t k = ri + 1; k < n; ++k) sum -= a(ri, k) * x(k, c);
      x(ri, c) = sum / a(ri, ri);
    }
  }
  return x;
}

template <typename T>
std::vector<T> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows())
    throw LengthMismatch("solve: right-hand side length differs");
  Matrix<T> rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  Matrix<T> x = solve(a, std::move(rhs));
  std::vector<T> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = x(i, 0);
  return out;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

/// Maximum absolute row sum.
template <typename T>
double inf_norm(const Matrix<T>& a) {
  double best = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) sum += std::abs(a(r, c));
    if (sum > best) best = sum;
  }
  return best;
}

}  // namespace ccpt

#endif  // CCPT_LINALG_HPP_
