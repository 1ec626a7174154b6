#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nijcheck/dual.hpp"
#include "nijcheck/errors.hpp"

namespace nijcheck {

template <class T>
using Vec = std::vector<T>;

/// Dense row-major matrix for the small systems (n <= ~16) used throughout.
///
/// When a matrix holds (1,1)-tensor components, the row index is the lower
/// index and the column index the upper one: M(i, j) = J_i^j.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, T fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      assert(row.size() == cols_);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vec<T> col(std::size_t c) const {
    Vec<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::span<const T> data() const { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  template <class S>
  Matrix& operator*=(const S& s) {
    for (auto& v : data_) v = v * s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend Vec<T> operator*(const Matrix& a, std::span<const T> v) {
    assert(a.cols_ == v.size());
    Vec<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Mat = Matrix<double>;

/// n x n x n component array, addressed (a, b, c) in row-major order.
template <class T>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n) {}

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * n_ + b) * n_ + c]; }
  const T& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * n_ + b) * n_ + c];
  }
  std::span<const T> data() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using Array3 = Tensor3<double>;

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  assert(a.size() == b.size());
  T s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
T norm_squared(std::span<const T> a) {
  return dot(a, a);
}

inline double norm(std::span<const double> a) { return std::sqrt(norm_squared(a)); }

inline double sup_norm(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

inline double sup_norm(const Mat& m) { return sup_norm(m.data()); }

/// Solves A X = B by Gaussian elimination with partial pivoting.
///
/// Throws LinearSolveFailure when a pivot magnitude falls below 1e-12.
template <class T>
Matrix<T> solve(Matrix<T> a, Matrix<T> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw LinearSolveFailure("solve: shape mismatch");
  constexpr double kPivotFloor = 1e-12;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(value_of(a(k, k)));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double v = std::abs(value_of(a(r, k)));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (!(best >= kPivotFloor)) throw LinearSolveFailure("solve: singular matrix");
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
      for (std::size_t c = 0; c < b.cols(); ++c) std::swap(b(k, c), b(piv, c));
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const T f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) -= f * b(k, c);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      T s = b(kk, c);
      for (std::size_t j = kk + 1; j < n; ++j) s -= a(kk, j) * b(j, c);
      b(kk, c) = s / a(kk, kk);
    }
  }
  return b;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

}  // namespace nijcheck
