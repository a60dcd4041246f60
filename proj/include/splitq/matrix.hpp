#pragma once

/// Small dense matrices with Gaussian elimination over rationals (exact) or
/// doubles (pivot threshold from `negligible`).

#include <cmath>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "splitq/quaternion.hpp"

namespace splitq {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  BasicQuaternion<T> apply(const BasicQuaternion<T>& q) const {
    BasicQuaternion<T> out;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) out[i] += (*this)(i, j) * q[j];
    return out;
  }

  bool is_zero_matrix() const {
    for (const auto& v : data_)
      if (!splitq::is_zero(v)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Reduced row echelon form; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (negligible(m(r, col))) continue;
      if constexpr (std::is_same_v<T, double>) {
        if (best == m.rows() || std::abs(m(r, col)) > std::abs(m(best, col))) best = r;
      } else {
        best = r;
        break;
      }
    }
    if (best == m.rows()) {
      for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = T(0);
      continue;
    }
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
    T p = m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) /= p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      T f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the column space, as a list of columns of `m` (pivot columns).
template <class T>
std::vector<std::vector<T>> column_basis(const Matrix<T>& m) {
  Matrix<T> work = m;
  auto pivots = rref(work);
  std::vector<std::vector<T>> out;
  for (auto c : pivots) {
    std::vector<T> col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
    out.push_back(std::move(col));
  }
  return out;
}

/// Basis of {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  Matrix<T> work = m;
  auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

/// One solution of m x = rhs, if any.
template <class T>
std::optional<std::vector<T>> solve_any(const Matrix<T>& m, const std::vector<T>& rhs) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), T(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

/// Matrix of y -> q y in the basis {1, i, j, k}.
template <class T>
Matrix<T> left_mul_matrix(const BasicQuaternion<T>& q) {
  Matrix<T> m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    auto col = q * BasicQuaternion<T>::unit(j);
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = col[i];
  }
  return m;
}

template <class T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r)
      if (!negligible(m(r, col))) {
        piv = r;
        break;
      }
    if (piv == n) return T(0);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      T f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

}  // namespace splitq
