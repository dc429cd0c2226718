// Copyright 2026 The p1dom Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Dense linear algebra over a coefficient field: the finite-dimensional
// K-vector-space side of the library (bands of global sections, truncated
// windows, hypercohomology models).

#ifndef P1DOM_LINALG_HPP
#define P1DOM_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "p1dom/errors.hpp"
#include "p1dom/scalar.hpp"

namespace p1dom {

template <Coefficient F>
class Matrix {
 public:
  using traits = scalar_traits<F>;
  using ring_type = ring_t<F>;

  Matrix() = default;
  Matrix(const ring_type& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, traits::zero(ring)) {}

  static Matrix identity(const ring_type& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = traits::one(ring);
    return m;
  }

  const ring_type& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!traits::is_zero(v)) return false;
    }
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("scalar matrix product shape mismatch");
    Matrix r(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (traits::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    }
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
  }

 private:
  [[no_unique_address]] ring_type ring_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

// Reduced row echelon form; `pivots` lists the pivot column of each nonzero row.
template <Coefficient F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

template <Coefficient F>
Echelon<F> row_reduce(Matrix<F> m) {
  static_assert(is_field_v<F>, "row reduction needs field coefficients");
  using T = scalar_traits<F>;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && T::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    F inv = T::inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || T::is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!T::is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

// Rank only: forward elimination without back substitution.
template <Coefficient F>
std::size_t rank(Matrix<F> m) {
  static_assert(is_field_v<F>, "rank needs field coefficients");
  using T = scalar_traits<F>;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && T::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    F inv = T::inverse(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (T::is_zero(m(i, c))) continue;
      F f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!T::is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
    }
    ++r;
  }
  return r;
}

// Basis of the null space, one vector per column of the returned matrix.
template <Coefficient F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  using T = scalar_traits<F>;
  auto [red, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix<F> k(m.ring(), m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = T::one(m.ring());
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], f) = -red(r, free_cols[f]);
  }
  return k;
}

}  // namespace p1dom

#endif  // P1DOM_LINALG_HPP
