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

#ifndef P1DOM_MATRIX_HPP
#define P1DOM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p1dom/errors.hpp"
#include "p1dom/laurent.hpp"

namespace p1dom {

// Ground ring of a module: K, K[x], K[x^-1] or K[x, x^-1].
enum class Base { constant, polynomial, inverse_polynomial, laurent };

inline std::string base_name(Base b) {
  switch (b) {
    case Base::constant: return "K";
    case Base::polynomial: return "K[x]";
    case Base::inverse_polynomial: return "K[x^-1]";
    case Base::laurent: return "K[x,x^-1]";
  }
  return "?";
}

inline std::optional<Base> parse_base(const std::string& s) {
  if (s == "K") return Base::constant;
  if (s == "K[x]") return Base::polynomial;
  if (s == "K[x^-1]") return Base::inverse_polynomial;
  if (s == "K[x,x^-1]") return Base::laurent;
  return std::nullopt;
}

template <Coefficient F>
bool respects_base(const LaurentPoly<F>& p, Base b) {
  if (p.is_zero()) return true;
  switch (b) {
    case Base::constant: return p.mindeg() == 0 && p.maxdeg() == 0;
    case Base::polynomial: return p.mindeg() >= 0;
    case Base::inverse_polynomial: return p.maxdeg() <= 0;
    case Base::laurent: return true;
  }
  return false;
}

// Dense row-major matrix of Laurent polynomials. Matrices act on column
// vectors, so a map from rank n to rank m is an m x n matrix.
template <Coefficient F>
class LaurentMatrix {
 public:
  using Poly = LaurentPoly<F>;
  using ring_type = ring_t<F>;

  LaurentMatrix() = default;
  LaurentMatrix(const ring_type& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Poly(ring)) {}

  static LaurentMatrix identity(const ring_type& ring, std::size_t n) {
    LaurentMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(ring);
    return m;
  }

  static LaurentMatrix diagonal(const ring_type& ring, const std::vector<Poly>& d) {
    LaurentMatrix m(ring, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  // Single-entry convenience for 1x1 matrices.
  static LaurentMatrix scalar(const Poly& p) {
    LaurentMatrix m(p.ring(), 1, 1);
    m(0, 0) = p;
    return m;
  }

  static LaurentMatrix from_rows(const ring_type& ring, const std::vector<std::vector<Poly>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    LaurentMatrix m(ring, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw ShapeError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const ring_type& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& p : data_) {
      if (!p.is_zero()) return false;
    }
    return true;
  }

  bool is_square() const noexcept { return rows_ == cols_; }

  // Extreme exponents over the nonzero entries; nullopt for the zero matrix.
  std::optional<int> mindeg() const {
    std::optional<int> r;
    for (const auto& p : data_) {
      if (!p.is_zero()) r = r ? std::min(*r, p.mindeg()) : p.mindeg();
    }
    return r;
  }
  std::optional<int> maxdeg() const {
    std::optional<int> r;
    for (const auto& p : data_) {
      if (!p.is_zero()) r = r ? std::max(*r, p.maxdeg()) : p.maxdeg();
    }
    return r;
  }

  bool respects(Base b) const {
    for (const auto& p : data_) {
      if (!respects_base(p, b)) return false;
    }
    return true;
  }

  LaurentMatrix transposed() const {
    LaurentMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  LaurentMatrix operator-() const {
    LaurentMatrix r = *this;
    for (auto& p : r.data_) p = -p;
    return r;
  }

  LaurentMatrix& operator+=(const LaurentMatrix& o) {
    same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  LaurentMatrix& operator-=(const LaurentMatrix& o) {
    same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw ShapeError("matrix product " + a.shape() + " * " + b.shape());
    }
    LaurentMatrix r(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Poly& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
      }
    }
    return r;
  }

  LaurentMatrix scaled(const Poly& p) const {
    LaurentMatrix r = *this;
    for (auto& e : r.data_) e = e * p;
    return r;
  }

  // Multiply every entry by x^n.
  LaurentMatrix shifted(int n) const {
    LaurentMatrix r = *this;
    for (auto& e : r.data_) e = e.shifted(n);
    return r;
  }

  // diag(x^a_i) * M * diag(x^b_j).
  LaurentMatrix conjugated(const std::vector<int>& row_shift, const std::vector<int>& col_shift) const {
    LaurentMatrix r = *this;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = r(i, j).shifted(row_shift[i] + col_shift[j]);
    }
    return r;
  }

  LaurentMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    LaurentMatrix r(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    }
    return r;
  }

  void set_block(std::size_t r0, std::size_t c0, const LaurentMatrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
  }

  LaurentMatrix without(std::size_t row, std::size_t col) const {
    LaurentMatrix r(ring_, rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
        if (j == col) continue;
        r(ri, rj++) = (*this)(i, j);
      }
      ++ri;
    }
    return r;
  }

  // Column j as a vector.
  std::vector<Poly> column(std::size_t j) const {
    std::vector<Poly> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  LaurentMatrix map(const auto& fn) const {
    LaurentMatrix r = *this;
    for (auto& e : r.data_) e = fn(e);
    return r;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  void same_shape(const LaurentMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError(std::string("matrix ") + op + " " + shape() + " vs " + o.shape());
  }

  [[no_unique_address]] ring_type ring_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

// [A B] and [A; B].
template <Coefficient F>
LaurentMatrix<F> hstack(const LaurentMatrix<F>& a, const LaurentMatrix<F>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack " + a.shape() + " | " + b.shape());
  LaurentMatrix<F> r(a.ring(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

template <Coefficient F>
LaurentMatrix<F> vstack(const LaurentMatrix<F>& a, const LaurentMatrix<F>& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack " + a.shape() + " / " + b.shape());
  LaurentMatrix<F> r(a.ring(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

template <Coefficient F>
LaurentMatrix<F> block_diagonal(const LaurentMatrix<F>& a, const LaurentMatrix<F>& b) {
  LaurentMatrix<F> r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

// Fraction-free (Bareiss) determinant; exact over any of the coefficient
// rings since F[x, x^-1] is a domain and every division is exact.
template <Coefficient F>
LaurentPoly<F> determinant(const LaurentMatrix<F>& a) {
  using P = LaurentPoly<F>;
  if (!a.is_square()) throw ShapeError("determinant of non-square " + a.shape());
  const std::size_t n = a.rows();
  if (n == 0) return P::one(a.ring());
  LaurentMatrix<F> m = a;
  P prev = P::one(a.ring());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return P(a.ring());
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        P num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_divide(num, prev);
      }
      m(i, k) = P(a.ring());
    }
    prev = m(k, k);
  }
  P d = m(n - 1, n - 1);
  return negate ? -d : d;
}

// Inverse of a matrix whose determinant is a unit c x^n, via the adjugate.
template <Coefficient F>
LaurentMatrix<F> inverse(const LaurentMatrix<F>& a) {
  if (!a.is_square()) throw ShapeError("inverse of non-square " + a.shape());
  const std::size_t n = a.rows();
  LaurentPoly<F> det = determinant(a);
  if (!det.is_unit()) {
    throw NotAUnitError("determinant " + det.to_string() + " is not a unit of the Laurent ring");
  }
  LaurentPoly<F> det_inv = det.unit_inverse();
  LaurentMatrix<F> inv(a.ring(), n, n);
  if (n == 1) {
    inv(0, 0) = det_inv;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly<F> c = determinant(a.without(i, j));
      if ((i + j) % 2) c = -c;
      inv(j, i) = c * det_inv;
    }
  }
  return inv;
}

}  // namespace p1dom

#endif  // P1DOM_MATRIX_HPP
