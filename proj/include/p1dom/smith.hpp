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

#ifndef P1DOM_SMITH_HPP
#define P1DOM_SMITH_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "p1dom/errors.hpp"
#include "p1dom/matrix.hpp"

namespace p1dom {

// U * A * V = diag(factors) padded with zeros, U and V invertible over
// K[x, x^-1]. Each factor is monic with nonzero constant term, and
// factors[i] divides factors[i + 1].
template <Coefficient F>
struct SmithForm {
  std::vector<LaurentPoly<F>> factors;
  LaurentMatrix<F> U, V, U_inv, V_inv;
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t rank() const noexcept { return factors.size(); }
  std::size_t free_cokernel_rank() const noexcept { return rows - factors.size(); }
  std::size_t kernel_rank() const noexcept { return cols - factors.size(); }

  // Invariant factors that are not units.
  std::vector<LaurentPoly<F>> torsion() const {
    std::vector<LaurentPoly<F>> t;
    for (const auto& d : factors) {
      if (d.span() > 0) t.push_back(d);
    }
    return t;
  }

  LaurentMatrix<F> diagonal() const {
    LaurentMatrix<F> d(U.ring(), rows, cols);
    for (std::size_t i = 0; i < factors.size(); ++i) d(i, i) = factors[i];
    return d;
  }
};

namespace detail {

// Row/column operations applied to the working matrix while keeping
// U, U^-1, V, V^-1 in sync with M = U A V.
template <Coefficient F>
class SmithWorkspace {
 public:
  using P = LaurentPoly<F>;

  explicit SmithWorkspace(const LaurentMatrix<F>& a)
      : m(a),
        u(LaurentMatrix<F>::identity(a.ring(), a.rows())),
        ui(u),
        v(LaurentMatrix<F>::identity(a.ring(), a.cols())),
        vi(v) {}

  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const P& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(j, c).is_zero()) m(i, c) += q * m(j, c);
    }
    for (std::size_t c = 0; c < u.cols(); ++c) {
      if (!u(j, c).is_zero()) u(i, c) += q * u(j, c);
    }
    for (std::size_t r = 0; r < ui.rows(); ++r) {
      if (!ui(r, i).is_zero()) ui(r, j) -= ui(r, i) * q;
    }
  }

  // col_j += q * col_i
  void add_col(std::size_t j, std::size_t i, const P& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!m(r, i).is_zero()) m(r, j) += m(r, i) * q;
    }
    for (std::size_t r = 0; r < v.rows(); ++r) {
      if (!v(r, i).is_zero()) v(r, j) += v(r, i) * q;
    }
    for (std::size_t c = 0; c < vi.cols(); ++c) {
      if (!vi(j, c).is_zero()) vi(i, c) -= q * vi(j, c);
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    for (std::size_t r = 0; r < ui.rows(); ++r) std::swap(ui(r, i), ui(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    for (std::size_t c = 0; c < vi.cols(); ++c) std::swap(vi(i, c), vi(j, c));
  }

  // row_i *= unit
  void scale_row(std::size_t i, const P& unit) {
    P inv = unit.unit_inverse();
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = m(i, c) * unit;
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = u(i, c) * unit;
    for (std::size_t r = 0; r < ui.rows(); ++r) ui(r, i) = ui(r, i) * inv;
  }

  LaurentMatrix<F> m, u, ui, v, vi;
};

}  // namespace detail

// Smith normal form over the Euclidean domain K[x, x^-1] (norm = span).
// Pivot: nonzero entry of least span in the active block, ties broken by
// lowest (row, col).
template <Coefficient F>
SmithForm<F> smith_normal_form(const LaurentMatrix<F>& a) {
  if constexpr (!is_field_v<F>) {
    throw UnsupportedRingError("Smith normal form needs field coefficients; Z[x, x^-1] is not a PID");
  } else {
    detail::SmithWorkspace<F> w(a);
    auto& m = w.m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<LaurentPoly<F>> factors;

    auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      int best_span = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j).is_zero()) continue;
          int s = m(i, j).span();
          if (!best || s < best_span) {
            best = {i, j};
            best_span = s;
          }
        }
      }
      return best;
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      auto piv = find_pivot(t);
      if (!piv) break;
      w.swap_rows(t, piv->first);
      w.swap_cols(t, piv->second);
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (m(i, t).is_zero()) continue;
          auto [q, r] = laurent_divmod(m(i, t), m(t, t));
          w.add_row(i, t, -q);
          if (!r.is_zero()) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(t, j).is_zero()) continue;
          auto [q, r] = laurent_divmod(m(t, j), m(t, t));
          w.add_col(j, t, -q);
          if (!r.is_zero()) dirty = true;
        }
        if (!dirty) {
          // Row and column are clear; enforce divisibility of the rest.
          std::optional<std::size_t> bad_row;
          for (std::size_t i = t + 1; i < rows && !bad_row; ++i) {
            for (std::size_t j = t + 1; j < cols; ++j) {
              if (m(i, j).is_zero()) continue;
              if (!laurent_divmod(m(i, j), m(t, t)).second.is_zero()) {
                bad_row = i;
                break;
              }
            }
          }
          if (!bad_row) break;
          w.add_row(t, *bad_row, LaurentPoly<F>::one(a.ring()));
        }
        auto next = find_pivot(t);
        // Only the pivot row/column can hold a smaller span at this point,
        // but a full rescan keeps the tie-break rule uniform.
        w.swap_rows(t, next->first);
        w.swap_cols(t, next->second);
      }
      auto [unit, core] = unit_normalize(m(t, t));
      w.scale_row(t, unit.unit_inverse());
      factors.push_back(m(t, t));
    }

    SmithForm<F> s;
    s.factors = std::move(factors);
    s.U = std::move(w.u);
    s.U_inv = std::move(w.ui);
    s.V = std::move(w.v);
    s.V_inv = std::move(w.vi);
    s.rows = rows;
    s.cols = cols;
    return s;
  }
}

// Rank over the fraction field; defined for every coefficient ring.
template <Coefficient F>
std::size_t laurent_rank(const LaurentMatrix<F>& a) {
  if constexpr (is_field_v<F>) {
    return smith_normal_form(a).rank();
  } else {
    // Fraction-free elimination over Z[x, x^-1].
    LaurentMatrix<F> m = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      std::size_t p = r;
      while (p < m.rows() && m(p, c).is_zero()) ++p;
      if (p == m.rows()) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m(i, c).is_zero()) continue;
        LaurentPoly<F> f = m(i, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * m(r, c) - f * m(r, j);
      }
      ++r;
    }
    return r;
  }
}

}  // namespace p1dom

#endif  // P1DOM_SMITH_HPP
