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

// Truncated formal power series and formal Laurent series, in x or in x^-1.

#ifndef P1DOM_SERIES_HPP
#define P1DOM_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "p1dom/errors.hpp"
#include "p1dom/laurent.hpp"

namespace p1dom {

// K[[x]], K((x)), K[[x^-1]], K((x^-1)).
enum class SeriesRing { power_x, laurent_x, power_inv_x, laurent_inv_x };

inline bool is_inverse_variable(SeriesRing r) {
  return r == SeriesRing::power_inv_x || r == SeriesRing::laurent_inv_x;
}
inline bool is_power_ring(SeriesRing r) { return r == SeriesRing::power_x || r == SeriesRing::power_inv_x; }

inline std::string series_ring_name(SeriesRing r) {
  switch (r) {
    case SeriesRing::power_x: return "K[[x]]";
    case SeriesRing::laurent_x: return "K((x))";
    case SeriesRing::power_inv_x: return "K[[x^-1]]";
    case SeriesRing::laurent_inv_x: return "K((x^-1))";
  }
  return "?";
}

// A series in t (t = x or t = x^-1 depending on the ring) known on the window
// of exponents [start, start + order):
//
//   f = sum_{i < order} c_i t^(start + i) + O(t^(start + order)).
//
// Coefficients below `start` are exactly zero. When `exact` is set the O-term
// vanishes too, i.e. f is the polynomial shown. Leading window coefficients
// are stripped on construction, so a nonzero first coefficient is the true
// lowest coefficient of f.
template <Coefficient F>
class TruncatedSeries {
 public:
  using traits = scalar_traits<F>;
  using ring_type = ring_t<F>;

  TruncatedSeries(const ring_type& ring, SeriesRing sring, int start, std::vector<F> coeffs, bool exact)
      : ring_(ring), sring_(sring), start_(start), c_(std::move(coeffs)), exact_(exact) {
    strip();
    if (is_power_ring(sring_) && !c_.empty() && start_ < 0) {
      throw std::domain_error("negative exponent in a power series ring");
    }
  }

  // Embed a Laurent polynomial p(x), keeping `order` coefficients from its
  // lowest term in t.
  static TruncatedSeries from_laurent(const LaurentPoly<F>& p, SeriesRing sring, std::size_t order) {
    if (order == 0) throw std::invalid_argument("truncation order must be at least 1");
    const LaurentPoly<F> q = is_inverse_variable(sring) ? p.reflected() : p;
    if (q.is_zero()) return TruncatedSeries(p.ring(), sring, 0, {}, true);
    std::vector<F> c;
    const int lo = q.mindeg();
    const std::size_t len = static_cast<std::size_t>(q.span() + 1);
    for (std::size_t i = 0; i < std::min(len, order); ++i) c.push_back(q.coeff(lo + static_cast<int>(i)));
    bool exact = len <= order;
    c.resize(order, traits::zero(p.ring()));
    return TruncatedSeries(p.ring(), sring, lo, std::move(c), exact);
  }

  const ring_type& ring() const noexcept { return ring_; }
  SeriesRing series_ring() const noexcept { return sring_; }
  int start() const noexcept { return start_; }
  std::size_t order() const noexcept { return c_.size(); }
  int precision() const noexcept { return start_ + static_cast<int>(c_.size()); }
  bool exact() const noexcept { return exact_; }
  const std::vector<F>& coeffs() const noexcept { return c_; }

  // Coefficient of t^e; only meaningful for e < precision() unless exact.
  F coeff(int e) const {
    if (e < start_ || e >= precision()) return traits::zero(ring_);
    return c_[static_cast<std::size_t>(e - start_)];
  }

  // The lowest coefficient is known exactly whenever the window is nonempty.
  std::optional<F> lowest_exact_coeff() const {
    if (c_.empty()) return std::nullopt;
    return c_.front();
  }

  // Known exactly zero (exact and empty).
  bool is_exact_zero() const noexcept { return exact_ && c_.empty(); }

  // Nonempty window whose lowest coefficient is a unit of F. In a power series
  // ring the valuation must also be zero.
  bool is_unit() const {
    if (c_.empty() || !traits::is_unit(c_.front())) return false;
    return !is_power_ring(sring_) || start_ == 0;
  }

  // The known part as a Laurent polynomial in x.
  LaurentPoly<F> known_part() const {
    LaurentPoly<F> t = LaurentPoly<F>::from_dense(ring_, start_, c_);
    return is_inverse_variable(sring_) ? t.reflected() : t;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    std::size_t n = std::min(a.order(), b.order());
    if (a.exact_ && b.exact_) n = a.c_.empty() || b.c_.empty() ? 0 : a.order() + b.order() - 1;
    std::vector<F> c(n, traits::zero(a.ring_));
    for (std::size_t i = 0; i < a.order() && i < n; ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.order() && i + j < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(a.ring_, a.sring_, a.start_ + b.start_, std::move(c), a.exact_ && b.exact_);
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b, false); }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b, true); }

  std::string to_string() const {
    std::string s = known_part().to_string();
    if (!exact_) {
      int p = precision();
      s += " + O(" + std::string(is_inverse_variable(sring_) ? "x^" + std::to_string(-p) : "x^" + std::to_string(p)) + ")";
    }
    return s;
  }

 private:
  static TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b, bool subtract) {
    a.check(b);
    if (a.is_exact_zero()) return subtract ? -b : b;
    if (b.is_exact_zero()) return a;
    int lo = std::min(a.c_.empty() ? a.precision() : a.start_, b.c_.empty() ? b.precision() : b.start_);
    int hi;
    if (a.exact_ && b.exact_) hi = std::max(a.precision(), b.precision());
    else if (a.exact_) hi = b.precision();
    else if (b.exact_) hi = a.precision();
    else hi = std::min(a.precision(), b.precision());
    lo = std::min(lo, hi);
    std::vector<F> c(static_cast<std::size_t>(hi - lo), traits::zero(a.ring_));
    for (int e = lo; e < hi; ++e) {
      F v = a.coeff(e);
      if (subtract) v -= b.coeff(e);
      else v += b.coeff(e);
      c[static_cast<std::size_t>(e - lo)] = v;
    }
    return TruncatedSeries(a.ring_, a.sring_, lo, std::move(c), a.exact_ && b.exact_);
  }

  void check(const TruncatedSeries& o) const {
    if (!(ring_ == o.ring_) || sring_ != o.sring_) throw MixedRingError("series over different rings");
  }

  void strip() {
    std::size_t z = 0;
    while (z < c_.size() && traits::is_zero(c_[z])) ++z;
    if (z == 0) return;
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(z));
    start_ += static_cast<int>(z);
    if (exact_ && c_.empty()) start_ = 0;
  }

  [[no_unique_address]] ring_type ring_{};
  SeriesRing sring_ = SeriesRing::power_x;
  int start_ = 0;
  std::vector<F> c_;
  bool exact_ = false;
};

// Inverse of a unit, valid on a window of the same length.
template <Coefficient F>
TruncatedSeries<F> series_invert(const TruncatedSeries<F>& f) {
  using T = scalar_traits<F>;
  auto lowest = f.lowest_exact_coeff();
  if (!lowest) throw NotAUnitError("series has no known nonzero coefficient: " + f.to_string());
  if (!T::is_unit(*lowest)) {
    throw NotAUnitError("lowest coefficient " + T::to_string(*lowest) + " of " + f.to_string() + " is not a unit");
  }
  if (is_power_ring(f.series_ring()) && f.start() != 0) {
    throw NotAUnitError(f.to_string() + " has positive valuation in " + series_ring_name(f.series_ring()));
  }
  const auto& c = f.coeffs();
  const std::size_t n = f.order();
  const F c0_inv = T::inverse(c[0]);
  std::vector<F> g(n, T::zero(f.ring()));
  g[0] = c0_inv;
  for (std::size_t k = 1; k < n; ++k) {
    F acc = T::zero(f.ring());
    for (std::size_t i = 1; i <= k; ++i) {
      if (!T::is_zero(c[i])) acc += c[i] * g[k - i];
    }
    g[k] = -(acc * c0_inv);
  }
  bool exact = f.exact() && n == 1;
  return TruncatedSeries<F>(f.ring(), f.series_ring(), -f.start(), std::move(g), exact);
}

// Arithmetic in K[t]/(t^n), elements stored as n coefficients.
namespace local {

template <Coefficient F>
using Element = std::vector<F>;

template <Coefficient F>
std::size_t valuation(const Element<F>& a) {
  std::size_t v = 0;
  while (v < a.size() && scalar_traits<F>::is_zero(a[v])) ++v;
  return v;
}

template <Coefficient F>
Element<F> multiply(const Element<F>& a, const Element<F>& b, const F& zero) {
  using T = scalar_traits<F>;
  const std::size_t n = a.size();
  Element<F> r(n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    if (T::is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!T::is_zero(b[j])) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// t^-v a, with the top v coefficients filled by zeros; a must have valuation >= v.
template <Coefficient F>
Element<F> shift_down(const Element<F>& a, std::size_t v, const F& zero) {
  Element<F> r(a.size(), zero);
  for (std::size_t i = v; i < a.size(); ++i) r[i - v] = a[i];
  return r;
}

template <Coefficient F>
Element<F> invert_unit(const Element<F>& u, const ring_t<F>& ring) {
  using T = scalar_traits<F>;
  const std::size_t n = u.size();
  Element<F> g(n, T::zero(ring));
  const F c0_inv = T::inverse(u[0]);
  g[0] = c0_inv;
  for (std::size_t k = 1; k < n; ++k) {
    F acc = T::zero(ring);
    for (std::size_t i = 1; i <= k; ++i) {
      if (!T::is_zero(u[i])) acc += u[i] * g[k - i];
    }
    g[k] = -(acc * c0_inv);
  }
  return g;
}

// Valuations v_i < n of the Smith form of a matrix over the local ring
// K[t]/(t^n), found by elimination with minimal-valuation pivots. Entries
// are indexed [row][col].
template <Coefficient F>
std::vector<std::size_t> smith_valuations(std::vector<std::vector<Element<F>>> m, const ring_t<F>& ring,
                                          std::size_t n) {
  static_assert(is_field_v<F>, "local elimination needs field coefficients");
  using T = scalar_traits<F>;
  const F zero = T::zero(ring);
  std::vector<std::size_t> vals;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<bool> row_done(rows, false), col_done(cols, false);
  for (;;) {
    std::size_t best = n, bi = 0, bj = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_done[j]) continue;
        std::size_t v = valuation<F>(m[i][j]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (best == n) break;
    const Element<F> unit_inv = invert_unit<F>(shift_down<F>(m[bi][bj], best, zero), ring);
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_done[i] || i == bi || valuation<F>(m[i][bj]) == n) continue;
      Element<F> f = multiply<F>(shift_down<F>(m[i][bj], best, zero), unit_inv, zero);
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_done[j]) continue;
        Element<F> prod = multiply<F>(f, m[bi][j], zero);
        for (std::size_t k = 0; k < n; ++k) m[i][j][k] -= prod[k];
      }
    }
    // The pivot row is now redundant after column clearing, which does not
    // change the remaining block.
    row_done[bi] = true;
    col_done[bj] = true;
    vals.push_back(best);
  }
  return vals;
}

}  // namespace local

}  // namespace p1dom

#endif  // P1DOM_SERIES_HPP
