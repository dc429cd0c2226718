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

#ifndef P1DOM_LAURENT_HPP
#define P1DOM_LAURENT_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "p1dom/errors.hpp"
#include "p1dom/scalar.hpp"

namespace p1dom {

// Laurent polynomial sum_e c_e x^e with coefficients in F.
//
// Stored densely from the lowest to the highest nonzero exponent; the first
// and last stored coefficients are nonzero and the zero polynomial stores
// nothing. This is the canonical form every operation returns.
template <Coefficient F>
class LaurentPoly {
 public:
  using traits = scalar_traits<F>;
  using ring_type = ring_t<F>;

  LaurentPoly() = default;
  explicit LaurentPoly(const ring_type& ring) : ring_(ring) {}

  static LaurentPoly monomial(const ring_type& ring, const F& c, int e) {
    LaurentPoly p(ring);
    if (!traits::is_zero(c)) {
      p.low_ = e;
      p.coeffs_.push_back(c);
    }
    return p;
  }
  static LaurentPoly x_power(const ring_type& ring, int e) { return monomial(ring, traits::one(ring), e); }
  static LaurentPoly constant(const ring_type& ring, long c) { return monomial(ring, traits::from_int(ring, c), 0); }
  static LaurentPoly one(const ring_type& ring) { return constant(ring, 1); }

  // Coefficients for exponents low, low+1, ...; normalised on the way in.
  static LaurentPoly from_dense(const ring_type& ring, int low, std::vector<F> coeffs) {
    LaurentPoly p(ring);
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
  }

  static LaurentPoly from_terms(const ring_type& ring, const std::vector<std::pair<int, F>>& terms) {
    LaurentPoly p(ring);
    for (const auto& [e, c] : terms) p += monomial(ring, c, e);
    return p;
  }

  const ring_type& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  int mindeg() const {
    if (is_zero()) throw std::domain_error("mindeg of the zero Laurent polynomial");
    return low_;
  }
  int maxdeg() const {
    if (is_zero()) throw std::domain_error("maxdeg of the zero Laurent polynomial");
    return low_ + static_cast<int>(coeffs_.size()) - 1;
  }
  // maxdeg - mindeg; the Euclidean norm of K[x, x^-1].
  int span() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }

  bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  bool is_constant() const noexcept { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }

  F coeff(int e) const {
    if (is_zero() || e < low_ || e > maxdeg()) return traits::zero(ring_);
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }
  const F& lowest_coeff() const { return coeffs_.front(); }
  const F& leading_coeff() const { return coeffs_.back(); }

  std::vector<std::pair<int, F>> terms() const {
    std::vector<std::pair<int, F>> t;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!traits::is_zero(coeffs_[i])) t.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    }
    return t;
  }

  // Number of nonzero terms.
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                  [](const F& c) { return !traits::is_zero(c); }));
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, true); }

  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_ring(b);
    LaurentPoly r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, traits::zero(a.ring_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (traits::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    r.normalize();
    return r;
  }

  LaurentPoly scaled(const F& c) const {
    if (traits::is_zero(c)) return LaurentPoly(ring_);
    LaurentPoly r = *this;
    for (auto& v : r.coeffs_) v *= c;
    r.normalize();
    return r;
  }

  // Multiplication by x^n.
  LaurentPoly shifted(int n) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += n;
    return r;
  }

  // The substitution x -> x^-1.
  LaurentPoly reflected() const {
    LaurentPoly r(ring_);
    if (is_zero()) return r;
    r.low_ = -maxdeg();
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return r;
  }

  F evaluate(const F& point) const {
    if (is_zero()) return traits::zero(ring_);
    // Horner on the polynomial part, then the monomial x^low.
    F acc = traits::zero(ring_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    F pw = traits::one(ring_);
    if (low_ >= 0) {
      for (int i = 0; i < low_; ++i) pw *= point;
    } else {
      F inv = traits::inverse(point);
      for (int i = 0; i < -low_; ++i) pw *= inv;
    }
    return acc * pw;
  }

  // True when this is c * x^n with c a unit of F.
  bool is_unit() const { return is_monomial() && traits::is_unit(coeffs_.front()); }

  // Inverse of a unit c * x^n.
  LaurentPoly unit_inverse() const {
    if (!is_unit()) throw NotAUnitError(to_string() + " is not a unit of the Laurent ring");
    return monomial(ring_, traits::inverse(coeffs_.front()), -low_);
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.ring_ == b.ring_ && (a.is_zero() ? b.is_zero() : (a.low_ == b.low_ && a.coeffs_ == b.coeffs_));
  }

  // Human-readable, e.g. "-1 + x^2" or "x^-1 + 2*x".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
      std::string cs = traits::to_string(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      if (neg) cs = cs.substr(1);
      if (e == 0) {
        os << cs;
      } else {
        if (cs != "1") os << cs << "*";
        os << "x";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

 private:
  void check_ring(const LaurentPoly& o) const {
    if (!(ring_ == o.ring_)) throw MixedRingError("Laurent polynomials over different coefficient rings");
  }

  LaurentPoly& accumulate(const LaurentPoly& o, bool subtract) {
    check_ring(o);
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -o : o;
      return *this;
    }
    int lo = std::min(low_, o.low_);
    int hi = std::max(maxdeg(), o.maxdeg());
    if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), traits::zero(ring_));
    low_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), traits::zero(ring_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      auto& dst = coeffs_[static_cast<std::size_t>(o.low_ - lo) + i];
      if (subtract) dst -= o.coeffs_[i];
      else dst += o.coeffs_[i];
    }
    normalize();
    return *this;
  }

  void normalize() {
    std::size_t b = 0;
    while (b < coeffs_.size() && traits::is_zero(coeffs_[b])) ++b;
    if (b == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t e = coeffs_.size();
    while (traits::is_zero(coeffs_[e - 1])) --e;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(e), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(b));
    low_ += static_cast<int>(b);
  }

  [[no_unique_address]] ring_type ring_{};
  int low_ = 0;
  std::vector<F> coeffs_;
};

// Result of writing p = unit * core with unit = c x^v and core a monic
// polynomial with nonzero constant term.
template <Coefficient F>
struct UnitNormalForm {
  LaurentPoly<F> unit;
  LaurentPoly<F> core;
};

template <Coefficient F>
UnitNormalForm<F> unit_normalize(const LaurentPoly<F>& p) {
  static_assert(is_field_v<F>, "unit normalisation needs field coefficients");
  using T = scalar_traits<F>;
  if (p.is_zero()) return {LaurentPoly<F>::one(p.ring()), p};
  auto unit = LaurentPoly<F>::monomial(p.ring(), p.leading_coeff(), p.mindeg());
  auto core = p.shifted(-p.mindeg()).scaled(T::inverse(p.leading_coeff()));
  return {unit, core};
}

// Euclidean division in K[x, x^-1] with norm = span:
// a = q b + r where r = 0 or span(r) < span(b).
template <Coefficient F>
std::pair<LaurentPoly<F>, LaurentPoly<F>> laurent_divmod(const LaurentPoly<F>& a, const LaurentPoly<F>& b) {
  static_assert(is_field_v<F>, "Euclidean division needs field coefficients");
  using T = scalar_traits<F>;
  using P = LaurentPoly<F>;
  if (b.is_zero()) throw std::domain_error("division by the zero Laurent polynomial");
  if (!(a.ring() == b.ring())) throw MixedRingError("Laurent division over different rings");
  if (a.is_zero()) return {P(a.ring()), P(a.ring())};
  // Divide the polynomial cores a0 = x^-wa a, b0 = x^-wb b in K[x].
  const int wa = a.mindeg();
  const int wb = b.mindeg();
  P rem = a.shifted(-wa);
  const P b0 = b.shifted(-wb);
  const int db = b0.maxdeg();
  const F lc_inv = T::inverse(b0.leading_coeff());
  P quot(a.ring());
  while (!rem.is_zero() && rem.maxdeg() >= db) {
    int shift = rem.maxdeg() - db;
    F c = rem.leading_coeff() * lc_inv;
    P term = P::monomial(a.ring(), c, shift);
    quot += term;
    rem -= term * b0;
  }
  // a = x^wa (q b0 + r) = x^(wa-wb) q b + x^wa r.
  return {quot.shifted(wa - wb), rem.shifted(wa)};
}

// Exact quotient a / b in F[x, x^-1] for F a field or Z; throws NotAUnitError
// when b does not divide a.
template <Coefficient F>
LaurentPoly<F> exact_divide(const LaurentPoly<F>& a, const LaurentPoly<F>& b) {
  using T = scalar_traits<F>;
  using P = LaurentPoly<F>;
  if (b.is_zero()) throw std::domain_error("division by the zero Laurent polynomial");
  if (a.is_zero()) return P(a.ring());
  const int wa = a.mindeg();
  const int wb = b.mindeg();
  P rem = a.shifted(-wa);
  const P b0 = b.shifted(-wb);
  const int db = b0.maxdeg();
  P quot(a.ring());
  while (!rem.is_zero() && rem.maxdeg() >= db) {
    if (!T::divides(b0.leading_coeff(), rem.leading_coeff())) break;
    F c = T::divide_exact(rem.leading_coeff(), b0.leading_coeff());
    P term = P::monomial(a.ring(), c, rem.maxdeg() - db);
    quot += term;
    rem -= term * b0;
  }
  if (!rem.is_zero()) throw NotAUnitError(b.to_string() + " does not divide " + a.to_string());
  return quot.shifted(wa - wb);
}

}  // namespace p1dom

#endif  // P1DOM_LAURENT_HPP
