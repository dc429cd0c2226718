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

// Coefficient rings: exact rationals, GF(p) and the integers.
//
// Every algorithm in the library is a template over the coefficient type F
// and reaches the ring through scalar_traits<F>. Values of GF(p) carry their
// modulus, so the zero polynomial and friends need a ring object to be built.

#ifndef P1DOM_SCALAR_HPP
#define P1DOM_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "p1dom/errors.hpp"

namespace p1dom {

enum class RingKind { rational, prime_field, integer };

// Runtime description of a coefficient ring, as written in file headers.
struct RingDescriptor {
  RingKind kind = RingKind::rational;
  std::uint64_t modulus = 0;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

  bool is_field() const noexcept { return kind != RingKind::integer; }

  // "Q", "GF(101)" or "Z".
  std::string name() const {
    switch (kind) {
      case RingKind::rational: return "Q";
      case RingKind::prime_field: return "GF(" + std::to_string(modulus) + ")";
      case RingKind::integer: return "Z";
    }
    return "?";
  }
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline bool is_decimal_integer(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace detail

// Element of GF(p), canonical representative in [0, p).
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t v, std::uint64_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }

  static ModP from_residue(std::uint64_t v, std::uint64_t p) {
    ModP r;
    r.v_ = v % p;
    r.p_ = p;
    return r;
  }

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  ModP inverse() const {
    if (v_ == 0) throw NotAUnitError("0 is not invertible in GF(" + std::to_string(p_) + ")");
    return from_residue(detail::pow_mod(v_, p_ - 2, p_), p_);
  }

  ModP operator-() const { return from_residue(v_ == 0 ? 0 : p_ - v_, p_); }

  ModP& operator+=(const ModP& o) {
    check(o);
    v_ = v_ + o.v_;
    if (v_ >= p_ || v_ < o.v_) v_ -= p_;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    v_ = detail::mul_mod(v_, o.v_, p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  void check(const ModP& o) const {
    if (o.p_ != p_) {
      throw MixedRingError("GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
    }
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

struct RationalField {
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

struct IntegerRing {
  friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

struct PrimeField {
  std::uint64_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t modulus) : p(modulus) {
    if (!detail::is_prime(modulus)) {
      throw UnsupportedRingError("GF(p) needs a prime modulus, got " + std::to_string(modulus));
    }
  }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

template <class F>
struct scalar_traits;

template <>
struct scalar_traits<mpq_class> {
  using ring_type = RationalField;
  static constexpr bool is_field = true;

  static mpq_class zero(const ring_type&) { return mpq_class(0); }
  static mpq_class one(const ring_type&) { return mpq_class(1); }
  static mpq_class from_int(const ring_type&, long v) { return mpq_class(v); }
  static bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
  static bool is_unit(const mpq_class& a) { return sgn(a) != 0; }
  static mpq_class inverse(const mpq_class& a) {
    if (sgn(a) == 0) throw NotAUnitError("0 is not invertible in Q");
    return mpq_class(1) / a;
  }
  static mpq_class divide_exact(const mpq_class& a, const mpq_class& b) { return a / b; }
  static bool divides(const mpq_class& b, const mpq_class&) { return sgn(b) != 0; }
  static ring_type ring_of(const mpq_class&) { return {}; }
  static RingDescriptor describe(const ring_type&) { return {RingKind::rational, 0}; }
  static std::string to_string(const mpq_class& a) { return a.get_str(); }

  static mpq_class parse(const ring_type&, std::string_view s) {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!detail::is_decimal_integer(num) || !detail::is_decimal_integer(den) || den[0] == '-' ||
        den[0] == '+') {
      throw ParseError("", "malformed rational '" + std::string(s) + "'");
    }
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
    mpz_class d{std::string(den)};
    if (d == 0) throw ParseError("", "zero denominator in '" + std::string(s) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }
};

template <>
struct scalar_traits<mpz_class> {
  using ring_type = IntegerRing;
  static constexpr bool is_field = false;

  static mpz_class zero(const ring_type&) { return mpz_class(0); }
  static mpz_class one(const ring_type&) { return mpz_class(1); }
  static mpz_class from_int(const ring_type&, long v) { return mpz_class(v); }
  static bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
  static bool is_unit(const mpz_class& a) { return a == 1 || a == -1; }
  static mpz_class inverse(const mpz_class& a) {
    if (!is_unit(a)) throw NotAUnitError(a.get_str() + " is not a unit in Z");
    return a;
  }
  static bool divides(const mpz_class& b, const mpz_class& a) {
    return sgn(b) != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
  }
  static mpz_class divide_exact(const mpz_class& a, const mpz_class& b) {
    if (!divides(b, a)) throw NotAUnitError(b.get_str() + " does not divide " + a.get_str());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static ring_type ring_of(const mpz_class&) { return {}; }
  static RingDescriptor describe(const ring_type&) { return {RingKind::integer, 0}; }
  static std::string to_string(const mpz_class& a) { return a.get_str(); }

  static mpz_class parse(const ring_type&, std::string_view s) {
    if (!detail::is_decimal_integer(s)) throw ParseError("", "malformed integer '" + std::string(s) + "'");
    return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s));
  }
};

template <>
struct scalar_traits<ModP> {
  using ring_type = PrimeField;
  static constexpr bool is_field = true;

  static ModP zero(const ring_type& r) { return ModP::from_residue(0, r.p); }
  static ModP one(const ring_type& r) { return ModP::from_residue(1, r.p); }
  static ModP from_int(const ring_type& r, long v) { return ModP(v, r.p); }
  static bool is_zero(const ModP& a) { return a.is_zero(); }
  static bool is_unit(const ModP& a) { return !a.is_zero(); }
  static ModP inverse(const ModP& a) { return a.inverse(); }
  static ModP divide_exact(const ModP& a, const ModP& b) { return a / b; }
  static bool divides(const ModP& b, const ModP&) { return !b.is_zero(); }
  static ring_type ring_of(const ModP& a) {
    ring_type r;
    r.p = a.modulus();
    return r;
  }
  static RingDescriptor describe(const ring_type& r) { return {RingKind::prime_field, r.p}; }
  static std::string to_string(const ModP& a) { return std::to_string(a.value()); }

  // Residues are written canonically, so anything outside [0, p) is rejected.
  static ModP parse(const ring_type& r, std::string_view s) {
    if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("", "malformed GF(" + std::to_string(r.p) + ") residue '" + std::string(s) + "'");
    }
    std::uint64_t v = std::stoull(std::string(s));
    if (v >= r.p) {
      throw ParseError("", "residue " + std::string(s) + " not in [0, " + std::to_string(r.p) + ")");
    }
    return ModP::from_residue(v, r.p);
  }
};

template <class F>
using ring_t = typename scalar_traits<F>::ring_type;

template <class F>
concept Coefficient = requires { typename scalar_traits<F>::ring_type; };

template <class F>
inline constexpr bool is_field_v = scalar_traits<F>::is_field;

}  // namespace p1dom

#endif  // P1DOM_SCALAR_HPP
