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

#ifndef P1DOM_TESTS_TEST_SUPPORT_HPP
#define P1DOM_TESTS_TEST_SUPPORT_HPP

#include "p1dom.hpp"

namespace p1dom::test {

using Q = mpq_class;
using Z = mpz_class;
using P = LaurentPoly<Q>;
using M = LaurentMatrix<Q>;
using C = ChainComplex<Q>;
inline const RationalField kQ{};
inline const IntegerRing kZ{};

inline P xp(int e) { return P::x_power(kQ, e); }
inline P cst(long v) { return P::constant(kQ, v); }

template <Coefficient F>
LaurentPoly<F> xpow(const ring_t<F>& r, int e) {
  return LaurentPoly<F>::x_power(r, e);
}

template <Coefficient F>
LaurentPoly<F> konst(const ring_t<F>& r, long v) {
  return LaurentPoly<F>::constant(r, v);
}

template <Coefficient F>
LaurentMatrix<F> one_by_one(const LaurentPoly<F>& p) {
  LaurentMatrix<F> m(p.ring(), 1, 1);
  m(0, 0) = p;
  return m;
}

// C_1 --p--> C_0.
template <Coefficient F>
ChainComplex<F> two_term(const LaurentPoly<F>& p, Base base = Base::laurent) {
  ChainComplex<F> c(p.ring(), base, 0, {1, 1});
  c.set_d(1, one_by_one(p));
  return c;
}

inline C point(std::size_t rank = 1, int degree = 0) { return C(kQ, Base::laurent, degree, {rank}); }

inline C x_minus_one() { return two_term(xp(1) - cst(1)); }

// A homogeneous sheaf complex: every level of `c` twisted by O(k, l).
template <Coefficient F>
SheafComplex<F> uniform_twist(const ChainComplex<F>& c, Twist t) {
  TwistProfile p;
  for (int m = c.lo(); m <= c.hi(); ++m) p.set_uniform(m, c.rank(m), t);
  return SheafComplex<F>::from_twists(c, p);
}

}  // namespace p1dom::test

#endif  // P1DOM_TESTS_TEST_SUPPORT_HPP
