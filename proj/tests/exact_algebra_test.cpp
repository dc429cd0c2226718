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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace p1dom {
namespace {

using namespace p1dom::test;

TEST(Scalar, RationalsAreReduced) {
  auto q = scalar_traits<Q>::parse(kQ, "6/4");
  EXPECT_EQ(q, Q(3, 2));
  EXPECT_EQ(scalar_traits<Q>::to_string(q), "3/2");
  EXPECT_EQ(scalar_traits<Q>::parse(kQ, "-10"), Q(-10));
  EXPECT_THROW(scalar_traits<Q>::parse(kQ, "1/0"), ParseError);
  EXPECT_THROW(scalar_traits<Q>::parse(kQ, "1/-2"), ParseError);
  EXPECT_THROW(scalar_traits<Q>::parse(kQ, "1.5"), ParseError);
  EXPECT_THROW(scalar_traits<Q>::parse(kQ, ""), ParseError);
}

TEST(Scalar, PrimeFieldResidues) {
  PrimeField f5(5);
  EXPECT_EQ(ModP(-1, 5).value(), 4u);
  EXPECT_EQ((ModP(3, 5) * ModP(2, 5)).value(), 1u);
  EXPECT_EQ(ModP(3, 5).inverse().value(), 2u);
  EXPECT_THROW(ModP(0, 5).inverse(), NotAUnitError);
  EXPECT_EQ(scalar_traits<ModP>::parse(f5, "4").value(), 4u);
  EXPECT_THROW(scalar_traits<ModP>::parse(f5, "5"), ParseError);
  EXPECT_THROW(scalar_traits<ModP>::parse(f5, "-1"), ParseError);
  EXPECT_THROW(PrimeField(4), UnsupportedRingError);
  EXPECT_THROW(PrimeField(1), UnsupportedRingError);
  EXPECT_NO_THROW(PrimeField(1000003));
}

TEST(Scalar, Integers) {
  EXPECT_TRUE(scalar_traits<Z>::is_unit(Z(-1)));
  EXPECT_FALSE(scalar_traits<Z>::is_unit(Z(2)));
  EXPECT_THROW(scalar_traits<Z>::inverse(Z(2)), NotAUnitError);
  EXPECT_EQ(scalar_traits<Z>::parse(kZ, "-123456789012345678901234567890").get_str(), "-123456789012345678901234567890");
}

TEST(Laurent, ExamplesFromHandArithmetic) {
  EXPECT_EQ((xp(1) - cst(1)) * (xp(1) + cst(1)), xp(2) - cst(1));
  auto z = (cst(2) - xp(1)) + (xp(1) - cst(2));
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  PrimeField f3(3);
  auto a = xpow<ModP>(f3, 1) + konst<ModP>(f3, 2);
  auto b = xpow<ModP>(f3, 1) + konst<ModP>(f3, 1);
  EXPECT_EQ(a * b, xpow<ModP>(f3, 2) + konst<ModP>(f3, 2));
}

TEST(Laurent, CanonicalForm) {
  auto p = xp(-2) + xp(3) - xp(3);
  EXPECT_EQ(p, xp(-2));
  EXPECT_EQ(p.mindeg(), -2);
  EXPECT_EQ(p.maxdeg(), -2);
  auto q = P::from_terms(kQ, {{0, Q(0)}, {2, Q(5)}, {4, Q(0)}});
  EXPECT_EQ(q.terms().size(), 1u);
  EXPECT_EQ(q.mindeg(), 2);
  EXPECT_EQ((xp(1) * cst(-2) + xp(-1)).to_string(), "x^-1 - 2*x");
  EXPECT_TRUE(xp(-4).is_unit());
  EXPECT_FALSE((xp(1) + cst(1)).is_unit());
}

TEST(Laurent, MixedRingsAreRejected) {
  auto a = xpow<ModP>(PrimeField(3), 1);
  auto b = xpow<ModP>(PrimeField(5), 1);
  EXPECT_THROW(a + b, MixedRingError);
  EXPECT_THROW(a * b, MixedRingError);
}

template <Coefficient F>
void ring_axioms(const ring_t<F>& ring, std::uint64_t seed) {
  Rng rng(seed);
  RandomShape sh;
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly<F>(ring, rng, sh), b = random_poly<F>(ring, rng, sh), c = random_poly<F>(ring, rng, sh);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(Laurent, RingAxiomsRational) { ring_axioms<Q>(kQ, 11); }
TEST(Laurent, RingAxiomsPrimeField) { ring_axioms<ModP>(PrimeField(7), 12); }
TEST(Laurent, RingAxiomsInteger) { ring_axioms<Z>(kZ, 13); }

TEST(Laurent, DivisionWithRemainder) {
  auto a = xp(3) - cst(1), b = xp(1) - cst(1);
  auto [q, r] = laurent_divmod(a, b);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, xp(2) + xp(1) + cst(1));
  EXPECT_EQ(exact_divide(a, b), q);
}

TEST(Matrix, DeterminantAndInverse) {
  M a(kQ, 2, 2);
  a(0, 0) = xp(1);
  a(0, 1) = cst(1);
  a(1, 0) = cst(0);
  a(1, 1) = xp(-1);
  EXPECT_EQ(determinant(a), cst(1));
  EXPECT_EQ(a * inverse(a), M::identity(kQ, 2));
  M s(kQ, 1, 1);
  s(0, 0) = xp(1) - cst(1);
  EXPECT_THROW(inverse(s), NotAUnitError);
  EXPECT_TRUE(a.respects(Base::laurent));
  EXPECT_FALSE(a.respects(Base::polynomial));
  EXPECT_FALSE(a.respects(Base::inverse_polynomial));
  EXPECT_TRUE(M::identity(kQ, 3).respects(Base::constant));
}

TEST(Matrix, IntegerDeterminant) {
  LaurentMatrix<Z> a(kZ, 2, 2);
  a(0, 0) = konst<Z>(kZ, 2) - xpow<Z>(kZ, 1);
  a(1, 1) = xpow<Z>(kZ, 1);
  a(0, 1) = konst<Z>(kZ, 7);
  EXPECT_EQ(determinant(a), konst<Z>(kZ, 2) * xpow<Z>(kZ, 1) - xpow<Z>(kZ, 2));
}

TEST(Matrix, ShapeErrors) {
  M a(kQ, 2, 3), b(kQ, 2, 3);
  EXPECT_THROW(a * b, ShapeError);
  EXPECT_THROW(a + M(kQ, 3, 2), ShapeError);
}

TEST(Smith, SingleEntry) {
  auto s = smith_normal_form(M::scalar(xp(1) - cst(1)));
  ASSERT_EQ(s.rank(), 1u);
  EXPECT_EQ(s.factors[0], xp(1) - cst(1));
  EXPECT_EQ(s.torsion().size(), 1u);
}

TEST(Smith, UnitMonomialsAreNormalisedAway) {
  M a(kQ, 2, 2);
  a(0, 0) = xp(1);
  a(1, 1) = xp(2) - xp(1);
  auto s = smith_normal_form(a);
  ASSERT_EQ(s.factors.size(), 2u);
  EXPECT_EQ(s.factors[0], cst(1));
  EXPECT_EQ(s.factors[1], xp(1) - cst(1));
}

TEST(Smith, ZeroMatrix) {
  auto s = smith_normal_form(M(kQ, 2, 3));
  EXPECT_EQ(s.rank(), 0u);
  EXPECT_EQ(s.free_cokernel_rank(), 2u);
  EXPECT_EQ(s.kernel_rank(), 3u);
}

TEST(Smith, IntegersAreUnsupported) {
  EXPECT_THROW(smith_normal_form(one_by_one(konst<Z>(kZ, 2) - xpow<Z>(kZ, 1))), UnsupportedRingError);
}

template <Coefficient F>
LaurentMatrix<F> random_matrix(const ring_t<F>& ring, Rng& rng, std::size_t maxdim) {
  auto r = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(maxdim)));
  auto c = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(maxdim)));
  RandomShape sh;
  LaurentMatrix<F> a(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) a(i, j) = random_sparse_poly<F>(ring, rng, sh);
  }
  // Occasionally force a rank drop.
  if (r > 1 && rng.coin()) {
    for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * xpow<F>(ring, 1) - a(r - 2, j);
  }
  return a;
}

template <Coefficient F>
void smith_soundness(const ring_t<F>& ring, std::uint64_t seed, int cases) {
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    auto a = random_matrix<F>(ring, rng, 5);
    auto s = smith_normal_form(a);
    ASSERT_EQ(s.U * a * s.V, s.diagonal()) << i;
    ASSERT_TRUE(determinant(s.U).is_unit());
    ASSERT_TRUE(determinant(s.V).is_unit());
    ASSERT_EQ(s.U * s.U_inv, LaurentMatrix<F>::identity(ring, a.rows()));
    ASSERT_EQ(s.V * s.V_inv, LaurentMatrix<F>::identity(ring, a.cols()));
    for (std::size_t k = 0; k < s.factors.size(); ++k) {
      const auto& d = s.factors[k];
      ASSERT_EQ(d.mindeg(), 0);
      ASSERT_EQ(d.leading_coeff(), scalar_traits<F>::one(ring));
      if (k + 1 < s.factors.size()) {
        ASSERT_TRUE(laurent_divmod(s.factors[k + 1], d).second.is_zero());
      }
    }
  }
}

TEST(Smith, SoundnessRational) { smith_soundness<Q>(kQ, 21, 150); }
TEST(Smith, SoundnessPrimeField) { smith_soundness<ModP>(PrimeField(5), 22, 150); }

// Rank of A(a) at a random point of a large prime field, against the rank
// over K[x, x^-1]; a few points so an unlucky root is immaterial.
TEST(Smith, RankMatchesEvaluation) {
  PrimeField f(10007);
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    auto a = random_matrix<ModP>(f, rng, 5);
    std::size_t best = 0;
    for (int t = 0; t < 3; ++t) {
      ModP pt(rng.uniform(1, 10006), 10007);
      Matrix<ModP> e(f, a.rows(), a.cols());
      for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) e(r, c) = a(r, c).evaluate(pt);
      }
      best = std::max(best, rank(e));
    }
    ASSERT_EQ(best, smith_normal_form(a).rank()) << i;
  }
}

TEST(Series, GeometricSeries) {
  auto f = TruncatedSeries<Q>::from_laurent(cst(1) - xp(1), SeriesRing::power_x, 4);
  auto g = series_invert(f);
  EXPECT_EQ(g.known_part(), cst(1) + xp(1) + xp(2) + xp(3));
  EXPECT_EQ(g.order(), 4u);
}

TEST(Series, NonUnitLowestCoefficient) {
  auto f = TruncatedSeries<Z>::from_laurent(konst<Z>(kZ, 2) - xpow<Z>(kZ, 1), SeriesRing::power_x, 8);
  EXPECT_THROW(series_invert(f), NotAUnitError);
}

TEST(Series, InverseVariableExpansion) {
  // -x (1 - 2 x^-1) = 2 - x in Z((x^-1)).
  auto f = TruncatedSeries<Z>::from_laurent(konst<Z>(kZ, 2) - xpow<Z>(kZ, 1), SeriesRing::laurent_inv_x, 3);
  auto g = series_invert(f);
  auto expect = -(xpow<Z>(kZ, -1) + konst<Z>(kZ, 2) * xpow<Z>(kZ, -2) + konst<Z>(kZ, 4) * xpow<Z>(kZ, -3));
  EXPECT_EQ(g.known_part(), expect);
}

template <Coefficient F>
void inverse_identity(const ring_t<F>& ring, SeriesRing sring, std::uint64_t seed) {
  Rng rng(seed);
  RandomShape sh;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly<F>(ring, rng, sh, true);
    if (is_power_ring(sring)) p = is_inverse_variable(sring) ? p.shifted(-p.maxdeg()) : p.shifted(-p.mindeg());
    auto f = TruncatedSeries<F>::from_laurent(p, sring, 12);
    if (!f.is_unit()) {
      EXPECT_THROW(series_invert(f), NotAUnitError);
      continue;
    }
    auto g = series_invert(f);
    auto one = TruncatedSeries<F>::from_laurent(LaurentPoly<F>::one(ring), sring, 12);
    auto e = f * g - one;
    for (int k = e.start(); k < e.precision(); ++k) ASSERT_TRUE(scalar_traits<F>::is_zero(e.coeff(k))) << p;
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(Series, InverseIdentity) {
  inverse_identity<Q>(kQ, SeriesRing::power_x, 31);
  inverse_identity<Q>(kQ, SeriesRing::laurent_inv_x, 32);
  inverse_identity<ModP>(PrimeField(3), SeriesRing::laurent_x, 33);
  inverse_identity<Z>(kZ, SeriesRing::power_inv_x, 34);
}

TEST(Linalg, RankAndKernel) {
  Matrix<Q> a(kQ, 2, 3);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(0, 2) = 3;
  a(1, 0) = 2;
  a(1, 1) = 4;
  a(1, 2) = 6;
  EXPECT_EQ(rank(a), 1u);
  auto k = kernel_basis(a);
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE((a * k).is_zero());
}

}  // namespace
}  // namespace p1dom
