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

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(C::zero(kQ, Base::laurent)).empty());
  EXPECT_TRUE(validate(x_minus_one()).empty());
  C c(kQ, Base::laurent, 0, {1, 1, 1});
  c.set_d(1, M::scalar(xp(1)));
  c.set_d(2, M::scalar(xp(1)));
  auto v = validate(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::nonzero_square);
  EXPECT_EQ(v[0].degree, 2);
}

TEST(Validate, BaseConstraints) {
  auto c = two_term(xp(-1) + cst(1), Base::polynomial);
  auto v = validate(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::base_constraint);
  EXPECT_TRUE(validate(two_term(xp(-1) + cst(1), Base::inverse_polynomial)).empty());
  EXPECT_FALSE(validate(two_term(xp(1), Base::constant)).empty());
}

TEST(ChainComplex, ShapeChecks) {
  C c(kQ, Base::laurent, 0, {1, 2});
  EXPECT_THROW(c.set_d(1, M(kQ, 2, 1)), ShapeError);
  EXPECT_THROW(c.set_d(5, M::scalar(xp(1))), ShapeError);
  EXPECT_NO_THROW(c.set_d(5, M(kQ, 0, 0)));
  EXPECT_EQ(c.rank(7), 0u);
  EXPECT_EQ(c.d(0).rows(), 0u);
  EXPECT_EQ(c.d(0).cols(), 1u);
}

TEST(Homology, XMinusOne) {
  auto h = homology(x_minus_one());
  ASSERT_EQ(h.groups.size(), 2u);
  EXPECT_EQ(h.groups[0].free_rank, 0u);
  ASSERT_EQ(h.groups[0].torsion.size(), 1u);
  EXPECT_EQ(h.groups[0].torsion[0], xp(1) - cst(1));
  EXPECT_EQ(*h.groups[0].k_dimension, 1u);
  EXPECT_TRUE(h.groups[1].is_zero());
  EXPECT_TRUE(h.torsion_only());
  EXPECT_FALSE(h.acyclic());
}

TEST(Homology, FreeRankOne) {
  auto h = homology(point());
  EXPECT_EQ(h.free_rank(0), 1u);
  EXPECT_FALSE(h.k_dimension(0).has_value());
}

TEST(Homology, UnitDifferential) { EXPECT_TRUE(homology(two_term(xp(1))).acyclic()); }

TEST(Homology, OverTheField) {
  ChainComplex<Q> c(kQ, Base::constant, 0, {2, 1});
  M d(kQ, 2, 1);
  d(0, 0) = cst(-1);
  d(1, 0) = cst(1);
  c.set_d(1, d);
  auto h = homology(c);
  EXPECT_EQ(*h.k_dimension(0), 1u);
  EXPECT_EQ(*h.k_dimension(1), 0u);
  EXPECT_THROW(homology(two_term(xp(1), Base::polynomial)), UnsupportedRingError);
}

TEST(Homology, IntegersAreUnsupported) {
  EXPECT_THROW(homology(two_term(konst<Z>(kZ, 2) - xpow<Z>(kZ, 1))), UnsupportedRingError);
}

TEST(Cone, IdentityOnRankOne) {
  auto c = point();
  auto k = cone(ChainMap<Q>::identity(c));
  EXPECT_EQ(k.complex.lo(), 0);
  EXPECT_EQ(k.complex.hi(), 1);
  EXPECT_EQ(k.complex.d(1), M::identity(kQ, 1));
  EXPECT_TRUE(homology(k.complex).acyclic());
  EXPECT_TRUE(k.inclusion.is_chain_map());
  EXPECT_TRUE(k.projection.is_chain_map());
}

TEST(Cone, ZeroBetweenZeroComplexes) {
  auto z = C::zero(kQ, Base::laurent);
  EXPECT_TRUE(cone(ChainMap<Q>::zero(z, z)).complex.empty_support());
}

TEST(Cone, MultiplicationByXMinusOne) {
  auto c = point();
  ChainMap<Q> f(c, c);
  f.set(0, M::scalar(xp(1) - cst(1)));
  auto k = cone(f).complex;
  EXPECT_EQ(k, x_minus_one());
  EXPECT_EQ(*restrict_scalars_view(k).total_dimension(), 1u);
}

TEST(Cone, OfIdentityIsAcyclicOnRandomComplexes) {
  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    auto c = random_complex<Q>(kQ, rng);
    ASSERT_TRUE(is_valid(c));
    auto k = cone(ChainMap<Q>::identity(c));
    ASSERT_TRUE(is_valid(k.complex));
    ASSERT_TRUE(homology(k.complex).acyclic()) << i;
    ASSERT_TRUE(is_quasi_isomorphism(ChainMap<Q>::identity(c)));
  }
}

TEST(Shift, ReindexesAndFlipsSign) {
  EXPECT_TRUE(shift(C::zero(kQ, Base::laurent), 5).empty_support());
  auto s = shift(x_minus_one(), 1);
  EXPECT_EQ(s.lo(), 1);
  EXPECT_EQ(s.d(2), M::scalar(cst(1) - xp(1)));
  EXPECT_EQ(shift(x_minus_one(), 2).d(3), M::scalar(xp(1) - cst(1)));
}

TEST(DirectSum, RanksAddDegreewise) {
  auto s = direct_sum(x_minus_one(), point(2, 1));
  EXPECT_EQ(s.rank(0), 1u);
  EXPECT_EQ(s.rank(1), 3u);
  EXPECT_TRUE(is_valid(s));
  auto g = two_term(xpow<ModP>(PrimeField(3), 1));
  auto g5 = two_term(xpow<ModP>(PrimeField(5), 1));
  EXPECT_THROW(direct_sum(g, g5), MixedRingError);
  EXPECT_THROW(direct_sum(x_minus_one(), two_term(xp(1), Base::polynomial)), MixedRingError);
}

LaurentPoly<Q> torsion_product(const HomologyGroup<Q>& g) {
  auto p = cst(1);
  for (const auto& t : g.torsion) p = p * t;
  return p;
}

TEST(DirectSum, HomologyIsAdditive) {
  Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    auto a = random_complex<Q>(kQ, rng), b = random_complex<Q>(kQ, rng);
    auto hs = homology(direct_sum(a, b));
    auto ha = homology(a), hb = homology(b);
    for (const auto& g : hs.groups) {
      std::size_t fa = ha.free_rank(g.degree), fb = hb.free_rank(g.degree);
      ASSERT_EQ(g.free_rank, fa + fb);
      auto pa = ha.at(g.degree) ? torsion_product(*ha.at(g.degree)) : cst(1);
      auto pb = hb.at(g.degree) ? torsion_product(*hb.at(g.degree)) : cst(1);
      ASSERT_EQ(torsion_product(g), pa * pb);
    }
  }
}

TEST(EulerCharacteristic, MatchesFreeRanks) {
  Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    auto c = random_complex<Q>(kQ, rng);
    long e = 0;
    for (const auto& g : homology(c).groups) e += (g.degree % 2 == 0 ? 1 : -1) * static_cast<long>(g.free_rank);
    ASSERT_EQ(e, euler_characteristic(c));
  }
}

TEST(RestrictScalars, Dimensions) {
  auto v = restrict_scalars_view(x_minus_one());
  EXPECT_EQ(*v.total_dimension(), 1u);
  EXPECT_FALSE(restrict_scalars_view(point()).total_dimension().has_value());
  EXPECT_THROW(restrict_scalars_view(two_term(xp(1), Base::polynomial)), UnsupportedRingError);
}

TEST(HomotopyRetract, Identity) {
  auto c = x_minus_one();
  auto id = ChainMap<Q>::identity(c);
  EXPECT_TRUE(verify_homotopy_retract(c, id, id, Homotopy<Q>(c, c)));
}

TEST(HomotopyRetract, ContractionOfTheXComplex) {
  auto c = two_term(xp(1));
  auto d = C::zero(kQ, Base::laurent);
  Homotopy<Q> h(c, c);
  h.set(0, M::scalar(xp(-1)));
  EXPECT_TRUE(verify_homotopy_retract(d, ChainMap<Q>::zero(d, c), ChainMap<Q>::zero(c, d), h));
  EXPECT_FALSE(verify_homotopy_retract(d, ChainMap<Q>::zero(d, c), ChainMap<Q>::zero(c, d), Homotopy<Q>(c, c)));
}

TEST(HomotopyRetract, ShapeErrors) {
  auto c = x_minus_one();
  auto id = ChainMap<Q>::identity(c);
  auto other = point();
  EXPECT_THROW(verify_homotopy_retract(other, id, id, Homotopy<Q>(c, c)), ShapeError);
  Homotopy<Q> h(c, c);
  EXPECT_THROW(h.set(0, M(kQ, 2, 2)), ShapeError);
}

// s = id - (dh + hd) makes id - r s = dh + hd with r = id.
TEST(HomotopyRetract, InvariantUnderBasisChange) {
  Rng rng(44);
  for (int i = 0; i < 40; ++i) {
    auto c = random_complex<Q>(kQ, rng);
    Homotopy<Q> h(c, c);
    std::map<int, M> hs;
    for (int m = c.lo() - 1; m <= c.hi(); ++m) {
      M hm(kQ, c.rank(m + 1), c.rank(m));
      for (std::size_t a = 0; a < hm.rows(); ++a) {
        for (std::size_t b = 0; b < hm.cols(); ++b) hm(a, b) = random_sparse_poly<Q>(kQ, rng, {});
      }
      hs.emplace(m, hm);
      h.set(m, hm);
    }
    ChainMap<Q> s(c, c), r = ChainMap<Q>::identity(c);
    for (int m = c.lo(); m <= c.hi(); ++m) {
      s.set(m, M::identity(kQ, c.rank(m)) - (c.d(m + 1) * hs.at(m) + hs.at(m - 1) * c.d(m)));
    }
    ASSERT_TRUE(s.is_chain_map());
    ASSERT_TRUE(verify_homotopy_retract(c, r, s, h)) << i;

    auto u = random_basis_change(c, rng, 3);
    auto c2 = conjugate(c, u);
    auto r2 = conjugate(r, c2, c2, &u, &u), s2 = conjugate(s, c2, c2, &u, &u);
    Homotopy<Q> h2(c2, c2);
    for (int m = c.lo() - 1; m <= c.hi(); ++m) {
      auto hm = hs.at(m);
      if (u.count(m + 1)) hm = u.at(m + 1).a * hm;
      if (u.count(m)) hm = hm * u.at(m).inv;
      h2.set(m, hm);
    }
    ASSERT_TRUE(verify_homotopy_retract(c2, r2, s2, h2)) << i;
    bool nontrivial = false;
    for (int m = c.lo(); m <= c.hi(); ++m) nontrivial = nontrivial || !(s.at(m) == r.at(m));
    if (nontrivial) {
      ASSERT_FALSE(verify_homotopy_retract(c2, r2, s2, Homotopy<Q>(c2, c2))) << i;
    }
  }
}

TEST(FreeComplement, PreservesSupport) {
  C c(kQ, Base::laurent, 0, {1, 2, 3, 1});
  auto f = free_complement(c);
  EXPECT_EQ(f.lo(), 0);
  EXPECT_EQ(f.hi(), 3);
  EXPECT_EQ(f.total_rank(), 0u);
  EXPECT_TRUE(free_complement(C::zero(kQ, Base::laurent)).empty_support());
  EXPECT_EQ(free_complement(x_minus_one()).total_rank(), 0u);
}

TEST(ChainMap, CommutationAndShapes) {
  auto c = x_minus_one();
  ChainMap<Q> f(c, c);
  f.set(0, M::scalar(xp(1)));
  EXPECT_FALSE(f.is_chain_map());
  f.set(1, M::scalar(xp(1)));
  EXPECT_TRUE(f.is_chain_map());
  EXPECT_THROW(f.set(0, M(kQ, 2, 1)), ShapeError);
  EXPECT_TRUE(is_quasi_isomorphism(f));
  ChainMap<Q> g(c, c);
  g.set(0, M::scalar(xp(1) - cst(1)));
  g.set(1, M::scalar(xp(1) - cst(1)));
  EXPECT_TRUE(g.is_chain_map());
  EXPECT_FALSE(is_quasi_isomorphism(g));
  EXPECT_EQ(compose(f, g).at(0), M::scalar(xp(2) - xp(1)));
  EXPECT_TRUE(subtract(f, f).at(1).is_zero());
}

}  // namespace
}  // namespace p1dom
