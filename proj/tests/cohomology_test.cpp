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

std::size_t h0_expected(int n) { return n >= 0 ? static_cast<std::size_t>(n + 1) : 0; }
std::size_t h1_expected(int n) { return n <= -2 ? static_cast<std::size_t>(-n - 1) : 0; }

M monomial_row(int a, int b) {
  M m(kQ, 1, static_cast<std::size_t>(std::max(0, b - a + 1)));
  for (int e = a; e <= b; ++e) m(0, static_cast<std::size_t>(e - a)) = xp(e);
  return m;
}

TEST(TwistingSheaf, StructureMaps) {
  auto o0 = twisting_sheaf<Q>(kQ, 0, 0, 1);
  EXPECT_EQ(o0.mu_minus(), M::scalar(cst(1)));
  EXPECT_EQ(o0.mu_plus(), M::scalar(cst(1)));
  auto o2 = twisting_sheaf<Q>(kQ, 2, 1, 1);
  EXPECT_EQ(o2.mu_minus(), M::scalar(xp(1)));
  EXPECT_EQ(o2.mu_plus(), M::scalar(xp(-1)));
  auto r3 = twisting_sheaf<Q>(kQ, -2, -1, 3);
  EXPECT_EQ(r3.rank(), 3u);
  EXPECT_EQ(r3.mu_minus(), M::identity(kQ, 3).shifted(-1));
}

TEST(TwistingSheaf, RejectsSingularStructureMaps) {
  EXPECT_THROW(SheafDiagram<Q>(M::scalar(xp(1) - cst(1)), M::scalar(cst(1))), InvalidComplexError);
  EXPECT_THROW(SheafDiagram<Q>(M::scalar(xp(1)), M::scalar(cst(1)), std::vector<Twist>{{0, 0}}), InvalidComplexError);
  EXPECT_THROW(SheafDiagram<Q>(M::identity(kQ, 2), M::scalar(cst(1))), ShapeError);
}

TEST(CechCohomology, TwistTable) {
  for (int n = -8; n <= 8; ++n) {
    for (int k : {n, 0, 1, -1, n / 2}) {
      int l = n - k;
      auto coh = cech_cohomology(twisting_sheaf<Q>(kQ, n, k, 1));
      EXPECT_EQ(coh.h0_dim, h0_expected(n)) << n << " " << k;
      EXPECT_EQ(coh.h1_dim, h1_expected(n)) << n << " " << k;
      EXPECT_EQ(coh.h0_basis, monomial_row(-l, k)) << n << " " << k;
      EXPECT_EQ(coh.h1_representatives, monomial_row(k + 1, -l - 1)) << n << " " << k;
      EXPECT_EQ(static_cast<long>(coh.h0_dim) - static_cast<long>(coh.h1_dim), n + 1);
    }
  }
}

TEST(CechCohomology, ExampleRows) {
  auto m1 = cech_cohomology(twisting_sheaf<Q>(kQ, -1, 0, 1));
  EXPECT_EQ(m1.h0_dim, 0u);
  EXPECT_EQ(m1.h1_dim, 0u);
  auto m3 = cech_cohomology(twisting_sheaf<Q>(kQ, -3, 2, 1));
  EXPECT_EQ(m3.h1_dim, 2u);
  EXPECT_EQ(m3.h1_representatives, monomial_row(3, 4));
}

TEST(CechCohomology, GeneralWindowAlgorithmAgrees) {
  for (int n = -8; n <= 8; ++n) {
    for (int k : {0, n, 2}) {
      auto d = twisting_sheaf<Q>(kQ, n, k, 1);
      auto a = cech_cohomology(d), b = cech_cohomology(d, false);
      EXPECT_EQ(a.h0_dim, b.h0_dim) << n;
      EXPECT_EQ(a.h1_dim, b.h1_dim) << n;
      EXPECT_EQ(a.h0_basis, b.h0_basis) << n;
      EXPECT_EQ(a.h1_representatives, b.h1_representatives) << n;
    }
  }
}

TEST(CechCohomology, TwistComposition) {
  for (int m = -4; m <= 4; ++m) {
    for (int n = -4; n <= 4; ++n) {
      int k = m / 2, dk = n > 0 ? n : 0;
      auto composed = twisting_sheaf<Q>(kQ, m, k, 2).twisted(dk, n - dk);
      auto direct = twisting_sheaf<Q>(kQ, m + n, k + dk, 2);
      EXPECT_EQ(composed, direct);
      auto a = cech_cohomology(composed, false), b = cech_cohomology(direct);
      EXPECT_EQ(a.h0_dim, b.h0_dim);
      EXPECT_EQ(a.h1_dim, b.h1_dim);
      EXPECT_EQ(a.h0_basis, b.h0_basis);
    }
  }
}

// Elementary products with entries of one exponent sign: automorphisms of
// K[x]^r (sign +1) or K[x^-1]^r (sign -1).
M signed_unimodular(std::size_t r, Rng& rng, int sign) {
  M a = M::identity(kQ, r);
  if (r < 2) return a;
  for (int s = 0; s < 3; ++s) {
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(r) - 1));
    auto j = (i + 1 + static_cast<std::size_t>(rng.uniform(0, static_cast<int>(r) - 2))) % r;
    M e = M::identity(kQ, r);
    e(i, j) = cst(rng.coin() ? 1 : -1) * xp(sign * rng.uniform(0, 2));
    a = a * e;
  }
  return a;
}

TEST(CechCohomology, NonSplitPresentationsKeepDimensions) {
  Rng rng(51);
  for (int t = 0; t < 40; ++t) {
    std::vector<Twist> tw;
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, 3));
    std::size_t h0 = 0, h1 = 0;
    for (std::size_t i = 0; i < r; ++i) {
      int n = rng.uniform(-4, 4), k = rng.uniform(-2, 2);
      tw.push_back({k, n - k});
      h0 += h0_expected(n);
      h1 += h1_expected(n);
    }
    auto split = SheafDiagram<Q>::from_twists(kQ, tw);
    auto a = random_unimodular<Q>(kQ, r, rng, 3).a;
    SheafDiagram<Q> dg(a * split.mu_minus() * signed_unimodular(r, rng, -1),
                       a * split.mu_plus() * signed_unimodular(r, rng, 1));
    auto coh = cech_cohomology(dg);
    EXPECT_EQ(coh.h0_dim, h0) << t;
    EXPECT_EQ(coh.h1_dim, h1) << t;
    EXPECT_EQ(coh.h0_basis.cols(), h0);
    EXPECT_EQ(coh.h1_presentation.rows() - rank(coh.h1_presentation), h1);
  }
}

TEST(CechComplex, SingleOTwo) {
  auto sc = uniform_twist(point(), {2, 0});
  auto w = cech_complex(sc);
  EXPECT_EQ(w.rank(0), 3u);
  EXPECT_EQ(w.base(), Base::constant);
  EXPECT_TRUE(w.d(0).is_zero());
}

TEST(CechComplex, ExtensionOfXMinusOne) {
  auto ext = extend_complex(x_minus_one());
  auto w = cech_complex(ext.sheaf);
  EXPECT_EQ(w.rank(0), 2u);
  EXPECT_EQ(w.rank(1), 1u);
  M d(kQ, 2, 1);
  d(0, 0) = cst(-1);
  d(1, 0) = cst(1);
  EXPECT_EQ(w.d(1), d);
  auto h = k_homology_dimensions(w);
  EXPECT_EQ(h[0], 1u);
  EXPECT_EQ(h[1], 0u);
}

TEST(CechComplex, ZeroAndNonVanishingH1) {
  auto zero = SheafComplex<Q>::from_twists(C::zero(kQ, Base::laurent), TwistProfile{});
  EXPECT_TRUE(cech_complex(zero).empty_support());
  auto bad = uniform_twist(point(), {0, -2});
  EXPECT_THROW(cech_complex(bad), NonVanishingH1);
  auto h = h0_complex(bad, false);
  EXPECT_EQ(h.h1_dims.at(0), 1u);
  EXPECT_EQ(h.complex.rank(0), 0u);
}

TEST(Hypercohomology, ConstantDiagram) {
  auto dg = OneRingDiagram<Q>::constant(point());
  auto h = hypercohomology(dg);
  EXPECT_EQ(h.rank(0), 2u);
  EXPECT_EQ(h.rank(-1), 1u);
  M d(kQ, 1, 2);
  d(0, 0) = cst(-1);
  d(0, 1) = cst(1);
  EXPECT_EQ(h.d(0), d);
  auto hom = homology(h);
  EXPECT_EQ(hom.free_rank(0), 1u);
  EXPECT_EQ(hom.free_rank(-1), 0u);
}

TEST(Hypercohomology, ZeroMiddle) {
  Rng rng(52);
  auto a = random_complex<Q>(kQ, rng), b = random_complex<Q>(kQ, rng);
  auto z = C::zero(kQ, Base::laurent);
  OneRingDiagram<Q> dg{a, z, b, ChainMap<Q>(a, z), ChainMap<Q>(b, z)};
  EXPECT_EQ(hypercohomology(dg), direct_sum(a, b));
}

TEST(Hypercohomology, OMinusTwo) {
  auto sc = uniform_twist(point(), {0, -2});
  auto model = hypercohomology(sc);
  auto dims = k_homology_dimensions(model.complex);
  EXPECT_EQ(dims[-1], 1u);
  EXPECT_EQ(dims[0], 0u);
}

TEST(Hypercohomology, TwistSumsMatchLevelwiseCohomology) {
  for (int n = -5; n <= 5; ++n) {
    auto model = hypercohomology(uniform_twist(point(2), {n, 0}));
    auto dims = k_homology_dimensions(model.complex);
    EXPECT_EQ(dims[0], 2 * h0_expected(n)) << n;
    EXPECT_EQ(dims[-1], 2 * h1_expected(n)) << n;
  }
}

TEST(Iota, DiagonalOnTheConstantDiagram) {
  auto dg = OneRingDiagram<Q>::constant(point());
  auto r = iota(dg);
  EXPECT_EQ(r.h0.rank(0), 1u);
  auto col = r.map.at(0);
  ASSERT_EQ(col.rows(), 2u);
  EXPECT_EQ(col(0, 0), col(1, 0));
  EXPECT_TRUE(col(0, 0).is_unit());
  EXPECT_TRUE(r.map.is_chain_map());
  EXPECT_TRUE(is_quasi_isomorphism(r.map));
}

TEST(Iota, FailsWithoutTheVanishingHypothesis) {
  auto sc = uniform_twist(point(), {0, -2});
  auto f = iota(sc);
  EXPECT_TRUE(f.is_chain_map());
  EXPECT_FALSE(is_quasi_isomorphism(f));
}

TEST(Iota, ZeroDiagram) {
  auto z = C::zero(kQ, Base::laurent);
  auto r = iota(OneRingDiagram<Q>::constant(z));
  EXPECT_TRUE(r.h0.empty_support());
  EXPECT_TRUE(r.map.target().empty_support());
}

TEST(Iota, QuasiIsomorphismForNonNegativeTwists) {
  for (int n = 0; n <= 4; ++n) {
    auto sc = extend_complex(x_minus_one()).sheaf.twisted(n, 0);
    EXPECT_TRUE(is_quasi_isomorphism(iota(sc))) << n;
  }
}

TEST(Ses, RandomDiagrams) {
  Rng rng(53);
  for (int i = 0; i < 40; ++i) {
    auto dg = random_diagram<Q>(kQ, rng);
    ASSERT_TRUE(dg.check().empty());
    ASSERT_TRUE(ses_check(dg)) << i;
  }
  EXPECT_TRUE(ses_check(OneRingDiagram<Q>::constant(C::zero(kQ, Base::laurent))));
}

// Flip the sign of the -d block of the hypercohomology differential.
C corrupt(const C& h, const OneRingDiagram<Q>& dg) {
  C bad = h;
  for (int n = h.lo() + 1; n <= h.hi(); ++n) {
    auto d = h.d(n);
    std::size_t r0 = dg.minus.rank(n - 1) + dg.plus.rank(n - 1);
    std::size_t c0 = dg.minus.rank(n) + dg.plus.rank(n);
    for (std::size_t i = r0; i < d.rows(); ++i) {
      for (std::size_t j = c0; j < d.cols(); ++j) d(i, j) = -d(i, j);
    }
    bad.set_d(n, d);
  }
  return bad;
}

TEST(Ses, MutationIsDetected) {
  Rng rng(54);
  int detected = 0;
  for (int i = 0; i < 40; ++i) {
    auto dg = random_diagram<Q>(kQ, rng);
    auto h = hypercohomology(dg);
    ASSERT_TRUE(ses_check(dg, h));
    bool has_d = false;
    for (int n = dg.mid.lo() + 1; n <= dg.mid.hi(); ++n) has_d = has_d || !dg.mid.d(n).is_zero();
    if (!has_d) continue;
    EXPECT_FALSE(ses_check(dg, corrupt(h, dg))) << i;
    ++detected;
  }
  EXPECT_GT(detected, 10);
}

TEST(Ses, WindowModels) {
  Rng rng(55);
  for (int i = 0; i < 30; ++i) {
    auto sc = random_sheaf_complex<Q>(kQ, rng);
    auto model = hypercohomology(sc);
    ASSERT_TRUE(ses_check(model)) << i;
    bool has_d = false;
    for (int n = model.sub.lo() + 1; n <= model.sub.hi(); ++n) has_d = has_d || !model.sub.d(n).is_zero();
    if (!has_d) continue;
    auto broken = model;
    broken.sub = ChainComplex<Q>(model.sub.ring(), model.sub.base(), model.sub.lo(), [&] {
      std::vector<std::size_t> r;
      for (int n = model.sub.lo(); n <= model.sub.hi(); ++n) r.push_back(model.sub.rank(n));
      return r;
    }());
    for (int n = model.sub.lo() + 1; n <= model.sub.hi(); ++n) broken.sub.set_d(n, -model.sub.d(n));
    EXPECT_FALSE(ses_check(broken)) << i;
  }
}

template <Coefficient F>
void claim_one(const ring_t<F>& ring, std::uint64_t seed, int cases) {
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    auto phi = random_quasi_isomorphism<F>(ring, rng);
    ASSERT_TRUE(phi.source.check().empty());
    ASSERT_TRUE(phi.commutes());
    ASSERT_TRUE(is_quasi_isomorphism(phi.minus) && is_quasi_isomorphism(phi.mid) && is_quasi_isomorphism(phi.plus));
    ASSERT_TRUE(is_quasi_isomorphism(hyper_map(phi))) << i;
  }
}

TEST(HyperMapInvariance, Rational) { claim_one<Q>(kQ, 56, 30); }
TEST(HyperMapInvariance, PrimeField) { claim_one<ModP>(PrimeField(3), 57, 30); }

TEST(HyperMapInvariance, NonQuasiIsomorphismIsNotPromoted) {
  // Zero map out of a diagram with nonzero hypercohomology.
  auto dg = OneRingDiagram<Q>::constant(point());
  auto z = C::zero(kQ, Base::laurent);
  auto zd = OneRingDiagram<Q>::constant(z);
  DiagramMap<Q> phi{dg, zd, ChainMap<Q>(point(), z), ChainMap<Q>(point(), z), ChainMap<Q>(point(), z)};
  EXPECT_TRUE(phi.commutes());
  EXPECT_FALSE(is_quasi_isomorphism(hyper_map(phi)));
}

template <Coefficient F>
void claim_two(const ring_t<F>& ring, std::uint64_t seed, int cases) {
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    auto sc = random_sheaf_complex<F>(ring, rng);
    ASSERT_TRUE(sc.check().empty());
    ASSERT_GE(sc.profile()->min_n(), 0);
    ASSERT_TRUE(is_quasi_isomorphism(iota(sc))) << i;
  }
}

TEST(GlobalSectionsComparison, Rational) { claim_two<Q>(kQ, 58, 30); }
TEST(GlobalSectionsComparison, PrimeField) { claim_two<ModP>(PrimeField(5), 59, 30); }

TEST(SheafComplex, ChecksStructureMaps) {
  auto c = x_minus_one();
  TwistProfile p;
  p.set_uniform(0, 1, {0, 0});
  p.set_uniform(1, 1, {0, 0});
  // (x - 1) x^0 is not a legal K[x^-1]-differential.
  EXPECT_THROW(SheafComplex<Q>::from_twists(c, p), InvalidComplexError);
  TwistProfile short_profile;
  short_profile.set(0, {{1, 0}, {1, 0}});
  EXPECT_THROW(SheafComplex<Q>::from_twists(c, short_profile), InvalidComplexError);
}

}  // namespace
}  // namespace p1dom
