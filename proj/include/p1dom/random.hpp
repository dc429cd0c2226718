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

#ifndef P1DOM_RANDOM_HPP
#define P1DOM_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "p1dom/cohomology.hpp"
#include "p1dom/complex.hpp"
#include "p1dom/extension.hpp"
#include "p1dom/matrix.hpp"

namespace p1dom {

// mt19937_64 is fully specified; the reduction below avoids the
// implementation-defined distributions so streams agree across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(gen_() % span);
  }
  bool coin() { return (gen_() & 1) != 0; }
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

struct RandomShape {
  int max_length = 4;
  std::size_t max_rank = 4;
  int min_exp = -3;
  int max_exp = 3;
  int max_coeff = 3;
};

template <Coefficient F>
LaurentPoly<F> random_poly(const ring_t<F>& ring, Rng& rng, const RandomShape& sh, bool nonzero = false) {
  using T = scalar_traits<F>;
  for (;;) {
    int a = rng.uniform(sh.min_exp, sh.max_exp);
    int b = rng.uniform(sh.min_exp, sh.max_exp);
    if (a > b) std::swap(a, b);
    b = std::min(b, a + 2);
    std::vector<std::pair<int, F>> terms;
    for (int e = a; e <= b; ++e) {
      int c = rng.uniform(-sh.max_coeff, sh.max_coeff);
      if (c != 0) terms.emplace_back(e, T::from_int(ring, c));
    }
    auto p = LaurentPoly<F>::from_terms(ring, terms);
    if (!nonzero || !p.is_zero()) return p;
  }
}

template <Coefficient F>
LaurentPoly<F> random_sparse_poly(const ring_t<F>& ring, Rng& rng, const RandomShape& sh) {
  if (rng.uniform(0, 2) == 0) return LaurentPoly<F>(ring);
  return random_poly<F>(ring, rng, sh);
}

template <Coefficient F>
struct Unimodular {
  LaurentMatrix<F> a, inv;
};

// A product of elementary matrices 1 + c x^e E_ij with c = +-1.
template <Coefficient F>
Unimodular<F> random_unimodular(const ring_t<F>& ring, std::size_t n, Rng& rng, int steps) {
  using T = scalar_traits<F>;
  auto a = LaurentMatrix<F>::identity(ring, n);
  auto inv = a;
  if (n < 2) return {a, inv};
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    auto c = LaurentPoly<F>::monomial(ring, T::from_int(ring, rng.coin() ? 1 : -1), rng.uniform(-1, 1));
    auto e = LaurentMatrix<F>::identity(ring, n);
    auto einv = e;
    e(i, j) = c;
    einv(i, j) = -c;
    a = a * e;
    inv = einv * inv;
  }
  return {a, inv};
}

template <Coefficient F>
bool within_exponents(const LaurentMatrix<F>& m, const RandomShape& sh) {
  if (m.is_zero()) return true;
  return *m.mindeg() >= sh.min_exp && *m.maxdeg() <= sh.max_exp;
}

// New coordinates u_m * old in every degree: d'(m) = u_{m-1} d(m) u_m^{-1}.
template <Coefficient F>
ChainComplex<F> conjugate(const ChainComplex<F>& c, const std::map<int, Unimodular<F>>& u) {
  std::vector<std::size_t> ranks;
  for (int m = c.lo(); m <= c.hi(); ++m) ranks.push_back(c.rank(m));
  ChainComplex<F> out(c.ring(), c.base(), c.lo(), ranks);
  if (c.empty_support()) return out;
  for (int m = c.lo() + 1; m <= c.hi(); ++m) out.set_d(m, u.at(m - 1).a * c.d(m) * u.at(m).inv);
  return out;
}

template <Coefficient F>
std::map<int, Unimodular<F>> random_basis_change(const ChainComplex<F>& c, Rng& rng, int steps) {
  std::map<int, Unimodular<F>> u;
  for (int m = c.lo(); m <= c.hi(); ++m) u.emplace(m, random_unimodular<F>(c.ring(), c.rank(m), rng, steps));
  return u;
}

template <Coefficient F>
ChainMap<F> conjugate(const ChainMap<F>& f, const ChainComplex<F>& source, const ChainComplex<F>& target,
                      const std::map<int, Unimodular<std::type_identity_t<F>>>* us,
                      const std::map<int, Unimodular<std::type_identity_t<F>>>* ut) {
  ChainMap<F> g(source, target);
  auto [lo, hi] = support_union(source.lo(), source.hi(), target.lo(), target.hi());
  for (int m = lo; m <= hi; ++m) {
    auto mat = f.at(m);
    if (ut && ut->count(m)) mat = ut->at(m).a * mat;
    if (us && us->count(m)) mat = mat * us->at(m).inv;
    g.set(m, mat);
  }
  return g;
}

namespace detail {

struct PieceLayout {
  int lo = 0;
  std::vector<std::size_t> ranks;
  // (degree, index in that degree) of both ends of each two-term piece.
  struct Piece {
    int m;
    std::size_t top, bottom;
  };
  std::vector<Piece> pieces;
};

}  // namespace detail

// Free generators and two-term pieces p: R -> R, optionally hidden by a
// basis change. `acyclic_only` drops the free generators, which makes the
// result Novikov-acyclic over a field.
template <Coefficient F>
ChainComplex<F> random_complex(const ring_t<F>& ring, Rng& rng, const RandomShape& sh = {}, bool acyclic_only = false,
                               bool hide = true) {
  int len = rng.uniform(1, sh.max_length);
  if (acyclic_only) len = std::max(len, 2);
  int lo = rng.uniform(-1, 1);
  std::vector<std::size_t> ranks(static_cast<std::size_t>(len), 0);
  std::vector<std::tuple<int, std::size_t, std::size_t, LaurentPoly<F>>> pieces;
  auto room = [&](int idx) { return ranks[static_cast<std::size_t>(idx)] < sh.max_rank; };
  int attempts = rng.uniform(1, 2 * len + 1);
  for (int a = 0; a < attempts; ++a) {
    bool two = acyclic_only || (len > 1 && rng.uniform(0, 2) > 0);
    if (two && len > 1) {
      int top = rng.uniform(1, len - 1);
      if (!room(top) || !room(top - 1)) continue;
      pieces.emplace_back(top, ranks[static_cast<std::size_t>(top)]++, ranks[static_cast<std::size_t>(top - 1)]++,
                          random_poly<F>(ring, rng, sh, true));
    } else if (!acyclic_only) {
      int at = rng.uniform(0, len - 1);
      if (room(at)) ranks[static_cast<std::size_t>(at)]++;
    }
  }
  ChainComplex<F> c(ring, Base::laurent, lo, ranks);
  std::map<int, LaurentMatrix<F>> ds;
  for (int i = 1; i < len; ++i) ds.emplace(i, LaurentMatrix<F>(ring, ranks[i - 1], ranks[i]));
  for (auto& [top, t, b, p] : pieces) ds.at(top)(b, t) = p;
  for (auto& [i, d] : ds) c.set_d(lo + i, d);
  if (!hide) return c;
  for (int tries = 0; tries < 8; ++tries) {
    auto u = random_basis_change(c, rng, 2);
    auto h = conjugate(c, u);
    bool ok = true;
    for (int m = h.lo() + 1; m <= h.hi() && ok; ++m) ok = within_exponents(h.d(m), sh);
    if (ok) return h;
  }
  return c;
}

// c * id + d h + h d for a random h of degree +1.
template <Coefficient F>
ChainMap<F> random_chain_endomorphism(const ChainComplex<F>& c, Rng& rng, long scalar) {
  using T = scalar_traits<F>;
  ChainMap<F> f(c, c);
  std::map<int, LaurentMatrix<F>> h;
  for (int m = c.lo() - 1; m <= c.hi(); ++m) {
    LaurentMatrix<F> hm(c.ring(), c.rank(m + 1), c.rank(m));
    if (rng.uniform(0, 1) == 0) {
      for (std::size_t i = 0; i < hm.rows(); ++i) {
        for (std::size_t j = 0; j < hm.cols(); ++j) {
          if (rng.uniform(0, 2) == 0) hm(i, j) = LaurentPoly<F>::monomial(c.ring(), T::from_int(c.ring(), rng.uniform(-1, 1)), rng.uniform(-1, 1));
        }
      }
    }
    h.emplace(m, hm);
  }
  for (int m = c.lo(); m <= c.hi(); ++m) {
    auto mat = LaurentMatrix<F>::identity(c.ring(), c.rank(m)).scaled(LaurentPoly<F>::constant(c.ring(), scalar));
    mat = mat + c.d(m + 1) * h.at(m) + h.at(m - 1) * c.d(m);
    f.set(m, mat);
  }
  return f;
}

template <Coefficient F>
ChainMap<F> stacked_map(const ChainComplex<F>& source, const ChainMap<F>& head, const ChainComplex<F>& target) {
  ChainMap<F> g(source, target);
  for (int m = source.lo(); m <= source.hi(); ++m) {
    auto top = head.at(m);
    LaurentMatrix<F> rest(source.ring(), top.rows(), source.rank(m) - top.cols());
    g.set(m, hstack(top, rest));
  }
  return g;
}

// M^- = C + E1, M = C, M^+ = C + E2 with mu = [f, 0] for chain maps f of C.
template <Coefficient F>
OneRingDiagram<F> random_diagram(const ring_t<F>& ring, Rng& rng, const RandomShape& sh = {}) {
  auto c = random_complex<F>(ring, rng, sh);
  auto e1 = random_complex<F>(ring, rng, sh);
  auto e2 = random_complex<F>(ring, rng, sh);
  auto minus = direct_sum(c, e1);
  auto plus = direct_sum(c, e2);
  auto fm = random_chain_endomorphism(c, rng, rng.uniform(-2, 2));
  auto fp = random_chain_endomorphism(c, rng, rng.uniform(-2, 2));
  OneRingDiagram<F> dg{minus, c, plus, ChainMap<F>(minus, c), ChainMap<F>(plus, c)};
  for (int m = minus.lo(); m <= minus.hi(); ++m) {
    LaurentMatrix<F> rest(ring, c.rank(m), minus.rank(m) - c.rank(m));
    dg.mu_minus.set(m, hstack(fm.at(m), rest));
  }
  for (int m = plus.lo(); m <= plus.hi(); ++m) {
    LaurentMatrix<F> rest(ring, c.rank(m), plus.rank(m) - c.rank(m));
    dg.mu_plus.set(m, hstack(fp.at(m), rest));
  }
  return dg;
}

// A diagram map phi: N -> M whose three components are quasi-isomorphisms:
// N = M + (constant diagram of an acyclic cone), phi the projection, and N
// then disguised by independent basis changes in each constituent.
template <Coefficient F>
DiagramMap<F> random_quasi_isomorphism(const ring_t<F>& ring, Rng& rng, const RandomShape& sh = {}) {
  auto target = random_diagram<F>(ring, rng, sh);
  auto x = random_complex<F>(ring, rng, sh);
  auto acyclic = cone(ChainMap<F>::identity(x)).complex;
  auto a = OneRingDiagram<F>::constant(acyclic);

  auto sum_map = [&](const ChainMap<F>& f, const ChainMap<F>& g, const ChainComplex<F>& s, const ChainComplex<F>& t) {
    ChainMap<F> h(s, t);
    auto [lo, hi] = support_union(s.lo(), s.hi(), t.lo(), t.hi());
    for (int m = lo; m <= hi; ++m) h.set(m, block_diagonal(f.at(m), g.at(m)));
    return h;
  };
  auto projection = [&](const ChainComplex<F>& s, const ChainComplex<F>& t) {
    ChainMap<F> p(s, t);
    auto [lo, hi] = support_union(s.lo(), s.hi(), t.lo(), t.hi());
    for (int m = lo; m <= hi; ++m) {
      LaurentMatrix<F> rest(ring, t.rank(m), s.rank(m) - t.rank(m));
      p.set(m, hstack(LaurentMatrix<F>::identity(ring, t.rank(m)), rest));
    }
    return p;
  };

  auto minus = direct_sum(target.minus, acyclic);
  auto mid = direct_sum(target.mid, acyclic);
  auto plus = direct_sum(target.plus, acyclic);
  auto mum = sum_map(target.mu_minus, a.mu_minus, minus, mid);
  auto mup = sum_map(target.mu_plus, a.mu_plus, plus, mid);
  auto pm = projection(minus, target.minus);
  auto pc = projection(mid, target.mid);
  auto pp = projection(plus, target.plus);

  auto um = random_basis_change(minus, rng, 2);
  auto uc = random_basis_change(mid, rng, 2);
  auto up = random_basis_change(plus, rng, 2);
  auto minus2 = conjugate(minus, um), mid2 = conjugate(mid, uc), plus2 = conjugate(plus, up);
  OneRingDiagram<F> source{minus2, mid2, plus2, conjugate(mum, minus2, mid2, &um, &uc),
                           conjugate(mup, plus2, mid2, &up, &uc)};
  return {source, target, conjugate(pm, minus2, target.minus, &um, nullptr),
          conjugate(pc, mid2, target.mid, &uc, nullptr), conjugate(pp, plus2, target.plus, &up, nullptr)};
}

// The extension of a random complex, pushed further out by O(a, b) twists.
template <Coefficient F>
SheafComplex<F> random_sheaf_complex(const ring_t<F>& ring, Rng& rng, const RandomShape& sh = {}) {
  auto c = random_complex<F>(ring, rng, sh);
  return extend_complex(c).sheaf.twisted(rng.uniform(0, 2), rng.uniform(0, 2));
}

// Acyclic after both Novikov base changes: a torsion two-term complex or the
// cone of a self-map of a free module with nonzero determinant, then coned
// once more along a random chain endomorphism.
template <Coefficient F>
ChainComplex<F> random_novikov_acyclic(const ring_t<F>& ring, Rng& rng, RandomShape sh = {}) {
  static_assert(is_field_v<F>, "nonzero determinant is a unit criterion only over a field");
  sh.max_rank = std::min<std::size_t>(sh.max_rank, 2);
  ChainComplex<F> a = random_complex<F>(ring, rng, sh, true);
  if (rng.coin()) {
    std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(sh.max_rank)));
    ChainComplex<F> x(ring, Base::laurent, rng.uniform(-1, 1), {r});
    LaurentMatrix<F> f(ring, r, r);
    do {
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) f(i, j) = random_poly<F>(ring, rng, sh);
      }
    } while (determinant(f).is_zero());
    ChainMap<F> phi(x, x);
    phi.set(x.lo(), f);
    a = cone(phi).complex;
  }
  if (rng.coin()) a = cone(random_chain_endomorphism(a, rng, rng.uniform(-2, 2))).complex;
  for (int tries = 0; tries < 8; ++tries) {
    auto h = conjugate(a, random_basis_change(a, rng, 2));
    bool ok = true;
    for (int m = h.lo() + 1; m <= h.hi() && ok; ++m) ok = within_exponents(h.d(m), sh);
    if (ok) return h;
  }
  return a;
}

}  // namespace p1dom

#endif  // P1DOM_RANDOM_HPP
