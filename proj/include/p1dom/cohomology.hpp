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

#ifndef P1DOM_COHOMOLOGY_HPP
#define P1DOM_COHOMOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p1dom/complex.hpp"
#include "p1dom/errors.hpp"
#include "p1dom/linalg.hpp"
#include "p1dom/matrix.hpp"
#include "p1dom/sheaf.hpp"
#include "p1dom/smith.hpp"

namespace p1dom {

// Coordinates of K-vector spaces spanned by monomials x^e * e_i with e in
// an inclusive per-coordinate window [a_i, b_i] (empty when a_i > b_i).
class WindowLayout {
 public:
  WindowLayout() = default;
  explicit WindowLayout(std::vector<std::pair<int, int>> windows) : windows_(std::move(windows)) {
    for (const auto& [a, b] : windows_) {
      offsets_.push_back(size_);
      if (b >= a) size_ += static_cast<std::size_t>(b - a + 1);
    }
  }

  static WindowLayout uniform(std::size_t r, int a, int b) {
    return WindowLayout(std::vector<std::pair<int, int>>(r, {a, b}));
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t coordinates() const noexcept { return windows_.size(); }
  const std::pair<int, int>& window(std::size_t i) const { return windows_[i]; }

  bool contains(std::size_t i, int e) const { return e >= windows_[i].first && e <= windows_[i].second; }
  std::size_t index(std::size_t i, int e) const { return offsets_[i] + static_cast<std::size_t>(e - windows_[i].first); }

  friend bool operator==(const WindowLayout&, const WindowLayout&) = default;

 private:
  std::vector<std::pair<int, int>> windows_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

// The K-matrix of v -> a v from the `cols` window space to the `rows` window
// space. Image terms below (above) the target window are dropped when
// drop_below (drop_above) is set and raise BandViolation otherwise.
template <Coefficient F>
Matrix<F> band_matrix(const LaurentMatrix<F>& a, const WindowLayout& cols, const WindowLayout& rows,
                      bool drop_below = false, bool drop_above = false) {
  if (a.rows() != rows.coordinates() || a.cols() != cols.coordinates()) {
    throw ShapeError("band matrix: " + a.shape() + " against windows " + std::to_string(rows.coordinates()) + "x" +
                     std::to_string(cols.coordinates()));
  }
  Matrix<F> out(a.ring(), rows.size(), cols.size());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto [lo, hi] = cols.window(j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto& p = a(i, j);
      if (p.is_zero()) continue;
      auto terms = p.terms();
      for (int e = lo; e <= hi; ++e) {
        for (const auto& [x, c] : terms) {
          int t = x + e;
          if (rows.contains(i, t)) {
            out(rows.index(i, t), cols.index(j, e)) = c;
          } else if (!((drop_below && t < rows.window(i).first) || (drop_above && t > rows.window(i).second))) {
            throw BandViolation("x^" + std::to_string(e) + " in coordinate " + std::to_string(j) + " maps to x^" +
                                std::to_string(t) + " outside the window of coordinate " + std::to_string(i));
          }
        }
      }
    }
  }
  return out;
}

// Laurent column vector of a window-space K-vector.
template <Coefficient F>
LaurentMatrix<F> unflatten(const Matrix<F>& v, std::size_t col, const WindowLayout& layout) {
  LaurentMatrix<F> out(v.ring(), layout.coordinates(), 1);
  for (std::size_t i = 0; i < layout.coordinates(); ++i) {
    const auto [a, b] = layout.window(i);
    std::vector<std::pair<int, F>> terms;
    for (int e = a; e <= b; ++e) {
      const F& c = v(layout.index(i, e), col);
      if (!scalar_traits<F>::is_zero(c)) terms.emplace_back(e, c);
    }
    out(i, 0) = LaurentPoly<F>::from_terms(v.ring(), terms);
  }
  return out;
}

// Coefficients of the columns of `vs` on a layout that must contain them.
template <Coefficient F>
Matrix<F> flatten(const LaurentMatrix<F>& vs, const WindowLayout& layout) {
  return band_matrix(vs, WindowLayout::uniform(vs.cols(), 0, 0), layout);
}

// Solves B X = V over K, given K-independent Laurent columns B. BandViolation
// when some column of V is not in their span.
template <Coefficient F>
Matrix<F> solve_in_basis(const LaurentMatrix<F>& basis, const LaurentMatrix<F>& v) {
  const std::size_t s = basis.cols(), t = v.cols();
  Matrix<F> x(basis.ring(), s, t);
  if (t == 0) return x;
  if (s == 0) {
    if (!v.is_zero()) throw BandViolation("nonzero image in a zero target level");
    return x;
  }
  auto lo = std::min(basis.mindeg().value_or(0), v.mindeg().value_or(0));
  auto hi = std::max(basis.maxdeg().value_or(0), v.maxdeg().value_or(0));
  auto layout = WindowLayout::uniform(basis.rows(), lo, hi);
  Matrix<F> aug(basis.ring(), layout.size(), s + t);
  aug.set_block(0, 0, flatten(basis, layout));
  aug.set_block(0, s, flatten(v, layout));
  auto [red, pivots] = row_reduce(std::move(aug));
  if (pivots.size() < s || (!pivots.empty() && pivots.back() >= s)) {
    throw BandViolation("image not in the span of the target basis");
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t j = 0; j < t; ++j) x(pivots[r], j) = red(r, s + j);
  }
  return x;
}

template <Coefficient F>
struct CechCohomology {
  std::size_t h0_dim = 0;
  std::size_t h1_dim = 0;
  LaurentMatrix<F> h0_basis;  // columns are sections, written in M
  // Cokernel presentation over K: rows index the window coordinates of
  // M / mu^+ M^+, columns the relations coming from mu^- M^-.
  Matrix<F> h1_presentation;
  LaurentMatrix<F> h1_representatives;  // columns in M
};

// Cech cohomology of M^- -> M <- M^+. For sums of twists the monomial bases
// {x^-l, ..., x^k} and {x^(k+1), ..., x^(-l-1)} are returned summand by
// summand; `use_twists = false` forces the general window computation.
template <Coefficient F>
CechCohomology<F> cech_cohomology(const SheafDiagram<F>& dg, bool use_twists = true) {
  if constexpr (!is_field_v<F>) {
    throw UnsupportedRingError("Cech cohomology needs field coefficients");
  } else {
    using P = LaurentPoly<F>;
    using LM = LaurentMatrix<F>;
    const auto& ring = dg.ring();
    const std::size_t r = dg.rank();
    CechCohomology<F> out{0, 0, LM(ring, r, 0), Matrix<F>(ring, 0, 0), LM(ring, r, 0)};
    if (r == 0) return out;

    if (use_twists && dg.is_twist_sum()) {
      std::vector<std::pair<std::size_t, int>> h0, h1;
      const auto& tw = *dg.twists();
      for (std::size_t i = 0; i < r; ++i) {
        for (int e = -tw[i].l; e <= tw[i].k; ++e) h0.emplace_back(i, e);
        for (int e = tw[i].k + 1; e <= -tw[i].l - 1; ++e) h1.emplace_back(i, e);
      }
      out.h0_dim = h0.size();
      out.h1_dim = h1.size();
      out.h0_basis = LM(ring, r, h0.size());
      for (std::size_t c = 0; c < h0.size(); ++c) out.h0_basis(h0[c].first, c) = P::x_power(ring, h0[c].second);
      out.h1_representatives = LM(ring, r, h1.size());
      for (std::size_t c = 0; c < h1.size(); ++c) out.h1_representatives(h1[c].first, c) = P::x_power(ring, h1[c].second);
      out.h1_presentation = Matrix<F>(ring, h1.size(), 0);
      return out;
    }

    const LM g = inverse(dg.mu_minus()) * dg.mu_plus();  // M^+ coords -> M^- coords
    const LM g_rev = inverse(dg.mu_plus()) * dg.mu_minus();

    // H^0: a^+ in K[x]^r with g a^+ in K[x^-1]^r; a^+ = g^-1 a^- bounds deg a^+.
    {
      const int top = std::max(0, g_rev.maxdeg().value_or(0));
      auto cols = WindowLayout::uniform(r, 0, top);
      auto rows = WindowLayout::uniform(r, 1, g.maxdeg().value_or(0) + top);
      Matrix<F> constraints = band_matrix(g, cols, rows, true, false);
      Matrix<F> ker = kernel_basis(constraints);
      out.h0_dim = ker.cols();
      out.h0_basis = LM(ring, r, ker.cols());
      for (std::size_t c = 0; c < ker.cols(); ++c) out.h0_basis.set_block(0, c, dg.mu_plus() * unflatten(ker, c, cols));
    }

    // H^1 in M^+ coordinates: K[x,x^-1]^r / (K[x]^r + g_rev K[x^-1]^r). Exponents
    // <= -w lie in the denominator, so the quotient lives on [-w+1, -1].
    {
      const int w = std::max(1, g.maxdeg().value_or(0));
      auto coords = WindowLayout::uniform(r, -w + 1, -1);
      const int reach = g_rev.maxdeg().value_or(0) + w - 1;
      auto rel_cols = WindowLayout::uniform(r, -std::max(reach, -1), 0);
      Matrix<F> rel = reach >= 0 ? band_matrix(g_rev, rel_cols, coords, true, true) : Matrix<F>(ring, coords.size(), 0);
      out.h1_presentation = rel;
      Matrix<F> relt(ring, rel.cols(), rel.rows());
      for (std::size_t i = 0; i < rel.rows(); ++i) {
        for (std::size_t j = 0; j < rel.cols(); ++j) relt(j, i) = rel(i, j);
      }
      auto ech = row_reduce(std::move(relt));
      std::vector<bool> pivot(coords.size(), false);
      for (auto p : ech.pivots) pivot[p] = true;
      std::vector<std::pair<std::size_t, int>> reps;
      for (std::size_t i = 0; i < r; ++i) {
        for (int e = -w + 1; e <= -1; ++e) {
          if (!pivot[coords.index(i, e)]) reps.emplace_back(i, e);
        }
      }
      out.h1_dim = reps.size();
      out.h1_representatives = LM(ring, r, reps.size());
      for (std::size_t c = 0; c < reps.size(); ++c) {
        LM unit(ring, r, 1);
        unit(reps[c].first, 0) = P::x_power(ring, reps[c].second);
        out.h1_representatives.set_block(0, c, dg.mu_plus() * unit);
      }
    }
    return out;
  }
}

// Levelwise H^0 of a sheaf complex with the differential induced by C.
template <Coefficient F>
struct H0Complex {
  ChainComplex<F> complex;                  // over K
  std::map<int, LaurentMatrix<F>> basis;    // sections of each level, in C_m
  std::map<int, std::size_t> h1_dims;
};

inline WindowLayout band_layout(const std::vector<Twist>& t) {
  std::vector<std::pair<int, int>> w;
  for (const auto& s : t) w.emplace_back(-s.l, s.k);
  return WindowLayout(std::move(w));
}

template <Coefficient F>
H0Complex<F> h0_complex(const SheafComplex<F>& sc, bool require_h1_zero) {
  const auto& ring = sc.ring();
  H0Complex<F> out{ChainComplex<F>::zero(ring, Base::constant), {}, {}};
  if (sc.mid().empty_support()) return out;
  std::vector<std::size_t> ranks;
  for (int m = sc.lo(); m <= sc.hi(); ++m) {
    auto coh = cech_cohomology(sc.level(m));
    if (require_h1_zero && coh.h1_dim != 0) {
      throw NonVanishingH1("level " + std::to_string(m) + " has H^1 of dimension " + std::to_string(coh.h1_dim));
    }
    out.h1_dims[m] = coh.h1_dim;
    ranks.push_back(coh.h0_dim);
    out.basis.emplace(m, std::move(coh.h0_basis));
  }
  out.complex = ChainComplex<F>(ring, Base::constant, sc.lo(), ranks);
  for (int m = sc.lo() + 1; m <= sc.hi(); ++m) {
    Matrix<F> dm = sc.is_twist_sum()
                       ? band_matrix(sc.mid().d(m), band_layout(sc.profile()->at(m)), band_layout(sc.profile()->at(m - 1)))
                       : solve_in_basis(out.basis.at(m - 1), sc.mid().d(m) * out.basis.at(m));
    LaurentMatrix<F> d(ring, dm.rows(), dm.cols());
    for (std::size_t i = 0; i < dm.rows(); ++i) {
      for (std::size_t j = 0; j < dm.cols(); ++j) d(i, j) = LaurentPoly<F>::monomial(ring, dm(i, j), 0);
    }
    out.complex.set_d(m, std::move(d));
  }
  return out;
}

// H^0(P^1; C) as a complex of finite-dimensional K-vector spaces.
template <Coefficient F>
ChainComplex<F> cech_complex(const SheafComplex<F>& sc) {
  return h0_complex(sc, true).complex;
}

// Finite model of the hypercohomology of a sum-of-twists sheaf complex. All
// coordinates are written in C. In degree n the minus part of summand i is
// kept on exponents [-low_n, k_i], the plus part on [-l_i, high_n] and
// C_{n+1} on [-low_{n+1}, high_{n+1}]. The windows are closed under the
// differential and the dropped tails form the cone of an identity, so the
// inclusion into the full totalisation is a quasi-isomorphism.
template <Coefficient F>
struct WindowModel {
  ChainComplex<F> complex;   // the truncated totalisation over K
  ChainComplex<F> sub;       // windowed C[1], differential -d
  ChainComplex<F> quotient;  // windowed C^- + C^+
  std::map<int, WindowLayout> minus, plus, mid;
};

template <Coefficient F>
ChainComplex<F> windowed(const ChainComplex<F>& c, const std::map<int, WindowLayout>& layouts) {
  if (c.empty_support()) return ChainComplex<F>::zero(c.ring(), Base::constant);
  std::vector<std::size_t> ranks;
  for (int m = c.lo(); m <= c.hi(); ++m) ranks.push_back(layouts.at(m).size());
  ChainComplex<F> w(c.ring(), Base::constant, c.lo(), ranks);
  for (int m = c.lo() + 1; m <= c.hi(); ++m) {
    Matrix<F> b = band_matrix(c.d(m), layouts.at(m), layouts.at(m - 1));
    LaurentMatrix<F> d(c.ring(), b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) d(i, j) = LaurentPoly<F>::monomial(c.ring(), b(i, j), 0);
    }
    w.set_d(m, std::move(d));
  }
  return w;
}

template <Coefficient F>
LaurentMatrix<F> constant_matrix(const Matrix<F>& b) {
  LaurentMatrix<F> d(b.ring(), b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) d(i, j) = LaurentPoly<F>::monomial(b.ring(), b(i, j), 0);
  }
  return d;
}

template <Coefficient F>
WindowModel<F> hypercohomology(const SheafComplex<F>& sc) {
  if (!sc.is_twist_sum()) throw UnsupportedDiagramError("hypercohomology of a sheaf complex needs a twist profile");
  const auto& ring = sc.ring();
  const auto& c = sc.mid();
  WindowModel<F> out;
  auto zero = ChainComplex<F>::zero(ring, Base::constant);
  if (c.empty_support()) return {zero, zero, zero, {}, {}, {}};
  const TwistProfile& prof = *sc.profile();

  std::map<int, int> low, high;
  for (int n = c.hi(); n >= c.lo(); --n) {
    int lw = 0, hg = 0;
    for (const auto& t : prof.at(n)) {
      lw = std::max({lw, t.l, -t.k - 1});
      hg = std::max({hg, t.k, -t.l - 1});
    }
    if (n < c.hi()) {
      auto d = c.d(n + 1);
      if (!d.is_zero()) {
        lw = std::max(lw, low[n + 1] - *d.mindeg());
        hg = std::max(hg, high[n + 1] + *d.maxdeg());
      }
    }
    low[n] = lw;
    high[n] = hg;
  }
  for (int n = c.lo() - 1; n <= c.hi() + 1; ++n) {
    std::vector<std::pair<int, int>> wm, wp;
    for (const auto& t : prof.at(n)) {
      wm.emplace_back(-low[n], t.k);
      wp.emplace_back(-t.l, high[n]);
    }
    out.minus[n] = WindowLayout(wm);
    out.plus[n] = WindowLayout(wp);
    out.mid[n] = c.in_support(n) ? WindowLayout::uniform(c.rank(n), -low[n], high[n]) : WindowLayout::uniform(0, 0, 0);
  }

  const int lo = c.lo() - 1, hi = c.hi();
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(out.minus[n].size() + out.plus[n].size() + out.mid[n + 1].size());
  out.complex = ChainComplex<F>(ring, Base::constant, lo, ranks);
  for (int n = lo + 1; n <= hi; ++n) {
    const auto &mn = out.minus[n], &pn = out.plus[n], &cn1 = out.mid[n + 1];
    const auto &mr = out.minus[n - 1], &pr = out.plus[n - 1], &cr = out.mid[n];
    Matrix<F> d(ring, mr.size() + pr.size() + cr.size(), mn.size() + pn.size() + cn1.size());
    if (n - 1 >= c.lo()) {
      d.set_block(0, 0, band_matrix(c.d(n), mn, mr));
      d.set_block(mr.size(), mn.size(), band_matrix(c.d(n), pn, pr));
    }
    auto id = LaurentMatrix<F>::identity(ring, c.rank(n));
    d.set_block(mr.size() + pr.size(), 0, band_matrix(-id, mn, cr));
    d.set_block(mr.size() + pr.size(), mn.size(), band_matrix(id, pn, cr));
    if (n + 1 <= c.hi()) d.set_block(mr.size() + pr.size(), mn.size() + pn.size(), band_matrix(-c.d(n + 1), cn1, cr));
    out.complex.set_d(n, constant_matrix(d));
  }

  std::map<int, WindowLayout> ml = out.mid;
  out.sub = shift(windowed(c, ml), -1);
  out.quotient = direct_sum(windowed(c, out.minus), windowed(c, out.plus));
  return out;
}

// iota: H^0(P^1; C) -> hypercohomology, b -> (b, b, 0) on band elements.
template <Coefficient F>
ChainMap<F> iota(const SheafComplex<F>& sc, const WindowModel<F>& model) {
  auto w = h0_complex(sc, false).complex;
  ChainMap<F> f(w, model.complex);
  if (sc.mid().empty_support()) return f;
  const auto& ring = sc.ring();
  for (int n = sc.lo(); n <= sc.hi(); ++n) {
    const auto& tw = sc.profile()->at(n);
    auto band = band_layout(tw);
    LaurentMatrix<F> m(ring, model.complex.rank(n), w.rank(n));
    for (std::size_t i = 0; i < tw.size(); ++i) {
      for (int e = -tw[i].l; e <= tw[i].k; ++e) {
        auto col = band.index(i, e);
        m(model.minus.at(n).index(i, e), col) = LaurentPoly<F>::one(ring);
        m(model.minus.at(n).size() + model.plus.at(n).index(i, e), col) = LaurentPoly<F>::one(ring);
      }
    }
    f.set(n, std::move(m));
  }
  return f;
}

template <Coefficient F>
ChainMap<F> iota(const SheafComplex<F>& sc) {
  return iota(sc, hypercohomology(sc));
}

// A diagram M^- -> M <- M^+ of complexes over one ring, for instance
// (C = C = C). The structure maps are chain maps.
template <Coefficient F>
struct OneRingDiagram {
  ChainComplex<F> minus, mid, plus;
  ChainMap<F> mu_minus, mu_plus;

  static OneRingDiagram constant(const ChainComplex<F>& c) {
    return {c, c, c, ChainMap<F>::identity(c), ChainMap<F>::identity(c)};
  }

  std::vector<std::string> check() const {
    std::vector<std::string> out;
    if (minus.base() != mid.base() || plus.base() != mid.base()) out.push_back("constituents over different bases");
    for (const auto* c : {&minus, &mid, &plus}) {
      for (const auto& v : validate(*c)) out.push_back(v.detail);
    }
    if (!(mu_minus.source() == minus) || !(mu_minus.target() == mid)) out.push_back("mu^- has the wrong endpoints");
    if (!(mu_plus.source() == plus) || !(mu_plus.target() == mid)) out.push_back("mu^+ has the wrong endpoints");
    if (out.empty()) {
      if (!mu_minus.is_chain_map()) out.push_back("mu^- is not a chain map");
      if (!mu_plus.is_chain_map()) out.push_back("mu^+ is not a chain map");
    }
    return out;
  }
};

// H_n = M^-_n + M^+_n + M_{n+1} with (a^-, a^+, a) -> (d a^-, d a^+, -mu^- a^- + mu^+ a^+ - d a).
template <Coefficient F>
ChainComplex<F> hypercohomology(const OneRingDiagram<F>& dg) {
  auto problems = dg.check();
  if (!problems.empty()) throw ShapeError("diagram: " + problems.front());
  const auto& ring = dg.mid.ring();
  const Base base = dg.mid.base();
  auto [lo, hi] = support_union(dg.minus.lo(), dg.minus.hi(), dg.plus.lo(), dg.plus.hi());
  std::tie(lo, hi) = support_union(lo, hi, dg.mid.lo() - 1, dg.mid.hi() - 1);
  if (lo > hi) return ChainComplex<F>::zero(ring, base);
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(dg.minus.rank(n) + dg.plus.rank(n) + dg.mid.rank(n + 1));
  ChainComplex<F> h(ring, base, lo, ranks);
  for (int n = lo + 1; n <= hi; ++n) {
    const std::size_t am = dg.minus.rank(n - 1), ap = dg.plus.rank(n - 1);
    const std::size_t bm = dg.minus.rank(n), bp = dg.plus.rank(n);
    LaurentMatrix<F> d(ring, h.rank(n - 1), h.rank(n));
    d.set_block(0, 0, dg.minus.d(n));
    d.set_block(am, bm, dg.plus.d(n));
    d.set_block(am + ap, 0, -dg.mu_minus.at(n));
    d.set_block(am + ap, bm, dg.mu_plus.at(n));
    d.set_block(am + ap, bm + bp, -dg.mid.d(n + 1));
    h.set_d(n, std::move(d));
  }
  return h;
}

// Componentwise map of diagrams; phi commutes with the structure maps.
template <Coefficient F>
struct DiagramMap {
  OneRingDiagram<F> source, target;
  ChainMap<F> minus, mid, plus;

  bool commutes() const {
    if (!minus.is_chain_map() || !mid.is_chain_map() || !plus.is_chain_map()) return false;
    auto [lo, hi] = support_union(source.mid.lo(), source.mid.hi(), target.mid.lo(), target.mid.hi());
    for (int m = lo; m <= hi; ++m) {
      if (!(mid.at(m) * source.mu_minus.at(m) == target.mu_minus.at(m) * minus.at(m))) return false;
      if (!(mid.at(m) * source.mu_plus.at(m) == target.mu_plus.at(m) * plus.at(m))) return false;
    }
    return true;
  }
};

// phi_* = diag(phi^-_n, phi^+_n, phi_{n+1}) on the totalisations.
template <Coefficient F>
ChainMap<F> hyper_map(const DiagramMap<F>& phi) {
  auto hs = hypercohomology(phi.source);
  auto ht = hypercohomology(phi.target);
  ChainMap<F> f(hs, ht);
  auto [lo, hi] = support_union(hs.lo(), hs.hi(), ht.lo(), ht.hi());
  for (int n = lo; n <= hi; ++n) {
    LaurentMatrix<F> m(hs.ring(), ht.rank(n), hs.rank(n));
    m.set_block(0, 0, phi.minus.at(n));
    m.set_block(phi.target.minus.rank(n), phi.source.minus.rank(n), phi.plus.at(n));
    m.set_block(phi.target.minus.rank(n) + phi.target.plus.rank(n), phi.source.minus.rank(n) + phi.source.plus.rank(n),
                phi.mid.at(n + 1));
    f.set(n, std::move(m));
  }
  return f;
}

template <Coefficient F>
struct IotaResult {
  ChainComplex<F> h0;  // ker(-mu^- + mu^+) levelwise
  ChainMap<F> map;     // h0 -> hypercohomology
};

// iota for a diagram over K or K[x, x^-1]: levelwise kernels via Smith form.
template <Coefficient F>
IotaResult<F> iota(const OneRingDiagram<F>& dg) {
  const auto& ring = dg.mid.ring();
  const Base base = dg.mid.base();
  if (base != Base::laurent && base != Base::constant) {
    throw UnsupportedRingError("iota on one-ring diagrams needs K or K[x,x^-1]");
  }
  auto h = hypercohomology(dg);
  auto [lo, hi] = support_union(dg.minus.lo(), dg.minus.hi(), dg.plus.lo(), dg.plus.hi());
  if (lo > hi) {
    auto z = ChainComplex<F>::zero(ring, base);
    return {z, ChainMap<F>(z, h)};
  }
  std::map<int, SmithForm<F>> snf;
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) {
    auto a = hstack(-dg.mu_minus.at(n), dg.mu_plus.at(n));
    auto s = smith_normal_form(a);
    ranks.push_back(s.kernel_rank());
    snf.emplace(n, std::move(s));
  }
  ChainComplex<F> k(ring, base, lo, ranks);
  auto kernel = [&](int n) {
    const auto& s = snf.at(n);
    return s.V.block(0, s.rank(), s.cols, s.kernel_rank());
  };
  for (int n = lo + 1; n <= hi; ++n) {
    auto img = block_diagonal(dg.minus.d(n), dg.plus.d(n)) * kernel(n);
    const auto& s = snf.at(n - 1);
    auto coords = s.V_inv * img;
    if (!coords.block(0, 0, s.rank(), coords.cols()).is_zero()) {
      throw InvalidComplexError("differential does not preserve the levelwise kernel");
    }
    k.set_d(n, coords.block(s.rank(), 0, s.kernel_rank(), coords.cols()));
  }
  ChainMap<F> f(k, h);
  for (int n = lo; n <= hi; ++n) {
    LaurentMatrix<F> m(ring, h.rank(n), k.rank(n));
    m.set_block(0, 0, kernel(n));
    f.set(n, std::move(m));
  }
  return {std::move(k), std::move(f)};
}

// True iff 0 -> sub -> H -> quotient -> 0 is a degreewise short exact
// sequence of complexes for the block inclusion (last coordinates) and the
// block projection (first coordinates).
template <Coefficient F>
bool ses_check(const ChainComplex<F>& h, const ChainComplex<F>& sub, const ChainComplex<F>& quotient) {
  if (!is_valid(h) || !is_valid(sub) || !is_valid(quotient)) return false;
  auto [lo, hi] = support_union(h.lo(), h.hi(), sub.lo(), sub.hi());
  std::tie(lo, hi) = support_union(lo, hi, quotient.lo(), quotient.hi());
  for (int n = lo; n <= hi; ++n) {
    if (h.rank(n) != sub.rank(n) + quotient.rank(n)) return false;
  }
  const auto& ring = h.ring();
  ChainMap<F> inc(sub, h), proj(h, quotient);
  for (int n = lo; n <= hi; ++n) {
    LaurentMatrix<F> i(ring, h.rank(n), sub.rank(n));
    i.set_block(quotient.rank(n), 0, LaurentMatrix<F>::identity(ring, sub.rank(n)));
    LaurentMatrix<F> p(ring, quotient.rank(n), h.rank(n));
    p.set_block(0, 0, LaurentMatrix<F>::identity(ring, quotient.rank(n)));
    if (!(p * i).is_zero()) return false;
    if (laurent_rank(i) != sub.rank(n) || laurent_rank(p) != quotient.rank(n)) return false;
    inc.set(n, std::move(i));
    proj.set(n, std::move(p));
  }
  return inc.is_chain_map() && proj.is_chain_map();
}

template <Coefficient F>
bool ses_check(const OneRingDiagram<F>& dg, const ChainComplex<F>& h) {
  return ses_check(h, shift(dg.mid, -1), direct_sum(dg.minus, dg.plus));
}

template <Coefficient F>
bool ses_check(const OneRingDiagram<F>& dg) {
  return ses_check(dg, hypercohomology(dg));
}

template <Coefficient F>
bool ses_check(const WindowModel<F>& model) {
  return ses_check(model.complex, model.sub, model.quotient);
}

template <Coefficient F>
bool ses_check(const SheafComplex<F>& sc) {
  return ses_check(hypercohomology(sc));
}

}  // namespace p1dom

#endif  // P1DOM_COHOMOLOGY_HPP
