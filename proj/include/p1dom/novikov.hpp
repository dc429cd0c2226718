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

#ifndef P1DOM_NOVIKOV_HPP
#define P1DOM_NOVIKOV_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "p1dom/complex.hpp"
#include "p1dom/series.hpp"

namespace p1dom {

enum class Acyclicity { yes, no, unknown };
enum class NovikovMethod { snf_torsion, unit_determinant, truncated_contraction };

inline std::string to_string(Acyclicity a) {
  switch (a) {
    case Acyclicity::yes: return "yes";
    case Acyclicity::no: return "no";
    case Acyclicity::unknown: return "unknown";
  }
  return "?";
}

inline std::string to_string(NovikovMethod m) {
  switch (m) {
    case NovikovMethod::snf_torsion: return "snf-torsion";
    case NovikovMethod::unit_determinant: return "unit-determinant";
    case NovikovMethod::truncated_contraction: return "truncated-contraction";
  }
  return "?";
}

template <Coefficient F>
struct SideVerdict {
  SeriesRing ring = SeriesRing::laurent_x;
  Acyclicity acyclic = Acyclicity::unknown;
  NovikovMethod method = NovikovMethod::snf_torsion;
  std::vector<LaurentPoly<F>> invariant_factors;     // snf-torsion
  std::optional<LaurentPoly<F>> determinant;          // unit-determinant
  std::optional<TruncatedSeries<F>> series_inverse;   // unit-determinant, "yes"
  std::size_t order = 0;                              // truncation order used
  std::size_t eliminations = 0;                       // truncated-contraction
  std::string reason;

  bool has_certificate() const {
    switch (method) {
      case NovikovMethod::snf_torsion: return true;
      case NovikovMethod::unit_determinant: return series_inverse.has_value();
      case NovikovMethod::truncated_contraction: return order > 0;
    }
    return false;
  }
};

template <Coefficient F>
struct NovikovVerdict {
  SideVerdict<F> x_side;    // C (x) K((x))
  SideVerdict<F> inv_side;  // C (x) K((x^-1))
  std::optional<HomologyReport<F>> homology;  // field mode

  bool both_acyclic() const { return x_side.acyclic == Acyclicity::yes && inv_side.acyclic == Acyclicity::yes; }
};

namespace detail {

template <Coefficient F>
using SeriesMatrix = std::vector<std::vector<TruncatedSeries<F>>>;

// Gaussian elimination of unit entries over K((t)), or Z((t)), on entries
// known to order n. Each elimination is a homotopy equivalence; precision
// only affects which entries can be recognised as units or exact zeros.
template <Coefficient F>
SideVerdict<F> truncated_contraction(const ChainComplex<F>& c, SeriesRing sring, std::size_t n) {
  SideVerdict<F> v;
  v.ring = sring;
  v.method = NovikovMethod::truncated_contraction;
  v.order = n;
  if (c.empty_support()) {
    v.acyclic = Acyclicity::yes;
    return v;
  }
  const int lo = c.lo(), hi = c.hi();
  std::vector<std::size_t> rank;
  std::vector<SeriesMatrix<F>> d;  // d[m - lo] : C_m -> C_{m-1}, [row][col]
  for (int m = lo; m <= hi; ++m) {
    rank.push_back(c.rank(m));
    auto dm = c.d(m);
    SeriesMatrix<F> s(dm.rows());
    for (std::size_t i = 0; i < dm.rows(); ++i) {
      for (std::size_t j = 0; j < dm.cols(); ++j) s[i].push_back(TruncatedSeries<F>::from_laurent(dm(i, j), sring, n));
    }
    d.push_back(std::move(s));
  }
  auto drop_row = [](SeriesMatrix<F>& m, std::size_t i) { m.erase(m.begin() + static_cast<std::ptrdiff_t>(i)); };
  auto drop_col = [](SeriesMatrix<F>& m, std::size_t j) {
    for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
  };
  for (bool progress = true; progress;) {
    progress = false;
    for (int m = lo + 1; m <= hi && !progress; ++m) {
      auto& dm = d[static_cast<std::size_t>(m - lo)];
      for (std::size_t i = 0; i < dm.size() && !progress; ++i) {
        for (std::size_t j = 0; j < dm[i].size() && !progress; ++j) {
          if (!dm[i][j].is_unit()) continue;
          const auto p_inv = series_invert(dm[i][j]);
          SeriesMatrix<F> next;
          for (std::size_t a = 0; a < dm.size(); ++a) {
            if (a == i) continue;
            std::vector<TruncatedSeries<F>> row;
            const auto f = dm[a][j] * p_inv;
            for (std::size_t b = 0; b < dm[a].size(); ++b) {
              if (b == j) continue;
              row.push_back(f.is_exact_zero() ? dm[a][b] : dm[a][b] - f * dm[i][b]);
            }
            next.push_back(std::move(row));
          }
          // rows of next follow C_{m-1} minus generator i, columns C_m minus j
          dm = std::move(next);
          if (m - lo + 1 < static_cast<int>(d.size())) drop_row(d[static_cast<std::size_t>(m - lo + 1)], j);
          drop_col(d[static_cast<std::size_t>(m - 1 - lo)], i);
          --rank[static_cast<std::size_t>(m - lo)];
          --rank[static_cast<std::size_t>(m - 1 - lo)];
          ++v.eliminations;
          progress = true;
        }
      }
    }
  }
  bool all_zero = true;
  for (auto r : rank) all_zero = all_zero && r == 0;
  if (all_zero) {
    v.acyclic = Acyclicity::yes;
    v.reason = "fully contracted after " + std::to_string(v.eliminations) + " eliminations";
    return v;
  }
  auto exact_zero = [](const SeriesMatrix<F>& m) {
    for (const auto& row : m) {
      for (const auto& e : row) {
        if (!e.is_exact_zero()) return false;
      }
    }
    return true;
  };
  for (int m = lo; m <= hi; ++m) {
    std::size_t k = static_cast<std::size_t>(m - lo);
    if (rank[k] == 0) continue;
    bool in_zero = k + 1 >= d.size() || exact_zero(d[k + 1]);
    bool out_zero = exact_zero(d[k]);
    if (in_zero && out_zero) {
      v.acyclic = Acyclicity::no;
      v.reason = "H_" + std::to_string(m) + " contains a free summand of rank " + std::to_string(rank[k]);
      return v;
    }
  }
  v.acyclic = Acyclicity::unknown;
  v.reason = "no unit pivot left at order " + std::to_string(n);
  return v;
}

template <Coefficient F>
SideVerdict<F> determinant_side(const LaurentPoly<F>& det, SeriesRing sring, std::size_t n) {
  using T = scalar_traits<F>;
  SideVerdict<F> v;
  v.ring = sring;
  v.method = NovikovMethod::unit_determinant;
  v.determinant = det;
  v.order = n;
  if (det.is_zero()) {
    v.acyclic = Acyclicity::no;
    v.reason = "determinant is zero";
    return v;
  }
  const F& c = is_inverse_variable(sring) ? det.leading_coeff() : det.lowest_coeff();
  if (!T::is_unit(c)) {
    v.acyclic = Acyclicity::no;
    v.reason = std::string(is_inverse_variable(sring) ? "top" : "lowest") + " coefficient " + T::to_string(c) +
               " of the determinant is not a unit";
    return v;
  }
  v.acyclic = Acyclicity::yes;
  v.series_inverse = series_invert(TruncatedSeries<F>::from_laurent(det, sring, n));
  v.reason = "determinant is a unit in " + series_ring_name(sring);
  return v;
}

}  // namespace detail

// Acyclicity of C (x) K((x)) and C (x) K((x^-1)). Over a field both are
// equivalent to torsion homology. Over Z two-term square complexes are
// decided through the determinant and longer ones by truncated contraction.
template <Coefficient F>
NovikovVerdict<F> novikov_check(const ChainComplex<F>& c, std::size_t order = 16) {
  if (c.base() != Base::laurent) throw UnsupportedRingError("Novikov check expects a complex over K[x,x^-1]");
  NovikovVerdict<F> out;
  out.x_side.ring = SeriesRing::laurent_x;
  out.inv_side.ring = SeriesRing::laurent_inv_x;
  if constexpr (is_field_v<F>) {
    auto h = homology(c);
    SideVerdict<F> s;
    s.method = NovikovMethod::snf_torsion;
    s.acyclic = h.torsion_only() ? Acyclicity::yes : Acyclicity::no;
    for (const auto& g : h.groups) {
      s.invariant_factors.insert(s.invariant_factors.end(), g.torsion.begin(), g.torsion.end());
      if (g.free_rank > 0 && s.reason.empty()) {
        s.reason = "H_" + std::to_string(g.degree) + " has free rank " + std::to_string(g.free_rank);
      }
    }
    if (s.reason.empty()) s.reason = "all homology is torsion";
    out.x_side = s;
    out.x_side.ring = SeriesRing::laurent_x;
    out.inv_side = s;
    out.inv_side.ring = SeriesRing::laurent_inv_x;
    out.homology = std::move(h);
    return out;
  } else {
    std::vector<int> nonzero;
    for (int m = c.lo(); m <= c.hi(); ++m) {
      if (c.rank(m) > 0) nonzero.push_back(m);
    }
    if (nonzero.size() == 2 && nonzero[0] + 1 == nonzero[1] && c.rank(nonzero[0]) == c.rank(nonzero[1])) {
      auto det = determinant(c.d(nonzero[1]));
      out.x_side = detail::determinant_side(det, SeriesRing::laurent_x, order);
      out.inv_side = detail::determinant_side(det, SeriesRing::laurent_inv_x, order);
      return out;
    }
    if (euler_characteristic(c) != 0) {
      for (auto* s : {&out.x_side, &out.inv_side}) {
        s->method = NovikovMethod::truncated_contraction;
        s->acyclic = Acyclicity::no;
        s->reason = "nonzero Euler characteristic";
      }
      return out;
    }
    out.x_side = detail::truncated_contraction(c, SeriesRing::laurent_x, order);
    out.inv_side = detail::truncated_contraction(c, SeriesRing::laurent_inv_x, order);
    return out;
  }
}

}  // namespace p1dom

#endif  // P1DOM_NOVIKOV_HPP
