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

#ifndef P1DOM_COMPLEX_HPP
#define P1DOM_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p1dom/errors.hpp"
#include "p1dom/linalg.hpp"
#include "p1dom/matrix.hpp"
#include "p1dom/smith.hpp"

namespace p1dom {

// Bounded chain complex of finitely generated free modules over `base`,
// homologically indexed: d(m) maps degree m to degree m - 1 and is a
// rank(m - 1) x rank(m) matrix. Ranks outside [lo, hi] are zero; an empty
// support has lo > hi.
template <Coefficient F>
class ChainComplex {
 public:
  using Matrix = LaurentMatrix<F>;
  using ring_type = ring_t<F>;

  ChainComplex() = default;

  // Zero complex with the given support and ranks; differentials start at 0.
  ChainComplex(const ring_type& ring, Base base, int lo, std::vector<std::size_t> ranks)
      : ring_(ring), base_(base), lo_(lo), ranks_(std::move(ranks)) {
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      int m = lo_ + static_cast<int>(i);
      diffs_.emplace_back(ring_, rank(m - 1), rank(m));
    }
  }

  static ChainComplex zero(const ring_type& ring, Base base) { return ChainComplex(ring, base, 0, {}); }

  const ring_type& ring() const noexcept { return ring_; }
  Base base() const noexcept { return base_; }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool empty_support() const noexcept { return ranks_.empty(); }
  bool in_support(int m) const noexcept { return m >= lo_ && m <= hi(); }

  std::size_t rank(int m) const {
    return in_support(m) ? ranks_[static_cast<std::size_t>(m - lo_)] : 0;
  }

  // d(m): C_m -> C_{m-1}; the zero matrix of the right shape off support.
  Matrix d(int m) const {
    if (in_support(m)) return diffs_[static_cast<std::size_t>(m - lo_)];
    return Matrix(ring_, rank(m - 1), rank(m));
  }

  void set_d(int m, Matrix mat) {
    if (!in_support(m)) {
      if (mat.rows() == rank(m - 1) && mat.cols() == rank(m) && mat.is_zero()) return;
      throw ShapeError("differential d(" + std::to_string(m) + ") outside the support");
    }
    if (mat.rows() != rank(m - 1) || mat.cols() != rank(m)) {
      throw ShapeError("d(" + std::to_string(m) + ") must be " + std::to_string(rank(m - 1)) + "x" +
                       std::to_string(rank(m)) + ", got " + mat.shape());
    }
    diffs_[static_cast<std::size_t>(m - lo_)] = std::move(mat);
  }

  ChainComplex with_base(Base b) const {
    ChainComplex c = *this;
    c.base_ = b;
    return c;
  }

  std::size_t total_rank() const {
    std::size_t s = 0;
    for (auto r : ranks_) s += r;
    return s;
  }

  bool is_zero() const {
    return std::all_of(ranks_.begin(), ranks_.end(), [](std::size_t r) { return r == 0; });
  }

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    if (a.base_ != b.base_ || !(a.ring_ == b.ring_)) return false;
    if (a.empty_support() || b.empty_support()) return a.empty_support() == b.empty_support();
    return a.lo_ == b.lo_ && a.ranks_ == b.ranks_ && a.diffs_ == b.diffs_;
  }

 private:
  [[no_unique_address]] ring_type ring_{};
  Base base_ = Base::laurent;
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> diffs_;
};

// Degreewise union of two supports.
inline std::pair<int, int> support_union(int lo1, int hi1, int lo2, int hi2) {
  if (lo1 > hi1) return {lo2, hi2};
  if (lo2 > hi2) return {lo1, hi1};
  return {std::min(lo1, lo2), std::max(hi1, hi2)};
}

struct Violation {
  enum class Kind { nonzero_square, base_constraint };
  Kind kind;
  int degree;
  std::string detail;
};

// Every degree m with d(m-1) d(m) != 0 and every exponent-constraint breach.
template <Coefficient F>
std::vector<Violation> validate(const ChainComplex<F>& c) {
  std::vector<Violation> out;
  if (c.empty_support()) return out;
  for (int m = c.lo(); m <= c.hi(); ++m) {
    if (!c.d(m).respects(c.base())) {
      out.push_back({Violation::Kind::base_constraint, m, "d(" + std::to_string(m) + ") is not a " + base_name(c.base()) + "-matrix"});
    }
  }
  for (int m = c.lo() + 1; m <= c.hi(); ++m) {
    if (!(c.d(m - 1) * c.d(m)).is_zero()) {
      out.push_back({Violation::Kind::nonzero_square, m, "d(" + std::to_string(m - 1) + ") d(" + std::to_string(m) + ") != 0"});
    }
  }
  return out;
}

template <Coefficient F>
bool is_valid(const ChainComplex<F>& c) {
  return validate(c).empty();
}

// Chain map f: source -> target with components f(m): source_m -> target_m.
template <Coefficient F>
class ChainMap {
 public:
  using Matrix = LaurentMatrix<F>;

  ChainMap() = default;
  ChainMap(ChainComplex<F> source, ChainComplex<F> target)
      : source_(std::move(source)), target_(std::move(target)) {
    if (!(source_.ring() == target_.ring())) throw MixedRingError("chain map between complexes over different rings");
  }

  static ChainMap identity(const ChainComplex<F>& c) {
    ChainMap f(c, c);
    for (int m = c.lo(); m <= c.hi(); ++m) f.set(m, Matrix::identity(c.ring(), c.rank(m)));
    return f;
  }

  static ChainMap zero(const ChainComplex<F>& s, const ChainComplex<F>& t) { return ChainMap(s, t); }

  const ChainComplex<F>& source() const noexcept { return source_; }
  const ChainComplex<F>& target() const noexcept { return target_; }

  Matrix at(int m) const {
    auto it = comps_.find(m);
    if (it != comps_.end()) return it->second;
    return Matrix(source_.ring(), target_.rank(m), source_.rank(m));
  }

  void set(int m, Matrix mat) {
    if (mat.rows() != target_.rank(m) || mat.cols() != source_.rank(m)) {
      throw ShapeError("chain map component at degree " + std::to_string(m) + " must be " +
                       std::to_string(target_.rank(m)) + "x" + std::to_string(source_.rank(m)) + ", got " + mat.shape());
    }
    if (mat.rows() == 0 || mat.cols() == 0) return;
    comps_[m] = std::move(mat);
  }

  std::pair<int, int> support() const {
    return support_union(source_.lo(), source_.hi(), target_.lo(), target_.hi());
  }

  // Degrees m where f(m-1) d(m) != d(m) f(m).
  std::vector<int> commutation_failures() const {
    std::vector<int> bad;
    auto [lo, hi] = support();
    for (int m = lo; m <= hi + 1; ++m) {
      if (!(at(m - 1) * source_.d(m) == target_.d(m) * at(m))) bad.push_back(m);
    }
    return bad;
  }

  bool is_chain_map() const { return commutation_failures().empty(); }

 private:
  ChainComplex<F> source_, target_;
  std::map<int, Matrix> comps_;
};

template <Coefficient F>
ChainMap<F> compose(const ChainMap<F>& g, const ChainMap<F>& f) {
  if (!(f.target() == g.source())) throw ShapeError("compose: target of f is not the source of g");
  ChainMap<F> r(f.source(), g.target());
  auto [lo, hi] = support_union(f.source().lo(), f.source().hi(), g.target().lo(), g.target().hi());
  for (int m = lo; m <= hi; ++m) r.set(m, g.at(m) * f.at(m));
  return r;
}

template <Coefficient F>
ChainMap<F> subtract(const ChainMap<F>& a, const ChainMap<F>& b) {
  ChainMap<F> r(a.source(), a.target());
  auto [lo, hi] = a.support();
  for (int m = lo; m <= hi; ++m) r.set(m, a.at(m) - b.at(m));
  return r;
}

// Degree +1 maps h(m): C_m -> D_{m+1}.
template <Coefficient F>
class Homotopy {
 public:
  using Matrix = LaurentMatrix<F>;

  Homotopy() = default;
  Homotopy(ChainComplex<F> source, ChainComplex<F> target)
      : source_(std::move(source)), target_(std::move(target)) {}

  const ChainComplex<F>& source() const noexcept { return source_; }
  const ChainComplex<F>& target() const noexcept { return target_; }

  Matrix at(int m) const {
    auto it = comps_.find(m);
    if (it != comps_.end()) return it->second;
    return Matrix(source_.ring(), target_.rank(m + 1), source_.rank(m));
  }

  void set(int m, Matrix mat) {
    if (mat.rows() != target_.rank(m + 1) || mat.cols() != source_.rank(m)) {
      throw ShapeError("homotopy component at degree " + std::to_string(m) + " has shape " + mat.shape());
    }
    comps_[m] = std::move(mat);
  }

 private:
  ChainComplex<F> source_, target_;
  std::map<int, Matrix> comps_;
};

// Per-degree homology of a complex over K[x, x^-1] or K.
template <Coefficient F>
struct HomologyGroup {
  int degree = 0;
  std::size_t free_rank = 0;
  std::vector<LaurentPoly<F>> torsion;  // non-unit invariant factors
  // Dimension over K; nullopt when infinite (free rank > 0 over K[x, x^-1]).
  std::optional<std::size_t> k_dimension;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

template <Coefficient F>
struct HomologyReport {
  Base base = Base::laurent;
  std::vector<HomologyGroup<F>> groups;

  bool acyclic() const {
    return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.is_zero(); });
  }
  bool torsion_only() const {
    return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.free_rank == 0; });
  }
  const HomologyGroup<F>* at(int q) const {
    for (const auto& g : groups) {
      if (g.degree == q) return &g;
    }
    return nullptr;
  }
  std::size_t free_rank(int q) const { return at(q) ? at(q)->free_rank : 0; }
  std::optional<std::size_t> k_dimension(int q) const { return at(q) ? at(q)->k_dimension : std::size_t{0}; }
};

template <Coefficient F>
HomologyReport<F> homology(const ChainComplex<F>& c) {
  if constexpr (!is_field_v<F>) {
    throw UnsupportedRingError("homology needs field coefficients");
  } else {
    if (c.base() != Base::laurent && c.base() != Base::constant) {
      throw UnsupportedRingError("homology is computed over K or K[x,x^-1], not " + base_name(c.base()));
    }
    HomologyReport<F> rep;
    rep.base = c.base();
    if (c.empty_support()) return rep;
    std::map<int, SmithForm<F>> snf;
    for (int m = c.lo(); m <= c.hi() + 1; ++m) snf.emplace(m, smith_normal_form(c.d(m)));
    for (int q = c.lo(); q <= c.hi(); ++q) {
      HomologyGroup<F> g;
      g.degree = q;
      g.free_rank = c.rank(q) - snf.at(q).rank() - snf.at(q + 1).rank();
      g.torsion = snf.at(q + 1).torsion();
      if (g.free_rank == 0) {
        std::size_t dim = 0;
        for (const auto& t : g.torsion) dim += static_cast<std::size_t>(t.span());
        g.k_dimension = dim;
      } else if (c.base() == Base::constant) {
        g.k_dimension = g.free_rank;
      }
      rep.groups.push_back(std::move(g));
    }
    return rep;
  }
}

// Re-index by +n: shift(C, n)_m = C_{m-n}, differential multiplied by (-1)^n.
template <Coefficient F>
ChainComplex<F> shift(const ChainComplex<F>& c, int n) {
  if (c.empty_support()) return c;
  std::vector<std::size_t> ranks;
  for (int m = c.lo(); m <= c.hi(); ++m) ranks.push_back(c.rank(m));
  ChainComplex<F> s(c.ring(), c.base(), c.lo() + n, ranks);
  for (int m = c.lo(); m <= c.hi(); ++m) s.set_d(m + n, n % 2 ? -c.d(m) : c.d(m));
  return s;
}

template <Coefficient F>
ChainComplex<F> direct_sum(const ChainComplex<F>& a, const ChainComplex<F>& b) {
  if (!(a.ring() == b.ring())) throw MixedRingError("direct sum of complexes over different rings");
  if (a.base() != b.base()) throw MixedRingError("direct sum of complexes over different bases");
  auto [lo, hi] = support_union(a.lo(), a.hi(), b.lo(), b.hi());
  if (lo > hi) return a;
  std::vector<std::size_t> ranks;
  for (int m = lo; m <= hi; ++m) ranks.push_back(a.rank(m) + b.rank(m));
  ChainComplex<F> s(a.ring(), a.base(), lo, ranks);
  for (int m = lo; m <= hi; ++m) s.set_d(m, block_diagonal(a.d(m), b.d(m)));
  return s;
}

template <Coefficient F>
struct Cone {
  ChainComplex<F> complex;
  ChainMap<F> inclusion;   // target -> cone
  ChainMap<F> projection;  // cone -> shift(source, 1)
};

// cone(f)_m = target_m + source_{m-1}, d = [[d_target, f], [0, -d_source]].
template <Coefficient F>
Cone<F> cone(const ChainMap<F>& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  if (!(src.ring() == tgt.ring())) throw MixedRingError("cone of a map between different rings");
  auto [lo, hi] = support_union(tgt.lo(), tgt.hi(), src.lo() + 1, src.hi() + 1);
  Base base = tgt.empty_support() ? src.base() : tgt.base();
  if (lo > hi) {
    auto z = ChainComplex<F>::zero(src.ring(), base);
    return {z, ChainMap<F>(tgt, z), ChainMap<F>(z, shift(src, 1))};
  }
  std::vector<std::size_t> ranks;
  for (int m = lo; m <= hi; ++m) ranks.push_back(tgt.rank(m) + src.rank(m - 1));
  ChainComplex<F> c(src.ring(), base, lo, ranks);
  for (int m = lo; m <= hi; ++m) {
    LaurentMatrix<F> d(src.ring(), c.rank(m - 1), c.rank(m));
    d.set_block(0, 0, tgt.d(m));
    d.set_block(0, tgt.rank(m), f.at(m - 1));
    d.set_block(tgt.rank(m - 1), tgt.rank(m), -src.d(m - 1));
    c.set_d(m, std::move(d));
  }
  auto shifted = shift(src, 1);
  ChainMap<F> inc(tgt, c), proj(c, shifted);
  for (int m = lo; m <= hi; ++m) {
    LaurentMatrix<F> i(src.ring(), c.rank(m), tgt.rank(m));
    i.set_block(0, 0, LaurentMatrix<F>::identity(src.ring(), tgt.rank(m)));
    inc.set(m, std::move(i));
    LaurentMatrix<F> p(src.ring(), src.rank(m - 1), c.rank(m));
    p.set_block(0, tgt.rank(m), LaurentMatrix<F>::identity(src.ring(), src.rank(m - 1)));
    proj.set(m, std::move(p));
  }
  return {std::move(c), std::move(inc), std::move(proj)};
}

// Quasi-isomorphism test: the mapping cone is acyclic.
template <Coefficient F>
bool is_quasi_isomorphism(const ChainMap<F>& f) {
  return homology(cone(f).complex).acyclic();
}

// A K[x, x^-1]-complex viewed as a complex of K-modules (restriction of
// scalars). Ranks become infinite, so only homology dimensions are offered.
template <Coefficient F>
class RestrictedScalars {
 public:
  explicit RestrictedScalars(ChainComplex<F> c) : c_(std::move(c)) {
    if (c_.base() != Base::laurent) throw UnsupportedRingError("restriction of scalars expects a K[x,x^-1]-complex");
  }
  const ChainComplex<F>& underlying() const noexcept { return c_; }

  // dim_K H_q per degree; nullopt where infinite.
  std::map<int, std::optional<std::size_t>> homology_dimensions() const {
    std::map<int, std::optional<std::size_t>> out;
    for (const auto& g : homology(c_).groups) out[g.degree] = g.k_dimension;
    return out;
  }

  std::optional<std::size_t> total_dimension() const {
    std::size_t s = 0;
    for (const auto& [q, d] : homology_dimensions()) {
      if (!d) return std::nullopt;
      s += *d;
    }
    return s;
  }

 private:
  ChainComplex<F> c_;
};

template <Coefficient F>
RestrictedScalars<F> restrict_scalars_view(const ChainComplex<F>& c) {
  return RestrictedScalars<F>(c);
}

// r: D -> C, s: C -> D and h on C. True iff id - r s = d h + h d in every
// degree (the sign under which h(0) = x^-1 contracts the two-term x-complex).
template <Coefficient F>
bool verify_homotopy_retract(const ChainComplex<F>& d_complex, const ChainMap<F>& r, const ChainMap<F>& s,
                             const Homotopy<F>& h) {
  const ChainComplex<F>& c = s.source();
  if (!(r.source() == d_complex) || !(s.target() == d_complex) || !(r.target() == c)) {
    throw ShapeError("retract data: r must map D -> C and s must map C -> D");
  }
  if (!(h.source() == c) || !(h.target() == c)) throw ShapeError("homotopy must be a self-homotopy of C");
  if (!r.is_chain_map() || !s.is_chain_map()) return false;
  if (c.empty_support()) return true;
  for (int m = c.lo() - 1; m <= c.hi() + 1; ++m) {
    auto lhs = LaurentMatrix<F>::identity(c.ring(), c.rank(m)) - r.at(m) * s.at(m);
    auto rhs = c.d(m + 1) * h.at(m) + h.at(m - 1) * c.d(m);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// Complement C' with C + C' free. Free input needs none, so C' has the same
// support, rank 0 everywhere and zero differential.
template <Coefficient F>
ChainComplex<F> free_complement(const ChainComplex<F>& c) {
  if (c.empty_support()) return c;
  return ChainComplex<F>(c.ring(), c.base(), c.lo(), std::vector<std::size_t>(static_cast<std::size_t>(c.hi() - c.lo() + 1), 0));
}

// Sum_m (-1)^m rank(m).
template <Coefficient F>
long euler_characteristic(const ChainComplex<F>& c) {
  long e = 0;
  for (int m = c.lo(); m <= c.hi(); ++m) e += (m % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(m));
  return e;
}

// Constant K-matrix of a complex over K, as a dense scalar matrix.
template <Coefficient F>
Matrix<F> constant_part(const LaurentMatrix<F>& m) {
  Matrix<F> r(m.ring(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_constant()) throw ShapeError("entry " + m(i, j).to_string() + " is not a constant");
      r(i, j) = m(i, j).coeff(0);
    }
  }
  return r;
}

// dim_K H_q for a complex over K, by rank-nullity.
template <Coefficient F>
std::map<int, std::size_t> k_homology_dimensions(const ChainComplex<F>& c) {
  std::map<int, std::size_t> out;
  if (c.empty_support()) return out;
  std::map<int, std::size_t> rk;
  for (int m = c.lo(); m <= c.hi() + 1; ++m) rk[m] = rank(constant_part(c.d(m)));
  for (int q = c.lo(); q <= c.hi(); ++q) out[q] = c.rank(q) - rk[q] - rk[q + 1];
  return out;
}

}  // namespace p1dom

#endif  // P1DOM_COMPLEX_HPP
