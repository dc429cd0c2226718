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

#ifndef P1DOM_SHEAF_HPP
#define P1DOM_SHEAF_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "p1dom/complex.hpp"
#include "p1dom/errors.hpp"
#include "p1dom/matrix.hpp"

namespace p1dom {

// Splitting n = k + l of one copy of O(n): mu^- = x^k, mu^+ = x^-l.
struct Twist {
  int k = 0;
  int l = 0;
  int n() const noexcept { return k + l; }
  friend bool operator==(const Twist&, const Twist&) = default;
};

// Per degree, one Twist per summand of that level.
class TwistProfile {
 public:
  TwistProfile() = default;

  void set(int m, std::vector<Twist> t) {
    if (t.empty()) {
      levels_.erase(m);
    } else {
      levels_[m] = std::move(t);
    }
  }
  void set_uniform(int m, std::size_t rank, Twist t) { set(m, std::vector<Twist>(rank, t)); }

  const std::vector<Twist>& at(int m) const {
    static const std::vector<Twist> kEmpty;
    auto it = levels_.find(m);
    return it == levels_.end() ? kEmpty : it->second;
  }

  // The common twist of level m, if all summands agree.
  std::optional<Twist> uniform(int m) const {
    const auto& t = at(m);
    if (t.empty()) return std::nullopt;
    for (const auto& s : t) {
      if (!(s == t.front())) return std::nullopt;
    }
    return t.front();
  }

  const std::map<int, std::vector<Twist>>& levels() const noexcept { return levels_; }

  int min_n() const {
    int r = 0;
    bool first = true;
    for (const auto& [m, ts] : levels_) {
      for (const auto& t : ts) {
        r = first ? t.n() : std::min(r, t.n());
        first = false;
      }
    }
    return r;
  }

  bool h1_vanishes() const { return levels_.empty() || min_n() >= -1; }

  TwistProfile twisted(int dk, int dl) const {
    TwistProfile r = *this;
    for (auto& [m, ts] : r.levels_) {
      for (auto& t : ts) {
        t.k += dk;
        t.l += dl;
      }
    }
    return r;
  }

  friend bool operator==(const TwistProfile&, const TwistProfile&) = default;

 private:
  std::map<int, std::vector<Twist>> levels_;
};

template <Coefficient F>
LaurentMatrix<F> monomial_diagonal(const ring_t<F>& ring, const std::vector<int>& exps) {
  LaurentMatrix<F> m(ring, exps.size(), exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m(i, i) = LaurentPoly<F>::x_power(ring, exps[i]);
  return m;
}

inline std::vector<int> twist_k(const std::vector<Twist>& t) {
  std::vector<int> r;
  for (const auto& s : t) r.push_back(s.k);
  return r;
}
inline std::vector<int> twist_minus_l(const std::vector<Twist>& t) {
  std::vector<int> r;
  for (const auto& s : t) r.push_back(-s.l);
  return r;
}

// True iff a is square with determinant c x^n, c a unit.
template <Coefficient F>
bool is_laurent_isomorphism(const LaurentMatrix<F>& a) {
  return a.is_square() && determinant(a).is_unit();
}

// M^- --mu^-(x)--> M <--mu^+-- M^+ with free constituents of equal rank r.
// mu^- is applied to K[x^-1]-coordinates and mu^+ to K[x]-coordinates; both
// are written as Laurent matrices in the basis of M.
template <Coefficient F>
class SheafDiagram {
 public:
  using Matrix = LaurentMatrix<F>;

  SheafDiagram(Matrix mu_minus, Matrix mu_plus, std::optional<std::vector<Twist>> twists = std::nullopt)
      : mu_minus_(std::move(mu_minus)), mu_plus_(std::move(mu_plus)), twists_(std::move(twists)) {
    if (!is_laurent_isomorphism(mu_minus_) || !is_laurent_isomorphism(mu_plus_)) {
      throw InvalidComplexError("structure maps must be square with unit determinant over K[x,x^-1]");
    }
    if (mu_minus_.rows() != mu_plus_.rows()) throw ShapeError("structure maps of different rank");
    if (twists_) {
      const auto& ring = mu_minus_.ring();
      if (twists_->size() != rank() || !(mu_minus_ == monomial_diagonal<F>(ring, twist_k(*twists_))) ||
          !(mu_plus_ == monomial_diagonal<F>(ring, twist_minus_l(*twists_)))) {
        throw InvalidComplexError("twist data does not match the structure maps");
      }
    }
  }

  static SheafDiagram from_twists(const ring_t<F>& ring, const std::vector<Twist>& t) {
    return SheafDiagram(monomial_diagonal<F>(ring, twist_k(t)), monomial_diagonal<F>(ring, twist_minus_l(t)), t);
  }

  std::size_t rank() const noexcept { return mu_minus_.rows(); }
  const ring_t<F>& ring() const noexcept { return mu_minus_.ring(); }
  const Matrix& mu_minus() const noexcept { return mu_minus_; }
  const Matrix& mu_plus() const noexcept { return mu_plus_; }
  const std::optional<std::vector<Twist>>& twists() const noexcept { return twists_; }
  bool is_twist_sum() const noexcept { return twists_.has_value(); }

  // The twist by (dk, dl): mu^- scaled by x^dk, mu^+ by x^-dl.
  SheafDiagram twisted(int dk, int dl) const {
    std::optional<std::vector<Twist>> t = twists_;
    if (t) {
      for (auto& s : *t) {
        s.k += dk;
        s.l += dl;
      }
    }
    return SheafDiagram(mu_minus_.shifted(dk), mu_plus_.shifted(-dl), std::move(t));
  }

  friend bool operator==(const SheafDiagram& a, const SheafDiagram& b) {
    return a.mu_minus_ == b.mu_minus_ && a.mu_plus_ == b.mu_plus_ && a.twists_ == b.twists_;
  }

 private:
  Matrix mu_minus_, mu_plus_;
  std::optional<std::vector<Twist>> twists_;
};

// r copies of O(n) split as k + (n - k).
template <Coefficient F>
SheafDiagram<F> twisting_sheaf(const ring_t<F>& ring, int n, int k, std::size_t r) {
  return SheafDiagram<F>::from_twists(ring, std::vector<Twist>(r, Twist{k, n - k}));
}

template <Coefficient F>
SheafDiagram<F> direct_sum(const SheafDiagram<F>& a, const SheafDiagram<F>& b) {
  std::optional<std::vector<Twist>> t;
  if (a.twists() && b.twists()) {
    t = *a.twists();
    t->insert(t->end(), b.twists()->begin(), b.twists()->end());
  }
  return SheafDiagram<F>(block_diagonal(a.mu_minus(), b.mu_minus()), block_diagonal(a.mu_plus(), b.mu_plus()),
                         std::move(t));
}

// A complex of sheaves C^- -> C <- C^+: C^- over K[x^-1], C over K[x,x^-1],
// C^+ over K[x], with structure maps forming a SheafDiagram in every degree
// and commuting with the differentials.
template <Coefficient F>
class SheafComplex {
 public:
  using Matrix = LaurentMatrix<F>;

  SheafComplex(ChainComplex<F> minus, ChainComplex<F> mid, ChainComplex<F> plus, std::map<int, Matrix> mu_minus,
               std::map<int, Matrix> mu_plus, std::optional<TwistProfile> profile = std::nullopt)
      : minus_(std::move(minus)),
        mid_(std::move(mid)),
        plus_(std::move(plus)),
        mu_minus_(std::move(mu_minus)),
        mu_plus_(std::move(mu_plus)),
        profile_(std::move(profile)) {
    auto problems = check();
    if (!problems.empty()) throw InvalidComplexError("invalid sheaf complex: " + problems.front());
  }

  // The sum-of-twists complex with middle `mid` and the given profile:
  // C^-(m) = x^-k D x^k', C^+(m) = x^l D x^-l' on each entry.
  static SheafComplex from_twists(const ChainComplex<F>& mid, const TwistProfile& profile) {
    if (mid.base() != Base::laurent) throw InvalidComplexError("middle complex must be over K[x,x^-1]");
    ChainComplex<F> minus = mid.with_base(Base::inverse_polynomial);
    ChainComplex<F> plus = mid.with_base(Base::polynomial);
    std::map<int, Matrix> mm, mp;
    for (int m = mid.lo(); m <= mid.hi(); ++m) {
      const auto& t = profile.at(m);
      if (t.size() != mid.rank(m)) {
        throw InvalidComplexError("twist profile at degree " + std::to_string(m) + " lists " + std::to_string(t.size()) +
                                  " summands, level has rank " + std::to_string(mid.rank(m)));
      }
      mm.emplace(m, monomial_diagonal<F>(mid.ring(), twist_k(t)));
      mp.emplace(m, monomial_diagonal<F>(mid.ring(), twist_minus_l(t)));
    }
    for (int m = mid.lo() + 1; m <= mid.hi(); ++m) {
      const auto& src = profile.at(m);
      const auto& tgt = profile.at(m - 1);
      std::vector<int> kr, kc, lr, lc;
      for (const auto& s : tgt) {
        kr.push_back(-s.k);
        lr.push_back(s.l);
      }
      for (const auto& s : src) {
        kc.push_back(s.k);
        lc.push_back(-s.l);
      }
      minus.set_d(m, mid.d(m).conjugated(kr, kc));
      plus.set_d(m, mid.d(m).conjugated(lr, lc));
    }
    return SheafComplex(std::move(minus), mid, std::move(plus), std::move(mm), std::move(mp), profile);
  }

  const ChainComplex<F>& minus() const noexcept { return minus_; }
  const ChainComplex<F>& mid() const noexcept { return mid_; }
  const ChainComplex<F>& plus() const noexcept { return plus_; }
  const ring_t<F>& ring() const noexcept { return mid_.ring(); }
  int lo() const noexcept { return mid_.lo(); }
  int hi() const noexcept { return mid_.hi(); }
  const std::optional<TwistProfile>& profile() const noexcept { return profile_; }
  bool is_twist_sum() const noexcept { return profile_.has_value(); }

  Matrix mu_minus(int m) const { return lookup(mu_minus_, m); }
  Matrix mu_plus(int m) const { return lookup(mu_plus_, m); }

  SheafDiagram<F> level(int m) const {
    std::optional<std::vector<Twist>> t;
    if (profile_) t = profile_->at(m);
    return SheafDiagram<F>(mu_minus(m), mu_plus(m), std::move(t));
  }

  ChainMap<F> mu_minus_map() const { return as_map(minus_, mu_minus_); }
  ChainMap<F> mu_plus_map() const { return as_map(plus_, mu_plus_); }

  // The twist by (dk, dl) in every degree. The differentials are unchanged.
  SheafComplex twisted(int dk, int dl) const {
    std::map<int, Matrix> mm, mp;
    for (const auto& [m, a] : mu_minus_) mm.emplace(m, a.shifted(dk));
    for (const auto& [m, a] : mu_plus_) mp.emplace(m, a.shifted(-dl));
    std::optional<TwistProfile> p;
    if (profile_) p = profile_->twisted(dk, dl);
    return SheafComplex(minus_, mid_, plus_, std::move(mm), std::move(mp), std::move(p));
  }

  std::vector<std::string> check() const {
    std::vector<std::string> out;
    if (minus_.base() != Base::inverse_polynomial) out.push_back("C^- must be over K[x^-1]");
    if (mid_.base() != Base::laurent) out.push_back("C must be over K[x,x^-1]");
    if (plus_.base() != Base::polynomial) out.push_back("C^+ must be over K[x]");
    if (!(minus_.ring() == mid_.ring()) || !(plus_.ring() == mid_.ring())) out.push_back("constituents over different rings");
    if (!out.empty()) return out;
    for (const auto* c : {&minus_, &mid_, &plus_}) {
      for (const auto& v : validate(*c)) out.push_back(v.detail);
    }
    auto [lo, hi] = support_union(minus_.lo(), minus_.hi(), mid_.lo(), mid_.hi());
    std::tie(lo, hi) = support_union(lo, hi, plus_.lo(), plus_.hi());
    for (int m = lo; m <= hi; ++m) {
      std::string deg = " at degree " + std::to_string(m);
      std::size_t r = mid_.rank(m);
      if (minus_.rank(m) != r || plus_.rank(m) != r) {
        out.push_back("ranks differ" + deg);
        continue;
      }
      Matrix a = mu_minus(m), b = mu_plus(m);
      if (a.rows() != r || a.cols() != r || b.rows() != r || b.cols() != r) {
        out.push_back("structure map shape" + deg);
        continue;
      }
      if (!is_laurent_isomorphism(a) || !is_laurent_isomorphism(b)) out.push_back("structure map not invertible" + deg);
      if (profile_) {
        const auto& t = profile_->at(m);
        if (t.size() != r) {
          out.push_back("twist profile size" + deg);
        } else if (!(a == monomial_diagonal<F>(ring(), twist_k(t))) ||
                   !(b == monomial_diagonal<F>(ring(), twist_minus_l(t)))) {
          out.push_back("twist profile disagrees with structure maps" + deg);
        }
      }
    }
    if (!out.empty()) return out;
    for (int m : mu_minus_map().commutation_failures()) out.push_back("mu^- not a chain map at degree " + std::to_string(m));
    for (int m : mu_plus_map().commutation_failures()) out.push_back("mu^+ not a chain map at degree " + std::to_string(m));
    return out;
  }

  friend bool operator==(const SheafComplex& a, const SheafComplex& b) {
    if (!(a.minus_ == b.minus_ && a.mid_ == b.mid_ && a.plus_ == b.plus_ && a.profile_ == b.profile_)) return false;
    for (int m = a.lo(); m <= a.hi(); ++m) {
      if (!(a.mu_minus(m) == b.mu_minus(m)) || !(a.mu_plus(m) == b.mu_plus(m))) return false;
    }
    return true;
  }

 private:
  Matrix lookup(const std::map<int, Matrix>& mp, int m) const {
    auto it = mp.find(m);
    if (it != mp.end()) return it->second;
    return Matrix(mid_.ring(), mid_.rank(m), mid_.rank(m));
  }

  ChainMap<F> as_map(const ChainComplex<F>& src, const std::map<int, Matrix>& mp) const {
    ChainMap<F> f(src, mid_);
    for (const auto& [m, a] : mp) f.set(m, a);
    return f;
  }

  ChainComplex<F> minus_, mid_, plus_;
  std::map<int, Matrix> mu_minus_, mu_plus_;
  std::optional<TwistProfile> profile_;
};

// Single-level sheaf complex: the diagram `d` placed in degree m.
template <Coefficient F>
SheafComplex<F> one_level(const SheafDiagram<F>& d, int m = 0) {
  if (!d.is_twist_sum()) throw UnsupportedDiagramError("one_level expects a sum of twisting sheaves");
  ChainComplex<F> mid(d.ring(), Base::laurent, m, {d.rank()});
  TwistProfile p;
  p.set(m, *d.twists());
  return SheafComplex<F>::from_twists(mid, p);
}

}  // namespace p1dom

#endif  // P1DOM_SHEAF_HPP
