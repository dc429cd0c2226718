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

#ifndef P1DOM_EXTENSION_HPP
#define P1DOM_EXTENSION_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p1dom/complex.hpp"
#include "p1dom/errors.hpp"
#include "p1dom/matrix.hpp"
#include "p1dom/sheaf.hpp"

namespace p1dom {

// f extended to Z -> Y(k + l): target.mu^+ f^+ = f zeta^+ and
// target.mu^- f^- = f zeta^-, with f^+ over K[x] and f^- over K[x^-1].
template <Coefficient F>
struct MorphismExtension {
  int k = 0;
  int l = 0;
  LaurentMatrix<F> f_minus, f_plus;
  SheafDiagram<F> target;
};

// Smallest k, l >= 0 for which f extends. With G^+ = (upsilon^+)^-1 f zeta^+
// and G^- = (upsilon^-)^-1 f zeta^-, f^+ = x^l G^+ and f^- = x^-k G^-, so
// l = max(0, -mindeg G^+) and k = max(0, maxdeg G^-). For sums of twists
// this is l = max(0, l^Z_i - l^Y_j - mindeg f_ji) and
// k = max(0, maxdeg f_ji + k^Z_i - k^Y_j) over the nonzero entries.
template <Coefficient F>
MorphismExtension<F> extend_morphism(const SheafDiagram<F>& z, const SheafDiagram<F>& y, const LaurentMatrix<F>& f) {
  if (f.rows() != y.rank() || f.cols() != z.rank()) {
    throw ShapeError("morphism must be " + std::to_string(y.rank()) + "x" + std::to_string(z.rank()) + ", got " + f.shape());
  }
  LaurentMatrix<F> gp, gm;
  try {
    gp = inverse(y.mu_plus()) * f * z.mu_plus();
    gm = inverse(y.mu_minus()) * f * z.mu_minus();
  } catch (const NotAUnitError&) {
    throw UnsupportedDiagramError("target structure maps are not injective");
  }
  MorphismExtension<F> out{0, 0, {}, {}, y};
  out.l = std::max(0, -gp.mindeg().value_or(0));
  out.k = std::max(0, gm.maxdeg().value_or(0));
  out.f_plus = gp.shifted(out.l);
  out.f_minus = gm.shifted(-out.k);
  out.target = y.twisted(out.k, out.l);
  if (!(out.target.mu_plus() * out.f_plus == f * z.mu_plus()) ||
      !(out.target.mu_minus() * out.f_minus == f * z.mu_minus()) || !out.f_plus.respects(Base::polynomial) ||
      !out.f_minus.respects(Base::inverse_polynomial)) {
    throw InvalidComplexError("morphism extension failed its commutativity check");
  }
  return out;
}

// Whether (k, l) is enough for f to extend; the brute-force side of the
// minimality claim.
template <Coefficient F>
bool extends_with(const SheafDiagram<F>& z, const SheafDiagram<F>& y, const LaurentMatrix<F>& f, int k, int l) {
  auto gp = inverse(y.mu_plus()) * f * z.mu_plus();
  auto gm = inverse(y.mu_minus()) * f * z.mu_minus();
  return gp.shifted(l).respects(Base::polynomial) && gm.shifted(-k).respects(Base::inverse_polynomial);
}

template <Coefficient F>
struct ExtensionResult {
  SheafComplex<F> sheaf;
  TwistProfile profile;
  // Per degree, the identification of the restriction with the input.
  std::map<int, LaurentMatrix<F>> iso;
};

// Downward induction from the top degree, seeded with O(0) there:
// k_{m-1} = max(0, k_m + maxdeg d(m)), l_{m-1} = max(0, l_m - mindeg d(m)).
// A zero d(m) leaves (k, l) unchanged.
template <Coefficient F>
TwistProfile extension_profile(const ChainComplex<F>& c) {
  TwistProfile p;
  if (c.empty_support()) return p;
  int k = 0, l = 0;
  p.set_uniform(c.hi(), c.rank(c.hi()), {0, 0});
  for (int m = c.hi(); m > c.lo(); --m) {
    auto d = c.d(m);
    if (!d.is_zero()) {
      k = std::max(0, k + *d.maxdeg());
      l = std::max(0, l - *d.mindeg());
    }
    p.set_uniform(m - 1, c.rank(m - 1), {k, l});
  }
  return p;
}

template <Coefficient F>
ExtensionResult<F> extend_complex(const ChainComplex<F>& c) {
  if (c.base() != Base::laurent) throw InvalidComplexError("extend_complex expects a complex over K[x,x^-1]");
  auto problems = validate(c);
  if (!problems.empty()) throw InvalidComplexError("extend_complex: " + problems.front().detail);
  auto profile = extension_profile(c);
  ExtensionResult<F> out{SheafComplex<F>::from_twists(c, profile), profile, {}};
  for (int m = c.lo(); m <= c.hi(); ++m) out.iso.emplace(m, LaurentMatrix<F>::identity(c.ring(), c.rank(m)));
  if (!(out.sheaf.mid() == c) || out.profile.min_n() < 0) {
    throw InvalidComplexError("extension failed its restriction check");
  }
  return out;
}

template <Coefficient F>
ChainComplex<F> restrict_to_torus(const SheafComplex<F>& v) {
  return v.mid();
}

template <Coefficient F>
struct ConeExtension {
  SheafComplex<F> cone;
  int k = 0;  // the twist applied to the second complex
  int l = 0;
  ChainMap<F> omega_minus, omega_plus;
};

// Extends omega: V1|T -> V2|T to V1 -> V2(k + l), with (k, l) the levelwise
// maxima from extend_morphism, and returns the levelwise mapping cone.
template <Coefficient F>
ConeExtension<F> extend_cone(const SheafComplex<F>& v1, const SheafComplex<F>& v2, const ChainMap<F>& omega) {
  if (!(omega.source() == v1.mid()) || !(omega.target() == v2.mid())) {
    throw ShapeError("omega must map the restriction of the first complex to that of the second");
  }
  if (!omega.is_chain_map()) throw InvalidComplexError("omega is not a chain map");
  auto [lo, hi] = omega.support();
  int k = 0, l = 0;
  for (int m = lo; m <= hi; ++m) {
    if (v1.mid().rank(m) == 0 || v2.mid().rank(m) == 0) continue;
    auto e = extend_morphism(v1.level(m), v2.level(m), omega.at(m));
    k = std::max(k, e.k);
    l = std::max(l, e.l);
  }
  auto v2t = v2.twisted(k, l);
  ChainMap<F> om(v1.minus(), v2t.minus()), op(v1.plus(), v2t.plus());
  for (int m = lo; m <= hi; ++m) {
    if (v1.mid().rank(m) == 0 || v2.mid().rank(m) == 0) continue;
    auto fm = inverse(v2t.mu_minus(m)) * omega.at(m) * v1.mu_minus(m);
    auto fp = inverse(v2t.mu_plus(m)) * omega.at(m) * v1.mu_plus(m);
    if (!fm.respects(Base::inverse_polynomial) || !fp.respects(Base::polynomial)) {
      throw InvalidComplexError("levelwise extension of omega is not legal at degree " + std::to_string(m));
    }
    om.set(m, std::move(fm));
    op.set(m, std::move(fp));
  }
  if (!om.is_chain_map() || !op.is_chain_map()) {
    throw InvalidComplexError("extension of omega does not commute with the differentials");
  }
  auto cm = cone(om), cc = cone(omega), cp = cone(op);
  std::map<int, LaurentMatrix<F>> mm, mp;
  std::optional<TwistProfile> prof;
  if (v1.is_twist_sum() && v2t.is_twist_sum()) prof = TwistProfile{};
  const auto& cx = cc.complex;
  for (int m = cx.lo(); m <= cx.hi(); ++m) {
    mm.emplace(m, block_diagonal(v2t.mu_minus(m), v1.mu_minus(m - 1)));
    mp.emplace(m, block_diagonal(v2t.mu_plus(m), v1.mu_plus(m - 1)));
    if (prof) {
      auto t = v2t.profile()->at(m);
      const auto& s = v1.profile()->at(m - 1);
      t.insert(t.end(), s.begin(), s.end());
      prof->set(m, std::move(t));
    }
  }
  return {SheafComplex<F>(cm.complex, cx, cp.complex, std::move(mm), std::move(mp), std::move(prof)), k, l, om, op};
}

}  // namespace p1dom

#endif  // P1DOM_EXTENSION_HPP
