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

#ifndef P1DOM_TOOLS_SELFTEST_HPP
#define P1DOM_TOOLS_SELFTEST_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "p1dom.hpp"

namespace p1dom::cli {

namespace selftest {

using Q = mpq_class;
using QP = LaurentPoly<Q>;

// C_1 -> C_0 with the single entry p.
template <Coefficient F>
ChainComplex<F> two_term(const LaurentPoly<F>& p) {
  ChainComplex<F> c(p.ring(), Base::laurent, 0, {1, 1});
  LaurentMatrix<F> d(p.ring(), 1, 1);
  d(0, 0) = p;
  c.set_d(1, d);
  return c;
}

inline QP x_minus_one() { return QP::x_power({}, 1) - QP::one({}); }

// Monomial columns x^a, ..., x^b of a rank-one sheaf.
inline bool monomial_run(const LaurentMatrix<Q>& basis, int a, int b) {
  if (basis.rows() != (b >= a ? 1u : basis.rows()) || basis.cols() != static_cast<std::size_t>(std::max(0, b - a + 1))) {
    return false;
  }
  for (int e = a; e <= b; ++e) {
    if (!(basis(0, static_cast<std::size_t>(e - a)) == QP::x_power({}, e))) return false;
  }
  return true;
}

inline bool twist_table() {
  for (int n = -8; n <= 8; ++n) {
    for (int k : {n, 0, n / 2}) {
      int l = n - k;
      auto coh = cech_cohomology(twisting_sheaf<Q>({}, n, k, 1));
      std::size_t h0 = n >= 0 ? static_cast<std::size_t>(n + 1) : 0;
      std::size_t h1 = n <= -2 ? static_cast<std::size_t>(-n - 1) : 0;
      if (coh.h0_dim != h0 || coh.h1_dim != h1) return false;
      if (!monomial_run(coh.h0_basis, -l, k) || !monomial_run(coh.h1_representatives, k + 1, -l - 1)) return false;
    }
  }
  return true;
}

inline bool x_minus_one_verify() {
  auto rep = verify_theorem(two_term(x_minus_one()));
  if (!rep.pass || !rep.witness) return false;
  const auto& w = rep.witness->w;
  auto dims = k_homology_dimensions(w);
  return w.lo() == 0 && w.hi() == 1 && w.rank(0) == 2 && w.rank(1) == 1 && dims[0] == 1 && dims[1] == 0 &&
         rep.witness->ledger_holds();
}

inline bool negative_control() {
  ChainComplex<Q> c({}, Base::laurent, 0, {1});
  auto rep = verify_theorem(c);
  return !rep.pass && !rep.checks.empty() && rep.checks.front().name == "novikov-hypothesis" &&
         !rep.checks.front().pass && rep.verdict.homology && rep.verdict.homology->free_rank(0) == 1;
}

inline bool integer_asymmetry() {
  using Z = mpz_class;
  auto p = LaurentPoly<Z>::constant({}, 2) - LaurentPoly<Z>::x_power({}, 1);
  auto v = novikov_check(two_term(p), 16);
  return v.x_side.acyclic == Acyclicity::no && v.inv_side.acyclic == Acyclicity::yes && v.inv_side.series_inverse &&
         v.inv_side.series_inverse->order() == 16;
}

inline bool o_minus_two_iota() {
  ChainComplex<Q> c({}, Base::laurent, 0, {1});
  TwistProfile p;
  p.set_uniform(0, 1, {0, -2});
  auto sc = SheafComplex<Q>::from_twists(c, p);
  return !is_quasi_isomorphism(iota(sc)) && ses_check(sc);
}

inline bool cone_extension() {
  ChainComplex<Q> c({}, Base::laurent, 0, {1});
  auto v = extend_complex(c).sheaf;
  ChainMap<Q> omega(c, c);
  omega.set(0, LaurentMatrix<Q>::identity({}, 1).scaled(x_minus_one()));
  auto ce = extend_cone(v, v, omega);
  auto restricted = restrict_to_torus(ce.cone);
  auto target = two_term(x_minus_one());
  if (!(restricted == target)) return false;
  return is_quasi_isomorphism(ChainMap<Q>::identity(target)) && ce.cone.check().empty();
}

template <Coefficient F>
bool properties(const ring_t<F>& ring, std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    auto dg = random_diagram<F>(ring, rng);
    if (!dg.check().empty() || !ses_check(dg)) return false;
    auto phi = random_quasi_isomorphism<F>(ring, rng);
    if (!phi.commutes() || !is_quasi_isomorphism(hyper_map(phi))) return false;
    auto sc = random_sheaf_complex<F>(ring, rng);
    if (!is_quasi_isomorphism(iota(sc))) return false;
    auto c = random_complex<F>(ring, rng);
    auto e = extend_complex(c);
    if (!(restrict_to_torus(e.sheaf) == c) || e.profile.min_n() < 0) return false;
    if (!(parse_sheaf_complex<F>(serialize(e.sheaf)) == e.sheaf)) return false;
    if (!(parse_complex<F>(serialize(c)) == c)) return false;
    auto a = random_complex<F>(ring, rng, {}, true);
    if (!verify_theorem(a).pass) return false;
  }
  return true;
}

}  // namespace selftest

inline Outcome run_selftest(const RunConfig& cfg) {
  Outcome o;
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"twist-cohomology-table", selftest::twist_table},
      {"verify-x-minus-1", selftest::x_minus_one_verify},
      {"negative-control-rank-one", selftest::negative_control},
      {"integer-asymmetry-2-minus-x", selftest::integer_asymmetry},
      {"iota-fails-for-o-minus-2", selftest::o_minus_two_iota},
      {"extend-cone-x-minus-1", selftest::cone_extension},
      {"properties-Q", [&] { return selftest::properties<mpq_class>({}, cfg.seed, cfg.selftest_cases); }},
      {"properties-GF(3)", [&] { return selftest::properties<ModP>(PrimeField(3), cfg.seed, cfg.selftest_cases); }},
  };
  json results = json::array();
  bool all = true;
  for (const auto& [name, fn] : checks) {
    bool ok = false;
    std::string note;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      note = e.what();
    }
    all = all && ok;
    json r{{"name", name}, {"pass", ok}};
    if (!note.empty()) r["error"] = note;
    results.push_back(std::move(r));
    o.say(std::string(ok ? "PASS " : "FAIL ") + name + (note.empty() ? "" : ": " + note));
  }
  o.result["cases"] = cfg.selftest_cases;
  o.result["checks"] = std::move(results);
  o.status = all ? "PASS" : "FAIL";
  o.code = all ? kOk : kMathFail;
  return o;
}

}  // namespace p1dom::cli

#endif  // P1DOM_TOOLS_SELFTEST_HPP
