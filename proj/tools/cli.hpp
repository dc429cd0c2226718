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

#ifndef P1DOM_TOOLS_CLI_HPP
#define P1DOM_TOOLS_CLI_HPP

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "p1dom.hpp"

namespace p1dom::cli {

enum ExitCode { kOk = 0, kMathFail = 1, kInputError = 2 };

// Bad invocation or unreadable input; maps to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::optional<RingDescriptor> ring;
  std::size_t trunc = 16;
  std::size_t trunc_max = 64;
  std::string out;
  bool report = false;
  std::uint64_t seed = 1;
  int twist_n = 0;
  std::size_t twist_r = 1;
  std::optional<int> split;
  std::size_t selftest_cases = 10;

  TruncationConfig truncation() const { return {trunc, trunc_max}; }
};

struct Outcome {
  int code = kOk;
  std::string status = "OK";
  json result = json::object();
  std::vector<std::string> lines;
  std::optional<std::string> emitted;  // a complex or sheaf file

  void say(std::string s) { lines.push_back(std::move(s)); }
  void fail(std::string status_word = "FAIL") {
    code = kMathFail;
    status = std::move(status_word);
  }
};

// "Q", "Z", "GF:p" (or the file spelling "GF(p)").
inline RingDescriptor parse_ring_flag(const std::string& s) {
  if (s.rfind("GF:", 0) == 0) {
    try {
      return parse_ring_name("GF(" + s.substr(3) + ")", "--ring");
    } catch (const ParseError& e) {
      throw InputError(e.what());
    }
  }
  try {
    return parse_ring_name(s, "--ring");
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

template <class T>
struct coefficient_of;
template <Coefficient F>
struct coefficient_of<ChainComplex<F>> {
  using type = F;
  static constexpr bool sheaf = false;
};
template <Coefficient F>
struct coefficient_of<SheafComplex<F>> {
  using type = F;
  static constexpr bool sheaf = true;
};

template <Coefficient F>
json ranks_json(const ChainComplex<F>& c) {
  json a = json::array();
  for (int m = c.lo(); m <= c.hi(); ++m) a.push_back(json{{"degree", m}, {"rank", c.rank(m)}});
  return a;
}

template <Coefficient F>
std::string ranks_text(const ChainComplex<F>& c) {
  std::string s = "(";
  for (int m = c.lo(); m <= c.hi(); ++m) s += (m == c.lo() ? "" : ",") + std::to_string(c.rank(m));
  return s + ")";
}

template <Coefficient F>
json polys_json(const std::vector<LaurentPoly<F>>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

template <Coefficient F>
std::string polys_text(const std::vector<LaurentPoly<F>>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
  return "[" + s + "]";
}

inline json dims_json(const std::map<int, std::size_t>& d) {
  json a = json::array();
  for (const auto& [q, v] : d) a.push_back(json{{"degree", q}, {"dim", v}});
  return a;
}

inline std::string dims_text(const std::map<int, std::size_t>& d) {
  std::string s;
  for (const auto& [q, v] : d) s += (s.empty() ? "" : " ") + ("H_" + std::to_string(q) + "=" + std::to_string(v));
  return s.empty() ? "(none)" : s;
}

// Columns of a matrix as lists of entries.
template <Coefficient F>
json columns_json(const LaurentMatrix<F>& m) {
  json a = json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    json col = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m(i, j).to_string());
    a.push_back(std::move(col));
  }
  return a;
}

template <Coefficient F>
std::string columns_text(const LaurentMatrix<F>& m) {
  std::string s;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::string col;
    for (std::size_t i = 0; i < m.rows(); ++i) col += (i ? ", " : "") + m(i, j).to_string();
    s += (j ? "; " : "") + (m.rows() == 1 ? col : "(" + col + ")");
  }
  return s.empty() ? "(empty)" : s;
}

template <Coefficient F>
json homology_json(const HomologyReport<F>& h) {
  json a = json::array();
  for (const auto& g : h.groups) {
    json e{{"degree", g.degree}, {"free_rank", g.free_rank}, {"torsion", polys_json(g.torsion)}};
    e["k_dimension"] = g.k_dimension ? json(*g.k_dimension) : json(nullptr);
    a.push_back(std::move(e));
  }
  return a;
}

template <Coefficient F>
void homology_lines(const HomologyReport<F>& h, Outcome& o) {
  for (const auto& g : h.groups) {
    std::string dim = g.k_dimension ? std::to_string(*g.k_dimension) : "infinite";
    o.say("H_" + std::to_string(g.degree) + ": free rank " + std::to_string(g.free_rank) + ", torsion " +
          polys_text(g.torsion) + ", dim_K " + dim);
  }
}

template <Coefficient F>
json side_json(const SideVerdict<F>& s) {
  json j{{"acyclic", to_string(s.acyclic)}, {"method", to_string(s.method)}, {"order", s.order}};
  if (!s.invariant_factors.empty()) j["invariant_factors"] = polys_json(s.invariant_factors);
  if (s.determinant) j["determinant"] = s.determinant->to_string();
  if (s.series_inverse) j["series_inverse"] = s.series_inverse->to_string();
  if (s.method == NovikovMethod::truncated_contraction) j["eliminations"] = s.eliminations;
  j["reason"] = s.reason;
  return j;
}

template <Coefficient F>
void side_lines(const std::string& name, const SideVerdict<F>& s, Outcome& o) {
  std::string line = name + ": " + to_string(s.acyclic) + " (" + to_string(s.method) + ")";
  if (!s.reason.empty()) line += " " + s.reason;
  o.say(line);
  if (s.series_inverse) {
    o.say("  certificate: series inverse " + s.series_inverse->to_string() + " to order " + std::to_string(s.order));
  }
}

template <Coefficient F>
void require_field(const char* what) {
  if constexpr (!is_field_v<F>) {
    throw UnsupportedRingError(std::string(what) + " needs field coefficients (Q or GF:p)");
  }
}

template <Coefficient F>
SheafComplex<F> as_sheaf(const ChainComplex<F>& c) {
  return extend_complex(c).sheaf;
}
template <Coefficient F>
SheafComplex<F> as_sheaf(const SheafComplex<F>& s) {
  return s;
}

template <Coefficient F>
const ChainComplex<F>& as_complex(const ChainComplex<F>& c) {
  return c;
}
template <Coefficient F>
const ChainComplex<F>& as_complex(const SheafComplex<F>& s) {
  return s.mid();
}

template <class T>
Outcome cmd_validate(const T& x) {
  Outcome o;
  const auto& c = as_complex(x);
  auto v = validate(c);
  json vs = json::array();
  for (const auto& e : v) vs.push_back(json{{"degree", e.degree}, {"detail", e.detail}});
  o.result["kind"] = coefficient_of<T>::sheaf ? "sheaf-complex" : "complex";
  o.result["base"] = base_name(c.base());
  o.result["ranks"] = ranks_json(c);
  o.result["valid"] = v.empty();
  o.result["violations"] = std::move(vs);
  o.say(std::string(coefficient_of<T>::sheaf ? "sheaf complex" : "complex") + " over " + base_name(c.base()) +
        ", ranks " + ranks_text(c));
  if (v.empty()) {
    o.say("valid");
  } else {
    for (const auto& e : v) o.say("violation: " + e.detail);
    o.fail("INVALID");
  }
  return o;
}

template <class T>
Outcome cmd_homology(const T& x) {
  using F = typename coefficient_of<T>::type;
  require_field<F>("homology");
  Outcome o;
  if constexpr (is_field_v<F>) {
    auto h = homology(as_complex(x));
    o.result["base"] = base_name(h.base);
    o.result["groups"] = homology_json(h);
    o.result["acyclic"] = h.acyclic();
    o.result["torsion_only"] = h.torsion_only();
    homology_lines(h, o);
    if (h.groups.empty()) o.say("zero complex");
  }
  return o;
}

template <class T>
Outcome cmd_novikov(const T& x, const RunConfig& cfg) {
  Outcome o;
  auto v = novikov_check(as_complex(x), cfg.trunc);
  o.result["x_side"] = side_json(v.x_side);
  o.result["inv_side"] = side_json(v.inv_side);
  o.result["both_acyclic"] = v.both_acyclic();
  side_lines("x-side", v.x_side, o);
  side_lines("x^-1-side", v.inv_side, o);
  if (!v.both_acyclic()) o.fail();
  return o;
}

inline json profile_json(const TwistProfile& p) {
  json a = json::array();
  for (const auto& [m, ts] : p.levels()) {
    json t = json::array();
    for (const auto& s : ts) t.push_back(json{{"k", s.k}, {"l", s.l}});
    a.push_back(json{{"degree", m}, {"twists", std::move(t)}});
  }
  return a;
}

inline std::string profile_text(const TwistProfile& p) {
  std::string s;
  for (const auto& [m, ts] : p.levels()) {
    std::string lv;
    auto u = p.uniform(m);
    if (u) {
      lv = "O(" + std::to_string(u->k) + "," + std::to_string(u->l) + ")^" + std::to_string(ts.size());
    } else {
      for (const auto& t : ts) lv += (lv.empty() ? "" : "+") + ("O(" + std::to_string(t.k) + "," + std::to_string(t.l) + ")");
    }
    s += (s.empty() ? "" : "  ") + std::to_string(m) + ": " + lv;
  }
  return s;
}

template <class T>
Outcome cmd_extend(const T& x) {
  using F = typename coefficient_of<T>::type;
  Outcome o;
  if constexpr (coefficient_of<T>::sheaf) {
    throw InputError("extend expects a chain complex file, not a sheaf complex");
  } else {
    auto e = extend_complex(x);
    o.result["profile"] = profile_json(e.profile);
    o.result["min_twist"] = e.profile.levels().empty() ? 0 : e.profile.min_n();
    o.result["restriction_matches"] = restrict_to_torus(e.sheaf) == x;
    o.say("twists (k,l) per degree: " + profile_text(e.profile));
    o.say(std::string("restriction to the torus equals the input: ") +
          (restrict_to_torus(e.sheaf) == x ? "yes" : "no"));
    o.emitted = serialize(e.sheaf);
    (void)sizeof(F);
  }
  return o;
}

template <class T>
Outcome cmd_h0(const T& x) {
  using F = typename coefficient_of<T>::type;
  require_field<F>("h0");
  Outcome o;
  if constexpr (is_field_v<F>) {
    auto sc = as_sheaf(x);
    auto h = h0_complex(sc, false);
    bool h1_zero = true;
    for (const auto& [m, v] : h.h1_dims) h1_zero = h1_zero && v == 0;
    o.result["ranks"] = ranks_json(h.complex);
    o.result["h1_dims"] = dims_json(h.h1_dims);
    o.result["levelwise_h1_zero"] = h1_zero;
    o.result["homology"] = dims_json(k_homology_dimensions(h.complex));
    o.say("H^0 complex ranks " + ranks_text(h.complex));
    std::string h1;
    for (const auto& [m, v] : h.h1_dims) h1 += (h1.empty() ? "" : " ") + std::to_string(m) + ":" + std::to_string(v);
    o.say("levelwise dim H^1: " + (h1.empty() ? std::string("(none)") : h1));
    o.say("homology: " + dims_text(k_homology_dimensions(h.complex)));
  }
  return o;
}

template <class T>
Outcome cmd_hyper(const T& x) {
  using F = typename coefficient_of<T>::type;
  require_field<F>("hyper");
  Outcome o;
  if constexpr (is_field_v<F>) {
    auto sc = as_sheaf(x);
    auto model = hypercohomology(sc);
    bool h1_zero = true;
    for (int m = sc.lo(); m <= sc.hi(); ++m) h1_zero = h1_zero && cech_cohomology(sc.level(m)).h1_dim == 0;
    bool ses = ses_check(model);
    auto dims = k_homology_dimensions(model.complex);
    bool qi = is_quasi_isomorphism(iota(sc, model));
    o.result["ranks"] = ranks_json(model.complex);
    o.result["homology"] = dims_json(dims);
    o.result["ses"] = ses;
    o.result["levelwise_h1_zero"] = h1_zero;
    o.result["iota_quasi_isomorphism"] = qi;
    o.say("hypercohomology model ranks " + ranks_text(model.complex));
    o.say("homology: " + dims_text(dims));
    o.say(std::string("short exact sequence: ") + (ses ? "ok" : "BROKEN"));
    o.say(std::string("levelwise H^1 = 0: ") + (h1_zero ? "yes" : "no"));
    o.say(std::string("iota quasi-isomorphism: ") + (qi ? "yes" : "no"));
    if (!ses) o.fail();
  }
  return o;
}

inline json ledger_json(const std::vector<LedgerRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    a.push_back(json{{"degree", r.degree},
                     {"w", r.w_dim},
                     {"c", r.c_dim},
                     {"plus", r.plus_dim},
                     {"minus", r.minus_dim},
                     {"holds", r.holds()}});
  }
  return a;
}

inline void ledger_lines(const std::vector<LedgerRow>& rows, Outcome& o) {
  for (const auto& r : rows) {
    o.say("ledger " + std::to_string(r.degree) + ": " + std::to_string(r.w_dim) + " = " + std::to_string(r.c_dim) +
          " + " + std::to_string(r.plus_dim) + " + " + std::to_string(r.minus_dim) + (r.holds() ? "" : "  MISMATCH"));
  }
}

inline json series_json(const SeriesHomology& s) {
  return json{{"dims", dims_json(s.dims)}, {"order", s.order}, {"stabilised", s.stabilised}, {"heuristic", s.heuristic}};
}

template <Coefficient F>
void witness_result(const DominationWitness<F>& w, Outcome& o) {
  auto wd = k_homology_dimensions(w.w);
  o.result["w_ranks"] = ranks_json(w.w);
  o.result["w"] = to_json(w.w);
  o.result["w_homology"] = dims_json(wd);
  o.result["twists"] = profile_json(w.extension.profile);
  o.result["ledger"] = ledger_json(w.ledger);
  o.result["plus_series"] = series_json(w.plus);
  o.result["minus_series"] = series_json(w.minus);
  o.say("W ranks " + ranks_text(w.w));
  for (const auto& [q, v] : wd) o.say("H_" + std::to_string(q) + "(W) = K^" + std::to_string(v));
  ledger_lines(w.ledger, o);
  o.say("series stabilised at orders " + std::to_string(w.plus.order) + "," + std::to_string(w.minus.order) +
        " (heuristic)");
}

template <class T>
Outcome cmd_dominate(const T& x, const RunConfig& cfg) {
  using F = typename coefficient_of<T>::type;
  require_field<F>("dominate");
  Outcome o;
  if constexpr (is_field_v<F>) {
    if constexpr (coefficient_of<T>::sheaf) throw InputError("dominate expects a chain complex file");
    else {
      try {
        auto w = dominate(x, cfg.truncation());
        witness_result(w, o);
        o.emitted = serialize(w.w);
        if (!w.ledger_holds()) o.fail();
      } catch (const NotNovikovAcyclic& e) {
        o.result["novikov_hypothesis"] = false;
        o.result["reason"] = e.what();
        o.say(std::string("Novikov hypothesis fails: ") + e.what());
        o.fail();
      }
    }
  }
  return o;
}

template <class T>
Outcome cmd_verify(const T& x, const RunConfig& cfg) {
  Outcome o;
  if constexpr (coefficient_of<T>::sheaf) {
    throw InputError("verify expects a chain complex file");
  } else {
    auto rep = verify_theorem(x, cfg.truncation());
    o.say(std::string("verify: ") + (rep.pass ? "PASS" : "FAIL"));
    json checks = json::array();
    for (const auto& c : rep.checks) {
      checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      o.say(std::string(c.pass ? "  ok   " : "  FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail));
    }
    o.result["pass"] = rep.pass;
    o.result["checks"] = std::move(checks);
    o.result["x_side"] = side_json(rep.verdict.x_side);
    o.result["inv_side"] = side_json(rep.verdict.inv_side);
    if (rep.verdict.homology) {
      o.result["homology"] = homology_json(*rep.verdict.homology);
      homology_lines(*rep.verdict.homology, o);
    }
    if constexpr (is_field_v<typename coefficient_of<T>::type>) {
      if (rep.witness) witness_result(*rep.witness, o);
    }
    o.status = rep.pass ? "PASS" : "FAIL";
    o.code = rep.pass ? kOk : kMathFail;
  }
  return o;
}

template <Coefficient F>
Outcome cmd_twist_cohomology(const ring_t<F>& ring, const RunConfig& cfg) {
  if (cfg.twist_r == 0 || cfg.twist_r > 64) throw InputError("twist-cohomology needs 1 <= r <= 64");
  int k = cfg.split ? *cfg.split : std::max(cfg.twist_n, 0);
  auto dg = twisting_sheaf<F>(ring, cfg.twist_n, k, cfg.twist_r);
  auto coh = cech_cohomology(dg);
  Outcome o;
  o.result["n"] = cfg.twist_n;
  o.result["r"] = cfg.twist_r;
  o.result["k"] = k;
  o.result["l"] = cfg.twist_n - k;
  o.result["h0_dim"] = coh.h0_dim;
  o.result["h1_dim"] = coh.h1_dim;
  o.result["h0_basis"] = columns_json(coh.h0_basis);
  o.result["h1_basis"] = columns_json(coh.h1_representatives);
  o.say("O(" + std::to_string(cfg.twist_n) + ")^" + std::to_string(cfg.twist_r) + " split as k=" + std::to_string(k) +
        ", l=" + std::to_string(cfg.twist_n - k));
  o.say("dim H^0 = " + std::to_string(coh.h0_dim));
  o.say("dim H^1 = " + std::to_string(coh.h1_dim));
  o.say("H^0 basis: " + columns_text(coh.h0_basis));
  o.say("H^1 basis: " + columns_text(coh.h1_representatives));
  return o;
}

template <class Fn>
decltype(auto) with_ring(const RingDescriptor& d, Fn&& fn) {
  switch (d.kind) {
    case RingKind::prime_field: return fn.template operator()<ModP>(ring_from<ModP>(d));
    case RingKind::integer: return fn.template operator()<mpz_class>(ring_from<mpz_class>(d));
    case RingKind::rational: break;
  }
  return fn.template operator()<mpq_class>(ring_from<mpq_class>(d));
}

Outcome run_selftest(const RunConfig& cfg);

inline Outcome dispatch_file(const RunConfig& cfg, const std::string& text, std::string& ring) {
  auto file = load(text);
  ring = file.ring.name();
  if (cfg.ring && !(*cfg.ring == file.ring)) {
    throw InputError("--ring " + cfg.ring->name() + " does not match the file ring " + file.ring.name());
  }
  const auto& cmd = cfg.subcommand;
  auto run = [&](const auto& x) -> Outcome {
    if (cmd == "validate") return cmd_validate(x);
    auto problems = validate(as_complex(x));
    if (!problems.empty()) throw InputError("invalid complex: " + problems.front().detail);
    if (cmd == "homology") return cmd_homology(x);
    if (cmd == "novikov") return cmd_novikov(x, cfg);
    if (cmd == "extend") return cmd_extend(x);
    if (cmd == "h0") return cmd_h0(x);
    if (cmd == "hyper") return cmd_hyper(x);
    if (cmd == "dominate") return cmd_dominate(x, cfg);
    if (cmd == "verify") return cmd_verify(x, cfg);
    throw InputError("unknown subcommand '" + cmd + "'");
  };
  return std::visit([&](const auto& any) { return std::visit(run, any); }, file.value);
}

inline json envelope(const RunConfig& cfg, const std::vector<std::string>& digests, const std::string& ring,
                     const Outcome& o) {
  json j;
  j["tool"] = "p1dom";
  j["report_version"] = 1;
  j["command"] = cfg.subcommand;
  j["inputs"] = digests;
  j["ring"] = ring;
  j["config"] = json{{"trunc", cfg.trunc}, {"trunc_max", cfg.trunc_max}, {"seed", cfg.seed}};
  j["status"] = o.status;
  j["exit_code"] = o.code;
  j["result"] = o.result;
  return j;
}

inline Outcome error_outcome(std::ostream& err, int code, const std::string& message) {
  err << "error: " << message << "\n";
  Outcome o;
  o.code = code;
  o.status = code == kInputError ? "ERROR" : "FAIL";
  o.result = json{{"message", message}};
  return o;
}

// Runs one configured command; `out` gets the report or human text.
inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> digests;
  std::string ring = cfg.ring ? cfg.ring->name() : "";
  Outcome o;
  try {
    if (cfg.trunc == 0 || cfg.trunc > cfg.trunc_max) throw InputError("need 1 <= --trunc <= --trunc-max");
    if (cfg.subcommand == "twist-cohomology") {
      RingDescriptor d = cfg.ring.value_or(RingDescriptor{});
      ring = d.name();
      o = with_ring(d, [&]<class F>(const ring_t<F>& r) { return cmd_twist_cohomology<F>(r, cfg); });
    } else if (cfg.subcommand == "selftest") {
      o = run_selftest(cfg);
    } else {
      if (cfg.inputs.size() != 1) throw InputError(cfg.subcommand + " takes exactly one input file");
      std::string text = read_file(cfg.inputs.front());
      digests.push_back(digest_string(text));
      o = dispatch_file(cfg, text, ring);
    }
  } catch (const ParseError& e) {
    if (!cfg.inputs.empty()) err << cfg.inputs.front() << ": ";
    o = error_outcome(err, kInputError, e.what());
    o.result["where"] = e.where();
  } catch (const InputError& e) {
    o = error_outcome(err, kInputError, e.what());
  } catch (const UnsupportedRingError& e) {
    o = error_outcome(err, kInputError, e.what());
  } catch (const InvalidComplexError& e) {
    o = error_outcome(err, kInputError, e.what());
  } catch (const UnsupportedDiagramError& e) {
    o = error_outcome(err, kInputError, e.what());
  } catch (const Error& e) {
    o = error_outcome(err, kMathFail, e.what());
  }

  if (o.emitted && cfg.subcommand == "extend" && cfg.out.empty()) {
    out << *o.emitted;
    return o.code;
  }
  if (o.emitted && !cfg.out.empty()) {
    try {
      write_file(cfg.out, *o.emitted);
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }
  if (cfg.report) {
    out << dump_canonical(envelope(cfg, digests, ring, o));
  } else {
    for (const auto& l : o.lines) out << l << "\n";
  }
  return o.code;
}

// Parses argv and runs; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact chain complexes over K[x,x^-1] and their extensions to the projective line"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string ring_flag, format = "human";
  app.add_option("--ring", ring_flag, "coefficient ring: Q, GF:p or Z")->envname("P1DOM_RING");
  app.add_option("--trunc", cfg.trunc, "series truncation order N")->envname("P1DOM_TRUNC");
  app.add_option("--trunc-max", cfg.trunc_max, "largest truncation order tried")->envname("P1DOM_TRUNC_MAX");
  app.add_option("--seed", cfg.seed, "random seed for property runs")->envname("P1DOM_SEED");
  app.add_option("--format", format, "human or report")
      ->check(CLI::IsMember({"human", "report"}))
      ->envname("P1DOM_FORMAT");
  app.add_option("--out", cfg.out, "where emitted complex files go")->envname("P1DOM_OUT");

  const std::vector<std::pair<const char*, const char*>> file_cmds = {
      {"validate", "check shapes, d^2 = 0 and base constraints"},
      {"homology", "homology over K[x,x^-1] (fields only)"},
      {"novikov", "acyclicity over K((x)) and K((x^-1))"},
      {"extend", "extend a complex to a sum-of-twists sheaf complex"},
      {"h0", "the complex of global sections"},
      {"hyper", "hypercohomology model and the comparison map"},
      {"dominate", "domination witness W and the dimension ledger"},
      {"verify", "full theorem check with PASS/FAIL"},
  };
  for (const auto& [name, help] : file_cmds) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", cfg.inputs, "input file")->required();
  }
  auto* twist = app.add_subcommand("twist-cohomology", "Cech cohomology of r copies of O(n)");
  twist->fallthrough();
  twist->add_option("n", cfg.twist_n, "twist")->required();
  twist->add_option("r", cfg.twist_r, "rank")->required();
  int split = 0;
  auto* split_opt = twist->add_option("--split", split, "k in n = k + l (default max(n, 0))");
  auto* self = app.add_subcommand("selftest", "embedded examples and reduced property suites");
  self->fallthrough();
  self->add_option("--cases", cfg.selftest_cases, "cases per property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (*split_opt) cfg.split = split;
  cfg.report = format == "report";
  if (!ring_flag.empty()) {
    try {
      cfg.ring = parse_ring_flag(ring_flag);
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }
  return execute(cfg, out, err);
}

}  // namespace p1dom::cli

#include "selftest.hpp"

#endif  // P1DOM_TOOLS_CLI_HPP
