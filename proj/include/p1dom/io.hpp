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

#ifndef P1DOM_IO_HPP
#define P1DOM_IO_HPP

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "p1dom/complex.hpp"
#include "p1dom/errors.hpp"
#include "p1dom/scalar.hpp"
#include "p1dom/sheaf.hpp"

namespace p1dom {

using json = nlohmann::ordered_json;

inline constexpr const char* kComplexFormat = "p1dom-complex";
inline constexpr const char* kSheafFormat = "p1dom-sheaf-complex";
inline constexpr int kFormatVersion = 1;

using AnyComplex = std::variant<ChainComplex<mpq_class>, ChainComplex<ModP>, ChainComplex<mpz_class>>;
using AnySheafComplex = std::variant<SheafComplex<mpq_class>, SheafComplex<ModP>, SheafComplex<mpz_class>>;

// Deterministic layout: containers holding only scalars go on one line,
// everything else gets one member per line.
inline bool flat_json(const json& j) {
  for (const auto& e : j) {
    if (e.is_object() || (j.is_object() && e.is_array())) return false;
  }
  return true;
}

inline void dump_canonical(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (flat_json(j)) {
      std::string line = "{";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) line += ", ";
        first = false;
        line += json(it.key()).dump() + ": " + it.value().dump();
      }
      out += line + "}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + json(it.key()).dump() + ": ";
      dump_canonical(it.value(), out, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    if (flat_json(j)) {
      out += j.dump();
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      dump_canonical(j[i], out, indent + 2);
    }
    out += "\n" + pad + "]";
  } else {
    out += j.dump();
  }
}

inline std::string dump_canonical(const json& j) {
  std::string out;
  dump_canonical(j, out, 0);
  out += "\n";
  return out;
}

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string digest_string(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

// "Q", "GF(p)" or "Z".
inline RingDescriptor parse_ring_name(const std::string& s, const std::string& where) {
  if (s == "Q") return {RingKind::rational, 0};
  if (s == "Z") return {RingKind::integer, 0};
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    std::string digits = s.substr(3, s.size() - 4);
    if (!digits.empty() && digits.size() <= 18 && digits.find_first_not_of("0123456789") == std::string::npos) {
      std::uint64_t p = std::stoull(digits);
      if (!detail::is_prime(p)) throw ParseError(where, "GF(p) needs a prime, got " + digits);
      return {RingKind::prime_field, p};
    }
  }
  throw ParseError(where, "unknown ring '" + s + "' (expected Q, GF(p) or Z)");
}

template <Coefficient F>
ring_t<F> ring_from(const RingDescriptor& d) {
  if constexpr (std::is_same_v<F, ModP>) {
    return PrimeField(d.modulus);
  } else {
    return {};
  }
}

template <Coefficient F>
json poly_to_json(const LaurentPoly<F>& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(json::array({e, scalar_traits<F>::to_string(c)}));
  return a;
}

template <Coefficient F>
json matrix_to_json(const LaurentMatrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Coefficient F>
json header_json(const char* format, const ring_t<F>& ring, Base base) {
  json j;
  j["format"] = format;
  j["version"] = kFormatVersion;
  j["ring"] = scalar_traits<F>::describe(ring).name();
  j["variable"] = "x";
  j["base"] = base_name(base);
  return j;
}

template <Coefficient F>
json differentials_json(const ChainComplex<F>& c) {
  json ds = json::array();
  for (int m = c.lo() + 1; m <= c.hi(); ++m) {
    json d;
    d["degree"] = m;
    d["matrix"] = matrix_to_json(c.d(m));
    ds.push_back(std::move(d));
  }
  return ds;
}

template <Coefficient F>
json complex_body(json j, const ChainComplex<F>& c) {
  json degs = json::array();
  for (int m = c.lo(); m <= c.hi(); ++m) degs.push_back(json{{"degree", m}, {"rank", c.rank(m)}});
  j["degrees"] = std::move(degs);
  j["differentials"] = differentials_json(c);
  return j;
}

template <Coefficient F>
json to_json(const ChainComplex<F>& c) {
  return complex_body(header_json<F>(kComplexFormat, c.ring(), c.base()), c);
}

template <Coefficient F>
json to_json(const SheafComplex<F>& s) {
  if (!s.is_twist_sum()) throw UnsupportedDiagramError("only sums of twisting sheaves can be written");
  json j = complex_body(header_json<F>(kSheafFormat, s.ring(), Base::laurent), s.mid());
  json tp = json::array();
  for (const auto& [m, ts] : s.profile()->levels()) {
    auto u = s.profile()->uniform(m);
    if (u) {
      tp.push_back(json{{"degree", m}, {"k", u->k}, {"l", u->l}});
    } else {
      for (const auto& t : ts) tp.push_back(json{{"degree", m}, {"k", t.k}, {"l", t.l}});
    }
  }
  j["twist_profile"] = std::move(tp);
  j["minus"] = differentials_json(s.minus());
  j["plus"] = differentials_json(s.plus());
  return j;
}

template <Coefficient F>
std::string serialize(const ChainComplex<F>& c) {
  return dump_canonical(to_json(c));
}

template <Coefficient F>
std::string serialize(const SheafComplex<F>& s) {
  return dump_canonical(to_json(s));
}

namespace detail {

inline const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, "missing member '" + key + "'");
  return *it;
}

inline long long integer_at(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<long long>();
}

inline int exponent_at(const json& j, const std::string& where) {
  long long v = integer_at(j, where);
  if (v < -1000000 || v > 1000000) throw ParseError(where, "exponent out of range");
  return static_cast<int>(v);
}

template <Coefficient F>
LaurentPoly<F> poly_from_json(const json& j, const ring_t<F>& ring, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of [exponent, coefficient] terms");
  std::vector<std::pair<int, F>> terms;
  bool seen = false;
  int last = 0;
  for (std::size_t t = 0; t < j.size(); ++t) {
    std::string w = where + "/" + std::to_string(t);
    const auto& term = j[t];
    if (!term.is_array() || term.size() != 2) throw ParseError(w, "expected [exponent, coefficient]");
    int e = exponent_at(term[0], w + "/0");
    if (seen && e <= last) throw ParseError(w + "/0", "exponents must be strictly ascending");
    seen = true;
    last = e;
    std::string cs;
    if (term[1].is_string()) {
      cs = term[1].get<std::string>();
    } else if (term[1].is_number_integer()) {
      cs = term[1].dump();
    } else {
      throw ParseError(w + "/1", "coefficient must be a string");
    }
    try {
      terms.emplace_back(e, scalar_traits<F>::parse(ring, cs));
    } catch (const ParseError& err) {
      throw ParseError(w + "/1", err.what());
    }
  }
  return LaurentPoly<F>::from_terms(ring, terms);
}

template <Coefficient F>
LaurentMatrix<F> matrix_from_json(const json& j, const ring_t<F>& ring, std::size_t rows, std::size_t cols,
                                  const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(where, "expected " + std::to_string(rows) + " rows");
  }
  LaurentMatrix<F> m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::string w = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError(w, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = poly_from_json<F>(j[i][c], ring, w + "/" + std::to_string(c));
  }
  return m;
}

struct Header {
  std::string format;
  RingDescriptor ring;
  Base base = Base::laurent;
};

inline Header read_header(const json& j) {
  if (!j.is_object()) throw ParseError("", "top level must be an object");
  Header h;
  const auto& f = member(j, "format", "");
  if (!f.is_string()) throw ParseError("/format", "expected a string");
  h.format = f.get<std::string>();
  if (h.format != kComplexFormat && h.format != kSheafFormat) throw ParseError("/format", "unknown format '" + h.format + "'");
  if (integer_at(member(j, "version", ""), "/version") != kFormatVersion) throw ParseError("/version", "unsupported version");
  const auto& r = member(j, "ring", "");
  if (!r.is_string()) throw ParseError("/ring", "expected a string");
  h.ring = parse_ring_name(r.get<std::string>(), "/ring");
  const auto& v = member(j, "variable", "");
  if (!v.is_string() || v.get<std::string>() != "x") throw ParseError("/variable", "the variable must be \"x\"");
  const auto& b = member(j, "base", "");
  if (!b.is_string() || !parse_base(b.get<std::string>())) throw ParseError("/base", "unknown base ring");
  h.base = *parse_base(b.get<std::string>());
  return h;
}

template <Coefficient F>
void read_differentials(const json& j, const std::string& key, ChainComplex<F>& c) {
  const auto& ds = member(j, key, "");
  if (!ds.is_array()) throw ParseError("/" + key, "expected an array");
  std::map<int, bool> seen;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::string w = "/" + key + "/" + std::to_string(i);
    int m = exponent_at(member(ds[i], "degree", w), w + "/degree");
    if (seen[m]) throw ParseError(w + "/degree", "duplicate differential");
    seen[m] = true;
    auto mat = matrix_from_json<F>(member(ds[i], "matrix", w), c.ring(), c.rank(m - 1), c.rank(m), w + "/matrix");
    if (!c.in_support(m)) {
      if (!mat.is_zero()) throw ParseError(w + "/degree", "differential outside the support");
      continue;
    }
    c.set_d(m, std::move(mat));
  }
}

template <Coefficient F>
ChainComplex<F> complex_from_json(const json& j, const Header& h, Base base) {
  auto ring = ring_from<F>(h.ring);
  const auto& degs = member(j, "degrees", "");
  if (!degs.is_array()) throw ParseError("/degrees", "expected an array");
  std::map<int, std::size_t> ranks;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    std::string w = "/degrees/" + std::to_string(i);
    int m = exponent_at(member(degs[i], "degree", w), w + "/degree");
    long long r = integer_at(member(degs[i], "rank", w), w + "/rank");
    if (r < 0 || r > 100000) throw ParseError(w + "/rank", "rank out of range");
    if (ranks.count(m)) throw ParseError(w + "/degree", "duplicate degree");
    ranks[m] = static_cast<std::size_t>(r);
  }
  if (ranks.empty()) {
    auto c = ChainComplex<F>::zero(ring, base);
    read_differentials(j, "differentials", c);
    return c;
  }
  std::vector<std::size_t> rv;
  for (int m = ranks.begin()->first; m <= ranks.rbegin()->first; ++m) rv.push_back(ranks.count(m) ? ranks[m] : 0);
  ChainComplex<F> c(ring, base, ranks.begin()->first, rv);
  read_differentials(j, "differentials", c);
  return c;
}

template <Coefficient F>
SheafComplex<F> sheaf_from_json(const json& j, const Header& h) {
  if (h.base != Base::laurent) throw ParseError("/base", "a sheaf complex file describes its K[x,x^-1] middle complex");
  auto mid = complex_from_json<F>(j, h, Base::laurent);
  const auto& tp = member(j, "twist_profile", "");
  if (!tp.is_array()) throw ParseError("/twist_profile", "expected an array");
  std::map<int, std::vector<Twist>> raw;
  for (std::size_t i = 0; i < tp.size(); ++i) {
    std::string w = "/twist_profile/" + std::to_string(i);
    int m = exponent_at(member(tp[i], "degree", w), w + "/degree");
    int k = exponent_at(member(tp[i], "k", w), w + "/k");
    int l = exponent_at(member(tp[i], "l", w), w + "/l");
    raw[m].push_back({k, l});
  }
  TwistProfile profile;
  for (auto& [m, ts] : raw) {
    std::size_t r = mid.rank(m);
    if (ts.size() == 1 && r > 0) {
      profile.set_uniform(m, r, ts.front());
    } else if (ts.size() == r) {
      profile.set(m, ts);
    } else {
      throw ParseError("/twist_profile", "degree " + std::to_string(m) + " lists " + std::to_string(ts.size()) +
                                             " twists for a level of rank " + std::to_string(r));
    }
  }
  for (int m = mid.lo(); m <= mid.hi(); ++m) {
    if (mid.rank(m) > 0 && profile.at(m).empty()) {
      throw ParseError("/twist_profile", "no twist given for degree " + std::to_string(m));
    }
  }
  SheafComplex<F> s = [&] {
    try {
      return SheafComplex<F>::from_twists(mid, profile);
    } catch (const InvalidComplexError& e) {
      throw ParseError("/twist_profile", e.what());
    }
  }();
  auto minus = mid.with_base(Base::inverse_polynomial), plus = mid.with_base(Base::polynomial);
  read_differentials(j, "minus", minus);
  read_differentials(j, "plus", plus);
  if (!(minus == s.minus())) throw ParseError("/minus", "minus differentials disagree with the twist profile");
  if (!(plus == s.plus())) throw ParseError("/plus", "plus differentials disagree with the twist profile");
  return s;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

}  // namespace detail

struct LoadedFile {
  RingDescriptor ring;
  std::variant<AnyComplex, AnySheafComplex> value;
  bool is_sheaf() const { return value.index() == 1; }
};

inline LoadedFile load(const std::string& text) {
  json j = detail::parse_json(text);
  auto h = detail::read_header(j);
  LoadedFile out{h.ring, AnyComplex{}};
  auto build = [&]<class F>() {
    if (h.format == kSheafFormat) {
      out.value = AnySheafComplex{detail::sheaf_from_json<F>(j, h)};
    } else {
      out.value = AnyComplex{detail::complex_from_json<F>(j, h, h.base)};
    }
  };
  switch (h.ring.kind) {
    case RingKind::rational: build.template operator()<mpq_class>(); break;
    case RingKind::prime_field: build.template operator()<ModP>(); break;
    case RingKind::integer: build.template operator()<mpz_class>(); break;
  }
  return out;
}

template <Coefficient F>
ChainComplex<F> parse_complex(const std::string& text) {
  auto f = load(text);
  if (f.is_sheaf()) throw ParseError("/format", "expected a chain complex file");
  auto* c = std::get_if<ChainComplex<F>>(&std::get<0>(f.value));
  if (!c) throw ParseError("/ring", "file ring " + f.ring.name() + " does not match the requested coefficients");
  return *c;
}

template <Coefficient F>
SheafComplex<F> parse_sheaf_complex(const std::string& text) {
  auto f = load(text);
  if (!f.is_sheaf()) throw ParseError("/format", "expected a sheaf complex file");
  auto* c = std::get_if<SheafComplex<F>>(&std::get<1>(f.value));
  if (!c) throw ParseError("/ring", "file ring " + f.ring.name() + " does not match the requested coefficients");
  return *c;
}

}  // namespace p1dom

#endif  // P1DOM_IO_HPP
