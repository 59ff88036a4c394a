// Copyright 2026 The Solenoid Polya Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON config grammar and report serialization. Rationals are strings
// "num/den" (integers may also be plain JSON numbers); unknown keys are
// errors everywhere.

#ifndef SOLENOID_IO_CONFIG_HPP_
#define SOLENOID_IO_CONFIG_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>
#include "solenoid/automorphism.hpp"
#include "solenoid/charfun/decide.hpp"
#include "solenoid/charfun/psd.hpp"
#include "solenoid/charfun/stratified_cf.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/rational.hpp"
#include "solenoid/sampler/equidist.hpp"
#include "solenoid/sampler/law.hpp"
#include "solenoid/scenarios.hpp"
#include "solenoid/steinitz.hpp"
#include "solenoid/tower.hpp"

namespace solenoid::io {

using Json = nlohmann::ordered_json;

// --- parsing -------------------------------------------------------------------

inline void require_object(const Json& j, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + ": expected an object");
}

inline void allow_keys(const Json& j, const std::string& what, std::initializer_list<const char*> keys) {
  require_object(j, what);
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* allowed : keys) ok = ok || k == allowed;
    if (!ok) throw ParseError(what + ": unknown key '" + k + "'");
  }
}

inline const Json& need(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw ParseError(what + ": missing key '" + key + "'");
  return j.at(key);
}

inline Rational parse_rational_json(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError(what + ": expected a rational string like \"3/4\"");
}

inline long parse_long(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + ": expected an integer");
  return j.get<long>();
}

inline std::uint64_t parse_u64(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(what + ": expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

inline Prime parse_prime_key(const std::string& key, const std::string& what) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(what + ": '" + key + "' is not a prime");
  }
  Prime p = std::stoul(key);
  if (!is_prime(p)) throw ParseError(what + ": " + key + " is not prime");
  return p;
}

/// {"2": "inf", "3": 1}
inline SteinitzSpec parse_spec(const Json& j) {
  require_object(j, "solenoid");
  std::map<Prime, Multiplicity> mult;
  for (const auto& [k, v] : j.items()) {
    Prime p = parse_prime_key(k, "solenoid");
    if (v.is_string() && (v == "inf" || v == "infinity")) {
      mult.emplace(p, Multiplicity::infinite());
    } else if (v.is_number_integer() && v.get<long long>() >= 1) {
      mult.emplace(p, Multiplicity::finite(static_cast<unsigned>(v.get<long long>())));
    } else {
      throw ParseError("solenoid: multiplicity of " + k + " must be \"inf\" or a positive integer");
    }
  }
  return SteinitzSpec(std::move(mult));
}

/// {"depth": N, "coord": "t"} or {"real": "s"}.
inline SolenoidPoint parse_point(const SteinitzSpec& spec, const Json& j) {
  if (j.is_string() || j.is_number_integer()) return embed_real(spec, parse_rational_json(j, "point"));
  allow_keys(j, "point", {"depth", "coord", "real"});
  if (j.contains("real")) {
    if (j.contains("coord")) throw ParseError("point: give either 'real' or 'coord'");
    std::size_t depth = j.contains("depth") ? static_cast<std::size_t>(parse_u64(j.at("depth"), "point.depth")) : 0;
    return embed_real(spec, parse_rational_json(j.at("real"), "point.real"), depth);
  }
  auto depth = static_cast<std::size_t>(parse_u64(need(j, "depth", "point"), "point.depth"));
  Rational t = parse_rational_json(need(j, "coord", "point"), "point.coord");
  if (t < 0 || t >= 1) throw ParseError("point.coord must lie in [0, 1)");
  return SolenoidPoint(spec, depth, t);
}

/// {} (all of Y), {"trivial": true} or {"thresholds": {"3": 0}}.
inline SubgroupSpec parse_subgroup(const Json& j) {
  allow_keys(j, "subgroup", {"trivial", "thresholds"});
  if (j.contains("trivial")) {
    if (!j.at("trivial").is_boolean()) throw ParseError("subgroup.trivial must be a boolean");
    if (j.at("trivial").get<bool>()) {
      if (j.contains("thresholds")) throw ParseError("subgroup: 'trivial' excludes 'thresholds'");
      return SubgroupSpec::trivial();
    }
  }
  std::map<Prime, long> t;
  if (j.contains("thresholds")) {
    require_object(j.at("thresholds"), "subgroup.thresholds");
    for (const auto& [k, v] : j.at("thresholds").items()) {
      t.emplace(parse_prime_key(k, "subgroup.thresholds"), parse_long(v, "subgroup.thresholds"));
    }
  }
  return SubgroupSpec::from_thresholds(std::move(t));
}

inline ValRange parse_constraint(const Json& c, Prime& p) {
  allow_keys(c, "stratum constraint", {"prime", "op", "k"});
  p = parse_prime_key(std::to_string(parse_long(need(c, "prime", "stratum constraint"), "prime")), "stratum");
  long k = parse_long(need(c, "k", "stratum constraint"), "k");
  const Json& op = need(c, "op", "stratum constraint");
  if (op == ">=") return ValRange::at_least(k);
  if (op == "=") return ValRange::exactly(k);
  if (op == "<=") return ValRange::at_most(k);
  throw ParseError("stratum constraint: op must be one of >=, =, <=");
}

inline Stratum parse_stratum(const Json& j) {
  if (!j.is_array()) throw ParseError("stratum: expected a list of constraints");
  Stratum s;
  for (const auto& c : j) {
    Prime p = 0;
    ValRange r = parse_constraint(c, p);
    s = s.intersect(Stratum({{p, r}}));
  }
  return s;
}

inline Term parse_term(const SteinitzSpec& spec, const Json& j) {
  allow_keys(j, "term", {"c", "sigma", "shift"});
  Rational c = parse_rational_json(need(j, "c", "term"), "term.c");
  Rational sigma = j.contains("sigma") ? parse_rational_json(j.at("sigma"), "term.sigma") : Rational(0);
  if (sigma < 0) throw ParseError("term.sigma must be nonnegative");
  Rational shift = j.contains("shift") ? parse_point(spec, j.at("shift")).real_representative() : Rational(0);
  return {c, sigma, shift};
}

inline std::size_t max_terms_of(const Json& j) {
  return j.contains("max_terms") ? static_cast<std::size_t>(parse_u64(j.at("max_terms"), "max_terms")) : kDefaultMaxTerms;
}

/// One of: {"gaussian": {"sigma", "shift"}}, {"haar": subgroup},
/// {"product": [cf, ...]}, {"mixture": {"weights", "parts"}},
/// {"precompose": {"cf", "alpha"}}, {"piecewise": [{"stratum", "terms"}, ...]}.
inline StratifiedCF parse_cf(const SteinitzSpec& spec, const Json& j) {
  require_object(j, "cf");
  if (j.size() != 1 && !(j.size() == 2 && j.contains("max_terms"))) {
    throw ParseError("cf: expected exactly one constructor key");
  }
  std::string kind;
  for (const auto& [k, v] : j.items()) {
    if (k != "max_terms") kind = k;
  }
  const Json& body = j.at(kind);
  if (kind == "gaussian") {
    allow_keys(body, "cf.gaussian", {"sigma", "shift"});
    Rational sigma = parse_rational_json(need(body, "sigma", "cf.gaussian"), "cf.gaussian.sigma");
    if (sigma < 0) throw ParseError("cf.gaussian.sigma must be nonnegative");
    SolenoidPoint x = body.contains("shift") ? parse_point(spec, body.at("shift")) : SolenoidPoint::zero(spec);
    return cf_gaussian(spec, sigma, x);
  }
  if (kind == "haar") return cf_haar(spec, parse_subgroup(body));
  if (kind == "product") {
    if (!body.is_array() || body.empty()) throw ParseError("cf.product: expected a nonempty list");
    StratifiedCF acc = parse_cf(spec, body.front());
    for (std::size_t i = 1; i < body.size(); ++i) acc = cf_product(acc, parse_cf(spec, body[i]));
    return acc;
  }
  if (kind == "mixture") {
    allow_keys(body, "cf.mixture", {"weights", "parts"});
    const Json& w = need(body, "weights", "cf.mixture");
    const Json& parts = need(body, "parts", "cf.mixture");
    if (!w.is_array() || !parts.is_array()) throw ParseError("cf.mixture: weights and parts must be lists");
    std::vector<Rational> weights;
    for (const auto& x : w) weights.push_back(parse_rational_json(x, "cf.mixture.weights"));
    std::vector<StratifiedCF> cfs;
    for (const auto& x : parts) cfs.push_back(parse_cf(spec, x));
    return cf_mixture(weights, cfs);
  }
  if (kind == "precompose") {
    allow_keys(body, "cf.precompose", {"cf", "alpha"});
    return cf_precompose(parse_cf(spec, need(body, "cf", "cf.precompose")),
                         Automorphism(parse_rational_json(need(body, "alpha", "cf.precompose"), "alpha")));
  }
  if (kind == "piecewise") {
    if (!body.is_array()) throw ParseError("cf.piecewise: expected a list of pieces");
    std::vector<Piece> pieces;
    for (const auto& piece : body) {
      allow_keys(piece, "cf.piecewise piece", {"stratum", "terms"});
      Atom atom;
      const Json& terms = need(piece, "terms", "cf.piecewise piece");
      if (!terms.is_array()) throw ParseError("cf.piecewise: terms must be a list");
      for (const auto& t : terms) atom.push_back(parse_term(spec, t));
      pieces.push_back({parse_stratum(need(piece, "stratum", "cf.piecewise piece")), atom});
    }
    return cf_piecewise(spec, pieces, max_terms_of(j));
  }
  throw ParseError("cf: unknown constructor '" + kind + "'");
}

/// One of: {"degenerate": point}, {"haar": subgroup},
/// {"gaussian_line": {"sigma", "mean"}}, {"mixture": {"weights", "parts"}},
/// {"shifted": {"point", "law"}}, {"convolution": [law, ...]}.
inline Law parse_law(const SteinitzSpec& spec, const Json& j) {
  require_object(j, "sampler");
  if (j.size() != 1) throw ParseError("sampler: expected exactly one constructor key");
  const auto& [kind, body] = *j.items().begin();
  if (kind == "degenerate") return degenerate(parse_point(spec, body));
  if (kind == "haar") return haar(parse_subgroup(body));
  if (kind == "gaussian_line") {
    allow_keys(body, "sampler.gaussian_line", {"sigma", "mean"});
    Rational sigma = parse_rational_json(need(body, "sigma", "sampler.gaussian_line"), "sigma");
    if (sigma < 0) throw ParseError("sampler.gaussian_line.sigma must be nonnegative");
    Rational mean = body.contains("mean") ? parse_rational_json(body.at("mean"), "mean") : Rational(0);
    return gaussian_line(sigma, mean);
  }
  if (kind == "mixture") {
    allow_keys(body, "sampler.mixture", {"weights", "parts"});
    std::vector<Rational> weights;
    std::vector<Law> parts;
    for (const auto& x : need(body, "weights", "sampler.mixture")) weights.push_back(parse_rational_json(x, "weights"));
    for (const auto& x : need(body, "parts", "sampler.mixture")) parts.push_back(parse_law(spec, x));
    return mixture(std::move(weights), std::move(parts));
  }
  if (kind == "shifted") {
    allow_keys(body, "sampler.shifted", {"point", "law"});
    return shifted(parse_point(spec, need(body, "point", "sampler.shifted")),
                   parse_law(spec, need(body, "law", "sampler.shifted")));
  }
  if (kind == "convolution") {
    if (!body.is_array() || body.empty()) throw ParseError("sampler.convolution: expected a nonempty list");
    std::vector<Law> parts;
    for (const auto& x : body) parts.push_back(parse_law(spec, x));
    return convolution(std::move(parts));
  }
  throw ParseError("sampler: unknown constructor '" + kind + "'");
}

inline CoeffVector parse_coeffs(const SteinitzSpec& spec, const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("coefficients: expected a nonempty list");
  CoeffVector out;
  for (const auto& x : j) {
    Rational a = parse_rational_json(x, "coefficients");
    if (a == 0) throw ParseError("coefficients: zero is not an automorphism");
    out.emplace_back(a);
  }
  (void)spec;
  return out;
}

inline EquidistConfig parse_simulation(const SteinitzSpec& spec, const Json& j) {
  allow_keys(j, "simulation", {"n", "depth", "charset", "seed", "alpha", "streams"});
  EquidistConfig c;
  if (j.contains("n")) c.n = static_cast<std::size_t>(parse_u64(j.at("n"), "simulation.n"));
  if (j.contains("depth")) c.depth = static_cast<std::size_t>(parse_u64(j.at("depth"), "simulation.depth"));
  if (j.contains("seed")) c.seed = parse_u64(j.at("seed"), "simulation.seed");
  if (j.contains("streams")) c.streams = static_cast<std::size_t>(parse_u64(j.at("streams"), "simulation.streams"));
  if (j.contains("alpha")) {
    if (!j.at("alpha").is_number()) throw ParseError("simulation.alpha: expected a number");
    c.alpha = j.at("alpha").get<double>();
  }
  if (j.contains("charset")) {
    if (!j.at("charset").is_array()) throw ParseError("simulation.charset: expected a list");
    for (const auto& y : j.at("charset")) {
      Rational r = parse_rational_json(y, "simulation.charset");
      if (!spec.contains(r)) throw ParseError("simulation.charset: " + to_string(r) + " is not a character");
      c.charset.push_back(r);
    }
  }
  if (c.n == 0) throw ParseError("simulation.n must be positive");
  if (c.streams == 0) throw ParseError("simulation.streams must be positive");
  if (!(c.alpha > 0 && c.alpha < 1)) throw ParseError("simulation.alpha must lie in (0, 1)");
  return c;
}

struct RunConfig {
  SteinitzSpec solenoid;
  std::optional<StratifiedCF> cf;
  std::optional<SamplerSpec> sampler;
  std::optional<CoeffVector> coefficients;
  EquidistConfig simulation;
  std::optional<Prime> p, q;
  std::optional<unsigned> l;
  std::optional<Rational> c, sigma;
  std::optional<std::size_t> limit;
};

inline RunConfig parse_config(const Json& j) {
  allow_keys(j, "config",
             {"description", "solenoid", "cf", "sampler", "coefficients", "simulation", "p", "q", "l", "c", "sigma",
              "limit"});
  if (j.contains("description") && !j.at("description").is_string()) {
    throw ParseError("config.description must be a string");
  }
  RunConfig r;
  r.solenoid = j.contains("solenoid") ? parse_spec(j.at("solenoid")) : SteinitzSpec();
  if (j.contains("cf")) r.cf = parse_cf(r.solenoid, j.at("cf"));
  if (j.contains("sampler")) r.sampler = SamplerSpec{r.solenoid, parse_law(r.solenoid, j.at("sampler"))};
  if (j.contains("coefficients")) r.coefficients = parse_coeffs(r.solenoid, j.at("coefficients"));
  if (j.contains("simulation")) r.simulation = parse_simulation(r.solenoid, j.at("simulation"));
  auto prime = [&](const char* key) -> std::optional<Prime> {
    if (!j.contains(key)) return std::nullopt;
    return parse_prime_key(std::to_string(parse_long(j.at(key), key)), key);
  };
  r.p = prime("p");
  r.q = prime("q");
  if (j.contains("l")) {
    long l = parse_long(j.at("l"), "l");
    if (l < 1) throw ParseError("l must be a positive integer");
    r.l = static_cast<unsigned>(l);
  }
  if (j.contains("c")) r.c = parse_rational_json(j.at("c"), "c");
  if (j.contains("sigma")) r.sigma = parse_rational_json(j.at("sigma"), "sigma");
  if (j.contains("limit")) r.limit = static_cast<std::size_t>(parse_u64(j.at("limit"), "limit"));
  return r;
}

// --- serialization ----------------------------------------------------------------

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const SteinitzSpec& spec) {
  Json j = Json::object();
  for (const auto& [p, m] : spec.multiplicities()) {
    if (m.is_infinite()) {
      j[std::to_string(p)] = "inf";
    } else {
      j[std::to_string(p)] = m.count();
    }
  }
  return j;
}

inline Json to_json(const SolenoidPoint& x) { return {{"depth", x.depth()}, {"coord", to_string(x.coord())}}; }

inline Json to_json(const SubgroupSpec& e) {
  if (e.is_trivial()) return {{"trivial", true}};
  Json t = Json::object();
  for (const auto& [p, k] : e.thresholds()) t[std::to_string(p)] = k;
  return {{"thresholds", t}};
}

/// Per prime: finite valuation bounds and whether y = 0 (v = +inf) is allowed.
inline Json to_json(const Stratum& s) {
  Json out = Json::array();
  for (const auto& [p, r] : s.ranges()) {
    Json c{{"prime", p}};
    if (r.finite_empty()) {
      c["only_zero"] = true;
    } else {
      if (r.lo != kNegInf) c["min"] = r.lo;
      if (r.hi != kPosInf) c["max"] = r.hi;
      c["includes_zero"] = r.zero;
    }
    out.push_back(c);
  }
  return out;
}

inline Json to_json(const StratifiedCF& f) {
  Json pieces = Json::array();
  for (const auto& piece : f.pieces()) {
    Json terms = Json::array();
    for (const Term& t : piece.atom) {
      terms.push_back({{"c", to_string(t.weight)}, {"sigma", to_string(t.sigma)}, {"shift", to_string(t.shift)}});
    }
    pieces.push_back({{"stratum", to_json(piece.stratum)}, {"describe", describe(piece.stratum)}, {"terms", terms}});
  }
  return {{"piecewise", pieces}};
}

inline Json to_json(const CoeffVector& coeffs) {
  Json out = Json::array();
  for (const auto& a : coeffs) out.push_back(to_string(a.value()));
  return out;
}

inline Json to_json(const SolenoidClass& c) {
  Json j{{"class", class_name(c)}};
  if (const auto* u = std::get_if<UniqueInfinitePrime>(&c)) {
    j["automorphisms"] = "+-" + std::to_string(u->p) + "^k, k in Z";
  } else if (const auto* m = std::get_if<MultipleInfinitePrimes>(&c)) {
    std::string s;
    for (Prime p : m->primes) s += (s.empty() ? "" : ", ") + std::to_string(p);
    j["automorphisms"] = "nonzero rationals whose primes lie in {" + s + "}";
  } else {
    j["automorphisms"] = "{+I, -I}";
  }
  return j;
}

inline Json to_json(const EquationResult& r) {
  if (std::holds_alternative<Holds>(r)) return {{"result", "Holds"}};
  if (const auto* f = std::get_if<Fails>(&r)) return {{"result", "Fails"}, {"witness", to_string(f->witness)}};
  return {{"result", "Unknown"}, {"reason", std::get<Unknown>(r).reason}};
}

inline Json to_json(const Comparison& r) {
  if (std::holds_alternative<Equal>(r)) return {{"result", "Equal"}};
  if (const auto* d = std::get_if<Differs>(&r)) return {{"result", "Differs"}, {"witness", to_string(d->witness)}};
  return {{"result", "Unknown"}, {"reason", std::get<Unknown>(r).reason}};
}

inline Json to_json(const Extraction& e) {
  if (const auto* d = std::get_if<Decomposition>(&e)) {
    return {{"result", "Decomposition"},
            {"shift", to_json(d->shift)},
            {"shift_real", to_string(d->shift_real)},
            {"sigma", to_string(d->sigma)},
            {"subgroup", to_json(d->subgroup)},
            {"subgroup_describe", describe(d->subgroup)},
            {"p_invariant", d->p_invariant}};
  }
  if (const auto* n = std::get_if<NotOfForm>(&e)) return {{"result", "NotOfForm"}, {"reason", n->reason}};
  return {{"result", "Unknown"}, {"reason", std::get<Unknown>(e).reason}};
}

inline Json to_json(const SubgroupDecision& d) {
  if (const auto* s = std::get_if<IsSubgroup>(&d)) {
    return {{"result", "Yes"}, {"subgroup", to_json(s->subgroup)}, {"describe", describe(s->subgroup)}};
  }
  if (const auto* n = std::get_if<NotSubgroup>(&d)) {
    return {{"result", "No"}, {"y1", to_string(n->y1)}, {"y2", to_string(n->y2)}};
  }
  return {{"result", "Unknown"}, {"reason", std::get<Unknown>(d).reason}};
}

inline Json to_json(const PsdReport& r) {
  return {{"min_eigenvalue", r.min_eigenvalue},
          {"max_modulus", r.max_modulus},
          {"value_at_zero_is_one", r.value_at_zero_is_one},
          {"passed", r.passed}};
}

inline Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const EquidistReport& r) {
  Json gaps = Json::array();
  for (const auto& g : r.cf_gaps) {
    gaps.push_back({{"y", to_string(g.y)},
                    {"reference", complex_json(g.reference)},
                    {"linear_form", complex_json(g.combined)},
                    {"chi2", g.chi2},
                    {"p_value", g.p_value}});
  }
  Json kuiper = Json::array();
  for (const auto& [d, k] : r.kuiper) kuiper.push_back({{"depth", d}, {"V", k.statistic}, {"p_value", k.p_value}});
  return {{"n", r.n},
          {"depth", r.depth},
          {"sample_depth", r.sample_depth},
          {"seed", r.seed},
          {"streams", r.streams},
          {"rng", r.rng},
          {"alpha", r.alpha},
          {"tests", r.tests},
          {"bonferroni_level", r.alpha / static_cast<double>(std::max<std::size_t>(1, r.tests))},
          {"cf_gaps", gaps},
          {"kuiper", kuiper},
          {"min_cf_p", r.min_cf_p},
          {"min_kuiper_p", r.min_kuiper_p},
          {"verdict", r.consistent ? "Consistent" : "Inconsistent"}};
}

inline Json to_json(const TheoremVerdict& v) {
  Json j{{"solenoid_class", to_json(v.solenoid_class)},
         {"coefficients_valid", v.coeffs_valid},
         {"sum_of_squares_one", v.sum_squares_one},
         {"degenerate_length", v.degenerate_length}};
  if (v.equation) j["equation"] = to_json(*v.equation);
  if (v.decomposition) j["decomposition"] = to_json(*v.decomposition);
  j["nowhere_zero"] = v.nowhere_zero;
  if (v.nonvanishing_means_full_subgroup) j["nowhere_zero_implies_pure_gaussian"] = *v.nonvanishing_means_full_subgroup;
  if (v.simulation) j["simulation"] = to_json(*v.simulation);
  j["conclusion"] = conclusion_name(v.conclusion);
  j["explanation"] = conclusion_text(v.conclusion);
  j["coherent"] = verdict_is_coherent(v);
  j["warnings"] = v.warnings;
  return j;
}

inline Json to_json(const CounterexampleBundle& b) {
  Json cases = Json::array();
  for (const auto& c : b.cases) {
    cases.push_back({{"region", c.region},
                     {"expected", to_string(c.expected)},
                     {"lhs_matches", c.lhs_matches},
                     {"rhs_matches", c.rhs_matches}});
  }
  return {{"a", b.coeffs.a},
          {"b", b.coeffs.b.get_str()},
          {"coefficients", to_json(b.coeffs.coeffs)},
          {"sum_of_squares_one", check_sum_squares_one(b.coeffs.coeffs)},
          {"cf", to_json(b.cf)},
          {"mixture_matches_piecewise", to_json(b.mixture_matches)},
          {"equation", to_json(b.equation)},
          {"region_cases", cases},
          {"decomposition", to_json(b.decomposition)},
          {"support", to_json(b.support)},
          {"psd", to_json(b.psd)},
          {"sampler", "mixture of Haar on two nested compact subgroups"},
          {"verdict", to_json(b.verdict)}};
}

inline Json to_json(const FullSupportBundle& b) {
  Json cases = Json::array();
  for (const auto& c : b.cases) {
    cases.push_back({{"region", c.region},
                     {"expected", to_string(c.expected)},
                     {"lhs_matches", c.lhs_matches},
                     {"rhs_matches", c.rhs_matches}});
  }
  return {{"base", to_json(b.base)},
          {"cf", to_json(b.cf)},
          {"equation", to_json(b.equation)},
          {"region_cases", cases},
          {"support", to_json(b.support)},
          {"decomposition", to_json(b.decomposition)},
          {"gaussian_factor_full_support", b.gaussian_factor_full_support},
          {"psd", to_json(b.psd)}};
}

inline Json to_json(const GaussianHaarScenario& s) {
  return {{"cf", to_json(s.cf)},
          {"equation", to_json(s.equation)},
          {"decomposition", to_json(s.decomposition)},
          {"round_trip", s.round_trip},
          {"verdict", to_json(s.verdict)}};
}

inline Json to_json(const CircleResult& r) {
  if (const auto* h = std::get_if<ShiftOfHaar>(&r)) {
    return {{"result", "ShiftOfHaar"}, {"shift", to_string(h->shift)}, {"order", h->order.get_str()}};
  }
  if (const auto* f = std::get_if<CircleFails>(&r)) return {{"result", "Fails"}, {"witness", to_string(f->witness)}};
  return {{"result", "Unknown"}, {"reason", std::get<Unknown>(r).reason}};
}

}  // namespace solenoid::io

#endif  // SOLENOID_IO_CONFIG_HPP_
