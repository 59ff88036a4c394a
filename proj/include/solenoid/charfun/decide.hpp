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

// Exact decisions about stratified characteristic functions.
//
// On a stratum that is a subgroup S, the functions exp(-sigma y^2) (x, y)
// with distinct (sigma, x mod Ann<S>) are linearly independent, so comparing
// canonical atoms decides equality. Other strata fall back to a search for a
// witness at which the exact difference is provably nonzero; when none turns
// up the answer is Unknown, never a guess.

#ifndef SOLENOID_CHARFUN_DECIDE_HPP_
#define SOLENOID_CHARFUN_DECIDE_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "solenoid/automorphism.hpp"
#include "solenoid/charfun/probes.hpp"
#include "solenoid/charfun/stratified_cf.hpp"
#include "solenoid/charfun/stratum.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/rational.hpp"
#include "solenoid/tower.hpp"

namespace solenoid {

struct Unknown {
  std::string reason;
};

struct Equal {};
struct Differs {
  Rational witness;
};
using Comparison = std::variant<Equal, Differs, Unknown>;

struct Holds {};
struct Fails {
  Rational witness;
};
using EquationResult = std::variant<Holds, Fails, Unknown>;

namespace detail {

inline constexpr std::size_t kProbeCount = 64;
inline constexpr std::size_t kDeepProbeCount = 1024;

/// True if f and g provably differ at y; false if equal or undecidable there.
inline bool provably_differs(const StratifiedCF& f, const StratifiedCF& g, const Rational& y) {
  auto z = (f.exact(y) - g.exact(y)).is_zero();
  return z && !*z;
}

inline std::optional<Rational> search_witness(const StratifiedCF& f, const StratifiedCF& g, const Stratum& s,
                                              std::size_t count, int width) {
  for (const Rational& y : stratum_candidates(f.spec(), s, count, width)) {
    if (provably_differs(f, g, y)) return y;
  }
  return std::nullopt;
}

}  // namespace detail

inline Comparison cf_equal(const StratifiedCF& f, const StratifiedCF& g) {
  if (!(f.spec() == g.spec())) throw SpecMismatch();
  const SteinitzSpec& spec = f.spec();
  std::optional<std::string> unknown;
  for (const auto& a : f.pieces()) {
    for (const auto& b : g.pieces()) {
      auto s = a.stratum.intersect(b.stratum).normalized(spec);
      if (!s) continue;
      Atom diff = a.atom;
      for (const Term& t : b.atom) diff.push_back({-t.weight, t.sigma, t.shift});
      if (canonical_atom(diff, s->shift_modulus(spec)).empty()) continue;
      if (auto w = detail::search_witness(f, g, *s, detail::kProbeCount, 4)) return Differs{*w};
      if (auto w = detail::search_witness(f, g, *s, detail::kDeepProbeCount, 8)) return Differs{*w};
      if (!unknown) {
        unknown = s->is_subgroup() ? "no witness found on subgroup stratum " + describe(*s)
                                   : "atoms differ on non-subgroup stratum " + describe(*s) + " but no witness found";
      }
    }
  }
  if (unknown) return Unknown{*unknown};
  return Equal{};
}

/// f(y) == f(alpha_1 y) ... f(alpha_n y) for all y.
inline EquationResult check_functional_equation(const StratifiedCF& f, const CoeffVector& coeffs) {
  if (coeffs.empty()) throw PreconditionViolated("check_functional_equation: empty coefficient vector");
  for (const auto& a : coeffs) {
    if (!is_automorphism(f.spec(), a)) {
      throw PreconditionViolated("check_functional_equation: " + to_string(a.value()) + " is not an automorphism");
    }
  }
  StratifiedCF g = cf_precompose(f, coeffs.front());
  for (std::size_t j = 1; j < coeffs.size(); ++j) g = cf_product(g, cf_precompose(f, coeffs[j]));
  auto r = cf_equal(f, g);
  if (std::holds_alternative<Equal>(r)) return Holds{};
  if (const auto* d = std::get_if<Differs>(&r)) return Fails{d->witness};
  return std::get<Unknown>(r);
}

// --- support -----------------------------------------------------------------

/// Strata carrying a nonzero atom. `exact` is set when every such atom has a
/// single term, which never vanishes, so the union is exactly the support.
struct Support {
  std::vector<Stratum> strata;
  bool exact = true;
};

inline Support cf_support(const StratifiedCF& f) {
  Support out;
  for (const auto& piece : f.pieces()) {
    if (piece.atom.empty()) continue;
    out.strata.push_back(piece.stratum);
    if (piece.atom.size() > 1) out.exact = false;
  }
  return out;
}

struct IsSubgroup {
  SubgroupSpec subgroup;
};
struct NotSubgroup {
  Rational y1;
  Rational y2;
};
using SubgroupDecision = std::variant<IsSubgroup, NotSubgroup, Unknown>;

namespace detail {

/// Strata of `whole` not covered by any of `parts`.
inline std::vector<Stratum> uncovered(const SteinitzSpec& spec, const Stratum& whole, const std::vector<Stratum>& parts) {
  std::vector<Stratum> rest{whole};
  for (const auto& part : parts) {
    std::vector<Stratum> next;
    for (const auto& r : rest) {
      for (const auto& c : complement_pieces(part)) {
        if (auto s = r.intersect(c).normalized(spec)) next.push_back(std::move(*s));
      }
    }
    rest = std::move(next);
  }
  return rest;
}

/// The smallest valuation-threshold subgroup containing the given strata.
inline SubgroupSpec threshold_hull(const SteinitzSpec& spec, const std::vector<Stratum>& strata) {
  bool any_nonzero = false;
  std::set<Prime> primes;
  for (const auto& s : strata) {
    if (!s.has_nonzero()) continue;
    any_nonzero = true;
    for (const auto& [p, r] : s.ranges()) primes.insert(p);
  }
  if (!any_nonzero) return SubgroupSpec::trivial();
  std::map<Prime, long> thresholds;
  for (Prime p : primes) {
    std::optional<long> t;
    bool unbounded = false;
    for (const auto& s : strata) {
      if (!s.has_nonzero()) continue;
      auto g = s.generated_lower_bound(spec, p);
      if (!g) {
        unbounded = true;
        break;
      }
      t = t ? std::min(*t, *g) : *g;
    }
    if (!unbounded && t) thresholds.emplace(p, *t);
  }
  return SubgroupSpec(std::move(thresholds)).canonical(spec);
}

/// The union of `strata` is exactly E.
inline bool union_equals(const SteinitzSpec& spec, const std::vector<Stratum>& strata, const SubgroupSpec& e) {
  Stratum es = e.to_stratum();
  for (const auto& s : strata) {
    for (const auto& c : complement_pieces(es)) {
      if (s.intersect(c).normalized(spec)) return false;
    }
  }
  return uncovered(spec, es, strata).empty();
}

inline bool in_support(const StratifiedCF& f, const Rational& y, bool& decided) {
  auto z = f.exact(y).is_zero();
  decided = z.has_value();
  return z && !*z;
}

inline std::optional<NotSubgroup> closure_witness(const StratifiedCF& f, const std::vector<Stratum>& strata) {
  std::vector<Rational> pts;
  for (const auto& s : strata) {
    for (const auto& y : stratum_candidates(f.spec(), s, 12)) {
      bool decided = false;
      if (in_support(f, y, decided)) pts.push_back(y);
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j < pts.size(); ++j) {
      Rational sum = pts[i] + pts[j];
      bool decided = false;
      if (!in_support(f, sum, decided) && decided) return NotSubgroup{pts[i], pts[j]};
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline SubgroupDecision support_is_subgroup(const StratifiedCF& f) {
  Support supp = cf_support(f);
  SubgroupSpec hull = detail::threshold_hull(f.spec(), supp.strata);
  bool representable = detail::union_equals(f.spec(), supp.strata, hull);
  if (representable && supp.exact) return IsSubgroup{hull};
  if (auto w = detail::closure_witness(f, supp.strata)) return *w;
  if (!supp.exact) return Unknown{"support atoms with several terms may vanish inside their strata"};
  return Unknown{"support is not of valuation-threshold form and no closure witness was found"};
}

// --- Gaussian x Haar decomposition ----------------------------------------------

struct Decomposition {
  SolenoidPoint shift;
  Rational shift_real;  // reduced modulo Ann(E) on the rational line
  Rational sigma;
  SubgroupSpec subgroup;
  bool p_invariant;
};
struct NotOfForm {
  std::string reason;
};
using Extraction = std::variant<Decomposition, NotOfForm, Unknown>;

namespace detail {

/// x = a (mod m) and x = b (mod n) for rationals, moduli >= 0 (0: exact).
inline std::optional<std::pair<Rational, Rational>> combine_congruences(const Rational& a, const Rational& m,
                                                                        const Rational& b, const Rational& n) {
  if (m == 0 || n == 0) {
    const Rational& x = m == 0 ? a : b;
    const Rational& y = m == 0 ? b : a;
    const Rational& mod = m == 0 ? n : m;
    Rational d = x - y;
    if (mod == 0 ? d != 0 : Rational(d / mod).get_den() != 1) return std::nullopt;
    return std::make_pair(x, Rational(0));
  }
  // a + m k = b (mod n)  <=>  M k = C (mod N) after clearing denominators.
  Rational c = b - a;
  Integer scale;
  mpz_lcm(scale.get_mpz_t(), m.get_den_mpz_t(), n.get_den_mpz_t());
  mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  Integer bm = Rational(m * Rational(scale)).get_num();
  Integer bn = Rational(n * Rational(scale)).get_num();
  Integer bc = Rational(c * Rational(scale)).get_num();
  Integer g;
  mpz_gcd(g.get_mpz_t(), bm.get_mpz_t(), bn.get_mpz_t());
  if (bc % g != 0) return std::nullopt;
  Integer mg = bm / g, ng = bn / g, cg = bc / g;
  Integer k = 0;
  if (ng != 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), mg.get_mpz_t(), ng.get_mpz_t());
    k = (cg * inv) % ng;
    if (k < 0) k += ng;
  }
  Rational lcm_mod = m * Rational(ng);
  return std::make_pair(mod_positive(a + m * Rational(k), lcm_mod), lcm_mod);
}

inline std::string weight_list(const std::vector<Rational>& weights) {
  std::string s;
  for (const auto& w : weights) s += (s.empty() ? "" : ", ") + to_string(w);
  return s;
}

}  // namespace detail

/// Writes f as exp(-sigma y^2) (x, y) 1_E(y), the characteristic function of
/// a Gaussian convolved with Haar on A(X, E), when it has that form.
inline Extraction extract_gaussian_haar(const StratifiedCF& f) {
  const SteinitzSpec& spec = f.spec();
  Support supp = cf_support(f);

  std::vector<Rational> weights;
  std::optional<Rational> sigma;
  bool sigma_conflict = false;
  bool phase_only = false;
  for (const auto& piece : f.pieces()) {
    if (piece.atom.size() != 1) continue;
    const Term& t = piece.atom.front();
    if (std::find(weights.begin(), weights.end(), t.weight) == weights.end()) weights.push_back(t.weight);
    if (abs(t.weight) == 1 && t.weight != 1) phase_only = true;
    if (!piece.stratum.has_nonzero()) continue;
    if (sigma && *sigma != t.sigma) sigma_conflict = true;
    if (!sigma) sigma = t.sigma;
  }
  std::sort(weights.begin(), weights.end(), [](const Rational& a, const Rational& b) {
    if ((a == 1) != (b == 1)) return a == 1;
    return a > b;
  });
  for (const auto& w : weights) {
    if (abs(w) != 1) return NotOfForm{"nonconstant piecewise weights " + detail::weight_list(weights)};
  }
  if (sigma_conflict) return NotOfForm{"Gaussian exponent differs between strata"};
  if (phase_only) return Unknown{"weight -1 is a phase that a non-rational shift might absorb"};
  if (!supp.exact) return Unknown{"several terms on one stratum"};

  SubgroupSpec e = detail::threshold_hull(spec, supp.strata);
  if (!detail::union_equals(spec, supp.strata, e)) {
    if (auto w = detail::closure_witness(f, supp.strata)) {
      return NotOfForm{"support is not a subgroup: " + to_string(w->y1) + " and " + to_string(w->y2) +
                       " lie in it, their sum does not"};
    }
    return Unknown{"support is not of valuation-threshold form"};
  }

  Rational x = 0;
  Rational modulus = 1;
  bool first = true;
  for (const auto& piece : f.pieces()) {
    if (piece.atom.empty() || !piece.stratum.has_nonzero()) continue;
    Rational m = *piece.stratum.shift_modulus(spec);
    const Rational& s = piece.atom.front().shift;
    if (first) {
      x = s;
      modulus = m;
      first = false;
      continue;
    }
    auto c = detail::combine_congruences(x, modulus, s, m);
    if (!c) return Unknown{"strata shifts admit no common point on the rational line"};
    x = c->first;
    modulus = c->second;
  }

  std::optional<Rational> e_mod = e.to_stratum().normalized(spec)->shift_modulus(spec);
  if (!e_mod) {
    x = 0;
  } else if (*e_mod != 0) {
    x = mod_positive(x, *e_mod);
  }
  bool p_invariant = false;
  SolenoidClass cls = classify_solenoid(spec);
  if (const auto* u = std::get_if<UniqueInfinitePrime>(&cls)) {
    p_invariant = e.divisible_by(u->p);
  }
  return Decomposition{SolenoidPoint::from_real(spec, x), x, sigma.value_or(0), e, p_invariant};
}

}  // namespace solenoid

#endif  // SOLENOID_CHARFUN_DECIDE_HPP_
