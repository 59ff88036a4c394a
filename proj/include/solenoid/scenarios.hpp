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

// Self-checking cases: the Gaussian x Haar characterization on solenoids
// with one infinite prime, its two-prime counterexample (with and without a
// Gaussian factor), and the circle, where solutions are shifted Haar laws.

#ifndef SOLENOID_SCENARIOS_HPP_
#define SOLENOID_SCENARIOS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "solenoid/automorphism.hpp"
#include "solenoid/charfun/decide.hpp"
#include "solenoid/charfun/psd.hpp"
#include "solenoid/charfun/stratified_cf.hpp"
#include "solenoid/charfun/stratum.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/sampler/equidist.hpp"
#include "solenoid/sampler/law.hpp"
#include "solenoid/tower.hpp"

namespace solenoid {

enum class Conclusion {
  GaussianHaarCharacterization,  // one infinite prime, equation holds, f = Gaussian * Haar
  EquationFails,
  TwoPrimeCounterexample,         // several infinite primes, equation holds, no such form
  HoldsWithDecomposition,         // holds and decomposes, characterization not applicable
  HoldsWithoutDecomposition,
  DegenerateCoefficients,         // fewer than two coefficients
  InvalidCoefficients,            // some coefficient is not an automorphism
  Undetermined,                   // an exact step returned Unknown
  Contradiction,                  // one infinite prime, holds, yet not of the form: a bug
};

inline std::string conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::GaussianHaarCharacterization: return "GaussianHaarCharacterization";
    case Conclusion::EquationFails: return "EquationFails";
    case Conclusion::TwoPrimeCounterexample: return "TwoPrimeCounterexample";
    case Conclusion::HoldsWithDecomposition: return "HoldsWithDecomposition";
    case Conclusion::HoldsWithoutDecomposition: return "HoldsWithoutDecomposition";
    case Conclusion::DegenerateCoefficients: return "DegenerateCoefficients";
    case Conclusion::InvalidCoefficients: return "InvalidCoefficients";
    case Conclusion::Undetermined: return "Undetermined";
    case Conclusion::Contradiction: return "Contradiction";
  }
  return "?";
}

inline std::string conclusion_text(Conclusion c) {
  switch (c) {
    case Conclusion::GaussianHaarCharacterization:
      return "the solenoid has a single infinite prime p and the equation holds, so the law is a Gaussian "
             "convolved with Haar on a compact subgroup K with pK = K; the decomposition was found";
    case Conclusion::EquationFails:
      return "xi and the linear form are not identically distributed";
    case Conclusion::TwoPrimeCounterexample:
      return "two or more primes have infinite multiplicity: the equation holds but the law is not a Gaussian "
             "convolved with a Haar distribution, so the characterization fails on this solenoid";
    case Conclusion::HoldsWithDecomposition:
      return "the equation holds and the law is Gaussian convolved with Haar";
    case Conclusion::HoldsWithoutDecomposition:
      return "the equation holds and the law is not Gaussian convolved with Haar";
    case Conclusion::DegenerateCoefficients:
      return "fewer than two coefficients: the statement needs n >= 2, the equation is checked only as a "
             "degenerate case";
    case Conclusion::InvalidCoefficients:
      return "a coefficient is not a topological automorphism of the solenoid";
    case Conclusion::Undetermined:
      return "an exact step could not decide; see the Unknown reason";
    case Conclusion::Contradiction:
      return "inconsistent results: the characterization predicts a decomposition that was not found";
  }
  return "?";
}

struct TheoremVerdict {
  SolenoidClass solenoid_class;
  bool coeffs_valid = false;
  bool sum_squares_one = false;
  bool degenerate_length = false;
  std::optional<EquationResult> equation;
  std::optional<Extraction> decomposition;
  bool nowhere_zero = false;
  std::optional<bool> nonvanishing_means_full_subgroup;  // set when checked
  std::optional<EquidistReport> simulation;
  Conclusion conclusion = Conclusion::Undetermined;
  std::vector<std::string> warnings;
};

namespace detail {

inline bool covers_everything(const StratifiedCF& f) {
  Support s = cf_support(f);
  return s.exact && uncovered(f.spec(), Stratum::whole(), s.strata).empty();
}

}  // namespace detail

/// Full pipeline: coefficient validity, sum of squares, solenoid class, exact
/// equation, decomposition, and the cross-checks between them.
inline TheoremVerdict classify_and_conclude(const SteinitzSpec& spec, const CoeffVector& coeffs, const StratifiedCF& f) {
  if (!(f.spec() == spec)) throw SpecMismatch();
  TheoremVerdict v;
  v.solenoid_class = classify_solenoid(spec);
  v.coeffs_valid = !coeffs.empty() && all_automorphisms(spec, coeffs);
  v.sum_squares_one = check_sum_squares_one(coeffs);
  v.degenerate_length = is_degenerate_length(coeffs);
  if (v.degenerate_length) v.warnings.push_back("degenerate coefficient vector (n < 2)");
  if (!v.sum_squares_one) v.warnings.push_back("coefficients do not satisfy sum of squares = 1");
  if (!v.coeffs_valid) {
    v.conclusion = Conclusion::InvalidCoefficients;
    return v;
  }
  v.equation = check_functional_equation(f, coeffs);
  v.decomposition = extract_gaussian_haar(f);
  v.nowhere_zero = detail::covers_everything(f);

  if (std::holds_alternative<Unknown>(*v.equation)) {
    v.conclusion = Conclusion::Undetermined;
    return v;
  }
  if (std::holds_alternative<Fails>(*v.equation)) {
    v.conclusion = Conclusion::EquationFails;
    return v;
  }
  if (v.degenerate_length) {
    v.conclusion = Conclusion::DegenerateCoefficients;
    return v;
  }
  const auto* dec = std::get_if<Decomposition>(&*v.decomposition);
  bool not_of_form = std::holds_alternative<NotOfForm>(*v.decomposition);
  bool unique = std::holds_alternative<UniqueInfinitePrime>(v.solenoid_class);
  if (unique && v.sum_squares_one) {
    if (dec) {
      v.conclusion = Conclusion::GaussianHaarCharacterization;
      // A nowhere-vanishing solution must be a pure Gaussian.
      if (v.nowhere_zero) v.nonvanishing_means_full_subgroup = dec->subgroup.canonical(spec) == SubgroupSpec::whole();
    } else {
      v.conclusion = not_of_form ? Conclusion::Contradiction : Conclusion::Undetermined;
    }
    return v;
  }
  if (dec) {
    v.conclusion = Conclusion::HoldsWithDecomposition;
  } else if (not_of_form) {
    v.conclusion = std::holds_alternative<MultipleInfinitePrimes>(v.solenoid_class)
                       ? Conclusion::TwoPrimeCounterexample
                       : Conclusion::HoldsWithoutDecomposition;
  } else {
    v.conclusion = Conclusion::Undetermined;
  }
  return v;
}

/// Machine check that the conclusion matches the component results.
inline bool verdict_is_coherent(const TheoremVerdict& v) {
  auto holds = [&] { return v.equation && std::holds_alternative<Holds>(*v.equation); };
  auto decomposed = [&] { return v.decomposition && std::holds_alternative<Decomposition>(*v.decomposition); };
  bool unique = std::holds_alternative<UniqueInfinitePrime>(v.solenoid_class);
  switch (v.conclusion) {
    case Conclusion::GaussianHaarCharacterization:
      return unique && holds() && decomposed() && v.nonvanishing_means_full_subgroup.value_or(true);
    case Conclusion::EquationFails:
      return v.equation && std::holds_alternative<Fails>(*v.equation);
    case Conclusion::TwoPrimeCounterexample:
      return !unique && holds() && v.decomposition && std::holds_alternative<NotOfForm>(*v.decomposition);
    case Conclusion::HoldsWithDecomposition:
      return holds() && decomposed();
    case Conclusion::HoldsWithoutDecomposition:
      return holds() && !decomposed();
    case Conclusion::DegenerateCoefficients:
      return v.degenerate_length && holds();
    case Conclusion::InvalidCoefficients:
      return !v.coeffs_valid;
    case Conclusion::Undetermined:
      return true;
    case Conclusion::Contradiction:
      return false;
  }
  return false;
}

// --- Gaussian x Haar with pK = K ------------------------------------------------

struct GaussianHaarScenario {
  StratifiedCF cf;
  SamplerSpec sampler;
  EquationResult equation;
  Extraction decomposition;
  bool round_trip;  // decomposition recovers (sigma, E, shift mod Ann(E)), p-invariant
  TheoremVerdict verdict;
};

/// xi_j i.i.d. with law Gaussian(sigma, shift) * Haar(A(X, E)).
///
/// Requires a single infinite prime p, coefficients +-p^-k with squares
/// summing to 1, E closed under division by p, and (sum alpha_j - 1) shift
/// annihilated by E, so that the shift itself is reproduced by the linear form.
inline GaussianHaarScenario gaussian_haar_scenario(const SteinitzSpec& spec, const Rational& sigma,
                                                   const SubgroupSpec& e, const SolenoidPoint& shift,
                                                   const CoeffVector& coeffs,
                                                   const std::optional<EquidistConfig>& simulate = std::nullopt) {
  auto cls = classify_solenoid(spec);
  const auto* unique = std::get_if<UniqueInfinitePrime>(&cls);
  if (!unique) throw PreconditionViolated("solenoid must have exactly one prime of infinite multiplicity");
  Prime p = unique->p;
  if (coeffs.empty()) throw PreconditionViolated("no coefficients");
  Rational sum = 0;
  for (const auto& a : coeffs) {
    Rational mag = abs(a.value());
    bool power = mag.get_num() == 1 && prime_factors(mag.get_den()).size() <= 1 &&
                 (mag.get_den() == 1 || prime_factors(mag.get_den()).front() == p);
    if (!power) throw PreconditionViolated("coefficient " + to_string(a.value()) + " is not of the form +-p^-k");
    sum += a.value();
  }
  if (!check_sum_squares_one(coeffs)) throw PreconditionViolated("coefficients do not satisfy sum of squares = 1");
  SubgroupSpec ec = e.canonical(spec);
  if (!ec.divisible_by(p)) {
    throw PreconditionViolated("E has a finite v_" + std::to_string(p) + " threshold, so pK != K");
  }
  if (sigma < 0) throw PreconditionViolated("sigma must be nonnegative");
  if (!(shift.spec() == spec)) throw SpecMismatch();
  auto e_mod = ec.to_stratum().normalized(spec)->shift_modulus(spec);
  Rational drift = (sum - 1) * shift.real_representative();
  if (e_mod && !(*e_mod == 0 ? drift == 0 : Rational(drift / *e_mod).get_den() == 1)) {
    throw PreconditionViolated("(sum of coefficients - 1) * shift is not annihilated by E");
  }

  StratifiedCF cf = cf_product(cf_gaussian(spec, sigma, shift), cf_haar(spec, ec));
  SamplerSpec sampler{spec, shifted(shift, convolution({gaussian_line(sigma), haar(ec)}))};
  EquationResult eq = check_functional_equation(cf, coeffs);
  Extraction ext = extract_gaussian_haar(cf);
  bool round_trip = false;
  if (const auto* d = std::get_if<Decomposition>(&ext)) {
    Rational diff = d->shift_real - shift.real_representative();
    bool shift_ok = !e_mod || (*e_mod == 0 ? diff == 0 : Rational(diff / *e_mod).get_den() == 1);
    round_trip = d->sigma == (e_mod ? sigma : Rational(0)) && d->subgroup == ec && d->p_invariant && shift_ok;
  }
  TheoremVerdict verdict = classify_and_conclude(spec, coeffs, cf);
  if (simulate) verdict.simulation = monte_carlo_equidist(sampler, coeffs, *simulate);
  return {cf, sampler, eq, ext, round_trip, verdict};
}

// --- the two-prime counterexample ----------------------------------------------

/// The value the construction predicts on each region, recomputed from the
/// refined right-hand side of the equation.
struct RegionCase {
  std::string region;
  Rational expected;
  bool lhs_matches;
  bool rhs_matches;
};

struct CounterexampleBundle {
  CounterexampleCoeffs coeffs;
  StratifiedCF cf;          // piecewise: 1 on H, c on H_1, 0 off L
  StratifiedCF mixture_cf;  // c Haar(A(X, L)) + (1 - c) Haar(A(X, H))
  SamplerSpec sampler;
  Comparison mixture_matches;
  EquationResult equation;
  std::vector<RegionCase> cases;
  Extraction decomposition;
  SubgroupDecision support;
  PsdReport psd;
  TheoremVerdict verdict;
};

namespace detail {

inline void require_counterexample_inputs(const SteinitzSpec& spec, Prime p, Prime q, const Rational& c) {
  if (p == q || !is_prime(p) || !is_prime(q)) throw PreconditionViolated("p and q must be distinct primes");
  if (!spec.is_infinite(p) || !spec.is_infinite(q)) {
    throw PreconditionViolated("p and q must both have infinite multiplicity");
  }
  if (!(c > 0 && c < 1)) throw PreconditionViolated("c must lie strictly between 0 and 1");
}

/// Every piece of g meeting `region` carries the single term (w, sigma, 0),
/// or nothing when w = 0.
inline bool constant_on(const StratifiedCF& g, const Stratum& region, const Rational& w, const Rational& sigma) {
  bool met = false;
  for (const auto& piece : g.pieces()) {
    auto s = piece.stratum.intersect(region).normalized(g.spec());
    if (!s) continue;
    met = true;
    Atom want;
    if (w != 0) want.push_back({w, sigma, 0});
    if (canonical_atom(piece.atom, s->shift_modulus(g.spec())) != canonical_atom(want, s->shift_modulus(g.spec()))) {
      return false;
    }
  }
  return met;
}

inline Stratum valuation_stratum(Prime p, ValRange r) { return Stratum({{p, r}}); }

inline std::vector<RegionCase> region_cases(const StratifiedCF& f, const CoeffVector& coeffs, Prime p,
                                            const Rational& c, const Rational& sigma) {
  StratifiedCF g = cf_precompose(f, coeffs.front());
  for (std::size_t j = 1; j < coeffs.size(); ++j) g = cf_product(g, cf_precompose(f, coeffs[j]));
  std::vector<std::pair<std::string, std::pair<Stratum, Rational>>> regions{
      {"H (v_p >= 0)", {valuation_stratum(p, ValRange::at_least(0)), Rational(1)}},
      {"H_1 (v_p = -1)", {valuation_stratum(p, ValRange::exactly(-1)), c}},
      {"outside L (v_p <= -2)", {valuation_stratum(p, ValRange::at_most(-2)), Rational(0)}},
  };
  std::vector<RegionCase> out;
  for (const auto& [name, rv] : regions) {
    out.push_back({name, rv.second, constant_on(f, rv.first, rv.second, sigma), constant_on(g, rv.first, rv.second, sigma)});
  }
  return out;
}

}  // namespace detail

inline CounterexampleBundle two_prime_counterexample(const SteinitzSpec& spec, Prime p, Prime q, const Rational& c,
                                                     std::uint64_t psd_seed = 1) {
  detail::require_counterexample_inputs(spec, p, q, c);
  CounterexampleCoeffs coeffs = counterexample_coeffs(p, q);
  auto h = SubgroupSpec::from_thresholds({{p, 0}});
  auto l = SubgroupSpec::from_thresholds({{p, -1}});
  StratifiedCF f = cf_piecewise(spec, {{detail::valuation_stratum(p, ValRange::at_least(0)), {{1, 0, 0}}},
                                       {detail::valuation_stratum(p, ValRange::exactly(-1)), {{c, 0, 0}}}});
  StratifiedCF mix = cf_mixture({c, 1 - c}, {cf_haar(spec, l), cf_haar(spec, h)});
  SamplerSpec sampler{spec, mixture({c, 1 - c}, {haar(l), haar(h)})};
  return {coeffs,
          f,
          mix,
          sampler,
          cf_equal(mix, f),
          check_functional_equation(f, coeffs.coeffs),
          detail::region_cases(f, coeffs.coeffs, p, c, 0),
          extract_gaussian_haar(f),
          support_is_subgroup(f),
          psd_spot_check(f, 8, 100, psd_seed),
          classify_and_conclude(spec, coeffs.coeffs, f)};
}

struct FullSupportBundle {
  CounterexampleBundle base;
  StratifiedCF cf;  // Gaussian(sigma) times the counterexample
  EquationResult equation;
  std::vector<RegionCase> cases;
  SubgroupDecision support;
  Extraction decomposition;
  bool gaussian_factor_full_support;
  PsdReport psd;
};

/// The counterexample convolved with a Gaussian: the law is no longer
/// carried by a proper closed subgroup, yet the equation still holds and the
/// characteristic function still vanishes off L.
inline FullSupportBundle full_support_counterexample(const SteinitzSpec& spec, Prime p, Prime q, const Rational& c,
                                                     const Rational& sigma, std::uint64_t psd_seed = 1) {
  if (sigma < 0) throw PreconditionViolated("sigma must be nonnegative");
  CounterexampleBundle base = two_prime_counterexample(spec, p, q, c, psd_seed);
  StratifiedCF gauss = cf_gaussian(spec, sigma);
  StratifiedCF lambda = cf_product(gauss, base.cf);
  auto gauss_support = support_is_subgroup(gauss);
  bool full = false;
  if (const auto* s = std::get_if<IsSubgroup>(&gauss_support)) full = s->subgroup.canonical(spec) == SubgroupSpec::whole();
  return {base,
          lambda,
          check_functional_equation(lambda, base.coeffs.coeffs),
          detail::region_cases(lambda, base.coeffs.coeffs, p, c, sigma),
          support_is_subgroup(lambda),
          extract_gaussian_haar(lambda),
          full,
          psd_spot_check(lambda, 8, 100, psd_seed)};
}

// --- the circle -------------------------------------------------------------------

/// f(y) = (x, y) on dZ and 0 elsewhere: the law is Haar on the cyclic group
/// of order d, shifted by x. d = 0 stands for the support {0} (Haar on the
/// whole circle), where x is immaterial.
struct ShiftOfHaar {
  Rational shift;  // in [0, 1/d)
  Integer order;
};
struct CircleFails {
  Rational witness;
};
using CircleResult = std::variant<ShiftOfHaar, CircleFails, Unknown>;

/// Checks f(y) = f(y)^m+ f(-y)^m- on Y = Z and, when it holds, recovers the
/// shifted Haar law.
inline CircleResult circle_check(unsigned m_plus, unsigned m_minus, const StratifiedCF& f) {
  if (!f.spec().empty()) throw PreconditionViolated("circle_check needs the circle (empty Steinitz data)");
  if (m_plus + m_minus < 2) throw PreconditionViolated("m_plus + m_minus must be at least 2");
  std::optional<StratifiedCF> rhs;
  auto times = [&rhs](const StratifiedCF& g) { rhs = rhs ? cf_product(*rhs, g) : g; };
  StratifiedCF reflected = cf_precompose(f, Automorphism(Rational(-1)));
  for (unsigned i = 0; i < m_plus; ++i) times(f);
  for (unsigned i = 0; i < m_minus; ++i) times(reflected);
  auto eq = cf_equal(f, *rhs);
  if (const auto* d = std::get_if<Differs>(&eq)) return CircleFails{d->witness};
  if (const auto* u = std::get_if<Unknown>(&eq)) return *u;

  auto ext = extract_gaussian_haar(f);
  if (const auto* u = std::get_if<Unknown>(&ext)) return *u;
  if (const auto* n = std::get_if<NotOfForm>(&ext)) return Unknown{"equation holds but " + n->reason};
  const auto& dec = std::get<Decomposition>(ext);
  if (dec.sigma != 0) {
    // |f| < 1 somewhere on the support; find where the equation breaks.
    return Unknown{"equation holds with a nonzero Gaussian exponent"};
  }
  if (dec.subgroup.is_trivial()) return ShiftOfHaar{0, 0};
  Integer d = 1;
  for (const auto& [prime, t] : dec.subgroup.thresholds()) {
    if (t > 0) d *= pow_integer(prime, static_cast<unsigned long>(t));
  }
  return ShiftOfHaar{mod_positive(dec.shift_real, Rational(Integer(1), d)), d};
}

}  // namespace solenoid

#endif  // SOLENOID_SCENARIOS_HPP_
