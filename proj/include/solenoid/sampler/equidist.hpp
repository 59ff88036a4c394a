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

// Two-sample tests on circle coordinates, and the Monte Carlo comparison of
// xi against alpha_1 xi_1 + ... + alpha_n xi_n.

#ifndef SOLENOID_SAMPLER_EQUIDIST_HPP_
#define SOLENOID_SAMPLER_EQUIDIST_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "solenoid/automorphism.hpp"
#include "solenoid/rational.hpp"
#include "solenoid/sampler/sample.hpp"

namespace solenoid {

struct KuiperResult {
  double statistic;
  double p_value;
};

/// Asymptotic tail of the Kuiper distribution.
inline double kuiper_tail(double lambda) {
  if (lambda < 0.4) return 1.0;
  double sum = 0;
  for (int j = 1; j <= 100; ++j) {
    double a = 2.0 * j * j * lambda * lambda;
    double term = (2.0 * a - 1.0) * std::exp(-a);
    sum += term;
    if (std::abs(term) < 1e-16 * std::max(1e-300, std::abs(sum))) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

/// Coordinates closer than this are one point in the two-sample tests. The
/// linear form and projections multiply coordinates by integers up to A_M, so
/// an atom such as 1/3 comes back with round-off of order A_M * 1e-16; atoms
/// of the laws compared here are at least 1/A_N apart.
inline constexpr double kTieTolerance = 1e-9;

/// V = D+ + D- between the two empirical distribution functions, with values
/// within kTieTolerance merged (and values just below 1 read as 0); the value
/// is invariant under rotating the circle.
inline KuiperResult kuiper_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw Error("kuiper_two_sample: empty sample");
  for (auto* v : {&a, &b}) {
    for (double& t : *v) {
      if (t > 1.0 - kTieTolerance) t = 0.0;
    }
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double na = static_cast<double>(a.size());
  double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d_plus = 0, d_minus = 0;
  while (i < a.size() || j < b.size()) {
    double t = std::min(i < a.size() ? a[i] : 2.0, j < b.size() ? b[j] : 2.0) + kTieTolerance;
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    double diff = static_cast<double>(i) / na - static_cast<double>(j) / nb;
    d_plus = std::max(d_plus, diff);
    d_minus = std::max(d_minus, -diff);
  }
  double v = d_plus + d_minus;
  double ne = na * nb / (na + nb);
  double root = std::sqrt(ne);
  return {v, kuiper_tail((root + 0.155 + 0.24 / root) * v)};
}

struct CfGap {
  Rational y;
  std::complex<double> reference;  // independent draw of xi
  std::complex<double> combined;   // the linear form
  double chi2;
  double p_value;
};

namespace detail {

struct PhaseMoments {
  std::complex<double> mean;
  double var_re, var_im, cov;
};

inline PhaseMoments phase_moments(const SampleBatch& b, double m) {
  long double sr = 0, si = 0, srr = 0, sii = 0, sri = 0;
  for (double t : b.coords) {
    double angle = 2.0 * std::numbers::pi * wrap01(m * t);
    long double c = std::cos(angle), s = std::sin(angle);
    sr += c;
    si += s;
    srr += c * c;
    sii += s * s;
    sri += c * s;
  }
  auto n = static_cast<long double>(b.coords.size());
  long double mr = sr / n, mi = si / n;
  return {{static_cast<double>(mr), static_cast<double>(mi)}, static_cast<double>(srr / n - mr * mr),
          static_cast<double>(sii / n - mi * mi), static_cast<double>(sri / n - mr * mi)};
}

/// Chi-square statistic of the mean difference of two independent samples of
/// a point on the unit circle, with the pooled covariance. Directions of zero
/// variance drop out (a gap there is decisive on its own).
inline std::pair<double, double> gap_test(const PhaseMoments& a, std::size_t na, const PhaseMoments& b, std::size_t nb) {
  double xx = a.var_re / na + b.var_re / nb;
  double yy = a.var_im / na + b.var_im / nb;
  double xy = a.cov / na + b.cov / nb;
  std::complex<double> d = a.mean - b.mean;
  double tr = xx + yy;
  double det = xx * yy - xy * xy;
  double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  double l1 = tr / 2 + disc, l2 = tr / 2 - disc;
  // Eigenvector for l1; l2's is orthogonal.
  double ex = xy, ey = l1 - xx;
  if (std::hypot(ex, ey) < 1e-300) {
    ex = l1 - yy;
    ey = xy;
  }
  if (std::hypot(ex, ey) < 1e-300) {
    ex = 1;
    ey = 0;
  }
  double norm = std::hypot(ex, ey);
  ex /= norm;
  ey /= norm;
  double p1 = d.real() * ex + d.imag() * ey;
  double p2 = -d.real() * ey + d.imag() * ex;
  constexpr double kFloor = 1e-14;
  double chi2 = 0;
  int dof = 0;
  for (auto [proj, lam] : {std::pair{p1, l1}, std::pair{p2, l2}}) {
    if (lam > kFloor) {
      chi2 += proj * proj / lam;
      ++dof;
    } else if (std::abs(proj) > 1e-9) {
      return {std::numeric_limits<double>::infinity(), 0.0};
    }
  }
  if (dof == 0) return {0.0, 1.0};
  double p = dof == 2 ? std::exp(-chi2 / 2) : std::erfc(std::sqrt(chi2 / 2));
  return {chi2, p};
}

}  // namespace detail

struct EquidistConfig {
  std::size_t n = 100'000;
  std::size_t depth = 6;
  std::vector<Rational> charset;  // empty: default probes k / A_N
  std::uint64_t seed = 0;
  double alpha = 0.01;
  std::size_t streams = kDefaultStreams;
};

struct EquidistReport {
  std::size_t n;
  std::size_t depth;
  std::size_t sample_depth;
  std::uint64_t seed;
  std::size_t streams;
  double alpha;
  std::string rng;
  std::vector<CfGap> cf_gaps;
  std::vector<std::pair<std::size_t, KuiperResult>> kuiper;  // (depth, result)
  double min_cf_p;
  double min_kuiper_p;
  std::size_t tests;
  bool consistent;
};

/// Characters k / A_N for N = 0..depth and k = 1, 2, 3.
inline std::vector<Rational> default_charset(const SteinitzSpec& spec, std::size_t depth) {
  std::vector<Rational> out;
  for (std::size_t d = 0; d <= depth; ++d) {
    Rational base(Integer(1), spec.tower_product(d));
    for (int k = 1; k <= 3; ++k) {
      Rational y = base * k;
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
  }
  return out;
}

/// The two samples being compared: an independent draw of xi and the
/// linear form, both at cfg.depth.
struct EquidistBatches {
  SampleBatch reference;
  SampleBatch combined;
  std::size_t sample_depth;
};

/// xi_j uses salt j + 1 and the reference salt 0, so all n + 1 samples are
/// independent streams of the same seed.
inline EquidistBatches equidist_batches(const SamplerSpec& s, const CoeffVector& coeffs, const EquidistConfig& cfg) {
  if (coeffs.empty()) throw Error("monte_carlo_equidist: no coefficients");
  std::size_t m = depth_for_coeffs(s.spec, coeffs, cfg.depth);
  std::vector<SampleBatch> parts;
  for (std::size_t j = 0; j < coeffs.size(); ++j) parts.push_back(sample(s, m, cfg.n, cfg.seed, j + 1, cfg.streams));
  return {sample(s, cfg.depth, cfg.n, cfg.seed, 0, cfg.streams), linear_form(s.spec, parts, coeffs, cfg.depth), m};
}

/// Compares the linear form with the reference by empirical cf gaps on the
/// charset and by Kuiper tests at depths 1..depth. The verdict is Consistent
/// when no p-value falls below alpha / (number of tests).
inline EquidistReport compare_batches(const SamplerSpec& s, const EquidistBatches& b, const EquidistConfig& cfg) {
  const SampleBatch& reference = b.reference;
  const SampleBatch& combined = b.combined;
  EquidistReport r{cfg.n, cfg.depth, b.sample_depth, cfg.seed, cfg.streams, cfg.alpha, kRngName, {}, {}, 1.0, 1.0, 0, true};
  Rational tower(s.spec.tower_product(cfg.depth));
  std::vector<Rational> charset = cfg.charset.empty() ? default_charset(s.spec, cfg.depth) : cfg.charset;
  for (const auto& y : charset) {
    Rational k = y * tower;
    if (!s.spec.contains(y)) throw CharacterOutsideGroup(to_string(y));
    if (k.get_den() != 1) {
      throw CharacterTooDeep("monte_carlo_equidist: " + to_string(y) + " needs depth beyond " + std::to_string(cfg.depth));
    }
    auto a = detail::phase_moments(reference, k.get_d());
    auto c = detail::phase_moments(combined, k.get_d());
    auto [chi2, p] = detail::gap_test(a, cfg.n, c, cfg.n);
    r.cf_gaps.push_back({y, a.mean, c.mean, chi2, p});
    r.min_cf_p = std::min(r.min_cf_p, p);
  }
  for (std::size_t d = 1; d <= cfg.depth; ++d) {
    auto kr = kuiper_two_sample(project_batch(s.spec, reference, d).coords, project_batch(s.spec, combined, d).coords);
    r.kuiper.emplace_back(d, kr);
    r.min_kuiper_p = std::min(r.min_kuiper_p, kr.p_value);
  }
  r.tests = r.cf_gaps.size() + r.kuiper.size();
  double level = cfg.alpha / static_cast<double>(std::max<std::size_t>(1, r.tests));
  r.consistent = r.min_cf_p >= level && r.min_kuiper_p >= level;
  return r;
}

/// Draws xi_1..xi_n and an independent reference xi and compares xi with
/// alpha_1 xi_1 + ... + alpha_n xi_n.
inline EquidistReport monte_carlo_equidist(const SamplerSpec& s, const CoeffVector& coeffs, const EquidistConfig& cfg) {
  return compare_batches(s, equidist_batches(s, coeffs, cfg), cfg);
}

}  // namespace solenoid

#endif  // SOLENOID_SAMPLER_EQUIDIST_HPP_
