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

#ifndef SOLENOID_SAMPLER_SAMPLE_HPP_
#define SOLENOID_SAMPLER_SAMPLE_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "solenoid/automorphism.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/rational.hpp"
#include "solenoid/sampler/law.hpp"
#include "solenoid/steinitz.hpp"

namespace solenoid {

inline constexpr std::size_t kDefaultStreams = 4;
inline constexpr const char* kRngName = "mt19937_64/seed_seq(seed,salt,stream)";

/// Draws of the depth-N circle coordinate of a law.
struct SampleBatch {
  std::size_t depth = 0;
  std::vector<double> coords;
  std::uint64_t seed = 0;
  std::uint64_t salt = 0;
  std::size_t streams = kDefaultStreams;
};

namespace detail {

inline double wrap01(double t) {
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

/// Point coordinate at a given depth.
inline double point_coord(const SolenoidPoint& x, std::size_t depth) {
  SolenoidPoint at = depth >= x.depth() ? x.lift(depth) : x.project(depth);
  return at.coord().get_d();
}

using FiberTable = std::map<const HaarAnnihilator*, Integer>;

/// Fiber sizes d_N of every Haar node, computed once per batch.
inline void collect_fibers(const Law& law, const SteinitzSpec& spec, std::size_t depth, FiberTable& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, HaarAnnihilator>) {
          auto d = node.subgroup.canonical(spec).fiber_order(spec, depth);
          out[&node] = d ? *d : Integer(0);  // 0: K = X, uniform on the circle
        } else if constexpr (std::is_same_v<T, Mixture> || std::is_same_v<T, Convolution>) {
          for (const auto& part : node.parts) collect_fibers(part, spec, depth, out);
        } else if constexpr (std::is_same_v<T, Shifted>) {
          collect_fibers(*node.inner, spec, depth, out);
        }
      },
      law.node);
}

inline double draw(const Law& law, const FiberTable& fibers, std::size_t depth, double tower, std::mt19937_64& rng) {
  return std::visit(
      [&](const auto& node) -> double {
        using T = std::decay_t<decltype(node)>;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        if constexpr (std::is_same_v<T, Degenerate>) {
          return point_coord(node.point, depth);
        } else if constexpr (std::is_same_v<T, HaarAnnihilator>) {
          const Integer& d = fibers.at(&node);
          // Beyond 2^53 points the fiber is finer than a double resolves.
          if (d == 0 || d > Integer(1) << 53) return unit(rng);
          std::uniform_int_distribution<std::uint64_t> j(0, d.get_ui() - 1);
          return static_cast<double>(j(rng)) / d.get_d();
        } else if constexpr (std::is_same_v<T, GaussianLine>) {
          std::normal_distribution<double> z(0.0, 1.0);
          return wrap01((node.mean.get_d() + node.standard_deviation() * z(rng)) / tower);
        } else if constexpr (std::is_same_v<T, Mixture>) {
          double u = unit(rng);
          double acc = 0;
          std::size_t pick = node.parts.size() - 1;
          for (std::size_t i = 0; i < node.weights.size(); ++i) {
            acc += node.weights[i].get_d();
            if (u < acc) {
              pick = i;
              break;
            }
          }
          return draw(node.parts[pick], fibers, depth, tower, rng);
        } else if constexpr (std::is_same_v<T, Shifted>) {
          return wrap01(point_coord(node.point, depth) + draw(*node.inner, fibers, depth, tower, rng));
        } else {
          double t = 0;
          for (const auto& part : node.parts) t += draw(part, fibers, depth, tower, rng);
          return wrap01(t);
        }
      },
      law.node);
}

}  // namespace detail

/// n i.i.d. draws at `depth`, split over `streams` independently seeded
/// generators run in parallel. Output depends only on (seed, salt, streams).
inline SampleBatch sample(const SamplerSpec& s, std::size_t depth, std::size_t n, std::uint64_t seed,
                          std::uint64_t salt = 0, std::size_t streams = kDefaultStreams) {
  if (streams == 0) throw Error("sample: streams must be positive");
  SampleBatch batch{depth, std::vector<double>(n), seed, salt, streams};
  double tower = s.spec.tower_product(depth).get_d();
  detail::FiberTable fibers;
  detail::collect_fibers(s.law, s.spec, depth, fibers);
  std::vector<std::thread> workers;
  for (std::size_t k = 0; k < streams; ++k) {
    std::size_t begin = n * k / streams;
    std::size_t end = n * (k + 1) / streams;
    workers.emplace_back([&, k, begin, end] {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32),
                        static_cast<std::uint32_t>(k)};
      std::mt19937_64 rng(seq);
      for (std::size_t i = begin; i < end; ++i) batch.coords[i] = detail::draw(s.law, fibers, depth, tower, rng);
    });
  }
  for (auto& w : workers) w.join();
  return batch;
}

/// t_N = (A_M / A_N) t_M mod 1.
inline SampleBatch project_batch(const SteinitzSpec& spec, const SampleBatch& b, std::size_t depth) {
  if (depth > b.depth) throw DepthInsufficient("project_batch: target depth above batch depth");
  double ratio = Integer(spec.tower_product(b.depth) / spec.tower_product(depth)).get_d();
  SampleBatch out = b;
  out.depth = depth;
  for (double& t : out.coords) t = detail::wrap01(ratio * t);
  return out;
}

/// Smallest sample depth M >= out_depth at which every alpha = u/v acts on
/// depth-`out_depth` coordinates, i.e. v divides A_M / A_N.
inline std::size_t depth_for_coeffs(const SteinitzSpec& spec, const CoeffVector& coeffs, std::size_t out_depth) {
  Integer need = 1;
  for (const auto& a : coeffs) mpz_lcm(need.get_mpz_t(), need.get_mpz_t(), a.value().get_den_mpz_t());
  Integer base = spec.tower_product(out_depth);
  for (std::size_t m = out_depth; m < out_depth + 256; ++m) {
    Integer ratio = spec.tower_product(m) / base;
    if (ratio % need == 0) return m;
  }
  throw DepthInsufficient("depth_for_coeffs: denominators never divide the tower");
}

/// Per draw, alpha_1 xi_1 + ... + alpha_n xi_n at `out_depth`, from batches
/// at a common depth M: t'_N = u (A_M / (v A_N)) t_M mod 1 for alpha = u/v.
inline SampleBatch linear_form(const SteinitzSpec& spec, const std::vector<SampleBatch>& batches,
                               const CoeffVector& coeffs, std::size_t out_depth) {
  if (batches.size() != coeffs.size() || batches.empty()) throw Error("linear_form: one batch per coefficient");
  std::size_t m = batches.front().depth;
  std::size_t n = batches.front().coords.size();
  for (const auto& b : batches) {
    if (b.depth != m || b.coords.size() != n) throw Error("linear_form: batches differ in depth or size");
  }
  if (out_depth > m) throw DepthInsufficient("linear_form: output depth above sample depth");
  Integer ratio = spec.tower_product(m) / spec.tower_product(out_depth);
  std::vector<double> factors;
  for (const auto& a : coeffs) {
    if (!is_automorphism(spec, a)) throw Error("linear_form: " + to_string(a.value()) + " is not an automorphism");
    Integer v = a.value().get_den();
    if (ratio % v != 0) {
      throw DepthInsufficient("linear_form: " + to_string(a.value()) + " needs deeper samples than depth " +
                              std::to_string(m));
    }
    factors.push_back(Integer(a.value().get_num() * (ratio / v)).get_d());
  }
  SampleBatch out{out_depth, std::vector<double>(n, 0.0), batches.front().seed, batches.front().salt,
                  batches.front().streams};
  for (std::size_t j = 0; j < batches.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      out.coords[i] = detail::wrap01(out.coords[i] + detail::wrap01(factors[j] * batches[j].coords[i]));
    }
  }
  return out;
}

struct CfEstimate {
  Rational y;
  std::complex<double> value;
  double radius;  // 3 / sqrt(n)
};

/// Mean of exp(2 pi i m t_N) for y = m / A_N.
inline std::vector<CfEstimate> empirical_cf(const SteinitzSpec& spec, const SampleBatch& b,
                                            const std::vector<Rational>& ys) {
  if (b.coords.empty()) throw Error("empirical_cf: empty batch");
  Rational tower(spec.tower_product(b.depth));
  std::vector<CfEstimate> out;
  for (const auto& y : ys) {
    if (!spec.contains(y)) throw CharacterOutsideGroup(to_string(y));
    Rational m = y * tower;
    if (m.get_den() != 1) {
      throw CharacterTooDeep("empirical_cf: " + to_string(y) + " needs depth beyond " + std::to_string(b.depth));
    }
    double md = m.get_d();
    long double re = 0, im = 0;
    for (double t : b.coords) {
      double angle = 2.0 * std::numbers::pi * detail::wrap01(md * t);
      re += std::cos(angle);
      im += std::sin(angle);
    }
    auto n = static_cast<long double>(b.coords.size());
    out.push_back({y, {static_cast<double>(re / n), static_cast<double>(im / n)}, 3.0 / std::sqrt(static_cast<double>(n))});
  }
  return out;
}

/// CSV with header `depth,coord`.
inline void write_csv(std::ostream& os, const SampleBatch& b) {
  os << "depth,coord\n";
  os.precision(17);
  for (double t : b.coords) os << b.depth << ',' << t << '\n';
}

}  // namespace solenoid

#endif  // SOLENOID_SAMPLER_SAMPLE_HPP_
