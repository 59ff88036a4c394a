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

#ifndef SOLENOID_SAMPLER_LAW_HPP_
#define SOLENOID_SAMPLER_LAW_HPP_

#include <cmath>
#include <memory>
#include <numbers>
#include <utility>
#include <variant>
#include <vector>

#include "solenoid/charfun/stratified_cf.hpp"
#include "solenoid/charfun/stratum.hpp"
#include "solenoid/errors.hpp"
#include "solenoid/rational.hpp"
#include "solenoid/tower.hpp"

namespace solenoid {

struct Law;

struct Degenerate {
  SolenoidPoint point;
};

/// Haar distribution of K = A(X, E).
struct HaarAnnihilator {
  SubgroupSpec subgroup;
};

/// Pushforward of N(mean, s^2) on the line. Parametrized by the exact
/// exponent sigma = 2 pi^2 s^2 of its characteristic function.
struct GaussianLine {
  Rational sigma;
  Rational mean;

  double standard_deviation() const { return std::sqrt(sigma.get_d() / 2.0) / std::numbers::pi; }
};

struct Mixture {
  std::vector<Rational> weights;
  std::vector<Law> parts;
};

struct Shifted {
  SolenoidPoint point;
  std::shared_ptr<const Law> inner;
};

struct Convolution {
  std::vector<Law> parts;
};

struct Law {
  std::variant<Degenerate, HaarAnnihilator, GaussianLine, Mixture, Shifted, Convolution> node;
};

struct SamplerSpec {
  SteinitzSpec spec;
  Law law;
};

inline Law degenerate(SolenoidPoint x) { return Law{Degenerate{std::move(x)}}; }
inline Law haar(SubgroupSpec e) { return Law{HaarAnnihilator{std::move(e)}}; }
inline Law gaussian_line(Rational sigma, Rational mean = 0) {
  if (sigma < 0) throw Error("gaussian_line: sigma must be nonnegative");
  return Law{GaussianLine{std::move(sigma), std::move(mean)}};
}
inline Law mixture(std::vector<Rational> weights, std::vector<Law> parts) {
  if (weights.size() != parts.size() || weights.empty()) throw BadWeights("mixture: weights and parts differ in length");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw BadWeights("mixture: negative weight " + to_string(w));
    total += w;
  }
  if (total != 1) throw BadWeights("mixture: weights sum to " + to_string(total));
  return Law{Mixture{std::move(weights), std::move(parts)}};
}
inline Law shifted(SolenoidPoint x, Law inner) {
  return Law{Shifted{std::move(x), std::make_shared<const Law>(std::move(inner))}};
}
inline Law convolution(std::vector<Law> parts) {
  if (parts.empty()) throw Error("convolution: no parts");
  return Law{Convolution{std::move(parts)}};
}

inline StratifiedCF exact_cf_of(const SteinitzSpec& spec, const Law& law) {
  return std::visit(
      [&spec](const auto& node) -> StratifiedCF {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Degenerate>) {
          return cf_gaussian(spec, 0, node.point);
        } else if constexpr (std::is_same_v<T, HaarAnnihilator>) {
          return cf_haar(spec, node.subgroup);
        } else if constexpr (std::is_same_v<T, GaussianLine>) {
          return cf_gaussian(spec, node.sigma, embed_real(spec, node.mean));
        } else if constexpr (std::is_same_v<T, Mixture>) {
          std::vector<StratifiedCF> cfs;
          for (const auto& part : node.parts) cfs.push_back(exact_cf_of(spec, part));
          return cf_mixture(node.weights, cfs);
        } else if constexpr (std::is_same_v<T, Shifted>) {
          return cf_product(cf_gaussian(spec, 0, node.point), exact_cf_of(spec, *node.inner));
        } else {
          StratifiedCF acc = exact_cf_of(spec, node.parts.front());
          for (std::size_t i = 1; i < node.parts.size(); ++i) acc = cf_product(acc, exact_cf_of(spec, node.parts[i]));
          return acc;
        }
      },
      law.node);
}

inline StratifiedCF exact_cf_of(const SamplerSpec& s) { return exact_cf_of(s.spec, s.law); }

}  // namespace solenoid

#endif  // SOLENOID_SAMPLER_LAW_HPP_
