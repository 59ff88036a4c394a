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

#ifndef SOLENOID_CHARFUN_PSD_HPP_
#define SOLENOID_CHARFUN_PSD_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "solenoid/charfun/probes.hpp"
#include "solenoid/charfun/stratified_cf.hpp"

namespace solenoid {

struct PsdReport {
  double min_eigenvalue = std::numeric_limits<double>::infinity();
  double max_modulus = 0;      // largest |f(y)| seen
  bool value_at_zero_is_one = false;
  bool passed = false;
};

/// Necessary condition for positive definiteness: random Gram matrices
/// [f(y_i - y_j)] have no eigenvalue below -tol, f(0) = 1 and |f| <= 1.
inline PsdReport psd_spot_check(const StratifiedCF& f, std::size_t k, std::size_t trials, std::uint64_t seed,
                                double tol = 1e-9) {
  PsdReport report;
  ExactValue at_zero = f.exact(0);
  at_zero.add(-1, 0, 0);
  auto z = at_zero.is_zero();
  report.value_at_zero_is_one = z.value_or(false);

  std::mt19937_64 rng(seed);
  Eigen::MatrixXcd gram(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Rational> ys;
    for (std::size_t i = 0; i < k; ++i) ys.push_back(random_character(f.spec(), rng, 6, 3));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        std::complex<double> v = f(ys[i] - ys[j]);
        report.max_modulus = std::max(report.max_modulus, std::abs(v));
        gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = std::min(report.min_eigenvalue, solver.eigenvalues().minCoeff());
  }
  report.passed = report.value_at_zero_is_one && report.max_modulus <= 1 + tol && report.min_eigenvalue >= -tol;
  return report;
}

}  // namespace solenoid

#endif  // SOLENOID_CHARFUN_PSD_HPP_
