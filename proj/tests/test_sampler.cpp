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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "solenoid/charfun/decide.hpp"
#include "solenoid/sampler/equidist.hpp"
#include "solenoid/sampler/law.hpp"
#include "solenoid/sampler/sample.hpp"
#include "test_support.hpp"

namespace solenoid {
namespace {

using testing::kInf;
using testing::q;
using testing::repeat;
using testing::spec_of;

const SteinitzSpec kTwo = spec_of({{2, kInf}});
const SteinitzSpec kTwoThree = spec_of({{2, kInf}, {3, kInf}});
constexpr std::uint64_t kSeed = 20261016;

TEST(Sample, DegenerateAndTrivialHaar) {
  auto zero = sample({kTwo, degenerate(SolenoidPoint::zero(kTwo))}, 3, 500, kSeed);
  for (double t : zero.coords) EXPECT_EQ(t, 0.0);
  auto k0 = sample({kTwo, haar(SubgroupSpec::whole())}, 5, 500, kSeed);
  for (double t : k0.coords) EXPECT_EQ(t, 0.0);
  auto pt = sample({kTwo, degenerate(SolenoidPoint(kTwo, 2, q(3, 4)))}, 2, 10, kSeed);
  for (double t : pt.coords) EXPECT_EQ(t, 0.75);
}

// Haar on the annihilator of {v_2 >= -1}: at depth N the coordinate is
// uniform on multiples of 1 / 2^(N-1).
TEST(Sample, HaarFiber) {
  const std::size_t depth = 4;
  auto b = sample({kTwo, haar(SubgroupSpec::from_thresholds({{2, -1}}))}, depth, 8000, kSeed);
  std::map<double, int> counts;
  for (double t : b.coords) {
    double scaled = t * 8;
    EXPECT_EQ(scaled, std::floor(scaled));
    ++counts[t];
  }
  EXPECT_EQ(counts.size(), 8u);
  for (const auto& [t, c] : counts) EXPECT_NEAR(c, 1000, 150);
}

TEST(Sample, Deterministic) {
  SamplerSpec s{kTwoThree, convolution({gaussian_line(2), haar(SubgroupSpec::from_thresholds({{3, -1}}))})};
  auto a = sample(s, 4, 4000, kSeed, 3, 4);
  auto b = sample(s, 4, 4000, kSeed, 3, 4);
  EXPECT_EQ(a.coords, b.coords);
  auto c = sample(s, 4, 4000, kSeed + 1, 3, 4);
  EXPECT_NE(a.coords, c.coords);
  auto d = sample(s, 4, 4000, kSeed, 4, 4);
  EXPECT_NE(a.coords, d.coords);
  for (double t : a.coords) {
    EXPECT_GE(t, 0.0);
    EXPECT_LT(t, 1.0);
  }
  EXPECT_THROW(sample(s, 4, 10, kSeed, 0, 0), Error);
}

TEST(ExactCf, Examples) {
  EXPECT_TRUE(std::holds_alternative<Equal>(
      cf_equal(exact_cf_of(kTwo, degenerate(SolenoidPoint::zero(kTwo))), cf_one(kTwo))));
  Rational c(1, 2);
  auto l = SubgroupSpec::from_thresholds({{2, -1}});
  auto h = SubgroupSpec::from_thresholds({{2, 0}});
  auto piecewise = cf_piecewise(kTwoThree, {{Stratum({{2, ValRange::at_least(0)}}), {{1, 0, 0}}},
                                            {Stratum({{2, ValRange::exactly(-1)}}), {{c, 0, 0}}}});
  EXPECT_TRUE(std::holds_alternative<Equal>(cf_equal(exact_cf_of(kTwoThree, mixture({c, 1 - c}, {haar(l), haar(h)})), piecewise)));
  auto conv = exact_cf_of(kTwo, convolution({gaussian_line(3), haar(l)}));
  EXPECT_TRUE(std::holds_alternative<Equal>(cf_equal(conv, cf_product(cf_gaussian(kTwo, 3), cf_haar(kTwo, l)))));
  auto line = exact_cf_of(kTwo, gaussian_line(1, q(1, 3)));
  EXPECT_TRUE(std::holds_alternative<Equal>(cf_equal(line, cf_gaussian(kTwo, 1, embed_real(kTwo, q(1, 3))))));
}

TEST(Law, Validation) {
  EXPECT_THROW(gaussian_line(-1), Error);
  EXPECT_THROW(mixture({q(1, 2)}, {haar(SubgroupSpec::whole()), haar(SubgroupSpec::whole())}), BadWeights);
  EXPECT_THROW(mixture({q(1, 2), q(1, 4)}, {haar(SubgroupSpec::whole()), haar(SubgroupSpec::whole())}), BadWeights);
  EXPECT_THROW(mixture({q(-1), q(2)}, {haar(SubgroupSpec::whole()), haar(SubgroupSpec::whole())}), BadWeights);
  EXPECT_THROW(convolution({}), Error);
  // sigma = 2 pi^2 s^2
  double s = std::get<GaussianLine>(gaussian_line(1).node).standard_deviation();
  EXPECT_NEAR(2 * std::numbers::pi * std::numbers::pi * s * s, 1.0, 1e-12);
}

TEST(LinearForm, IdentityAndDifference) {
  SamplerSpec s{kTwo, gaussian_line(1)};
  auto a = sample(s, 3, 2000, kSeed, 1);
  auto same = linear_form(kTwo, {a}, {Automorphism(q(1))}, 3);
  for (std::size_t i = 0; i < a.coords.size(); ++i) EXPECT_NEAR(same.coords[i], a.coords[i], 1e-15);
  auto zero = linear_form(kTwo, {a, a}, make_coeffs({q(1), q(-1)}), 3);
  for (double t : zero.coords) EXPECT_TRUE(t < 1e-12 || t > 1 - 1e-12);
  auto b = sample(s, 3, 20000, kSeed, 2);
  auto c = sample(s, 3, 20000, kSeed, 3);
  auto diff = linear_form(kTwo, {b, c}, make_coeffs({q(1), q(-1)}), 3);
  for (const auto& e : empirical_cf(kTwo, diff, {q(1, 8), q(1, 4), q(3, 8)})) EXPECT_LT(std::abs(e.value.imag()), e.radius);
}

TEST(LinearForm, HalvesNeedDeeperSamples) {
  CoeffVector halves = repeat(q(1, 2), 4);
  EXPECT_EQ(depth_for_coeffs(kTwo, halves, 3), 4u);
  // Tower 2, 3, 2, 3, ...: the next factor 3 after depth 2 is a_3.
  EXPECT_EQ(depth_for_coeffs(kTwoThree, make_coeffs({q(2, 3), q(1, 3)}), 2), 4u);
  EXPECT_EQ(depth_for_coeffs(kTwoThree, make_coeffs({q(2, 3), q(1, 3)}), 3), 4u);
  EXPECT_EQ(depth_for_coeffs(kTwoThree, make_coeffs({q(1, 6)}), 3), 5u);
  SamplerSpec s{kTwo, gaussian_line(1)};
  std::vector<SampleBatch> shallow(4, sample(s, 3, 100, kSeed));
  EXPECT_THROW(linear_form(kTwo, shallow, halves, 3), DepthInsufficient);
  std::vector<SampleBatch> deep(4, sample(s, 4, 100, kSeed));
  EXPECT_NO_THROW(linear_form(kTwo, deep, halves, 3));
  EXPECT_THROW(linear_form(kTwo, deep, halves, 5), DepthInsufficient);
  EXPECT_THROW(linear_form(kTwo, deep, repeat(q(1, 3), 4), 3), Error);
  EXPECT_THROW(depth_for_coeffs(kTwo, {Automorphism(q(1, 3))}, 0), DepthInsufficient);
}

// Empirical cf of every law variant against its exact cf.
TEST(EmpiricalCf, AgreesWithExactCf) {
  auto x = embed_real(kTwoThree, q(2, 7), 2);
  std::vector<std::pair<const char*, Law>> laws = {
      {"degenerate", degenerate(x)},
      {"haar", haar(SubgroupSpec::from_thresholds({{2, -2}, {3, 1}}))},
      {"gaussian", gaussian_line(q(1, 2), q(1, 5))},
      {"mixture", mixture({q(1, 3), q(2, 3)}, {haar(SubgroupSpec::from_thresholds({{2, -1}})), gaussian_line(2)})},
      {"shifted", shifted(x, haar(SubgroupSpec::from_thresholds({{3, 0}})))},
      {"convolution", convolution({gaussian_line(q(1, 4)), haar(SubgroupSpec::from_thresholds({{2, 1}}))})},
  };
  const std::size_t depth = 6;
  Integer a = kTwoThree.tower_product(depth);
  std::vector<Rational> ys;
  for (long m : {1, 2, 3, 5, 8, 9, 12, 18, 27, 36, 54, 72, 96, 108, 144, 162, 216, -6, -24, -4}) ys.emplace_back(Integer(m), a);
  for (auto& y : ys) y.canonicalize();
  for (const auto& [name, law] : laws) {
    SamplerSpec s{kTwoThree, law};
    auto batch = sample(s, depth, 20000, kSeed);
    auto exact = exact_cf_of(s);
    for (const auto& e : empirical_cf(kTwoThree, batch, ys)) {
      EXPECT_LE(std::abs(e.value - exact(e.y)), e.radius) << name << " at " << to_string(e.y);
    }
  }
}

TEST(EmpiricalCf, Errors) {
  auto b = sample({kTwo, gaussian_line(1)}, 2, 100, kSeed);
  EXPECT_THROW(empirical_cf(kTwo, b, {q(1, 8)}), CharacterTooDeep);
  EXPECT_THROW(empirical_cf(kTwo, b, {q(1, 3)}), CharacterOutsideGroup);
  SampleBatch empty{2, {}, 0, 0, 1};
  EXPECT_THROW(empirical_cf(kTwo, empty, {q(1)}), Error);
}

TEST(Kuiper, Examples) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> a(1000), point(1000, 0.25);
  for (double& t : a) t = u(rng);
  auto same = kuiper_two_sample(a, a);
  EXPECT_EQ(same.statistic, 0.0);
  EXPECT_NEAR(same.p_value, 1.0, 1e-12);
  EXPECT_LT(kuiper_two_sample(a, point).p_value, 1e-6);
  EXPECT_THROW(kuiper_two_sample({}, a), Error);
}

// Two independent uniform samples are rejected at about the nominal rate.
TEST(Kuiper, Calibration) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  int rejects = 0;
  const int reps = 200;
  for (int r = 0; r < reps; ++r) {
    std::vector<double> a(300), b(300);
    for (double& t : a) t = u(rng);
    for (double& t : b) t = u(rng);
    rejects += kuiper_two_sample(a, b).p_value < 0.05;
  }
  EXPECT_GE(rejects, 2);
  EXPECT_LE(rejects, 22);
}

// Round-off copies of one atom, as produced by the linear form, are one point.
TEST(Kuiper, MergesRoundOffCopiesOfAnAtom) {
  std::vector<double> a(600, 1.0 / 3.0), b(600, 1.0 / 3.0 + 3e-13);
  for (std::size_t i = 0; i < 300; ++i) {
    a[i] = 0.0;
    b[i] = 1.0 - 1e-12;
  }
  auto r = kuiper_two_sample(a, b);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_GT(kuiper_two_sample(a, std::vector<double>(600, 0.34)).statistic, 0.99);
}

TEST(Kuiper, RotationInvariant) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> z(0, 0.1);
  std::vector<double> a(500), b(500), ra(500), rb(500);
  for (std::size_t i = 0; i < 500; ++i) {
    a[i] = detail::wrap01(0.3 + z(rng));
    b[i] = detail::wrap01(0.35 + z(rng));
    ra[i] = detail::wrap01(a[i] + 0.6);
    rb[i] = detail::wrap01(b[i] + 0.6);
  }
  EXPECT_NEAR(kuiper_two_sample(a, b).statistic, kuiper_two_sample(ra, rb).statistic, 1e-12);
}

TEST(Projection, HaarPushdown) {
  SamplerSpec s{kTwoThree, haar(SubgroupSpec::from_thresholds({{2, -1}, {3, -2}}))};
  for (std::size_t n = 1; n < 6; ++n) {
    auto deep = project_batch(kTwoThree, sample(s, n + 1, 10000, kSeed, 1), n);
    auto shallow = sample(s, n, 10000, kSeed, 2);
    EXPECT_GT(kuiper_two_sample(deep.coords, shallow.coords).p_value, 0.01) << "depth " << n;
  }
  EXPECT_THROW(project_batch(kTwoThree, sample(s, 2, 10, kSeed), 3), DepthInsufficient);
}

TEST(Equidist, Examples) {
  EquidistConfig cfg;
  cfg.n = 20000;
  cfg.depth = 4;
  cfg.seed = kSeed;
  auto good = monte_carlo_equidist({kTwo, gaussian_line(1)}, repeat(q(1, 2), 4), cfg);
  EXPECT_TRUE(good.consistent);
  EXPECT_EQ(good.tests, good.cf_gaps.size() + good.kuiper.size());
  EXPECT_EQ(good.sample_depth, 5u);
  auto bad = monte_carlo_equidist({kTwo, gaussian_line(1)}, repeat(q(1, 2), 3), cfg);
  EXPECT_FALSE(bad.consistent);
  EXPECT_LT(bad.min_cf_p, 1e-6);
  auto again = monte_carlo_equidist({kTwo, gaussian_line(1)}, repeat(q(1, 2), 4), cfg);
  EXPECT_EQ(again.min_cf_p, good.min_cf_p);
  EXPECT_EQ(again.min_kuiper_p, good.min_kuiper_p);
}

TEST(Equidist, ZeroVarianceGap) {
  // Two point masses at different places: the gap is decisive with zero variance.
  detail::PhaseMoments a{{1, 0}, 0, 0, 0}, b{{0, 1}, 0, 0, 0};
  auto [chi2, p] = detail::gap_test(a, 100, b, 100);
  EXPECT_TRUE(std::isinf(chi2));
  EXPECT_EQ(p, 0.0);
  auto [c0, p0] = detail::gap_test(a, 100, a, 100);
  EXPECT_EQ(c0, 0.0);
  EXPECT_EQ(p0, 1.0);
}

TEST(Csv, HeaderAndRows) {
  SampleBatch b{3, {0.0, 0.5}, 1, 0, 1};
  std::ostringstream os;
  write_csv(os, b);
  EXPECT_EQ(os.str(), "depth,coord\n3,0\n3,0.5\n");
}

}  // namespace
}  // namespace solenoid
