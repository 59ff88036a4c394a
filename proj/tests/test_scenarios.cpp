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

#include "solenoid/scenarios.hpp"
#include "test_support.hpp"

namespace solenoid {
namespace {

using testing::kInf;
using testing::q;
using testing::repeat;
using testing::spec_of;

const SteinitzSpec kTwo = spec_of({{2, kInf}});
const SteinitzSpec kTwoThree = spec_of({{2, kInf}, {3, kInf}});

TEST(GaussianHaar, Examples) {
  auto a = gaussian_haar_scenario(kTwo, 1, SubgroupSpec::whole(), SolenoidPoint::zero(kTwo), repeat(q(1, 2), 4));
  EXPECT_TRUE(std::holds_alternative<Holds>(a.equation));
  ASSERT_TRUE(std::holds_alternative<Decomposition>(a.decomposition));
  EXPECT_EQ(std::get<Decomposition>(a.decomposition).sigma, 1);
  EXPECT_EQ(std::get<Decomposition>(a.decomposition).subgroup, SubgroupSpec::whole());
  EXPECT_TRUE(a.round_trip);
  EXPECT_EQ(a.verdict.conclusion, Conclusion::GaussianHaarCharacterization);
  EXPECT_TRUE(verdict_is_coherent(a.verdict));
  EXPECT_EQ(a.verdict.nonvanishing_means_full_subgroup, true);

  auto b = gaussian_haar_scenario(kTwo, 0, SubgroupSpec::whole(), SolenoidPoint::zero(kTwo), repeat(q(1, 2), 4));
  EXPECT_TRUE(std::holds_alternative<Holds>(b.equation));
  EXPECT_TRUE(b.round_trip);

  auto spec = spec_of({{2, kInf}, {3, 1}});
  auto c = gaussian_haar_scenario(spec, 2, SubgroupSpec::from_thresholds({{3, 0}}), SolenoidPoint::zero(spec),
                                  repeat(q(1, 2), 4));
  EXPECT_TRUE(std::holds_alternative<Holds>(c.equation));
  ASSERT_TRUE(std::holds_alternative<Decomposition>(c.decomposition));
  EXPECT_TRUE(std::get<Decomposition>(c.decomposition).p_invariant);
  EXPECT_TRUE(c.round_trip);
}

TEST(GaussianHaar, ShiftNeedsCoefficientsSummingToOne) {
  auto x = embed_real(kTwo, q(1, 3));
  auto ok = gaussian_haar_scenario(kTwo, 1, SubgroupSpec::whole(), x, make_coeffs({q(1, 2), q(1, 2), q(1, 2), q(-1, 2)}));
  EXPECT_TRUE(std::holds_alternative<Holds>(ok.equation));
  EXPECT_TRUE(ok.round_trip);
  EXPECT_THROW(gaussian_haar_scenario(kTwo, 1, SubgroupSpec::whole(), x, repeat(q(1, 2), 4)), PreconditionViolated);
  // With E trivial every shift is annihilated.
  auto trivial = gaussian_haar_scenario(kTwo, 1, SubgroupSpec::trivial(), x, repeat(q(1, 2), 4));
  EXPECT_TRUE(std::holds_alternative<Holds>(trivial.equation));
  EXPECT_TRUE(trivial.round_trip);
}

TEST(GaussianHaar, Preconditions) {
  auto zero2 = SolenoidPoint::zero(kTwo);
  auto halves = repeat(q(1, 2), 4);
  EXPECT_THROW(gaussian_haar_scenario(kTwoThree, 1, SubgroupSpec::whole(), SolenoidPoint::zero(kTwoThree), halves),
               PreconditionViolated);
  EXPECT_THROW(gaussian_haar_scenario(kTwo, 1, SubgroupSpec::from_thresholds({{2, 0}}), zero2, halves),
               PreconditionViolated);
  EXPECT_THROW(gaussian_haar_scenario(kTwo, 1, SubgroupSpec::whole(), zero2, repeat(q(1, 2), 3)), PreconditionViolated);
  EXPECT_THROW(gaussian_haar_scenario(kTwo, 1, SubgroupSpec::whole(), zero2, make_coeffs({q(3, 5), q(4, 5)})),
               PreconditionViolated);
  EXPECT_THROW(gaussian_haar_scenario(kTwo, -1, SubgroupSpec::whole(), zero2, halves), PreconditionViolated);
  EXPECT_THROW(gaussian_haar_scenario(kTwo, 1, SubgroupSpec::whole(), zero2, {}), PreconditionViolated);
}

TEST(TwoPrime, Bundle) {
  auto b = two_prime_counterexample(kTwoThree, 2, 3, q(1, 2));
  EXPECT_EQ(b.coeffs.coeffs.size(), 3u);
  EXPECT_EQ(b.coeffs.coeffs[0].value(), q(2, 3));
  EXPECT_TRUE(std::holds_alternative<Holds>(b.equation));
  EXPECT_TRUE(std::holds_alternative<NotOfForm>(b.decomposition));
  EXPECT_TRUE(std::holds_alternative<Equal>(b.mixture_matches));
  EXPECT_TRUE(b.psd.passed);
  ASSERT_TRUE(std::holds_alternative<IsSubgroup>(b.support));
  EXPECT_EQ(std::get<IsSubgroup>(b.support).subgroup, SubgroupSpec::from_thresholds({{2, -1}}));
  EXPECT_NEAR(b.cf(1).real(), 1.0, 1e-15);
  EXPECT_NEAR(b.cf(q(1, 2)).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(b.cf(q(1, 4))), 0.0, 1e-15);
  ASSERT_EQ(b.cases.size(), 3u);
  for (const auto& c : b.cases) {
    EXPECT_TRUE(c.lhs_matches) << c.region;
    EXPECT_TRUE(c.rhs_matches) << c.region;
  }
  EXPECT_EQ(b.verdict.conclusion, Conclusion::TwoPrimeCounterexample);
  EXPECT_TRUE(verdict_is_coherent(b.verdict));
}

// Both sides of the equation evaluated directly, for several c and (p, q).
TEST(TwoPrime, PointwiseEquation) {
  for (auto [p, qq] : std::vector<std::pair<Prime, Prime>>{{2, 3}, {3, 2}, {2, 5}}) {
    auto spec = spec_of({{p, kInf}, {qq, kInf}});
    for (Rational c : {q(1, 4), q(1, 2), q(3, 4)}) {
      auto b = two_prime_counterexample(spec, p, qq, c);
      auto direct = [&](const Rational& y) -> double {
        if (y == 0) return 1;
        long v = *valuation(y, p);
        return v >= 0 ? 1.0 : (v == -1 ? c.get_d() : 0.0);
      };
      std::mt19937_64 rng(p * 10 + qq);
      for (int k = 0; k < 60; ++k) {
        Rational y = testing::random_member(spec, rng, 30, 3);
        double rhs = 1;
        for (const auto& a : b.coeffs.coeffs) rhs *= direct(a.value() * y);
        EXPECT_NEAR(direct(y), rhs, 1e-12) << to_string(y);
        EXPECT_NEAR(b.cf(y).real(), direct(y), 1e-12);
      }
    }
  }
}

TEST(TwoPrime, Preconditions) {
  EXPECT_THROW(two_prime_counterexample(kTwoThree, 2, 2, q(1, 2)), PreconditionViolated);
  EXPECT_THROW(two_prime_counterexample(kTwo, 2, 3, q(1, 2)), PreconditionViolated);
  EXPECT_THROW(two_prime_counterexample(kTwoThree, 2, 3, q(0)), PreconditionViolated);
  EXPECT_THROW(two_prime_counterexample(kTwoThree, 2, 3, q(1)), PreconditionViolated);
  EXPECT_THROW(two_prime_counterexample(spec_of({{2, kInf}, {3, 4}}), 2, 3, q(1, 2)), PreconditionViolated);
}

TEST(FullSupport, Examples) {
  auto b = full_support_counterexample(kTwoThree, 2, 3, q(1, 2), 1);
  EXPECT_NEAR(b.cf(1).real(), std::exp(-1.0), 1e-12);
  EXPECT_NEAR(b.cf(q(1, 2)).real(), std::exp(-0.25) / 2, 1e-12);
  EXPECT_NEAR(std::abs(b.cf(q(1, 4))), 0.0, 1e-15);
  EXPECT_TRUE(std::holds_alternative<Holds>(b.equation));
  EXPECT_TRUE(std::holds_alternative<NotOfForm>(b.decomposition));
  EXPECT_TRUE(b.gaussian_factor_full_support);
  ASSERT_TRUE(std::holds_alternative<IsSubgroup>(b.support));
  EXPECT_EQ(std::get<IsSubgroup>(b.support).subgroup, SubgroupSpec::from_thresholds({{2, -1}}));
  for (const auto& c : b.cases) EXPECT_TRUE(c.lhs_matches && c.rhs_matches) << c.region;
  EXPECT_TRUE(b.psd.passed);

  auto zero = full_support_counterexample(kTwoThree, 2, 3, q(1, 2), 0);
  EXPECT_TRUE(std::holds_alternative<Equal>(cf_equal(zero.cf, zero.base.cf)));
  EXPECT_THROW(full_support_counterexample(kTwoThree, 2, 3, q(1, 2), -1), PreconditionViolated);
}

TEST(Conclude, Examples) {
  auto g = classify_and_conclude(kTwo, repeat(q(1, 2), 4), cf_gaussian(kTwo, 2));
  EXPECT_EQ(g.conclusion, Conclusion::GaussianHaarCharacterization);
  EXPECT_TRUE(verdict_is_coherent(g));

  auto fails = classify_and_conclude(kTwo, repeat(q(1, 2), 3), cf_gaussian(kTwo, 2));
  EXPECT_EQ(fails.conclusion, Conclusion::EquationFails);
  EXPECT_TRUE(verdict_is_coherent(fails));

  auto fin = spec_of({{2, 1}, {3, 1}});
  auto degenerate = classify_and_conclude(fin, {Automorphism(q(1))}, cf_gaussian(fin, 1));
  EXPECT_EQ(degenerate.conclusion, Conclusion::DegenerateCoefficients);
  EXPECT_TRUE(degenerate.degenerate_length);
  EXPECT_FALSE(degenerate.warnings.empty());

  auto invalid = classify_and_conclude(kTwo, make_coeffs({q(1, 3), q(1, 3)}), cf_gaussian(kTwo, 1));
  EXPECT_EQ(invalid.conclusion, Conclusion::InvalidCoefficients);
  EXPECT_TRUE(verdict_is_coherent(invalid));
  EXPECT_THROW(classify_and_conclude(kTwoThree, repeat(q(1, 2), 4), cf_gaussian(kTwo, 1)), SpecMismatch);
}

// Never a Gaussian x Haar conclusion for the two-prime construction.
TEST(Conclude, NoDecompositionOffTheUniqueClass) {
  for (Rational c : {q(1, 4), q(1, 2), q(3, 4)}) {
    auto b = two_prime_counterexample(kTwoThree, 2, 3, c);
    EXPECT_NE(b.verdict.conclusion, Conclusion::GaussianHaarCharacterization);
    EXPECT_NE(b.verdict.conclusion, Conclusion::HoldsWithDecomposition);
  }
}

TEST(Conclude, SimulationAgreesWithExactVerdict) {
  EquidistConfig cfg;
  cfg.n = 20000;
  cfg.depth = 4;
  cfg.seed = 20261016;
  auto a = gaussian_haar_scenario(kTwo, 1, SubgroupSpec::whole(), SolenoidPoint::zero(kTwo), repeat(q(1, 2), 4), cfg);
  ASSERT_TRUE(a.verdict.simulation.has_value());
  EXPECT_TRUE(a.verdict.simulation->consistent);
}

TEST(Circle, Examples) {
  SteinitzSpec z;
  auto one = circle_check(2, 1, cf_one(z));
  ASSERT_TRUE(std::holds_alternative<ShiftOfHaar>(one));
  EXPECT_EQ(std::get<ShiftOfHaar>(one).shift, 0);
  EXPECT_EQ(std::get<ShiftOfHaar>(one).order, 1);

  auto three = circle_check(3, 0, cf_haar(z, SubgroupSpec::from_thresholds({{3, 1}})));
  ASSERT_TRUE(std::holds_alternative<ShiftOfHaar>(three));
  EXPECT_EQ(std::get<ShiftOfHaar>(three).shift, 0);
  EXPECT_EQ(std::get<ShiftOfHaar>(three).order, 3);

  for (auto [mp, mm] : std::vector<std::pair<unsigned, unsigned>>{{2, 0}, {1, 1}, {2, 1}, {3, 2}}) {
    EXPECT_TRUE(std::holds_alternative<CircleFails>(circle_check(mp, mm, cf_gaussian(z, 1)))) << mp << "," << mm;
  }
}

TEST(Circle, RecoversShiftAndOrder) {
  SteinitzSpec z;
  for (long d : {1, 2, 3, 6}) {
    std::map<Prime, long> t;
    for (Prime p : prime_factors(Integer(d))) t[p] = static_cast<long>(*valuation(Integer(d), p));
    auto e = SubgroupSpec::from_thresholds(t);
    for (long k = 0; k < d; ++k) {
      Rational x(k, 5 * d);
      x.canonicalize();
      auto f = cf_product(cf_haar(z, e), cf_gaussian(z, 0, embed_real(z, x)));
      // m_+ - m_- = 1 keeps the shift; other splits need d x integral.
      auto r = circle_check(2, 1, f);
      ASSERT_TRUE(std::holds_alternative<ShiftOfHaar>(r)) << "d=" << d << " x=" << to_string(x);
      EXPECT_EQ(std::get<ShiftOfHaar>(r).order, d);
      EXPECT_EQ(std::get<ShiftOfHaar>(r).shift, mod_positive(x, Rational(1, d)));
    }
  }
}

TEST(Circle, Preconditions) {
  EXPECT_THROW(circle_check(2, 0, cf_one(kTwo)), PreconditionViolated);
  EXPECT_THROW(circle_check(1, 0, cf_one(SteinitzSpec())), PreconditionViolated);
}

}  // namespace
}  // namespace solenoid
