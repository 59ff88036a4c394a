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

#include <fstream>

#include "solenoid/io/config.hpp"
#include "test_support.hpp"

namespace solenoid {
namespace {

using io::Json;
using testing::kInf;
using testing::q;
using testing::spec_of;

TEST(ParseSpec, Examples) {
  EXPECT_EQ(io::parse_spec(Json::parse(R"({"2": "inf", "3": 1})")), spec_of({{2, kInf}, {3, 1}}));
  EXPECT_EQ(io::parse_spec(Json::object()), SteinitzSpec());
  for (const char* bad : {R"({"4": "inf"})", R"({"x": 1})", R"({"2": 0})", R"({"2": "many"})", R"([2])"}) {
    EXPECT_THROW(io::parse_spec(Json::parse(bad)), ParseError) << bad;
  }
}

TEST(ParseSpec, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto spec = testing::random_spec(rng, false);
    EXPECT_EQ(io::parse_spec(io::to_json(spec)), spec);
  }
}

TEST(ParsePoint, Forms) {
  auto spec = spec_of({{2, kInf}});
  auto x = io::parse_point(spec, Json::parse(R"({"depth": 2, "coord": "1/8"})"));
  EXPECT_EQ(x.depth(), 2u);
  EXPECT_EQ(x.coord(), q(1, 8));
  EXPECT_EQ(io::parse_point(spec, Json::parse(R"({"real": "1/3"})")).real_representative(), q(1, 3));
  EXPECT_EQ(io::parse_point(spec, Json("1/3")).real_representative(), q(1, 3));
  EXPECT_THROW(io::parse_point(spec, Json::parse(R"({"depth": 1, "coord": "3/2"})")), ParseError);
  EXPECT_THROW(io::parse_point(spec, Json::parse(R"({"real": "1", "coord": "0"})")), ParseError);
  EXPECT_THROW(io::parse_point(spec, Json::parse(R"({"depth": 1})")), ParseError);

  auto back = io::parse_point(spec, io::to_json(x));
  EXPECT_EQ(back.depth(), x.depth());
  EXPECT_EQ(back.coord(), x.coord());
}

TEST(ParseSubgroup, Forms) {
  EXPECT_EQ(io::parse_subgroup(Json::object()), SubgroupSpec::whole());
  EXPECT_EQ(io::parse_subgroup(Json::parse(R"({"trivial": true})")), SubgroupSpec::trivial());
  auto e = SubgroupSpec::from_thresholds({{3, 0}, {2, -1}});
  EXPECT_EQ(io::parse_subgroup(Json::parse(R"({"thresholds": {"3": 0, "2": -1}})")), e);
  EXPECT_EQ(io::parse_subgroup(io::to_json(e)), e);
  EXPECT_EQ(io::parse_subgroup(io::to_json(SubgroupSpec::trivial())), SubgroupSpec::trivial());
  EXPECT_THROW(io::parse_subgroup(Json::parse(R"({"trivial": true, "thresholds": {"2": 0}})")), ParseError);
  EXPECT_THROW(io::parse_subgroup(Json::parse(R"({"thresholds": {"6": 0}})")), ParseError);
  EXPECT_THROW(io::parse_subgroup(Json::parse(R"({"threshold": {}})")), ParseError);
}

TEST(ParseCf, Constructors) {
  auto spec = spec_of({{2, kInf}, {3, kInf}});
  auto g = io::parse_cf(spec, Json::parse(R"({"gaussian": {"sigma": "2", "shift": "1/4"}})"));
  EXPECT_TRUE(std::holds_alternative<Equal>(cf_equal(g, cf_gaussian(spec, 2, embed_real(spec, q(1, 4))))));

  auto mix = io::parse_cf(spec, Json::parse(R"({"mixture": {"weights": ["1/2", "1/2"], "parts": [
      {"haar": {"thresholds": {"2": 0}}}, {"haar": {"thresholds": {"2": -1}}}]}})"));
  auto piece = io::parse_cf(spec, Json::parse(R"({"piecewise": [
      {"stratum": [{"prime": 2, "op": ">=", "k": 0}], "terms": [{"c": "1"}]},
      {"stratum": [{"prime": 2, "op": "=", "k": -1}], "terms": [{"c": "1/2"}]}]})"));
  EXPECT_TRUE(std::holds_alternative<Equal>(cf_equal(mix, piece)));

  auto prod = io::parse_cf(spec, Json::parse(R"({"product": [{"gaussian": {"sigma": "1"}}, {"haar": {}}]})"));
  EXPECT_TRUE(std::holds_alternative<Equal>(cf_equal(prod, cf_product(cf_gaussian(spec, 1), cf_haar(spec, SubgroupSpec::whole())))));

  auto pre = io::parse_cf(spec, Json::parse(R"({"precompose": {"cf": {"gaussian": {"sigma": "1"}}, "alpha": "2/3"}})"));
  EXPECT_TRUE(std::holds_alternative<Equal>(cf_equal(pre, cf_gaussian(spec, q(4, 9)))));
}

TEST(ParseCf, Rejections) {
  auto spec = spec_of({{2, kInf}});
  for (const char* bad : {
           R"({"gaussian": {"sigma": "-1"}})",
           R"({"gaussian": {"sigma": "1", "mean": "0"}})",
           R"({"gaussian": {}, "haar": {}})",
           R"({"laplace": {}})",
           R"({"product": []})",
           R"({"piecewise": [{"stratum": [{"prime": 2, "op": "<", "k": 0}], "terms": [{"c": "1"}]}]})",
           R"({"piecewise": [{"stratum": [{"prime": 4, "op": "=", "k": 0}], "terms": [{"c": "1"}]}]})",
           R"({"gaussian": {"sigma": 1.5}})",
       }) {
    EXPECT_THROW(io::parse_cf(spec, Json::parse(bad)), ParseError) << bad;
  }
  // Structurally valid but not a characteristic function.
  EXPECT_THROW(io::parse_cf(spec, Json::parse(R"({"mixture": {"weights": ["1/2", "1/3"], "parts": [{"haar": {}}, {"haar": {}}]}})")),
               Error);
}

TEST(ParseLaw, Constructors) {
  auto spec = spec_of({{2, kInf}});
  for (const char* ok : {
           R"({"degenerate": "1/3"})",
           R"({"haar": {"thresholds": {"2": 1}}})",
           R"({"gaussian_line": {"sigma": "1", "mean": "1/2"}})",
           R"({"mixture": {"weights": ["1/4", "3/4"], "parts": [{"haar": {}}, {"degenerate": "0"}]}})",
           R"({"shifted": {"point": "1/3", "law": {"haar": {"thresholds": {"2": 0}}}}})",
           R"({"convolution": [{"gaussian_line": {"sigma": "1"}}, {"haar": {"thresholds": {"2": 0}}}]})",
       }) {
    Law law = io::parse_law(spec, Json::parse(ok));
    StratifiedCF f = exact_cf_of({spec, law});
    EXPECT_EQ(f(0), std::complex<double>(1.0, 0.0)) << ok;
  }
  EXPECT_THROW(io::parse_law(spec, Json::parse(R"({"poisson": {}})")), ParseError);
  EXPECT_THROW(io::parse_law(spec, Json::parse(R"({"convolution": []})")), ParseError);
  EXPECT_THROW(io::parse_law(spec, Json::parse(R"({"gaussian_line": {"sigma": "-1"}})")), ParseError);
}

TEST(ParseConfig, KeysAndValues) {
  auto rc = io::parse_config(Json::parse(R"({
    "description": "d", "solenoid": {"2": "inf"}, "coefficients": ["1/2", -1],
    "simulation": {"n": 10, "depth": 2, "seed": 9, "alpha": 0.05, "streams": 2, "charset": ["1/4"]},
    "p": 2, "q": 3, "l": 2, "c": "1/3", "sigma": "1", "limit": 5})"));
  ASSERT_TRUE(rc.coefficients);
  EXPECT_EQ(rc.coefficients->at(1).value(), -1);
  EXPECT_EQ(rc.simulation.n, 10u);
  EXPECT_EQ(rc.simulation.seed, 9u);
  EXPECT_EQ(rc.simulation.charset, std::vector<Rational>{q(1, 4)});
  EXPECT_EQ(*rc.p, 2u);
  EXPECT_EQ(*rc.l, 2u);
  EXPECT_EQ(*rc.c, q(1, 3));
  EXPECT_EQ(*rc.limit, 5u);

  for (const char* bad : {
           R"({"solenoid": {}, "extra": 1})",
           R"({"description": 3})",
           R"({"coefficients": []})",
           R"({"coefficients": ["0"]})",
           R"({"coefficients": ["1/x"]})",
           R"({"simulation": {"n": 0}})",
           R"({"simulation": {"alpha": 1.5}})",
           R"({"simulation": {"streams": 0}})",
           R"({"simulation": {"seed": -1}})",
           R"({"simulation": {"charset": ["1/3"]}, "solenoid": {"2": "inf"}})",
           R"({"p": 4})",
           R"({"l": 0})",
       }) {
    EXPECT_THROW(io::parse_config(Json::parse(bad)), ParseError) << bad;
  }
}

TEST(ParseConfig, ShippedConfigsLoad) {
  const std::string dir = SOLENOID_CONFIG_DIR;
  for (const char* name : {"check_circle", "check_gaussian_fails", "check_gaussian_haar", "check_gaussian_holds",
                           "check_two_prime_mixture", "classify_2adic", "classify_circle", "classify_two_primes",
                           "counterexample_2_3", "simulate_broken", "simulate_gaussian", "simulate_two_prime",
                           "solve_coeffs_2_2"}) {
    std::ifstream in(dir + "/" + name + ".json");
    ASSERT_TRUE(in) << name;
    EXPECT_NO_THROW(io::parse_config(Json::parse(in))) << name;
  }
}

TEST(Serialize, Shapes) {
  auto spec = spec_of({{2, kInf}, {3, 1}});
  EXPECT_EQ(io::to_json(spec).dump(), R"({"2":"inf","3":1})");
  EXPECT_EQ(io::to_json(q(-3, 4)).dump(), R"("-3/4")");
  EXPECT_EQ(io::to_json(Stratum({{2, ValRange::exactly(-1)}})).dump(),
            R"([{"prime":2,"min":-1,"max":-1,"includes_zero":false}])");
  EXPECT_EQ(io::to_json(Stratum({{2, ValRange::at_least(0)}})).dump(), R"([{"prime":2,"min":0,"includes_zero":true}])");
  EXPECT_EQ(io::to_json(EquationResult{Fails{q(1, 2)}}).dump(), R"({"result":"Fails","witness":"1/2"})");
  EXPECT_EQ(io::to_json(classify_solenoid(spec_of({{2, kInf}})))["class"], "UniqueInfinitePrime(2)");
  EXPECT_EQ(io::to_json(CircleResult{ShiftOfHaar{q(1, 12), Integer(3)}}).dump(),
            R"({"result":"ShiftOfHaar","shift":"1/12","order":"3"})");
}

TEST(Serialize, CfPiecesAreDisjointAndCoverEveryTerm) {
  auto spec = spec_of({{2, kInf}, {3, kInf}});
  auto b = two_prime_counterexample(spec, 2, 3, q(1, 2));
  Json j = io::to_json(b);
  EXPECT_EQ(j["b"], b.coeffs.b.get_str());
  EXPECT_EQ(j["coefficients"].size(), b.coeffs.coeffs.size());
  EXPECT_EQ(j["equation"]["result"], "Holds");
  EXPECT_EQ(j["decomposition"]["result"], "NotOfForm");
  EXPECT_EQ(j["region_cases"].size(), 3u);
  EXPECT_EQ(j["verdict"]["conclusion"], conclusion_name(Conclusion::TwoPrimeCounterexample));
  EXPECT_TRUE(j["verdict"]["coherent"].get<bool>());
  EXPECT_EQ(j["cf"]["piecewise"].size(), b.cf.pieces().size());
}

}  // namespace
}  // namespace solenoid
