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

// solenoid-cli: config-driven front end. Exit codes: 0 success, 1 negative
// verdict, 2 usage or config error, 3 undecided.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "solenoid/io/config.hpp"

namespace fs = std::filesystem;
using namespace solenoid;
using io::Json;

namespace {

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kUnknown = 3 };

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;
  std::optional<std::size_t> depth;
  std::optional<double> alpha;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("config", o.config, "JSON config file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "RNG seed (overrides config and SOLENOID_SEED)")->envname("SOLENOID_SEED");
  cmd->add_option("--n", o.n, "sample size")->check(CLI::PositiveNumber);
  cmd->add_option("--depth", o.depth, "tower depth for simulation");
  cmd->add_option("--alpha", o.alpha, "significance level")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

io::RunConfig load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return io::parse_config(j);
}

fs::path beside(const std::string& config, const std::string& suffix) {
  fs::path p(config);
  return p.parent_path() / (p.stem().string() + suffix);
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void require_json(const Options& o, const char* cmd) {
  if (o.format != "json") throw PreconditionViolated(std::string(cmd) + ": --format csv is not available");
}

int run_classify(const Options& o) {
  require_json(o, "classify");
  io::RunConfig rc = load(o.config);
  Json out{{"command", "classify"}, {"solenoid", io::to_json(rc.solenoid)}, {"character_group", describe(rc.solenoid)}};
  out.update(io::to_json(classify_solenoid(rc.solenoid)));
  out["circle"] = rc.solenoid.empty();
  print(out);
  return kOk;
}

int exit_for(Conclusion c) {
  switch (c) {
    case Conclusion::EquationFails:
    case Conclusion::Contradiction: return kNegative;
    case Conclusion::Undetermined: return kUnknown;
    case Conclusion::InvalidCoefficients: return kUsage;
    default: return kOk;
  }
}

StratifiedCF distribution_of(const io::RunConfig& rc) {
  if (rc.cf) return *rc.cf;
  if (rc.sampler) return exact_cf_of(*rc.sampler);
  throw ParseError("config needs 'cf' or 'sampler'");
}

const CoeffVector& coefficients_of(const io::RunConfig& rc) {
  if (!rc.coefficients) throw ParseError("config needs 'coefficients'");
  return *rc.coefficients;
}

int run_check(const Options& o) {
  require_json(o, "check");
  io::RunConfig rc = load(o.config);
  StratifiedCF f = distribution_of(rc);
  const CoeffVector& coeffs = coefficients_of(rc);
  TheoremVerdict v = classify_and_conclude(rc.solenoid, coeffs, f);
  Json out{{"command", "check"}, {"solenoid", io::to_json(rc.solenoid)}, {"coefficients", io::to_json(coeffs)}};
  out["cf"] = io::to_json(f);
  out["support"] = io::to_json(support_is_subgroup(f));
  out["verdict"] = io::to_json(v);
  int code = exit_for(v.conclusion);
  if (rc.solenoid.empty() && coeffs.size() >= 2) {
    unsigned plus = 0, minus = 0;
    for (const auto& a : coeffs) {
      if (a.value() == 1) ++plus;
      if (a.value() == -1) ++minus;
    }
    if (plus + minus == coeffs.size()) out["circle"] = io::to_json(circle_check(plus, minus, f));
  }
  print(out);
  return code;
}

EquidistConfig simulation_of(const io::RunConfig& rc, const Options& o) {
  EquidistConfig cfg = rc.simulation;
  if (o.seed) cfg.seed = *o.seed;
  if (o.n) cfg.n = *o.n;
  if (o.depth) cfg.depth = *o.depth;
  if (o.alpha) cfg.alpha = *o.alpha;
  return cfg;
}

int run_simulate(const Options& o) {
  io::RunConfig rc = load(o.config);
  if (!rc.sampler) throw ParseError("simulate needs 'sampler'");
  const CoeffVector& coeffs = coefficients_of(rc);
  EquidistConfig cfg = simulation_of(rc, o);
  EquidistBatches batches = equidist_batches(*rc.sampler, coeffs, cfg);
  EquidistReport report = compare_batches(*rc.sampler, batches, cfg);

  fs::path ref = beside(o.config, ".reference.csv");
  fs::path lin = beside(o.config, ".linear_form.csv");
  {
    std::ofstream a(ref), b(lin);
    if (!a || !b) throw Error("cannot write CSV next to " + o.config);
    write_csv(a, batches.reference);
    write_csv(b, batches.combined);
  }

  if (o.format == "csv") {
    std::cout << "test,parameter,statistic,p_value\n";
    std::cout.precision(17);
    for (const auto& g : report.cf_gaps) std::cout << "cf_gap," << to_string(g.y) << ',' << g.chi2 << ',' << g.p_value << '\n';
    for (const auto& [d, k] : report.kuiper) std::cout << "kuiper," << d << ',' << k.statistic << ',' << k.p_value << '\n';
  } else {
    Json out{{"command", "simulate"}, {"solenoid", io::to_json(rc.solenoid)}, {"coefficients", io::to_json(coeffs)}};
    out["exact_equation"] = io::to_json(check_functional_equation(exact_cf_of(*rc.sampler), coeffs));
    out["simulation"] = io::to_json(report);
    out["csv"] = {ref.filename().string(), lin.filename().string()};
    print(out);
  }
  return report.consistent ? kOk : kNegative;
}

int run_solve_coeffs(const Options& o) {
  io::RunConfig rc = load(o.config);
  if (!rc.p || !rc.l) throw ParseError("solve-coeffs needs 'p' and 'l'");
  std::size_t limit = rc.limit.value_or(100'000);
  Integer count = count_k_vectors(*rc.p, *rc.l);
  bool listed = count <= Integer(static_cast<unsigned long>(limit));
  std::vector<KVector> sols;
  if (listed) sols = solve_k_vector(*rc.p, *rc.l, limit);

  if (o.format == "csv") {
    if (!listed) throw PreconditionViolated("solve-coeffs: " + count.get_str() + " solutions exceed the limit");
    for (unsigned j = 1; j <= *rc.l; ++j) std::cout << (j > 1 ? "," : "") << "k_" << j;
    std::cout << '\n';
    for (const auto& k : sols) {
      for (std::size_t j = 0; j < k.size(); ++j) std::cout << (j ? "," : "") << k[j];
      std::cout << '\n';
    }
    return kOk;
  }
  Json table = Json::array();
  for (const auto& k : sols) table.push_back(k);
  Json out{{"command", "solve-coeffs"}, {"p", *rc.p}, {"l", *rc.l}, {"count", count.get_str()}, {"listed", listed}};
  out["equation"] = "sum_j k_j / p^(2j) = 1";
  out["solutions"] = table;
  print(out);
  return kOk;
}

template <typename R>
int status_of(const R& r) {
  if (std::holds_alternative<Unknown>(r)) return kUnknown;
  return 0;
}

int run_counterexample(const Options& o) {
  require_json(o, "counterexample");
  io::RunConfig rc = load(o.config);
  if (!rc.p || !rc.q) throw ParseError("counterexample needs 'p' and 'q'");
  Rational c = rc.c.value_or(Rational(1, 2));
  SteinitzSpec spec = rc.solenoid.empty()
                          ? SteinitzSpec({{*rc.p, Multiplicity::infinite()}, {*rc.q, Multiplicity::infinite()}})
                          : rc.solenoid;
  std::uint64_t seed = o.seed.value_or(rc.simulation.seed);
  Json out{{"command", "counterexample"}, {"solenoid", io::to_json(spec)}, {"p", *rc.p}, {"q", *rc.q}};
  out["c"] = to_string(c);

  CounterexampleBundle b = two_prime_counterexample(spec, *rc.p, *rc.q, c, seed);
  out["bundle"] = io::to_json(b);
  bool ok = std::holds_alternative<Holds>(b.equation) && std::holds_alternative<NotOfForm>(b.decomposition) &&
            std::holds_alternative<Equal>(b.mixture_matches) && b.psd.passed;
  bool unknown = status_of(b.equation) || status_of(b.decomposition) || status_of(b.mixture_matches);
  for (const auto& rcase : b.cases) ok = ok && rcase.lhs_matches && rcase.rhs_matches;
  if (rc.sigma) {
    FullSupportBundle fs = full_support_counterexample(spec, *rc.p, *rc.q, c, *rc.sigma, seed);
    out["full_support"] = io::to_json(fs);
    ok = ok && std::holds_alternative<Holds>(fs.equation) && std::holds_alternative<NotOfForm>(fs.decomposition) &&
         fs.psd.passed;
    unknown = unknown || status_of(fs.equation) || status_of(fs.decomposition);
  }

  fs::path file = beside(o.config, ".bundle.json");
  std::ofstream f(file);
  if (!f) throw Error("cannot write " + file.string());
  f << out.dump(2) << '\n';
  out["bundle_file"] = file.filename().string();
  print(out);
  if (ok) return kOk;
  return unknown ? kUnknown : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributions on a-adic solenoids: exact checks, simulation and counterexamples"};
  app.require_subcommand(1);
  Options o;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"classify", "classify the solenoid and describe its automorphisms", run_classify},
      {"check", "exact check of the functional equation, with decomposition", run_check},
      {"simulate", "Monte Carlo comparison of xi with the linear form", run_simulate},
      {"solve-coeffs", "solutions k of sum_j k_j / p^(2j) = 1", run_solve_coeffs},
      {"counterexample", "build and check the two-prime counterexample", run_counterexample},
  };
  for (const auto& c : commands) add_common(app.add_subcommand(c.name, c.help), o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    for (const auto& c : commands) {
      if (app.got_subcommand(c.name)) return c.run(o);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
