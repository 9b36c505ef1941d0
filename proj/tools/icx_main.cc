// Copyright 2026 The icx Authors
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

// Command-line front end: solve, eval, compare, brute-force, check-costfn,
// gen and query-experiment. Every command prints JSON on stdout.
//
// Exit codes: 0 ok, 1 internal error, 2 parse error, 3 validation failure,
// 4 cost-class failure in randomized mode, 5 oracle size limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "icx/errors.h"
#include "icx/hard_instances.h"
#include "icx/io.h"
#include "icx/report.h"

namespace {

using icx::json;

enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kValidation = 3,
  kCostClass = 4,
  kSizeLimit = 5,
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw icx::InputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

json ReadJson(const std::string& path) {
  try {
    return json::parse(ReadFile(path));
  } catch (const json::parse_error& e) {
    throw icx::InputError(path + ": invalid JSON: " + e.what());
  }
}

void WriteFile(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw icx::InputError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

struct Common {
  double tol = icx::kDefaultTol;
  double alpha_grid = 1e-4;
  bool timing = false;
  std::string out;

  icx::ReportSettings settings() const { return {tol, alpha_grid, timing}; }
};

void Emit(const Common& common, const json& j) {
  std::cout << j.dump(2) << "\n";
  if (!common.out.empty()) WriteFile(common.out, j);
}

json GenFamily(const std::string& family, int n, int k, std::uint64_t seed,
               std::optional<int> m, const std::string& scheme_out,
               const std::string& sidecar) {
  if (family == "intro") return icx::InstanceToJson(icx::GenIntroExample());
  if (family == "gap") {
    const icx::Instance inst = icx::GenGapInstance(n);
    if (!scheme_out.empty()) {
      WriteFile(scheme_out,
                icx::SchemeToJson(inst, icx::GapReferenceScheme(inst, n)));
    }
    return icx::InstanceToJson(inst);
  }
  if (family == "nonic") {
    const icx::NonIcExample ex = icx::GenNonIcExample();
    if (!scheme_out.empty()) {
      WriteFile(scheme_out, icx::SchemeToJson(ex.instance, ex.non_ic_scheme));
    }
    return icx::InstanceToJson(ex.instance);
  }
  if (family == "xos-hard") {
    const icx::HardParams params = icx::HardParams::Random(k, seed, m);
    const icx::Instance inst = icx::GenXosHard(params);
    json cyclic = json::array();
    for (std::uint32_t c : icx::Cyclic(params.T, k)) {
      cyclic.push_back(icx::SubsetToJson(inst, icx::FromRing(c)));
    }
    json side = {{"k", k},
                 {"m", params.m()},
                 {"seed", seed},
                 {"T", icx::SubsetToJson(inst, icx::FromRing(params.T))},
                 {"cyclic", cyclic}};
    if (params.default_m()) {
      side["optimal_scheme"] =
          icx::SchemeToJson(inst, icx::UniqueOptimalScheme(params));
      side["optimal_utility"] = icx::UniqueOptimalUtility(params);
      if (!scheme_out.empty()) WriteFile(scheme_out, side["optimal_scheme"]);
    }
    WriteFile(sidecar, side);
    return icx::InstanceToJson(inst);
  }
  throw icx::InputError("unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal incentive-compatible inspection schemes"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--tol", common.tol, "IC and comparison tolerance")
      ->envname("ICX_TOL")
      ->capture_default_str();
  app.add_option("--alpha-grid", common.alpha_grid,
                 "payment grid resolution of the randomized oracle")
      ->envname("ICX_ALPHA_GRID")
      ->capture_default_str();
  app.add_flag("--timing", common.timing,
               "include wall-clock time (output is then not reproducible)");
  app.add_option("--out", common.out, "also write the JSON output here");

  std::string instance_path;
  std::string scheme_path;
  std::string mode = "det";

  auto* solve = app.add_subcommand("solve", "optimal IC scheme");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--mode", mode)->check(CLI::IsMember({"det", "rand"}))
      ->capture_default_str();

  auto* eval = app.add_subcommand("eval", "evaluate a scheme");
  eval->add_option("instance", instance_path)->required();
  eval->add_option("scheme", scheme_path)->required();

  auto* compare = app.add_subcommand("compare", "solver against brute force");
  compare->add_option("instance", instance_path)->required();
  compare->add_option("--mode", mode)->check(CLI::IsMember({"det", "rand"}))
      ->capture_default_str();

  auto* brute = app.add_subcommand("brute-force", "brute-force oracle only");
  brute->add_option("instance", instance_path)->required();
  brute->add_option("--mode", mode)->check(CLI::IsMember({"det", "rand"}))
      ->capture_default_str();

  std::uint64_t seed = 1;
  int samples = 20000;
  auto* check = app.add_subcommand("check-costfn",
                                   "monotonicity and submodularity check");
  check->add_option("instance", instance_path)->required();
  check->add_option("--seed", seed, "seed for sampled checks")
      ->capture_default_str();
  check->add_option("--samples", samples)->capture_default_str();

  std::string family;
  int n = 10;
  int k = 7;
  std::optional<int> m;
  std::string scheme_out;
  std::string sidecar;
  auto* gen = app.add_subcommand("gen", "generate a fixture instance");
  gen->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"intro", "gap", "nonic", "xos-hard"}));
  gen->add_option("--n", n, "gap family size")->capture_default_str();
  gen->add_option("--k", k, "xos-hard ring size (prime > 5)")
      ->capture_default_str();
  gen->add_option("--seed", seed, "xos-hard: seed for T")->capture_default_str();
  gen->add_option("--m", m, "xos-hard: ring set size override");
  gen->add_option("--scheme-out", scheme_out, "write the reference scheme");
  gen->add_option("--sidecar", sidecar,
                  "xos-hard: T file (default <out>.T.json or "
                  "xos-hard-k<k>-seed<seed>.T.json)");

  int trials = 500;
  auto* query = app.add_subcommand("query-experiment",
                                   "value queries needed to locate cyclic(T)");
  query->add_option("--k", k)->capture_default_str();
  query->add_option("--trials", trials)->capture_default_str();
  query->add_option("--seed", seed)->capture_default_str();
  query->add_option("--m", m, "ring set size override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*solve) {
      const icx::Instance inst = icx::ParseInstance(ReadJson(instance_path));
      Emit(common, icx::SolveReport(inst, icx::ParseSolveMode(mode),
                                    common.settings()));
    } else if (*eval) {
      const icx::Instance inst = icx::ParseInstance(ReadJson(instance_path));
      const icx::InspectionScheme scheme =
          icx::ParseScheme(ReadJson(scheme_path), inst);
      Emit(common, icx::EvalReport(inst, scheme, common.settings()));
    } else if (*compare) {
      const icx::Instance inst = icx::ParseInstance(ReadJson(instance_path));
      Emit(common, icx::CompareReport(inst, icx::ParseSolveMode(mode),
                                      common.settings()));
    } else if (*brute) {
      const icx::Instance inst = icx::ParseInstance(ReadJson(instance_path));
      Emit(common, icx::BruteForceReport(inst, icx::ParseSolveMode(mode),
                                         common.settings()));
    } else if (*check) {
      const icx::Instance inst = icx::ParseInstance(ReadJson(instance_path));
      Emit(common, icx::CheckCostFnReport(inst, seed, samples));
    } else if (*gen) {
      if (sidecar.empty()) {
        sidecar = common.out.empty() ? "xos-hard-k" + std::to_string(k) +
                                           "-seed" + std::to_string(seed) +
                                           ".T.json"
                                     : common.out + ".T.json";
      }
      Emit(common, GenFamily(family, n, k, seed, m, scheme_out, sidecar));
    } else if (*query) {
      Emit(common, icx::QueryExperimentToJson(
                       icx::QueryExperiment(k, trials, seed, m)));
    }
  } catch (const icx::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const icx::ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return kValidation;
  } catch (const icx::CostClassError& e) {
    std::cerr << "cost class check failed: " << e.what() << "\n";
    return kCostClass;
  } catch (const icx::SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
