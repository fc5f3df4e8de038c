// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   matknap solve <file> [--epsilon E | --epsilon-default | --exact] [--k-check]
//   matknap exact <file>
//   matknap compare <file>... [--brute-force] [--out CSV] [--sidecar JSON]
//   matknap gen --n N --k K --oracle F --matroid F... --seed S --out PATH
//   matknap check <file>
//   matknap ratios --k K
//
// Exit status: 0 success, 1 usage or parse error, 2 guarantee or contract
// violation, 3 resource refusal. MATKNAP_THREADS caps worker threads.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matknap/errors.h"
#include "matknap/exact.h"
#include "matknap/exchange.h"
#include "matknap/experiment.h"
#include "matknap/generator.h"
#include "matknap/instance_io.h"
#include "matknap/oracle.h"
#include "matknap/solver.h"

namespace matknap {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitResource = 3;

using Json = nlohmann::ordered_json;

Json SolutionJson(const Solution& s) {
  return Json{{"elements", s.elements},
              {"value", s.value},
              {"cost", s.cost},
              {"feasible", s.feasible}};
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

struct SolveOptions {
  std::string file;
  std::optional<double> epsilon;
  bool epsilon_default = false;
  bool exact = false;
  bool k_check = false;
};

int RunSolve(const SolveOptions& opt) {
  const Instance instance = LoadInstance(opt.file);
  SolverConfig config;
  if (opt.epsilon) config.epsilon = *opt.epsilon;
  if (opt.epsilon_default) config.epsilon = DefaultEpsilon(instance.k());
  if (opt.exact) config.epsilon = 0.0;
  const SolveResult result = Solve(instance, config);
  const RunReport& r = result.report;

  Json out{{"solution", SolutionJson(result.solution)},
           {"epsilon", config.epsilon},
           {"k", instance.k()},
           {"guaranteed_ratio", GuaranteedRatio(instance.k())},
           {"best_guess", r.best_guess},
           {"guesses", r.guesses},
           {"accepted_swaps", r.accepted_swaps},
           {"phi_swaps", r.phi_swaps},
           {"rejected_swaps", r.rejected_swaps},
           {"oracle_calls", r.oracle_calls},
           {"cache_hits", r.cache_hits},
           {"iteration_caps_hit", r.iteration_caps_hit}};
  int status = kExitOk;
  if (opt.k_check) {
    const Solution opt_solution = BruteForce(instance);
    const double bound = GuaranteedRatio(instance.k()) * opt_solution.value;
    const bool ok = result.solution.value >= bound - kRatioTolerance;
    out["opt"] = opt_solution.value;
    out["ratio"] = opt_solution.value > 0
                       ? result.solution.value / opt_solution.value
                       : 1.0;
    out["k_check"] = ok ? "ok" : "FAILURE";
    if (!ok) status = kExitViolation;
  }
  std::cout << out.dump(2) << "\n";
  return status;
}

int RunExact(const std::string& file) {
  const Instance instance = LoadInstance(file);
  const Solution s = BruteForce(instance);
  Json out{{"solution", SolutionJson(s)},
           {"ordering", s.elements.empty()
                            ? std::vector<ElementId>{}
                            : OptimalOrdering(instance, s.elements)}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

struct CompareOptions {
  std::vector<std::string> files;
  bool brute_force = false;
  std::optional<double> epsilon;
  bool epsilon_default = false;
  bool timing = false;
  std::string out;
  std::string sidecar;
};

int RunCompare(const CompareOptions& opt) {
  ExperimentConfig config;
  config.brute_force = opt.brute_force;
  if (opt.epsilon) {
    config.epsilon_mode = EpsilonMode::kFixed;
    config.epsilon = *opt.epsilon;
  } else if (opt.epsilon_default) {
    config.epsilon_mode = EpsilonMode::kDefault;
  }
  for (const std::string& file : opt.files) {
    config.instances.push_back({file, LoadInstance(file)});
  }
  const ExperimentReport report = RunExperiment(config);
  const std::string csv = ReportToCsv(report, opt.timing);
  if (opt.out.empty()) {
    std::cout << csv;
  } else {
    WriteFile(opt.out, csv);
  }
  if (!opt.sidecar.empty()) WriteFile(opt.sidecar, ReportToJson(report));
  const int failures = report.failures();
  if (failures > 0) {
    std::cerr << failures << " row(s) below the guaranteed ratio\n";
    return kExitViolation;
  }
  return kExitOk;
}

int RunGen(const GeneratorSpec& spec, const std::string& out) {
  const std::string text = SerializeInstance(GenerateInstance(spec));
  if (out.empty() || out == "-") {
    std::cout << text << "\n";
  } else {
    WriteFile(out, text + "\n");
  }
  return kExitOk;
}

// Oracle and matroid contract checks; exhaustive when small enough.
int RunCheck(const std::string& file, int trials, std::uint64_t seed) {
  const Instance instance = LoadInstance(file);
  const int n = instance.n();
  bool ok = true;
  Json out;

  const bool oracle_exhaustive = n <= 12;
  const OracleCheckResult oracle =
      oracle_exhaustive
          ? CheckSubmodularMonotoneExhaustive(instance.oracle(), n)
          : CheckSubmodularMonotone(instance.oracle(), n, trials, seed);
  out["oracle"] = {{"family", std::string(instance.oracle().family())},
                   {"mode", oracle_exhaustive ? "exhaustive" : "sampled"},
                   {"ok", oracle.ok}};
  if (!oracle.ok) {
    out["oracle"]["witness"] = oracle.witness->Describe();
    ok = false;
  }

  Json matroids = Json::array();
  for (const auto& m : instance.matroids()) {
    const bool exhaustive = n <= 16;
    const AxiomCheckResult axioms =
        exhaustive ? CheckMatroidAxioms(*m, n)
                   : CheckMatroidAxiomsSampled(*m, n, trials, seed);
    Json entry{{"family", std::string(m->family())},
               {"mode", exhaustive ? "exhaustive" : "sampled"},
               {"ok", axioms.ok}};
    if (!axioms.ok) {
      entry["witness"] = axioms.witness->Describe();
      ok = false;
    }
    matroids.push_back(entry);
  }
  out["matroids"] = matroids;
  out["ok"] = ok;
  std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitViolation;
}

int RunRatios(int k) {
  Json out{{"k", k},
           {"guaranteed_ratio", GuaranteedRatio(k)},
           {"default_epsilon", DefaultEpsilon(k)},
           {"prior_best_ratio", PriorBestRatio(k, kPriorRatioEpsilon)},
           {"prior_best_epsilon", kPriorRatioEpsilon}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Greedy-swap submodular maximization under a knapsack and k "
               "matroids"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run the greedy-swap solver");
  solve_cmd->add_option("file", solve.file, "Instance file")->required();
  auto* eps = solve_cmd->add_option("--epsilon", solve.epsilon,
                                    "Threshold parameter (>= 0)");
  auto* eps_default = solve_cmd->add_flag(
      "--epsilon-default", solve.epsilon_default,
      "Largest epsilon that keeps the guarantee for this k");
  auto* exact_flag =
      solve_cmd->add_flag("--exact", solve.exact, "No threshold (epsilon 0)");
  eps->excludes(eps_default)->excludes(exact_flag);
  eps_default->excludes(exact_flag);
  solve_cmd->add_flag("--k-check", solve.k_check,
                      "Brute-force the optimum and verify the ratio");

  std::string exact_file;
  auto* exact_cmd = app.add_subcommand("exact", "Exact optimum by enumeration");
  exact_cmd->add_option("file", exact_file, "Instance file")->required();

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Solver and greedy baseline side by side (CSV)");
  compare_cmd->add_option("files", compare.files, "Instance files")
      ->required();
  compare_cmd->add_flag("--brute-force", compare.brute_force,
                        "Compute ratios against the exact optimum");
  auto* cmp_eps =
      compare_cmd->add_option("--epsilon", compare.epsilon, "Fixed epsilon");
  auto* cmp_default = compare_cmd->add_flag(
      "--epsilon-default", compare.epsilon_default, "Per-k default epsilon");
  cmp_eps->excludes(cmp_default);
  compare_cmd->add_flag("--timing", compare.timing, "Add a wall_ms column");
  compare_cmd->add_option("--out", compare.out, "CSV path (default stdout)");
  compare_cmd->add_option("--sidecar", compare.sidecar,
                          "Per-guess JSON detail path");

  GeneratorSpec spec;
  spec.matroids.clear();
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", spec.n, "Ground set size")->required();
  gen_cmd->add_option("--k", spec.k, "Number of matroids")->required();
  gen_cmd->add_option("--oracle", spec.oracle,
                      "coverage | modular | facility_location | mixed")
      ->required();
  gen_cmd->add_option("--matroid", spec.matroids,
                      "uniform | partition | graphic | mixed (cycled)")
      ->required();
  gen_cmd->add_option("--seed", spec.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen_out, "Output path ('-' for stdout)")
      ->required();
  gen_cmd->add_option("--budget-fraction", spec.budget_fraction,
                      "Budget as a fraction of the total cost");
  gen_cmd->add_option("--cost-min", spec.cost_min, "Smallest cost");
  gen_cmd->add_option("--cost-max", spec.cost_max, "Largest cost");

  std::string check_file;
  int check_trials = 2000;
  std::uint64_t check_seed = 1;
  auto* check_cmd =
      app.add_subcommand("check", "Oracle and matroid contract checks");
  check_cmd->add_option("file", check_file, "Instance file")->required();
  check_cmd->add_option("--trials", check_trials,
                        "Samples for large ground sets");
  check_cmd->add_option("--seed", check_seed, "Sampling seed");

  int ratio_k = 1;
  auto* ratios_cmd =
      app.add_subcommand("ratios", "Guaranteed and prior-best ratios");
  ratios_cmd->add_option("--k", ratio_k, "Number of matroids")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*exact_cmd) return RunExact(exact_file);
    if (*compare_cmd) return RunCompare(compare);
    if (*gen_cmd) return RunGen(spec, gen_out);
    if (*check_cmd) return RunCheck(check_file, check_trials, check_seed);
    if (*ratios_cmd) return RunRatios(ratio_k);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const MatroidContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace matknap

int main(int argc, char** argv) { return matknap::Main(argc, argv); }
