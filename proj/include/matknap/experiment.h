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

// Batch runs of the solvers against brute-force optima, and the ratio
// tables that go with them.

#ifndef MATKNAP_EXPERIMENT_H_
#define MATKNAP_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matknap/instance.h"
#include "matknap/solver.h"

namespace matknap {

// Slack allowed below guaranteed_ratio(k) before a row counts as a failure.
inline constexpr double kRatioTolerance = 1e-9;

// max over b in (0, 1] of (1 - e^{-b} - eps) ((1 - e^{-b}) / b)^k, the best
// previously known ratio for k matroids plus a knapsack. Grid search over
// 10^4 points followed by golden-section refinement around the best one.
double PriorBestRatio(int k, double eps);

// eps used when reporting the eps -> 0 limit of PriorBestRatio.
inline constexpr double kPriorRatioEpsilon = 1e-9;

enum class Algorithm { kMatKnap, kGreedyBaseline };

std::string AlgorithmName(Algorithm algorithm);

enum class EpsilonMode {
  kExact,    // epsilon = 0
  kDefault,  // epsilon = DefaultEpsilon(k)
  kFixed,    // ExperimentConfig::epsilon
};

struct ExperimentInstance {
  std::string id;
  Instance instance;
};

struct ExperimentConfig {
  std::vector<ExperimentInstance> instances;
  std::vector<Algorithm> algorithms = {Algorithm::kMatKnap,
                                       Algorithm::kGreedyBaseline};
  EpsilonMode epsilon_mode = EpsilonMode::kExact;
  double epsilon = 0.0;
  bool brute_force = true;
  // Forwarded to SolverConfig::threads.
  int threads = 0;
};

struct ExperimentRow {
  std::string instance_id;
  int n = 0;
  int k = 0;
  std::string algorithm;
  double epsilon = 0.0;
  Solution solution;
  std::optional<double> opt;
  std::optional<double> ratio;
  double guaranteed_ratio = 0.0;
  // "ok", "FAILURE" (guarantee violated), "baseline" (no guarantee
  // claimed), "n/a" (no optimum available) or "error".
  std::string status;
  std::string error;
  std::int64_t accepted_swaps = 0;
  std::int64_t phi_swaps = 0;
  std::int64_t rejected_swaps = 0;
  std::int64_t oracle_calls = 0;
  double wall_ms = 0.0;
  // Present for kMatKnap rows.
  std::optional<RunReport> run;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;

  int failures() const;
};

// Rows are produced in instance-then-algorithm order. A brute-force refusal
// is recorded on the affected rows and the run continues.
ExperimentReport RunExperiment(const ExperimentConfig& config);

// Fixed-header CSV. Without timing the output is a pure function of the
// configuration.
std::string ReportToCsv(const ExperimentReport& report,
                        bool include_timing = true);

// Sidecar with the full per-guess detail of every kMatKnap row.
std::string ReportToJson(const ExperimentReport& report);

}  // namespace matknap

#endif  // MATKNAP_EXPERIMENT_H_
