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

#include "matknap/experiment.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "matknap/errors.h"
#include "matknap/exact.h"

namespace matknap {
namespace {

double PriorObjective(int k, double eps, double b) {
  const double gain = -std::expm1(-b);  // 1 - e^{-b}
  const double per_unit = b > 0.0 ? gain / b : 1.0;
  return (gain - eps) * std::pow(per_unit, k);
}

std::string FormatNumber(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string FormatOptional(const std::optional<double>& v) {
  return v ? FormatNumber(*v) : std::string();
}

}  // namespace

double PriorBestRatio(int k, double eps) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(eps >= 0.0) || eps >= 1.0) {
    throw std::invalid_argument("eps must lie in [0, 1)");
  }
  constexpr int kGrid = 10000;
  int best_i = 1;
  double best = PriorObjective(k, eps, 1.0 / kGrid);
  for (int i = 2; i <= kGrid; ++i) {
    const double v = PriorObjective(k, eps, static_cast<double>(i) / kGrid);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // Golden-section search on the bracket around the best grid point.
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(0.0, (best_i - 1.0) / kGrid);
  double hi = std::min(1.0, (best_i + 1.0) / kGrid);
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = PriorObjective(k, eps, x1);
  double f2 = PriorObjective(k, eps, x2);
  for (int iter = 0; iter < 100; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = PriorObjective(k, eps, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = PriorObjective(k, eps, x1);
    }
  }
  return std::max({best, f1, f2});
}

std::string AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kMatKnap:
      return "matknap";
    case Algorithm::kGreedyBaseline:
      return "greedy_baseline";
  }
  return "unknown";
}

int ExperimentReport::failures() const {
  return static_cast<int>(std::count_if(
      rows.begin(), rows.end(),
      [](const ExperimentRow& r) { return r.status == "FAILURE"; }));
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  using Clock = std::chrono::steady_clock;
  ExperimentReport report;
  for (const ExperimentInstance& item : config.instances) {
    const Instance& instance = item.instance;
    std::optional<double> opt;
    std::string opt_error;
    if (config.brute_force) {
      try {
        opt = BruteForce(instance).value;
      } catch (const ResourceError& e) {
        opt_error = e.what();
      }
    }
    for (Algorithm algorithm : config.algorithms) {
      ExperimentRow row;
      row.instance_id = item.id;
      row.n = instance.n();
      row.k = instance.k();
      row.algorithm = AlgorithmName(algorithm);
      row.guaranteed_ratio = GuaranteedRatio(instance.k());
      row.opt = opt;
      row.error = opt_error;

      const auto start = Clock::now();
      if (algorithm == Algorithm::kMatKnap) {
        SolverConfig solver;
        solver.threads = config.threads;
        switch (config.epsilon_mode) {
          case EpsilonMode::kExact:
            solver.epsilon = 0.0;
            break;
          case EpsilonMode::kDefault:
            solver.epsilon = DefaultEpsilon(instance.k());
            break;
          case EpsilonMode::kFixed:
            solver.epsilon = config.epsilon;
            break;
        }
        row.epsilon = solver.epsilon;
        SolveResult result = Solve(instance, solver);
        row.solution = std::move(result.solution);
        row.accepted_swaps = result.report.accepted_swaps;
        row.phi_swaps = result.report.phi_swaps;
        row.rejected_swaps = result.report.rejected_swaps;
        row.oracle_calls = result.report.oracle_calls;
        row.run = std::move(result.report);
      } else {
        row.solution = GreedyBaseline(instance);
      }
      row.wall_ms =
          std::chrono::duration<double, std::milli>(Clock::now() - start)
              .count();

      if (opt) {
        row.ratio = *opt > 0.0 ? row.solution.value / *opt : 1.0;
      }
      if (!opt_error.empty()) {
        row.status = "error";
      } else if (algorithm == Algorithm::kGreedyBaseline) {
        row.status = "baseline";
      } else if (!row.ratio) {
        row.status = "n/a";
      } else {
        row.status = *row.ratio < row.guaranteed_ratio - kRatioTolerance
                         ? "FAILURE"
                         : "ok";
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string ReportToCsv(const ExperimentReport& report, bool include_timing) {
  std::ostringstream os;
  os << "instance_id,n,k,algorithm,epsilon,value,cost,feasible,opt,ratio,"
        "guaranteed_ratio,status,accepted_swaps,phi_swaps,rejected_swaps,"
        "oracle_calls";
  if (include_timing) os << ",wall_ms";
  os << '\n';
  for (const ExperimentRow& r : report.rows) {
    os << r.instance_id << ',' << r.n << ',' << r.k << ',' << r.algorithm
       << ',' << FormatNumber(r.epsilon) << ','
       << FormatNumber(r.solution.value) << ','
       << FormatNumber(r.solution.cost) << ','
       << (r.solution.feasible ? "true" : "false") << ','
       << FormatOptional(r.opt) << ',' << FormatOptional(r.ratio) << ','
       << FormatNumber(r.guaranteed_ratio) << ',' << r.status << ','
       << r.accepted_swaps << ',' << r.phi_swaps << ',' << r.rejected_swaps
       << ',' << r.oracle_calls;
    if (include_timing) os << ',' << FormatNumber(r.wall_ms);
    os << '\n';
  }
  return os.str();
}

std::string ReportToJson(const ExperimentReport& report) {
  using nlohmann::json;
  json rows = json::array();
  for (const ExperimentRow& r : report.rows) {
    json row = {{"instance_id", r.instance_id},
                {"algorithm", r.algorithm},
                {"elements", r.solution.elements},
                {"value", r.solution.value},
                {"status", r.status}};
    if (!r.error.empty()) row["error"] = r.error;
    if (r.run) {
      row["best_guess"] = r.run->best_guess;
      json guesses = json::array();
      for (const GuessRun& g : r.run->per_guess) {
        guesses.push_back({{"guess", g.guess},
                           {"elements", g.solution.elements},
                           {"value", g.solution.value},
                           {"initial_value", g.initial_value},
                           {"passes", g.passes},
                           {"accepted_swaps", g.accepted_swaps},
                           {"phi_swaps", g.phi_swaps},
                           {"real_swaps", g.real_swaps},
                           {"rejected_swaps", g.rejected_swaps},
                           {"oracle_calls", g.oracle.eval_calls},
                           {"cache_hits", g.oracle.cache_hits},
                           {"iteration_cap_hit", g.iteration_cap_hit}});
      }
      row["per_guess"] = std::move(guesses);
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", rows}}.dump(2) + "\n";
}

}  // namespace matknap
