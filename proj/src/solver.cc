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

#include "matknap/solver.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "matknap/errors.h"

namespace matknap {
namespace {

bool BetterSolution(const Solution& candidate, const Solution& incumbent) {
  if (candidate.value != incumbent.value) {
    return candidate.value > incumbent.value;
  }
  return candidate.elements < incumbent.elements;
}

std::vector<SwapCandidate> Candidates(const Instance& instance,
                                      const ElementSet& s,
                                      const SolverConfig& config,
                                      OracleSession& session) {
  SwapEngine engine = config.engine;
  if (engine == SwapEngine::kAuto) {
    engine = instance.k() == 1 ? SwapEngine::kSingle : SwapEngine::kMulti;
  }
  if (engine == SwapEngine::kSingle) {
    return EnumerateSingleSwaps(instance, s, session);
  }
  const int arity = config.swap_arity > 0 ? config.swap_arity : instance.k();
  return EnumerateSwaps(instance, s, arity, session);
}

double ThresholdFactor(const Instance& instance, const SolverConfig& config) {
  const double n = std::max(1, instance.n());
  const double scale =
      config.threshold_scale == ThresholdScale::kQuadratic ? n * n : n;
  return 1.0 + config.epsilon / scale;
}

}  // namespace

int ResolveThreadCount(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MATKNAP_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<int>(std::min<long>(value, 1024));
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

PassResult GreedySwapPass(const Instance& instance, const ElementSet& s,
                          const ElementSet& guess, const SolverConfig& config,
                          OracleSession& session) {
  const double current = session.Evaluate(s);
  const double threshold = ThresholdFactor(instance, config) * current;
  PassResult result;
  result.set = s;
  for (SwapCandidate& candidate : Candidates(instance, s, config, session)) {
    const bool touches_guess =
        config.protect_guess && !Intersection(candidate.removal, guess).empty();
    const bool improves = candidate.density > 0.0;
    ElementSet next = ApplySwap(s, candidate.x, candidate.removal);
    const bool clears_threshold = config.epsilon <= 0.0 ||
                                  candidate.is_addition() ||
                                  session.Evaluate(next) >= threshold;
    const bool fits = SetCost(instance, next) <= instance.budget();
    if (!touches_guess && improves && clears_threshold && fits) {
      result.set = std::move(next);
      result.accepted = true;
      result.swap = std::move(candidate);
      return result;
    }
    if (!touches_guess && improves && clears_threshold) {
      result.budget_rejection = true;
    }
    ++result.rejected;
  }
  return result;
}

GuessRun RunWithGuess(const Instance& instance, const ElementSet& guess,
                      const SolverConfig& config) {
  if (!IsFeasible(instance, guess)) {
    throw PreconditionError("guess " + ToString(guess) + " is infeasible");
  }
  if (config.epsilon < 0.0 || std::isnan(config.epsilon)) {
    throw PreconditionError("epsilon must be >= 0");
  }
  std::optional<std::int64_t> cap = config.max_iterations;
  if (!cap && config.epsilon == 0.0) {
    const std::int64_t n = instance.n();
    cap = std::max<std::int64_t>(1, 10 * n * n * n);
  }

  OracleSession session(instance.oracle(), config.oracle_cache);
  GuessRun run;
  run.guess = guess;
  run.initial_value = session.Evaluate(guess);
  ElementSet s = guess;
  while (true) {
    if (cap && run.passes >= *cap) {
      run.iteration_cap_hit = true;
      break;
    }
    ++run.passes;
    PassResult pass = GreedySwapPass(instance, s, guess, config, session);
    run.rejected_swaps += pass.rejected;
    if (!pass.accepted) break;
    ++run.accepted_swaps;
    if (pass.swap->is_addition()) {
      ++run.phi_swaps;
    } else {
      ++run.real_swaps;
    }
    s = std::move(pass.set);
  }
  run.oracle = session.stats();
  run.solution = SolutionFromSet(instance, std::move(s));
  return run;
}

std::vector<ElementSet> EnumerateGuesses(const Instance& instance) {
  std::vector<ElementSet> guesses{ElementSet{}};
  std::vector<ElementId> singles;
  for (ElementId u = 0; u < instance.n(); ++u) {
    if (IsFeasible(instance, ElementSet{u})) {
      guesses.push_back({u});
      singles.push_back(u);
    }
  }
  for (std::size_t i = 0; i < singles.size(); ++i) {
    for (std::size_t j = i + 1; j < singles.size(); ++j) {
      ElementSet pair{singles[i], singles[j]};
      if (IsFeasible(instance, pair)) guesses.push_back(std::move(pair));
    }
  }
  return guesses;
}

SolveResult Solve(const Instance& instance, const SolverConfig& config) {
  const std::vector<ElementSet> guesses = EnumerateGuesses(instance);
  std::vector<GuessRun> runs(guesses.size());
  std::vector<std::exception_ptr> errors(guesses.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < guesses.size(); i = next++) {
      try {
        runs[i] = RunWithGuess(instance, guesses[i], config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(ResolveThreadCount(config.threads),
                                    static_cast<int>(guesses.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  SolveResult result;
  RunReport& report = result.report;
  std::size_t best = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const GuessRun& run = runs[i];
    report.accepted_swaps += run.accepted_swaps;
    report.rejected_swaps += run.rejected_swaps;
    report.phi_swaps += run.phi_swaps;
    report.oracle_calls += run.oracle.eval_calls;
    report.cache_hits += run.oracle.cache_hits;
    report.iteration_caps_hit += run.iteration_cap_hit ? 1 : 0;
    if (i > 0 && BetterSolution(run.solution, runs[best].solution)) best = i;
  }
  report.guesses = static_cast<std::int64_t>(runs.size());
  report.best_guess = runs[best].guess;
  result.solution = runs[best].solution;
  report.per_guess = std::move(runs);
  return result;
}

Solution GreedyBaseline(const Instance& instance) {
  Solution best = SolutionFromSet(instance, {});
  for (const ElementSet& guess : EnumerateGuesses(instance)) {
    OracleSession session(instance.oracle());
    ElementSet s = guess;
    double value = session.Evaluate(s);
    while (true) {
      ElementId pick = -1;
      double pick_density = 0.0;
      double pick_gain = 0.0;
      for (ElementId x = 0; x < instance.n(); ++x) {
        if (Contains(s, x)) continue;
        ElementSet next = With(s, x);
        if (!IsFeasible(instance, next)) continue;
        const double gain = session.Evaluate(next) - value;
        if (gain <= 0.0) continue;
        const double density = SwapDensity(gain, instance.cost(x));
        if (pick < 0 || density > pick_density ||
            (density == pick_density && gain > pick_gain)) {
          pick = x;
          pick_density = density;
          pick_gain = gain;
        }
      }
      if (pick < 0) break;
      s = With(s, pick);
      value = session.Evaluate(s);
    }
    Solution candidate = SolutionFromSet(instance, std::move(s));
    if (BetterSolution(candidate, best)) best = std::move(candidate);
  }
  return best;
}

double DefaultEpsilon(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return (2.0 * k + 2.0) / (std::exp(2.0) - 1.0);
}

double GuaranteedRatio(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return (1.0 - std::exp(-(k + 1.0))) / (k + 1.0);
}

}  // namespace matknap
