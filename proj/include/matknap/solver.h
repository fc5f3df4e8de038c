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

// Greedy-swap maximization of a monotone submodular function under one
// knapsack constraint and the intersection of k matroids.
//
// For every candidate guess Y (the empty set, each feasible singleton and
// each feasible pair) the solver starts from S = Y and repeatedly applies the
// best-density swap (x, R), R a subset of S with |R| <= k, that keeps S
// independent, fits the budget, strictly improves f and leaves Y intact. The
// best final set over all guesses is returned. With k matroids this achieves
// at least (1 - e^{-(k+1)}) / (k+1) of the optimum.

#ifndef MATKNAP_SOLVER_H_
#define MATKNAP_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "matknap/element_set.h"
#include "matknap/instance.h"
#include "matknap/oracle.h"
#include "matknap/swaps.h"

namespace matknap {

enum class SwapEngine {
  kAuto,    // pair swaps for one matroid, k-swaps otherwise
  kSingle,  // pair swaps (x, y), y in S or none
  kMulti,   // removal sets of size <= swap_arity
};

enum class ThresholdScale {
  kQuadratic,  // real swaps need f(S') >= (1 + eps / n^2) f(S)
  kLinear,     // faster variant: (1 + eps / n); no ratio guarantee claimed
};

struct SolverConfig {
  // 0 disables the improvement threshold on real swaps.
  double epsilon = 0.0;
  bool protect_guess = true;
  // Passes per guess. Unset: 10 n^3 when epsilon == 0, unlimited otherwise.
  std::optional<std::int64_t> max_iterations;
  SwapEngine engine = SwapEngine::kAuto;
  // Maximum removal-set size for kMulti; 0 means the number of matroids.
  int swap_arity = 0;
  ThresholdScale threshold_scale = ThresholdScale::kQuadratic;
  // Worker threads for the guess loop; 0 defers to ResolveThreadCount.
  int threads = 0;
  bool oracle_cache = true;
};

// `requested` if positive, else $MATKNAP_THREADS if set to a positive
// integer, else std::thread::hardware_concurrency() (at least 1).
int ResolveThreadCount(int requested);

struct PassResult {
  ElementSet set;
  bool accepted = false;
  std::optional<SwapCandidate> swap;
  // Candidates popped and turned down before acceptance or exhaustion.
  std::int64_t rejected = 0;
  // Some candidate passed every test except the budget.
  bool budget_rejection = false;
};

// One iteration of the outer loop: generate the candidate list around `s`,
// pop in SwapOrder, and accept the first candidate that avoids `guess`
// (when protected), has positive density, fits the budget and, for real
// swaps in thresholded mode, clears the multiplicative improvement bar.
PassResult GreedySwapPass(const Instance& instance, const ElementSet& s,
                          const ElementSet& guess, const SolverConfig& config,
                          OracleSession& session);

struct GuessRun {
  ElementSet guess;
  Solution solution;
  double initial_value = 0.0;  // f(guess)
  std::int64_t passes = 0;
  std::int64_t accepted_swaps = 0;
  std::int64_t phi_swaps = 0;  // accepted pure additions
  std::int64_t real_swaps = 0;  // accepted swaps with a removal
  std::int64_t rejected_swaps = 0;
  OracleStats oracle;
  bool iteration_cap_hit = false;
};

// Greedy swaps from S = guess until no candidate is accepted. Throws
// PreconditionError when the guess is infeasible. The oracle cache lives
// only for this call.
GuessRun RunWithGuess(const Instance& instance, const ElementSet& guess,
                      const SolverConfig& config);

struct RunReport {
  ElementSet best_guess;
  std::int64_t guesses = 0;
  std::int64_t accepted_swaps = 0;
  std::int64_t rejected_swaps = 0;
  std::int64_t phi_swaps = 0;
  std::int64_t oracle_calls = 0;
  std::int64_t cache_hits = 0;
  std::int64_t iteration_caps_hit = 0;
  // In guess-enumeration order.
  std::vector<GuessRun> per_guess;
};

struct SolveResult {
  Solution solution;
  RunReport report;
};

// The empty set, every feasible singleton and every feasible unordered pair,
// in that order (singletons and pairs ascending).
std::vector<ElementSet> EnumerateGuesses(const Instance& instance);

// Runs every guess (in parallel when allowed) and keeps the best result;
// ties go to the lexicographically smallest element set. Results do not
// depend on the thread count.
SolveResult Solve(const Instance& instance, const SolverConfig& config = {});

// Cost-density greedy with the same guess enumeration and no removals.
Solution GreedyBaseline(const Instance& instance);

// Largest epsilon for which thresholding keeps the guarantee:
// 4 / (e^2 - 1) for k = 1 and (2k + 2) / (e^2 - 1) in general.
double DefaultEpsilon(int k);

// (1 - e^{-(k+1)}) / (k + 1).
double GuaranteedRatio(int k);

}  // namespace matknap

#endif  // MATKNAP_SOLVER_H_
