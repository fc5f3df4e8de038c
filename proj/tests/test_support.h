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

// Shared fixtures for the unit, property and acceptance tests.

#ifndef MATKNAP_TESTS_TEST_SUPPORT_H_
#define MATKNAP_TESTS_TEST_SUPPORT_H_

#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matknap/element_set.h"
#include "matknap/exact.h"
#include "matknap/generator.h"
#include "matknap/instance.h"
#include "matknap/matroid.h"
#include "matknap/oracle.h"
#include "matknap/solver.h"

namespace matknap::testing {

// n = 3, costs [2, 2, 1], budget 3, uniform rank 2, coverage over {0..3}
// with sets {0,1}, {1,2}, {3}. OPT = 3 at {0, 2}.
inline Instance CoverageFixture(double budget = 3.0) {
  auto oracle = std::make_shared<CoverageOracle>(
      4, std::vector<std::vector<int>>{{0, 1}, {1, 2}, {3}});
  return Instance(3, {2, 2, 1}, budget,
                  {std::make_shared<UniformMatroid>(3, 2)}, oracle);
}

inline Instance ModularInstance(std::vector<double> profits,
                                std::vector<double> costs, double budget,
                                MatroidList matroids) {
  const int n = static_cast<int>(profits.size());
  return Instance(n, std::move(costs), budget, std::move(matroids),
                  std::make_shared<ModularOracle>(std::move(profits)));
}

// f(S) = |S|^2: monotone but supermodular.
class SquaredCardinalityOracle final : public ValueOracle {
 public:
  explicit SquaredCardinalityOracle(int n) : n_(n) {}
  int ground_size() const override { return n_; }
  double Evaluate(std::span<const ElementId> set) const override {
    CheckIds(set);
    const double s = static_cast<double>(set.size());
    return s * s;
  }
  std::string_view family() const override { return "squared_cardinality"; }

 private:
  int n_;
};

// Exhaustive optimum over all 2^n subsets, written independently of
// BruteForce: plain bitmask enumeration, feasibility re-derived from the
// matroid oracles and a fresh cost sum. Ties go to the lexicographically
// smallest element vector.
struct ReferenceOptimum {
  ElementSet set;
  double value = 0.0;
};

inline ReferenceOptimum ExhaustiveOptimum(const Instance& instance) {
  ReferenceOptimum best{{}, instance.oracle().Evaluate(ElementSet{})};
  const std::uint64_t full = std::uint64_t{1} << instance.n();
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    ElementSet s = FromMask(mask);
    double cost = 0.0;
    for (ElementId e : s) cost += instance.costs()[e];
    if (cost > instance.budget()) continue;
    bool independent = true;
    for (const auto& m : instance.matroids()) {
      independent = independent && m->IsIndependent(s);
    }
    if (!independent) continue;
    const double value = instance.oracle().Evaluate(s);
    if (value > best.value || (value == best.value && s < best.set)) {
      best = {s, value};
    }
  }
  return best;
}

// Random common independent set: shuffled greedy insertion, stopped at a
// random size.
inline ElementSet RandomCommonIndependent(const MatroidList& matroids, int n,
                                          std::mt19937_64& rng) {
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t target = n == 0 ? 0 : rng() % (n + 1);
  ElementSet s;
  for (ElementId e : order) {
    if (s.size() >= target) break;
    ElementSet grown = With(s, e);
    if (IsIndependentInAll(matroids, grown)) s = std::move(grown);
  }
  return s;
}

// Generator spec cycling through oracle and matroid families with the seed.
inline GeneratorSpec MixedSpec(int n, int k, std::uint64_t seed) {
  static const char* const kOracles[] = {"coverage", "modular",
                                         "facility_location"};
  static const double kBudgetFractions[] = {0.2, 0.35, 0.5, 0.8};
  GeneratorSpec spec;
  spec.n = n;
  spec.k = k;
  spec.oracle = kOracles[seed % 3];
  spec.matroids = {"mixed"};
  spec.cost_min = 1;
  spec.cost_max = 10;
  spec.budget_fraction = kBudgetFractions[(seed / 3) % 4];
  spec.seed = seed;
  return spec;
}


struct PropertyCheck {
  std::int64_t checks = 0;
  std::optional<std::string> failure;
};

// With S* ordered greedily (u_1, u_2, ...) and Y = {u_1, u_2}: for every
// u_l, l >= 3, `samples` random W in U \ {u_1, u_2, u_l} with Y + W
// independent, and every w in W or none with (Y + W - w) + u_l
// independent,
//   f((Y + W - w) + u_l) - f(Y + W) <= f(Y) / 2,
// and f(S*) <= (n / 2) f(Y). S* needs at least three elements.
inline PropertyCheck CheckGuessBounds(const Instance& instance,
                                      const ElementSet& s_star, int samples,
                                      std::mt19937_64& rng) {
  constexpr double kTol = 1e-9;
  PropertyCheck out;
  const ValueOracle& f = instance.oracle();
  const std::vector<ElementId> order = OptimalOrdering(instance, s_star);
  const ElementSet y = MakeSet({order[0], order[1]});
  const double fy = f.Evaluate(y);
  ++out.checks;
  if (f.Evaluate(s_star) > instance.n() / 2.0 * fy + kTol) {
    out.failure = "f(S*) > (n/2) f(Y) for S*=" + ToString(s_star);
    return out;
  }
  for (std::size_t l = 2; l < order.size(); ++l) {
    const ElementId u = order[l];
    std::vector<ElementId> pool;
    for (ElementId e = 0; e < instance.n(); ++e) {
      if (e != order[0] && e != order[1] && e != u) pool.push_back(e);
    }
    for (int t = 0; t < samples; ++t) {
      std::shuffle(pool.begin(), pool.end(), rng);
      const std::size_t target = pool.empty() ? 0 : rng() % (pool.size() + 1);
      ElementSet w_set;
      for (ElementId e : pool) {
        if (w_set.size() >= target) break;
        if (IsIndependentInAll(instance.matroids(), Union(y, With(w_set, e)))) {
          w_set = With(w_set, e);
        }
      }
      const ElementSet base = Union(y, w_set);
      const double f_base = f.Evaluate(base);
      std::vector<std::optional<ElementId>> targets{std::nullopt};
      for (ElementId w : w_set) targets.emplace_back(w);
      for (const auto& w : targets) {
        const ElementSet swapped =
            ApplySwap(base, u, w ? ElementSet{*w} : ElementSet{});
        if (!IsIndependentInAll(instance.matroids(), swapped)) continue;
        ++out.checks;
        if (f.Evaluate(swapped) - f_base > fy / 2 + kTol) {
          out.failure = "swap (" + std::to_string(u) + ", " +
                        (w ? std::to_string(*w) : std::string("none")) +
                        ") on " + ToString(base) + " gains more than f(Y)/2";
          return out;
        }
      }
    }
  }
  return out;
}

// Thresholded runs: per guess with f(Y) > 0, accepted real swaps are at
// most log(f_final / f(Y)) / log(1 + eps / n^2), and accepted pure
// additions at most n.
inline PropertyCheck CheckSwapCounts(const Instance& instance,
                                     const RunReport& report, double eps) {
  PropertyCheck out;
  const double n = instance.n();
  for (const GuessRun& run : report.per_guess) {
    ++out.checks;
    if (run.phi_swaps > instance.n()) {
      out.failure = "guess " + ToString(run.guess) + ": " +
                    std::to_string(run.phi_swaps) + " pure additions > n";
      return out;
    }
    if (run.initial_value <= 0) continue;
    const double bound = std::log(run.solution.value / run.initial_value) /
                         std::log1p(eps / (n * n));
    if (run.real_swaps > bound + 1e-9) {
      out.failure = "guess " + ToString(run.guess) + ": " +
                    std::to_string(run.real_swaps) + " real swaps > " +
                    std::to_string(bound);
      return out;
    }
  }
  return out;
}

}  // namespace matknap::testing

#endif  // MATKNAP_TESTS_TEST_SUPPORT_H_
