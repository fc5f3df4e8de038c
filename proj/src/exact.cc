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

#include "matknap/exact.h"

#include <string>

#include "matknap/errors.h"

namespace matknap {
namespace {

struct Search {
  const Instance& instance;
  int size_cap;
  ElementSet current;
  double current_cost = 0.0;
  ElementSet best;
  double best_value = 0.0;

  // `current` is feasible on entry.
  void Visit(ElementId from) {
    const double value = instance.oracle().Evaluate(current);
    // Lexicographic visiting order makes the first maximum the smallest set.
    if (value > best_value) {
      best_value = value;
      best = current;
    }
    if (static_cast<int>(current.size()) >= size_cap) return;
    for (ElementId e = from; e < instance.n(); ++e) {
      // Same summation order as SetCost, since ids are appended ascending.
      const double cost = current_cost + instance.cost(e);
      if (cost > instance.budget()) continue;
      current.push_back(e);
      if (IsIndependentInAll(instance.matroids(), current)) {
        const double saved = current_cost;
        current_cost = cost;
        Visit(e + 1);
        current_cost = saved;
      }
      current.pop_back();
    }
  }
};

}  // namespace

Solution BruteForce(const Instance& instance, std::optional<int> size_cap) {
  if (!size_cap && instance.n() > kBruteForceMaxN) {
    throw ResourceError("brute force refused: n = " +
                        std::to_string(instance.n()) + " exceeds " +
                        std::to_string(kBruteForceMaxN) +
                        " and no size cap was given");
  }
  Search search{instance, size_cap.value_or(instance.n()), {}, 0.0, {}, 0.0};
  search.best_value = instance.oracle().Evaluate(ElementSet{});
  search.Visit(0);
  return SolutionFromSet(instance, std::move(search.best));
}

std::vector<ElementId> OptimalOrdering(const Instance& instance,
                                       const ElementSet& set) {
  instance.CheckElements(set);
  std::vector<ElementId> order;
  ElementSet prefix;
  ElementSet remaining = set;
  double prefix_value = instance.oracle().Evaluate(prefix);
  while (!remaining.empty()) {
    ElementId pick = remaining.front();
    double pick_gain = 0.0;
    bool first = true;
    for (ElementId u : remaining) {
      const double gain = instance.oracle().Evaluate(With(prefix, u)) -
                          prefix_value;
      if (first || gain > pick_gain) {
        pick = u;
        pick_gain = gain;
        first = false;
      }
    }
    order.push_back(pick);
    prefix = With(prefix, pick);
    remaining = Without(remaining, pick);
    prefix_value = instance.oracle().Evaluate(prefix);
  }
  return order;
}

}  // namespace matknap
