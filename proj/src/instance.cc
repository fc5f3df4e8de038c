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

#include "matknap/instance.h"

#include <cmath>
#include <string>

#include "matknap/errors.h"

namespace matknap {

Instance::Instance(int n, std::vector<double> costs, double budget,
                   MatroidList matroids,
                   std::shared_ptr<const ValueOracle> oracle)
    : n_(n),
      costs_(std::move(costs)),
      budget_(budget),
      matroids_(std::move(matroids)),
      oracle_(std::move(oracle)) {
  if (n_ < 0) throw ValidationError("n", "must be >= 0");
  if (static_cast<int>(costs_.size()) != n_) {
    throw ValidationError("costs", "length " + std::to_string(costs_.size()) +
                                       " != n = " + std::to_string(n_));
  }
  for (std::size_t i = 0; i < costs_.size(); ++i) {
    if (!std::isfinite(costs_[i]) || costs_[i] < 0.0) {
      throw ValidationError("costs", "entry " + std::to_string(i) +
                                         " must be finite and >= 0");
    }
  }
  if (!std::isfinite(budget_) || budget_ < 0.0) {
    throw ValidationError("budget", "must be finite and >= 0");
  }
  if (matroids_.empty()) {
    throw ValidationError("matroids", "at least one matroid is required");
  }
  for (std::size_t j = 0; j < matroids_.size(); ++j) {
    if (!matroids_[j]) throw ValidationError("matroids", "null matroid");
    if (matroids_[j]->ground_size() != n_) {
      throw ValidationError(
          "matroids", "matroid " + std::to_string(j) + " has ground size " +
                          std::to_string(matroids_[j]->ground_size()) +
                          ", expected " + std::to_string(n_));
    }
  }
  if (!oracle_) throw ValidationError("oracle", "missing");
  if (oracle_->ground_size() != n_) {
    throw ValidationError("oracle",
                          "ground size " +
                              std::to_string(oracle_->ground_size()) +
                              ", expected " + std::to_string(n_));
  }
}

void Instance::CheckElements(std::span<const ElementId> set) const {
  for (ElementId e : set) {
    if (e < 0 || e >= n_) {
      throw InvalidElementError("element " + std::to_string(e) +
                                " outside ground set of size " +
                                std::to_string(n_));
    }
  }
  if (!IsCanonical(set)) {
    throw PreconditionError("element set must be sorted and duplicate-free");
  }
}

double SetCost(const Instance& instance, std::span<const ElementId> set) {
  double total = 0.0;
  for (ElementId e : set) total += instance.cost(e);
  return total;
}

bool IsFeasible(const Instance& instance, std::span<const ElementId> set) {
  instance.CheckElements(set);
  return SetCost(instance, set) <= instance.budget() &&
         IsIndependentInAll(instance.matroids(), set);
}

Solution SolutionFromSet(const Instance& instance, ElementSet set) {
  instance.CheckElements(set);
  Solution out;
  out.value = instance.oracle().Evaluate(set);
  out.cost = SetCost(instance, set);
  out.feasible = IsFeasible(instance, set);
  out.elements = std::move(set);
  return out;
}

}  // namespace matknap
