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

#ifndef MATKNAP_INSTANCE_H_
#define MATKNAP_INSTANCE_H_

#include <memory>
#include <span>
#include <vector>

#include "matknap/element_set.h"
#include "matknap/matroid.h"
#include "matknap/oracle.h"

namespace matknap {

// max f(S) subject to sum_{u in S} costs[u] <= budget and S independent in
// every matroid. Immutable after construction; the oracle and matroids are
// shared, so copies are cheap and safe to hand to concurrent workers.
class Instance {
 public:
  // Throws ValidationError naming the offending field when an invariant
  // fails: costs.size() == n, costs and budget finite and >= 0, at least
  // one matroid, oracle and matroid ground sizes equal to n.
  Instance(int n, std::vector<double> costs, double budget,
           MatroidList matroids, std::shared_ptr<const ValueOracle> oracle);

  int n() const { return n_; }
  const std::vector<double>& costs() const { return costs_; }
  double cost(ElementId e) const { return costs_[e]; }
  double budget() const { return budget_; }
  const MatroidList& matroids() const { return matroids_; }
  int k() const { return static_cast<int>(matroids_.size()); }
  const ValueOracle& oracle() const { return *oracle_; }
  const std::shared_ptr<const ValueOracle>& oracle_ptr() const {
    return oracle_;
  }

  // Throws InvalidElementError for ids outside [0, n) and PreconditionError
  // for unsorted or duplicated ids.
  void CheckElements(std::span<const ElementId> set) const;

 private:
  int n_;
  std::vector<double> costs_;
  double budget_;
  MatroidList matroids_;
  std::shared_ptr<const ValueOracle> oracle_;
};

// Sum of costs in ascending id order.
double SetCost(const Instance& instance, std::span<const ElementId> set);

// cost(S) <= budget and S independent in every matroid.
bool IsFeasible(const Instance& instance, std::span<const ElementId> set);

struct Solution {
  ElementSet elements;
  double value = 0.0;
  double cost = 0.0;
  bool feasible = true;

  friend bool operator==(const Solution&, const Solution&) = default;
};

Solution SolutionFromSet(const Instance& instance, ElementSet set);

}  // namespace matknap

#endif  // MATKNAP_INSTANCE_H_
