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

// Exact reference answers for small instances.

#ifndef MATKNAP_EXACT_H_
#define MATKNAP_EXACT_H_

#include <optional>
#include <vector>

#include "matknap/element_set.h"
#include "matknap/instance.h"

namespace matknap {

inline constexpr int kBruteForceMaxN = 22;

// Maximum-value feasible set by depth-first enumeration in lexicographic
// order; infeasible prefixes are not extended. Ties go to the
// lexicographically smallest set. `size_cap` bounds |S|; without it, n must
// not exceed kBruteForceMaxN (ResourceError otherwise).
Solution BruteForce(const Instance& instance,
                    std::optional<int> size_cap = std::nullopt);

// Greedy marginal-value ordering of `set`: each next element maximizes
// f(prefix + u) - f(prefix), ties to the smaller id.
std::vector<ElementId> OptimalOrdering(const Instance& instance,
                                       const ElementSet& set);

}  // namespace matknap

#endif  // MATKNAP_EXACT_H_
