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

#ifndef MATKNAP_GENERATOR_H_
#define MATKNAP_GENERATOR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "matknap/instance.h"

namespace matknap {

struct GeneratorSpec {
  int n = 8;
  int k = 1;
  // "coverage", "modular", "facility_location" or "mixed" (one of the three
  // drawn per instance).
  std::string oracle = "coverage";
  // Cycled over the k matroids; each entry is "uniform", "partition",
  // "graphic" or "mixed".
  std::vector<std::string> matroids = {"mixed"};
  // Costs are integers drawn uniformly from [cost_min, cost_max].
  double cost_min = 1.0;
  double cost_max = 10.0;
  // budget = budget_fraction * sum of costs.
  double budget_fraction = 0.5;
  std::uint64_t seed = 0;
};

// Deterministic in the spec (std::mt19937_64 with hand-written range
// mapping, so output does not depend on the standard library's
// distributions). All generated values are integers, so every oracle value
// is exactly representable. Throws std::invalid_argument for unsupported
// families or bad ranges.
Instance GenerateInstance(const GeneratorSpec& spec);

}  // namespace matknap

#endif  // MATKNAP_GENERATOR_H_
