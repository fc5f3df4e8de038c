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

#include "matknap/generator.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace matknap {
namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  int Int(int lo, int hi) {
    if (hi <= lo) return lo;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  bool Coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

std::shared_ptr<const ValueOracle> MakeOracle(std::string family, int n,
                                              Rng& rng) {
  if (family == "mixed") {
    static const char* const kFamilies[] = {"coverage", "modular",
                                            "facility_location"};
    family = kFamilies[rng.Int(0, 2)];
  }
  if (family == "coverage") {
    const int m = std::max(1, n + rng.Int(0, std::max(1, n)));
    std::vector<std::vector<int>> sets(n);
    for (auto& s : sets) {
      const int size = rng.Int(1, 3);
      for (int i = 0; i < size; ++i) s.push_back(rng.Int(0, m - 1));
    }
    std::vector<double> weights;
    if (rng.Coin()) {
      for (int j = 0; j < m; ++j) weights.push_back(rng.Int(1, 3));
    }
    return std::make_shared<CoverageOracle>(m, std::move(sets),
                                            std::move(weights));
  }
  if (family == "modular") {
    std::vector<double> profits(n);
    for (auto& p : profits) p = rng.Int(1, 20);
    return std::make_shared<ModularOracle>(std::move(profits));
  }
  if (family == "facility_location") {
    const int columns = rng.Int(3, 6);
    std::vector<std::vector<double>> affinity(n, std::vector<double>(columns));
    for (auto& row : affinity) {
      for (auto& a : row) a = rng.Int(0, 9);
    }
    return std::make_shared<FacilityLocationOracle>(std::move(affinity));
  }
  throw std::invalid_argument("unsupported oracle family '" + family + "'");
}

std::shared_ptr<const Matroid> MakeMatroid(std::string family, int n,
                                           Rng& rng) {
  if (family == "mixed") {
    static const char* const kFamilies[] = {"uniform", "partition", "graphic"};
    family = kFamilies[rng.Int(0, 2)];
  }
  if (family == "uniform") {
    return std::make_shared<UniformMatroid>(n, rng.Int(1, std::max(1, n / 2)));
  }
  if (family == "partition") {
    const int blocks = rng.Int(1, std::max(1, n / 3) + 1);
    std::vector<int> block_of(n);
    for (auto& b : block_of) b = rng.Int(0, blocks - 1);
    std::vector<int> capacity(blocks);
    for (auto& c : capacity) c = rng.Int(1, 2);
    return std::make_shared<PartitionMatroid>(std::move(block_of),
                                              std::move(capacity));
  }
  if (family == "graphic") {
    const int vertices = rng.Int(std::max(2, n / 2), std::max(2, n));
    std::vector<std::pair<int, int>> edges(n);
    for (auto& [a, b] : edges) {
      a = rng.Int(0, vertices - 1);
      do {
        b = rng.Int(0, vertices - 1);
      } while (b == a);
    }
    return std::make_shared<GraphicMatroid>(vertices, std::move(edges));
  }
  throw std::invalid_argument("unsupported matroid family '" + family + "'");
}

}  // namespace

Instance GenerateInstance(const GeneratorSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("n must be >= 0");
  if (spec.k < 1) throw std::invalid_argument("k must be >= 1");
  if (spec.matroids.empty()) {
    throw std::invalid_argument("at least one matroid family is required");
  }
  if (!(spec.cost_min >= 0.0) || spec.cost_max < spec.cost_min) {
    throw std::invalid_argument("cost range must satisfy 0 <= min <= max");
  }
  if (!(spec.budget_fraction >= 0.0) || !std::isfinite(spec.budget_fraction)) {
    throw std::invalid_argument("budget_fraction must be finite and >= 0");
  }
  const int cost_lo = static_cast<int>(std::ceil(spec.cost_min));
  const int cost_hi = static_cast<int>(std::floor(spec.cost_max));
  if (cost_hi < cost_lo) {
    throw std::invalid_argument("cost range contains no integer");
  }
  Rng rng(spec.seed);
  std::vector<double> costs(spec.n);
  double total = 0.0;
  for (auto& c : costs) {
    c = rng.Int(cost_lo, cost_hi);
    total += c;
  }
  MatroidList matroids;
  for (int j = 0; j < spec.k; ++j) {
    matroids.push_back(
        MakeMatroid(spec.matroids[j % spec.matroids.size()], spec.n, rng));
  }
  auto oracle = MakeOracle(spec.oracle, spec.n, rng);
  return Instance(spec.n, std::move(costs), spec.budget_fraction * total,
                  std::move(matroids), std::move(oracle));
}

}  // namespace matknap
