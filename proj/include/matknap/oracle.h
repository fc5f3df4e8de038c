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

// Value oracles for monotone submodular set functions f : 2^U -> R>=0.
//
// A ValueOracle is immutable once constructed and may be shared between
// threads. Call counting and memoization live in OracleSession, which is
// owned by a single worker.

#ifndef MATKNAP_ORACLE_H_
#define MATKNAP_ORACLE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "matknap/element_set.h"

namespace matknap {

class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  // Number of elements the oracle is defined over.
  virtual int ground_size() const = 0;

  // f(set). `set` must be canonical with ids < ground_size(); otherwise
  // InvalidOracleError is thrown.
  virtual double Evaluate(std::span<const ElementId> set) const = 0;

  virtual std::string_view family() const = 0;

 protected:
  void CheckIds(std::span<const ElementId> set) const;
};

// Weighted coverage: element u covers sets[u] within {0, ..., m-1}.
class CoverageOracle final : public ValueOracle {
 public:
  // Empty `weights` means unit weights.
  CoverageOracle(int universe_size, std::vector<std::vector<int>> sets,
                 std::vector<double> weights = {});

  int ground_size() const override { return static_cast<int>(sets_.size()); }
  double Evaluate(std::span<const ElementId> set) const override;
  std::string_view family() const override { return "coverage"; }

  int universe_size() const { return universe_size_; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const std::vector<double>& weights() const { return weights_; }
  bool has_unit_weights() const { return unit_weights_; }

 private:
  int universe_size_;
  std::vector<std::vector<int>> sets_;
  std::vector<double> weights_;
  bool unit_weights_;
};

// f(S) = sum of profits.
class ModularOracle final : public ValueOracle {
 public:
  explicit ModularOracle(std::vector<double> profits);

  int ground_size() const override {
    return static_cast<int>(profits_.size());
  }
  double Evaluate(std::span<const ElementId> set) const override;
  std::string_view family() const override { return "modular"; }

  const std::vector<double>& profits() const { return profits_; }

 private:
  std::vector<double> profits_;
};

// f(S) = sum over columns j of max_{u in S} affinity[u][j]; f(empty) = 0.
class FacilityLocationOracle final : public ValueOracle {
 public:
  // `affinity` has one row per element; all rows share the same length.
  explicit FacilityLocationOracle(std::vector<std::vector<double>> affinity);

  int ground_size() const override {
    return static_cast<int>(affinity_.size());
  }
  double Evaluate(std::span<const ElementId> set) const override;
  std::string_view family() const override { return "facility_location"; }

  int columns() const { return columns_; }
  const std::vector<std::vector<double>>& affinity() const { return affinity_; }

 private:
  std::vector<std::vector<double>> affinity_;
  int columns_;
};

struct OracleStats {
  std::int64_t eval_calls = 0;
  std::int64_t cache_hits = 0;

  OracleStats& operator+=(const OracleStats& other) {
    eval_calls += other.eval_calls;
    cache_hits += other.cache_hits;
    return *this;
  }
};

// Counting, optionally memoizing front end to a ValueOracle. Not
// thread-safe; create one per worker.
class OracleSession {
 public:
  explicit OracleSession(const ValueOracle& oracle, bool caching = true)
      : oracle_(&oracle), caching_(caching) {}

  double Evaluate(std::span<const ElementId> set);

  const OracleStats& stats() const { return stats_; }
  const ValueOracle& oracle() const { return *oracle_; }

  // Drops memoized values; counters are kept.
  void ClearCache() { cache_.clear(); }

 private:
  struct KeyHash {
    std::size_t operator()(const ElementSet& key) const;
  };

  const ValueOracle* oracle_;
  bool caching_;
  OracleStats stats_;
  std::unordered_map<ElementSet, double, KeyHash> cache_;
};

// Absolute slack allowed in the property checks below.
inline constexpr double kPropertyTolerance = 1e-9;

struct OracleViolation {
  // "submodularity", "diminishing_returns" or "monotonicity".
  std::string kind;
  ElementSet r;
  ElementSet t;
  // Added element for the diminishing-returns and monotonicity checks; -1
  // otherwise.
  ElementId u = -1;
  double lhs = 0.0;
  double rhs = 0.0;

  std::string Describe() const;
};

struct OracleCheckResult {
  bool ok = true;
  std::optional<OracleViolation> witness;
};

// Samples `trials` random (R, T) pairs and random (T subset of R, u not in R)
// tuples on the first `n` elements and tests submodularity, diminishing
// returns and monotonicity up to kPropertyTolerance.
OracleCheckResult CheckSubmodularMonotone(const ValueOracle& oracle, int n,
                                          int trials, std::uint64_t seed);

// Same properties over every subset pair; n <= 12.
OracleCheckResult CheckSubmodularMonotoneExhaustive(const ValueOracle& oracle,
                                                    int n);

}  // namespace matknap

#endif  // MATKNAP_ORACLE_H_
