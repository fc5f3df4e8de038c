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

#include "matknap/oracle.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "matknap/errors.h"

namespace matknap {
namespace {

bool NonNegativeFinite(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void ValueOracle::CheckIds(std::span<const ElementId> set) const {
  const int n = ground_size();
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 0 || set[i] >= n) {
      throw InvalidOracleError("element " + std::to_string(set[i]) +
                               " outside oracle ground set of size " +
                               std::to_string(n));
    }
    if (i > 0 && set[i - 1] >= set[i]) {
      throw InvalidOracleError("element set is not sorted/unique: " +
                               ToString(set));
    }
  }
}

CoverageOracle::CoverageOracle(int universe_size,
                               std::vector<std::vector<int>> sets,
                               std::vector<double> weights)
    : universe_size_(universe_size),
      sets_(std::move(sets)),
      weights_(std::move(weights)),
      unit_weights_(weights_.empty()) {
  if (universe_size_ <= 0) {
    throw InvalidOracleError("coverage universe_size must be positive");
  }
  if (unit_weights_) {
    weights_.assign(universe_size_, 1.0);
  } else if (static_cast<int>(weights_.size()) != universe_size_) {
    throw InvalidOracleError("coverage weights length " +
                             std::to_string(weights_.size()) +
                             " != universe_size " +
                             std::to_string(universe_size_));
  }
  for (double w : weights_) {
    if (!NonNegativeFinite(w)) {
      throw InvalidOracleError("coverage weights must be finite and >= 0");
    }
  }
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && (s.front() < 0 || s.back() >= universe_size_)) {
      throw InvalidOracleError("coverage set item outside universe");
    }
  }
}

double CoverageOracle::Evaluate(std::span<const ElementId> set) const {
  CheckIds(set);
  std::vector<char> covered(universe_size_, 0);
  for (ElementId u : set) {
    for (int j : sets_[u]) covered[j] = 1;
  }
  double total = 0.0;
  for (int j = 0; j < universe_size_; ++j) {
    if (covered[j]) total += weights_[j];
  }
  return total;
}

ModularOracle::ModularOracle(std::vector<double> profits)
    : profits_(std::move(profits)) {
  for (double p : profits_) {
    if (!NonNegativeFinite(p)) {
      throw InvalidOracleError("modular profits must be finite and >= 0");
    }
  }
}

double ModularOracle::Evaluate(std::span<const ElementId> set) const {
  CheckIds(set);
  double total = 0.0;
  for (ElementId u : set) total += profits_[u];
  return total;
}

FacilityLocationOracle::FacilityLocationOracle(
    std::vector<std::vector<double>> affinity)
    : affinity_(std::move(affinity)),
      columns_(affinity_.empty() ? 0
                                 : static_cast<int>(affinity_.front().size())) {
  for (const auto& row : affinity_) {
    if (static_cast<int>(row.size()) != columns_) {
      throw InvalidOracleError("facility_location affinity rows differ in "
                               "length");
    }
    for (double a : row) {
      if (!NonNegativeFinite(a)) {
        throw InvalidOracleError(
            "facility_location affinities must be finite and >= 0");
      }
    }
  }
}

double FacilityLocationOracle::Evaluate(std::span<const ElementId> set) const {
  CheckIds(set);
  if (set.empty()) return 0.0;
  double total = 0.0;
  for (int j = 0; j < columns_; ++j) {
    double best = 0.0;
    for (ElementId u : set) best = std::max(best, affinity_[u][j]);
    total += best;
  }
  return total;
}

std::size_t OracleSession::KeyHash::operator()(const ElementSet& key) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (ElementId e : key) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

double OracleSession::Evaluate(std::span<const ElementId> set) {
  ++stats_.eval_calls;
  if (!caching_) return oracle_->Evaluate(set);
  ElementSet key(set.begin(), set.end());
  if (auto it = cache_.find(key); it != cache_.end()) {
    ++stats_.cache_hits;
    return it->second;
  }
  double value = oracle_->Evaluate(set);
  cache_.emplace(std::move(key), value);
  return value;
}

std::string OracleViolation::Describe() const {
  std::ostringstream os;
  os.precision(17);
  os << kind << " violated: R=" << ToString(r) << " T=" << ToString(t);
  if (u >= 0) os << " u=" << u;
  os << " lhs=" << lhs << " rhs=" << rhs;
  return os.str();
}

namespace {

// Each check returns a violation when lhs < rhs - tolerance.
std::optional<OracleViolation> CheckSubmodularPair(const ValueOracle& oracle,
                                                   const ElementSet& r,
                                                   const ElementSet& t) {
  const double lhs = oracle.Evaluate(r) + oracle.Evaluate(t);
  const double rhs =
      oracle.Evaluate(Union(r, t)) + oracle.Evaluate(Intersection(r, t));
  if (lhs < rhs - kPropertyTolerance) {
    return OracleViolation{"submodularity", r, t, -1, lhs, rhs};
  }
  return std::nullopt;
}

// T subset of R, u not in R.
std::optional<OracleViolation> CheckNested(const ValueOracle& oracle,
                                           const ElementSet& r,
                                           const ElementSet& t, ElementId u) {
  const double f_r = oracle.Evaluate(r);
  const double f_t = oracle.Evaluate(t);
  if (f_r < f_t - kPropertyTolerance) {
    return OracleViolation{"monotonicity", r, t, -1, f_r, f_t};
  }
  if (u < 0) return std::nullopt;
  const double gain_t = oracle.Evaluate(With(t, u)) - f_t;
  const double gain_r = oracle.Evaluate(With(r, u)) - f_r;
  if (gain_t < gain_r - kPropertyTolerance) {
    return OracleViolation{"diminishing_returns", r, t, u, gain_t, gain_r};
  }
  return std::nullopt;
}

}  // namespace

OracleCheckResult CheckSubmodularMonotone(const ValueOracle& oracle, int n,
                                          int trials, std::uint64_t seed) {
  if (n <= 0) return {};
  std::mt19937_64 rng(seed);
  auto random_subset = [&](const ElementSet& of) {
    ElementSet out;
    for (ElementId e : of) {
      if (rng() & 1) out.push_back(e);
    }
    return out;
  };
  ElementSet ground(n);
  for (int i = 0; i < n; ++i) ground[i] = i;

  for (int trial = 0; trial < trials; ++trial) {
    ElementSet r = random_subset(ground);
    ElementSet t = random_subset(ground);
    if (auto v = CheckSubmodularPair(oracle, r, t)) return {false, v};

    ElementSet sub = random_subset(r);
    ElementSet outside = Difference(ground, r);
    ElementId u = outside.empty()
                      ? -1
                      : outside[static_cast<std::size_t>(rng() % outside.size())];
    if (auto v = CheckNested(oracle, r, sub, u)) return {false, v};
  }
  return {};
}

OracleCheckResult CheckSubmodularMonotoneExhaustive(const ValueOracle& oracle,
                                                    int n) {
  if (n < 0 || n > 12) {
    throw PreconditionError("exhaustive oracle check supports n <= 12");
  }
  const std::uint64_t full = (std::uint64_t{1} << n);
  std::vector<double> f(full);
  for (std::uint64_t m = 0; m < full; ++m) f[m] = oracle.Evaluate(FromMask(m));

  for (std::uint64_t r = 0; r < full; ++r) {
    for (std::uint64_t t = 0; t < full; ++t) {
      const double lhs = f[r] + f[t];
      const double rhs = f[r | t] + f[r & t];
      if (lhs < rhs - kPropertyTolerance) {
        return {false, OracleViolation{"submodularity", FromMask(r),
                                       FromMask(t), -1, lhs, rhs}};
      }
    }
  }
  for (std::uint64_t r = 0; r < full; ++r) {
    // Enumerate T subset of R, including R itself and the empty set.
    for (std::uint64_t t = r;; t = (t - 1) & r) {
      if (f[r] < f[t] - kPropertyTolerance) {
        return {false, OracleViolation{"monotonicity", FromMask(r), FromMask(t),
                                       -1, f[r], f[t]}};
      }
      for (int u = 0; u < n; ++u) {
        const std::uint64_t bit = std::uint64_t{1} << u;
        if (r & bit) continue;
        const double gain_t = f[t | bit] - f[t];
        const double gain_r = f[r | bit] - f[r];
        if (gain_t < gain_r - kPropertyTolerance) {
          return {false,
                  OracleViolation{"diminishing_returns", FromMask(r),
                                  FromMask(t), u, gain_t, gain_r}};
        }
      }
      if (t == 0) break;
    }
  }
  return {};
}

}  // namespace matknap
