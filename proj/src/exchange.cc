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

#include "matknap/exchange.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <vector>

#include "matknap/errors.h"

namespace matknap {

std::string AxiomViolation::Describe() const {
  return kind + " violated: R=" + ToString(r) + " T=" + ToString(t);
}

AxiomCheckResult CheckMatroidAxioms(const Matroid& matroid, int n) {
  if (n < 0 || n > 16) {
    throw PreconditionError("exhaustive axiom check supports n <= 16");
  }
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<bool> indep(full);
  for (std::uint64_t m = 0; m < full; ++m) {
    indep[m] = matroid.IsIndependent(FromMask(m));
  }
  if (!indep[0]) return {false, AxiomViolation{"non_emptiness", {}, {}}};

  for (std::uint64_t r = 1; r < full; ++r) {
    if (!indep[r]) continue;
    // Proper subsets of r in ascending bitmask order.
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t t = (r - 1) & r;; t = (t - 1) & r) {
      subsets.push_back(t);
      if (t == 0) break;
    }
    for (auto it = subsets.rbegin(); it != subsets.rend(); ++it) {
      if (!indep[*it]) {
        return {false, AxiomViolation{"hereditary", FromMask(r), FromMask(*it)}};
      }
    }
  }

  // augment[t] = elements u outside t with t + u independent.
  std::vector<std::uint64_t> augment(full, 0);
  std::vector<std::vector<std::uint64_t>> by_size(n + 1);
  for (std::uint64_t t = 0; t < full; ++t) {
    if (!indep[t]) continue;
    by_size[std::popcount(t)].push_back(t);
    for (int u = 0; u < n; ++u) {
      const std::uint64_t bit = std::uint64_t{1} << u;
      if (!(t & bit) && indep[t | bit]) augment[t] |= bit;
    }
  }
  for (int size = 0; size < n; ++size) {
    for (std::uint64_t t : by_size[size]) {
      for (std::uint64_t r : by_size[size + 1]) {
        if ((r & ~t & augment[t]) == 0) {
          return {false, AxiomViolation{"exchange", FromMask(r), FromMask(t)}};
        }
      }
    }
  }
  return {};
}

AxiomCheckResult CheckMatroidAxiomsSampled(const Matroid& matroid, int n,
                                           int samples, std::uint64_t seed) {
  if (!matroid.IsIndependent(ElementSet{})) {
    return {false, AxiomViolation{"non_emptiness", {}, {}}};
  }
  std::mt19937_64 rng(seed);
  std::vector<ElementId> order(n);
  auto random_independent = [&]() {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t target = n == 0 ? 0 : rng() % (n + 1);
    ElementSet s;
    for (ElementId e : order) {
      if (s.size() >= target) break;
      ElementSet grown = With(s, e);
      if (matroid.IsIndependent(grown)) s = std::move(grown);
    }
    return s;
  };

  for (int i = 0; i < samples; ++i) {
    ElementSet r = random_independent();
    ElementSet t = random_independent();

    ElementSet sub;
    for (ElementId e : r) {
      if (rng() & 1) sub.push_back(e);
    }
    if (!matroid.IsIndependent(sub)) {
      return {false, AxiomViolation{"hereditary", r, sub}};
    }

    if (r.size() < t.size()) std::swap(r, t);
    if (r.size() == t.size()) continue;
    bool augmented = false;
    for (ElementId e : Difference(r, t)) {
      if (matroid.IsIndependent(With(t, e))) {
        augmented = true;
        break;
      }
    }
    if (!augmented) return {false, AxiomViolation{"exchange", r, t}};
  }
  return {};
}

ElementSet ExtendToBase(const Matroid& matroid, const ElementSet& independent,
                        const ElementSet& pool) {
  if (!matroid.IsIndependent(independent)) {
    throw PreconditionError("ExtendToBase: start set " +
                            ToString(independent) + " is dependent");
  }
  ElementSet current = independent;
  for (ElementId e : pool) {
    if (Contains(current, e)) continue;
    ElementSet grown = With(current, e);
    if (matroid.IsIndependent(grown)) current = std::move(grown);
  }
  return current;
}

bool IsBase(const Matroid& matroid, const ElementSet& set) {
  if (!matroid.IsIndependent(set)) return false;
  for (ElementId e = 0; e < matroid.ground_size(); ++e) {
    if (!Contains(set, e) && matroid.IsIndependent(With(set, e))) return false;
  }
  return true;
}

ElementId FindExchangeElement(const Matroid& matroid, const ElementSet& base1,
                              const ElementSet& base2, ElementId x) {
  if (!Contains(base2, x) || Contains(base1, x)) {
    throw PreconditionError("FindExchangeElement: x=" + std::to_string(x) +
                            " is not in base2 \\ base1");
  }
  if (!IsBase(matroid, base1) || !IsBase(matroid, base2)) {
    throw PreconditionError("FindExchangeElement: arguments must be bases");
  }
  for (ElementId y : Difference(base1, base2)) {
    if (matroid.IsIndependent(ApplySwap(base1, x, ElementSet{y}))) return y;
  }
  throw MatroidContractError("no exchange element for x=" + std::to_string(x) +
                             " between bases " + ToString(base1) + " and " +
                             ToString(base2));
}

std::map<ElementId, std::optional<ElementId>> BuildSingleExchangeMapping(
    const Matroid& matroid, const ElementSet& s, const ElementSet& t) {
  if (!matroid.IsIndependent(s) || !matroid.IsIndependent(t)) {
    throw PreconditionError("exchange mapping needs independent S and T");
  }
  ElementSet ground(matroid.ground_size());
  std::iota(ground.begin(), ground.end(), 0);

  // Both bases contain their seed set; s_base \ S lies inside t_base.
  const ElementSet t_base = ExtendToBase(matroid, t, ground);
  const ElementSet s_base = ExtendToBase(matroid, s, Difference(t_base, s));

  std::map<ElementId, std::optional<ElementId>> mapping;
  for (ElementId x : Difference(t, s)) {
    if (Contains(s_base, x)) mapping[x] = std::nullopt;
  }

  // The remaining x in T \ s_base are matched into s_base \ t_base (a
  // subset of S \ T) so that s_base - y + x is a base for every pair. Such a
  // matching always exists for two bases, and S - y + x is then independent
  // as a subset of s_base - y + x. Exchanging sequentially against an
  // updated base does not give this guarantee, hence the matching.
  const ElementSet left = Difference(t, s_base);
  const ElementSet right = Difference(s_base, t_base);
  std::vector<std::vector<std::size_t>> adjacent(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (matroid.IsIndependent(ApplySwap(s_base, left[i], ElementSet{right[j]}))) {
        adjacent[i].push_back(j);
      }
    }
  }
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(right.size(), kFree);
  std::vector<char> seen;
  // A free partner is taken before any augmenting path is tried.
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j : adjacent[i]) {
      if (owner[j] == kFree) {
        owner[j] = i;
        return true;
      }
    }
    for (std::size_t j : adjacent[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (self(self, owner[j])) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < left.size(); ++i) {
    seen.assign(right.size(), 0);
    if (!augment(augment, i)) {
      throw MatroidContractError(
          "no exchange bijection between bases " + ToString(s_base) + " and " +
          ToString(t_base) + " covers element " + std::to_string(left[i]));
    }
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (owner[j] != kFree) mapping[left[owner[j]]] = right[j];
  }
  return mapping;
}

ExchangeMapping BuildExchangeMapping(const MatroidList& matroids,
                                     const ElementSet& s, const ElementSet& t) {
  if (!IsIndependentInAll(matroids, s) || !IsIndependentInAll(matroids, t)) {
    throw PreconditionError("exchange mapping needs S and T independent in "
                            "every matroid");
  }
  const ElementSet s_minus_t = Difference(s, t);
  ExchangeMapping out;
  for (ElementId x : Difference(t, s)) out.removal[x] = {};
  for (const auto& matroid : matroids) {
    for (const auto& [x, y] : BuildSingleExchangeMapping(*matroid, s, t)) {
      if (y && Contains(s_minus_t, *y)) {
        out.removal[x] = With(out.removal[x], *y);
      }
    }
  }
  return out;
}

std::optional<std::string> ValidateExchangeMapping(
    const MatroidList& matroids, const ElementSet& s, const ElementSet& t,
    const ExchangeMapping& mapping, int load_bound) {
  const ElementSet domain = Difference(t, s);
  const ElementSet s_minus_t = Difference(s, t);
  if (mapping.removal.size() != domain.size()) {
    return "domain size " + std::to_string(mapping.removal.size()) +
           " != |T \\ S| = " + std::to_string(domain.size());
  }
  std::map<ElementId, int> load;
  for (const auto& [x, removal] : mapping.removal) {
    if (!Contains(domain, x)) {
      return "element " + std::to_string(x) + " is not in T \\ S";
    }
    if (!IsSubset(removal, s_minus_t)) {
      return "b(" + std::to_string(x) + ")=" + ToString(removal) +
             " is not a subset of S \\ T";
    }
    if (static_cast<int>(removal.size()) > load_bound) {
      return "b(" + std::to_string(x) + ") has more than " +
             std::to_string(load_bound) + " elements";
    }
    if (!IsIndependentInAll(matroids, ApplySwap(s, x, removal))) {
      return "(S \\ b(" + std::to_string(x) + ")) + " + std::to_string(x) +
             " is dependent";
    }
    for (ElementId y : removal) {
      if (++load[y] > load_bound) {
        return "element " + std::to_string(y) + " appears in more than " +
               std::to_string(load_bound) + " images";
      }
    }
  }
  return std::nullopt;
}

}  // namespace matknap
