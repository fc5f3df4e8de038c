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

#include "matknap/swaps.h"

#include <algorithm>
#include <limits>

#include "matknap/errors.h"

namespace matknap {
namespace {

void CheckStart(const Instance& instance, const ElementSet& s) {
  instance.CheckElements(s);
  if (!IsIndependentInAll(instance.matroids(), s)) {
    throw PreconditionError("swap enumeration from dependent set " +
                            ToString(s));
  }
}

// Visits every subset of `from` with at most `max_size` elements.
template <typename Visit>
void ForEachSmallSubset(const ElementSet& from, int max_size, ElementSet& cur,
                        std::size_t start, Visit&& visit) {
  visit(static_cast<const ElementSet&>(cur));
  if (static_cast<int>(cur.size()) == max_size) return;
  for (std::size_t i = start; i < from.size(); ++i) {
    cur.push_back(from[i]);
    ForEachSmallSubset(from, max_size, cur, i + 1, visit);
    cur.pop_back();
  }
}

}  // namespace

double SwapDensity(double gain, double incoming_cost) {
  if (incoming_cost > 0.0) return gain / incoming_cost;
  if (gain > 0.0) return std::numeric_limits<double>::infinity();
  if (gain < 0.0) return -std::numeric_limits<double>::infinity();
  return 0.0;
}

bool SwapOrder(const SwapCandidate& a, const SwapCandidate& b) {
  if (a.density != b.density) return a.density > b.density;
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.x != b.x) return a.x < b.x;
  return a.removal < b.removal;
}

std::vector<SwapCandidate> EnumerateSwaps(const Instance& instance,
                                          const ElementSet& s,
                                          int max_removal,
                                          OracleSession& session) {
  if (max_removal < 0) throw PreconditionError("max_removal must be >= 0");
  CheckStart(instance, s);
  const double base = session.Evaluate(s);
  std::vector<SwapCandidate> out;
  ElementSet removal;
  for (ElementId x = 0; x < instance.n(); ++x) {
    if (Contains(s, x) || instance.cost(x) > instance.budget()) continue;
    ForEachSmallSubset(s, max_removal, removal, 0,
                       [&](const ElementSet& r) {
                         ElementSet next = ApplySwap(s, x, r);
                         if (!IsIndependentInAll(instance.matroids(), next)) {
                           return;
                         }
                         const double gain = session.Evaluate(next) - base;
                         out.push_back({x, r, gain,
                                        SwapDensity(gain, instance.cost(x))});
                       });
  }
  std::sort(out.begin(), out.end(), SwapOrder);
  return out;
}

std::vector<SwapCandidate> EnumerateSwaps(const Instance& instance,
                                          const ElementSet& s,
                                          int max_removal) {
  OracleSession session(instance.oracle());
  return EnumerateSwaps(instance, s, max_removal, session);
}

std::vector<SwapCandidate> EnumerateSingleSwaps(const Instance& instance,
                                                const ElementSet& s,
                                                OracleSession& session) {
  CheckStart(instance, s);
  const double base = session.Evaluate(s);
  std::vector<SwapCandidate> out;
  auto consider = [&](ElementId x, const ElementSet& removal) {
    ElementSet next = ApplySwap(s, x, removal);
    if (!IsIndependentInAll(instance.matroids(), next)) return;
    const double gain = session.Evaluate(next) - base;
    out.push_back({x, removal, gain, SwapDensity(gain, instance.cost(x))});
  };
  for (ElementId x = 0; x < instance.n(); ++x) {
    if (Contains(s, x) || instance.cost(x) > instance.budget()) continue;
    consider(x, {});
    for (ElementId y : s) consider(x, {y});
  }
  std::sort(out.begin(), out.end(), SwapOrder);
  return out;
}

}  // namespace matknap
