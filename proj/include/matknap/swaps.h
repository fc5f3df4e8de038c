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

// Swap candidates around a current solution S: one incoming element x not in
// S and a removal set R subset of S such that (S \ R) + x stays independent
// in every matroid. An empty removal set is a pure addition.

#ifndef MATKNAP_SWAPS_H_
#define MATKNAP_SWAPS_H_

#include <vector>

#include "matknap/element_set.h"
#include "matknap/instance.h"
#include "matknap/oracle.h"

namespace matknap {

struct SwapCandidate {
  ElementId x = -1;
  ElementSet removal;
  // f((S \ removal) + x) - f(S).
  double gain = 0.0;
  // gain / c_x. For c_x == 0 the density is +inf when gain > 0, 0 when
  // gain == 0 and -inf otherwise, so such candidates are never accepted
  // unless they strictly improve f.
  double density = 0.0;

  bool is_addition() const { return removal.empty(); }

  friend bool operator==(const SwapCandidate&, const SwapCandidate&) = default;
};

double SwapDensity(double gain, double incoming_cost);

// Candidate order: density descending, then gain descending, then x
// ascending, then removal lexicographically ascending.
bool SwapOrder(const SwapCandidate& a, const SwapCandidate& b);

// All swaps with |removal| <= max_removal, sorted by SwapOrder. Incoming
// elements whose own cost exceeds the budget are skipped. Throws
// PreconditionError when S is dependent or max_removal < 0.
std::vector<SwapCandidate> EnumerateSwaps(const Instance& instance,
                                          const ElementSet& s,
                                          int max_removal,
                                          OracleSession& session);
std::vector<SwapCandidate> EnumerateSwaps(const Instance& instance,
                                          const ElementSet& s,
                                          int max_removal);

// Pairs (x, y) with y in S or no removal at all. Produces the same list as
// EnumerateSwaps(..., 1, ...) through a separate code path that follows the
// single-matroid pair formulation directly.
std::vector<SwapCandidate> EnumerateSingleSwaps(const Instance& instance,
                                                const ElementSet& s,
                                                OracleSession& session);

}  // namespace matknap

#endif  // MATKNAP_SWAPS_H_
