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

// Matroid axiom checking, base extension, and the constructive exchange
// mappings between two common independent sets. Everything here picks the
// smallest id whenever a choice is free.

#ifndef MATKNAP_EXCHANGE_H_
#define MATKNAP_EXCHANGE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "matknap/element_set.h"
#include "matknap/matroid.h"

namespace matknap {

struct AxiomViolation {
  // "non_emptiness", "hereditary" or "exchange".
  std::string kind;
  // hereditary: r independent, t subset of r dependent.
  // exchange: |r| > |t|, both independent, no r-element augments t.
  ElementSet r;
  ElementSet t;

  std::string Describe() const;
};

struct AxiomCheckResult {
  bool ok = true;
  std::optional<AxiomViolation> witness;
};

// Exhaustive over all subsets of {0, ..., n-1}; n <= 16. Hereditary is
// checked over every subset of every independent set (ascending bitmask
// order, so the first witness is the smallest failing subset). Exchange is
// checked for every independent pair with |R| = |T| + 1, which together
// with the hereditary property implies the general axiom.
AxiomCheckResult CheckMatroidAxioms(const Matroid& matroid, int n);

// Randomized variant for larger ground sets: builds random independent sets
// by greedy insertion in a random order and tests the axioms on them.
AxiomCheckResult CheckMatroidAxiomsSampled(const Matroid& matroid, int n,
                                           int samples, std::uint64_t seed);

// Greedily grows `independent` with elements of `pool` in ascending id order.
// Throws PreconditionError when `independent` is dependent.
ElementSet ExtendToBase(const Matroid& matroid, const ElementSet& independent,
                        const ElementSet& pool);

// True when `set` is independent and no element of the ground set can be
// added to it.
bool IsBase(const Matroid& matroid, const ElementSet& set);

// Smallest y in base1 \ base2 such that (base1 - y) + x is a base. Requires
// both arguments to be bases and x in base2 \ base1 (PreconditionError);
// throws MatroidContractError if no y exists.
ElementId FindExchangeElement(const Matroid& matroid, const ElementSet& base1,
                              const ElementSet& base2, ElementId x);

// Single-matroid mapping b : T \ S -> (S \ T) + {none}, injective on its
// non-empty values, with (S - b(x)) + x independent. T is extended to a base
// B_T of the whole ground set, S to a base B_S using B_T; elements of T
// already in B_S map to none and the rest are matched into B_S \ B_T by
// augmenting paths (ascending ids, free partners first), each pair being a
// base exchange.
// Throws MatroidContractError if the oracle is not a matroid.
std::map<ElementId, std::optional<ElementId>> BuildSingleExchangeMapping(
    const Matroid& matroid, const ElementSet& s, const ElementSet& t);

// For each x in T \ S, the set b(x) of at most k = matroids.size()
// elements of S \ T whose removal makes room for x in every matroid.
struct ExchangeMapping {
  std::map<ElementId, ElementSet> removal;
};

// Throws PreconditionError unless S and T are independent in every matroid.
ExchangeMapping BuildExchangeMapping(const MatroidList& matroids,
                                     const ElementSet& s, const ElementSet& t);

// Checks the domain is exactly T \ S, that every image is a subset of S \ T of
// size <= load_bound, that (S \ b(x)) + x is independent in every matroid,
// and that no element of S \ T appears in more than load_bound images.
// Returns a description of the first failure, or nullopt.
std::optional<std::string> ValidateExchangeMapping(
    const MatroidList& matroids, const ElementSet& s, const ElementSet& t,
    const ExchangeMapping& mapping, int load_bound);

}  // namespace matknap

#endif  // MATKNAP_EXCHANGE_H_
