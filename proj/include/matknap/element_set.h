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

// Sets of ground-set elements are kept as sorted, duplicate-free vectors of
// ids. Iteration is therefore always in ascending id order, and the natural
// std::vector ordering is the lexicographic order used for tie-breaking.

#ifndef MATKNAP_ELEMENT_SET_H_
#define MATKNAP_ELEMENT_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace matknap {

using ElementId = int;
using ElementSet = std::vector<ElementId>;

// Sorts and deduplicates `ids`.
ElementSet MakeSet(std::vector<ElementId> ids);
inline ElementSet MakeSet(std::initializer_list<ElementId> ids) {
  return MakeSet(std::vector<ElementId>(ids));
}

bool IsCanonical(std::span<const ElementId> set);
bool Contains(std::span<const ElementId> set, ElementId e);

ElementSet Union(std::span<const ElementId> a, std::span<const ElementId> b);
ElementSet Intersection(std::span<const ElementId> a,
                        std::span<const ElementId> b);
ElementSet Difference(std::span<const ElementId> a,
                      std::span<const ElementId> b);
bool IsSubset(std::span<const ElementId> sub, std::span<const ElementId> super);

ElementSet With(std::span<const ElementId> set, ElementId e);
ElementSet Without(std::span<const ElementId> set, ElementId e);

// (set \ removal) + incoming.
ElementSet ApplySwap(std::span<const ElementId> set, ElementId incoming,
                     std::span<const ElementId> removal);

// Bitmask views, for exhaustive enumeration over small ground sets.
ElementSet FromMask(std::uint64_t mask);
std::uint64_t ToMask(std::span<const ElementId> set);

// "{0, 2, 5}".
std::string ToString(std::span<const ElementId> set);

}  // namespace matknap

#endif  // MATKNAP_ELEMENT_SET_H_
