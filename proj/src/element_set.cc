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

#include "matknap/element_set.h"

#include <algorithm>
#include <bit>
#include <iterator>
#include <sstream>

namespace matknap {

ElementSet MakeSet(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool IsCanonical(std::span<const ElementId> set) {
  return std::adjacent_find(set.begin(), set.end(),
                            [](ElementId a, ElementId b) { return a >= b; }) ==
         set.end();
}

bool Contains(std::span<const ElementId> set, ElementId e) {
  return std::binary_search(set.begin(), set.end(), e);
}

ElementSet Union(std::span<const ElementId> a, std::span<const ElementId> b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

ElementSet Intersection(std::span<const ElementId> a,
                        std::span<const ElementId> b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

ElementSet Difference(std::span<const ElementId> a,
                      std::span<const ElementId> b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool IsSubset(std::span<const ElementId> sub,
              std::span<const ElementId> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

ElementSet With(std::span<const ElementId> set, ElementId e) {
  ElementSet out(set.begin(), set.end());
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it == out.end() || *it != e) out.insert(it, e);
  return out;
}

ElementSet Without(std::span<const ElementId> set, ElementId e) {
  ElementSet out(set.begin(), set.end());
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it != out.end() && *it == e) out.erase(it);
  return out;
}

ElementSet ApplySwap(std::span<const ElementId> set, ElementId incoming,
                     std::span<const ElementId> removal) {
  ElementSet out = Difference(set, removal);
  auto it = std::lower_bound(out.begin(), out.end(), incoming);
  if (it == out.end() || *it != incoming) out.insert(it, incoming);
  return out;
}

ElementSet FromMask(std::uint64_t mask) {
  ElementSet out;
  out.reserve(std::popcount(mask));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t ToMask(std::span<const ElementId> set) {
  std::uint64_t mask = 0;
  for (ElementId e : set) mask |= std::uint64_t{1} << e;
  return mask;
}

std::string ToString(std::span<const ElementId> set) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) os << ", ";
    os << set[i];
  }
  os << '}';
  return os.str();
}

}  // namespace matknap
