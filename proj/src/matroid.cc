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

#include "matknap/matroid.h"

#include <numeric>
#include <string>

#include "matknap/errors.h"

namespace matknap {

void Matroid::CheckIds(std::span<const ElementId> set) const {
  const int n = ground_size();
  for (ElementId e : set) {
    if (e < 0 || e >= n) {
      throw InvalidElementError("element " + std::to_string(e) +
                                " outside matroid ground set of size " +
                                std::to_string(n));
    }
  }
}

bool IsIndependentInAll(const MatroidList& matroids,
                        std::span<const ElementId> set) {
  for (const auto& m : matroids) {
    if (!m->IsIndependent(set)) return false;
  }
  return true;
}

UniformMatroid::UniformMatroid(int ground_size, int rank)
    : ground_size_(ground_size), rank_(rank) {
  if (ground_size_ < 0) throw PreconditionError("negative ground size");
  if (rank_ < 0) throw PreconditionError("uniform rank must be >= 0");
}

bool UniformMatroid::IsIndependent(std::span<const ElementId> set) const {
  CheckIds(set);
  return static_cast<int>(set.size()) <= rank_;
}

PartitionMatroid::PartitionMatroid(std::vector<int> block_of,
                                   std::vector<int> capacity)
    : block_of_(std::move(block_of)), capacity_(std::move(capacity)) {
  for (int b : block_of_) {
    if (b < 0 || b >= static_cast<int>(capacity_.size())) {
      throw PreconditionError("partition block index " + std::to_string(b) +
                              " has no capacity entry");
    }
  }
  for (int c : capacity_) {
    if (c < 0) throw PreconditionError("partition capacity must be >= 0");
  }
}

bool PartitionMatroid::IsIndependent(std::span<const ElementId> set) const {
  CheckIds(set);
  std::vector<int> used(capacity_.size(), 0);
  for (ElementId e : set) {
    const int b = block_of_[e];
    if (++used[b] > capacity_[b]) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int vertex_count,
                               std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) {
      throw PreconditionError("graphic edge endpoint out of range");
    }
  }
}

bool GraphicMatroid::IsIndependent(std::span<const ElementId> set) const {
  CheckIds(set);
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (ElementId e : set) {
    const int ra = find(edges_[e].first);
    const int rb = find(edges_[e].second);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

ExplicitMatroid::ExplicitMatroid(int ground_size,
                                 const std::vector<ElementSet>& family)
    : ground_size_(ground_size) {
  if (ground_size_ < 0 || ground_size_ > kMaxGroundSize) {
    throw PreconditionError("explicit matroid supports at most 16 elements");
  }
  independent_.assign(std::size_t{1} << ground_size_, false);
  for (const ElementSet& s : family) {
    const ElementSet canonical = MakeSet(s);
    CheckIds(canonical);
    independent_[ToMask(canonical)] = true;
  }
}

bool ExplicitMatroid::IsIndependent(std::span<const ElementId> set) const {
  CheckIds(set);
  return independent_[ToMask(set)];
}

std::vector<ElementSet> ExplicitMatroid::independent_sets() const {
  std::vector<ElementSet> out;
  for (std::size_t m = 0; m < independent_.size(); ++m) {
    if (independent_[m]) out.push_back(FromMask(m));
  }
  return out;
}

}  // namespace matknap
