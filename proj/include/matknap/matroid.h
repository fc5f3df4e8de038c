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

// Matroids given by independence oracles, and the concrete families used by
// instances. An intersection of matroids is simply a list of them.

#ifndef MATKNAP_MATROID_H_
#define MATKNAP_MATROID_H_

#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "matknap/element_set.h"

namespace matknap {

class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int ground_size() const = 0;

  // `set` must be canonical; ids outside the ground set throw
  // InvalidElementError.
  virtual bool IsIndependent(std::span<const ElementId> set) const = 0;

  virtual std::string_view family() const = 0;

 protected:
  void CheckIds(std::span<const ElementId> set) const;
};

using MatroidList = std::vector<std::shared_ptr<const Matroid>>;

// Conjunction of IsIndependent over `matroids`.
bool IsIndependentInAll(const MatroidList& matroids,
                        std::span<const ElementId> set);

// |S| <= rank.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int ground_size, int rank);

  int ground_size() const override { return ground_size_; }
  bool IsIndependent(std::span<const ElementId> set) const override;
  std::string_view family() const override { return "uniform"; }

  int rank() const { return rank_; }

 private:
  int ground_size_;
  int rank_;
};

// |S intersect block b| <= capacity[b] for every block b.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<int> block_of, std::vector<int> capacity);

  int ground_size() const override {
    return static_cast<int>(block_of_.size());
  }
  bool IsIndependent(std::span<const ElementId> set) const override;
  std::string_view family() const override { return "partition"; }

  const std::vector<int>& block_of() const { return block_of_; }
  const std::vector<int>& capacity() const { return capacity_; }

 private:
  std::vector<int> block_of_;
  std::vector<int> capacity_;
};

// Element u is edge edges[u]; a set is independent iff it is a forest.
// Self-loops are never independent; parallel edges form a 2-cycle.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);

  int ground_size() const override { return static_cast<int>(edges_.size()); }
  bool IsIndependent(std::span<const ElementId> set) const override;
  std::string_view family() const override { return "graphic"; }

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
};

// Independence given by an explicit family of subsets; at most 16 elements.
// The family is not required to be a matroid at construction time; run
// CheckMatroidAxioms before handing it to a solver.
class ExplicitMatroid final : public Matroid {
 public:
  static constexpr int kMaxGroundSize = 16;

  ExplicitMatroid(int ground_size, const std::vector<ElementSet>& family);

  int ground_size() const override { return ground_size_; }
  bool IsIndependent(std::span<const ElementId> set) const override;
  std::string_view family() const override { return "explicit"; }

  // Independent sets in ascending bitmask order.
  std::vector<ElementSet> independent_sets() const;

 private:
  int ground_size_;
  std::vector<bool> independent_;  // indexed by bitmask
};

}  // namespace matknap

#endif  // MATKNAP_MATROID_H_
