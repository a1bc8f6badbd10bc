// Copyright 2026 The ppicd Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ppicd/label_index.hpp"
#include "ppicd/types.hpp"

namespace ppicd {

// Unordered vertex pair stored with first < second.
struct VertexPair {
  VertexId first = 0;
  VertexId second = 0;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

enum class AddEdgeResult { kAdded, kDuplicate, kSelfLoop };

// Unweighted, undirected interaction graph. Duplicate edges collapse onto the
// first occurrence and self-loops are rejected and counted.
class PpiNetwork {
 public:
  PpiNetwork() = default;
  // Anonymous network with `num_vertices` vertices and no labels.
  explicit PpiNetwork(std::size_t num_vertices);

  // Labelled construction: vertices are interned in order of first appearance.
  VertexId add_protein(std::string_view label);
  AddEdgeResult add_edge(std::string_view a, std::string_view b);

  AddEdgeResult add_edge(VertexId i, VertexId j);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  // Edges in order of first insertion.
  std::span<const VertexPair> edges() const { return edges_; }
  // Neighbours of `v` in insertion order.
  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool has_edge(VertexId i, VertexId j) const;

  const LabelIndex& labels() const { return labels_; }
  bool labelled() const { return labels_.size() == adjacency_.size(); }

  std::size_t duplicates_dropped() const { return duplicates_; }
  std::size_t self_loops_dropped() const { return self_loops_; }

 private:
  static std::uint64_t key(VertexId i, VertexId j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
  }

  LabelIndex labels_;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::unordered_set<std::uint64_t> edge_keys_;
  std::size_t duplicates_ = 0;
  std::size_t self_loops_ = 0;
};

}  // namespace ppicd
