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

#include "ppicd/ppi_network.hpp"

#include <utility>

namespace ppicd {

PpiNetwork::PpiNetwork(std::size_t num_vertices) : adjacency_(num_vertices) {}

VertexId PpiNetwork::add_protein(std::string_view label) {
  if (!labelled()) {
    throw Error("cannot add labelled proteins to an anonymous network");
  }
  const VertexId id = labels_.intern(label);
  if (id == adjacency_.size()) adjacency_.emplace_back();
  return id;
}

AddEdgeResult PpiNetwork::add_edge(std::string_view a, std::string_view b) {
  const VertexId i = add_protein(a);
  const VertexId j = add_protein(b);
  return add_edge(i, j);
}

AddEdgeResult PpiNetwork::add_edge(VertexId i, VertexId j) {
  if (i >= adjacency_.size() || j >= adjacency_.size()) {
    throw Error("edge endpoint out of range");
  }
  if (i == j) {
    ++self_loops_;
    return AddEdgeResult::kSelfLoop;
  }
  if (i > j) std::swap(i, j);
  if (!edge_keys_.insert(key(i, j)).second) {
    ++duplicates_;
    return AddEdgeResult::kDuplicate;
  }
  edges_.push_back({i, j});
  adjacency_[i].push_back(j);
  adjacency_[j].push_back(i);
  return AddEdgeResult::kAdded;
}

bool PpiNetwork::has_edge(VertexId i, VertexId j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return edge_keys_.contains(key(i, j));
}

}  // namespace ppicd
