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

#include <optional>
#include <span>
#include <vector>

#include "ppicd/types.hpp"

namespace ppicd {

struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Immutable undirected weighted graph in CSR form. Weights are non-negative;
// the co-expression builder additionally keeps them in [0, 1], while
// compressed super-graphs carry aggregated weights above 1.
class WeightedNetwork {
 public:
  struct Neighbor {
    VertexId vertex;
    double weight;
  };

  WeightedNetwork() = default;
  // Edges are stored with u < v in the given order. Throws Error on
  // self-loops, duplicates, out-of-range endpoints or negative/non-finite
  // weights.
  WeightedNetwork(std::size_t num_vertices, std::vector<WeightedEdge> edges);

  std::size_t num_vertices() const { return degree_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const WeightedEdge> edges() const { return edges_; }

  // Sorted by neighbour index.
  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Sum of incident edge weights.
  double weighted_degree(VertexId v) const { return degree_.at(v); }
  std::span<const double> weighted_degrees() const { return degree_; }
  double total_weighted_degree() const { return total_degree_; }

  std::optional<double> weight(VertexId u, VertexId v) const;

 private:
  std::vector<WeightedEdge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> degree_;
  double total_degree_ = 0.0;
};

}  // namespace ppicd
