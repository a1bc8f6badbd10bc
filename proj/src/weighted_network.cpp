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

#include "ppicd/weighted_network.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

namespace ppicd {

WeightedNetwork::WeightedNetwork(std::size_t num_vertices,
                                 std::vector<WeightedEdge> edges)
    : edges_(std::move(edges)), degree_(num_vertices, 0.0) {
  std::vector<std::size_t> counts(num_vertices, 0);
  for (auto& e : edges_) {
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw Error(fmt::format("edge ({}, {}) out of range for {} vertices", e.u,
                              e.v, num_vertices));
    }
    if (e.u == e.v) throw Error(fmt::format("self-loop on vertex {}", e.u));
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw Error(fmt::format("edge ({}, {}) has invalid weight {}", e.u, e.v,
                              e.weight));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    ++counts[e.u];
    ++counts[e.v];
  }

  offsets_.assign(num_vertices + 1, 0);
  for (std::size_t v = 0; v < num_vertices; ++v) {
    offsets_[v + 1] = offsets_[v] + counts[v];
  }
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[cursor[e.u]++] = {e.v, e.weight};
    adjacency_[cursor[e.v]++] = {e.u, e.weight};
  }
  for (std::size_t v = 0; v < num_vertices; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last, [](const Neighbor& a, const Neighbor& b) {
      return a.vertex < b.vertex;
    });
    if (auto dup = std::adjacent_find(first, last,
                                      [](const Neighbor& a, const Neighbor& b) {
                                        return a.vertex == b.vertex;
                                      });
        dup != last) {
      throw Error(fmt::format("duplicate edge ({}, {})", v, dup->vertex));
    }
    double d = 0.0;
    for (auto it = first; it != last; ++it) d += it->weight;
    degree_[v] = d;
    total_degree_ += d;
  }
}

std::optional<double> WeightedNetwork::weight(VertexId u, VertexId v) const {
  if (u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  const auto adj = neighbors(u);
  auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const Neighbor& n, VertexId x) { return n.vertex < x; });
  if (it == adj.end() || it->vertex != v) return std::nullopt;
  return it->weight;
}

}  // namespace ppicd
