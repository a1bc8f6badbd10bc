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
#include <random>
#include <vector>

#include "ppicd/weighted_network.hpp"

namespace ppicd::testing {

// Erdos-Renyi graph with uniform weights. Not every vertex need have an edge.
inline WeightedNetwork random_network(std::mt19937_64& rng, std::size_t n, double p,
                                      double w_lo = 0.0, double w_hi = 1.0) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(w_lo, w_hi);
  std::vector<WeightedEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.push_back({u, v, weight(rng)});
    }
  }
  return WeightedNetwork(n, std::move(edges));
}

// Brute-force in/out sums of a member set.
struct BruteSums {
  double in = 0.0;
  double out = 0.0;
};

inline BruteSums brute_sums(const WeightedNetwork& g, const std::vector<char>& member) {
  BruteSums s;
  for (const auto& e : g.edges()) {
    const bool a = member[e.u];
    const bool b = member[e.v];
    if (a && b) {
      s.in += 2.0 * e.weight;
    } else if (a || b) {
      s.out += e.weight;
    }
  }
  return s;
}

}  // namespace ppicd::testing
