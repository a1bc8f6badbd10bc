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
#include <vector>

#include "ppicd/evaluator.hpp"
#include "ppicd/expression.hpp"
#include "ppicd/network_io.hpp"
#include "ppicd/ppi_network.hpp"

namespace ppicd::cli {

// Planted-partition benchmark. Vertex pairs inside a block are linked with
// probability p_in and weight ~U(in_lo, in_hi); pairs across blocks with
// p_out and ~U(out_lo, out_hi).
struct PlantedConfig {
  std::vector<std::size_t> block_sizes{10, 10};
  double p_in = 1.0;
  double p_out = 0.3;
  double in_lo = 0.8;
  double in_hi = 1.0;
  double out_lo = 0.0;
  double out_hi = 0.1;
  std::uint64_t seed = 1;
  // Expression profiles: gene baseline plus a block latent profile plus
  // Gaussian noise.
  std::size_t samples = 10;
  double noise = 0.3;
  std::size_t background_genes = 200;

  void validate() const;
};

struct PlantedGraph {
  LabelledNetwork network;
  PpiNetwork ppi;  // same edges, unweighted
  std::vector<std::vector<VertexId>> blocks;
};

PlantedGraph generate_planted(const PlantedConfig& config);

ExpressionMatrix generate_expression(const PlantedGraph& graph, const PlantedConfig& config);

// One complex per block.
ComplexCatalogue planted_catalogue(const PlantedGraph& graph);

// Every protein carries its block term; a few carry a decoy term as well.
AnnotationSet planted_annotations(const PlantedGraph& graph, const PlantedConfig& config);

// Deterministic across platforms, unlike the std distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

 private:
  std::uint64_t state_;
};

}  // namespace ppicd::cli
