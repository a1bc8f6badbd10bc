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

#include "ppicd/cli/synthetic.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace ppicd::cli {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::normal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void PlantedConfig::validate() const {
  if (block_sizes.empty()) throw InputError("planted partition needs at least one block");
  for (auto s : block_sizes) {
    if (s == 0) throw InputError("block sizes must be positive");
  }
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob(p_in) || !prob(p_out)) throw InputError("edge probabilities must lie in [0, 1]");
  if (!(in_lo >= 0.0 && in_lo <= in_hi && in_hi <= 1.0) ||
      !(out_lo >= 0.0 && out_lo <= out_hi && out_hi <= 1.0)) {
    throw InputError("weight ranges must satisfy 0 <= lo <= hi <= 1");
  }
  if (samples < 2) throw InputError("insufficient samples");
  if (!(noise >= 0.0)) throw InputError("noise must be non-negative");
}

PlantedGraph generate_planted(const PlantedConfig& config) {
  config.validate();
  std::size_t n = 0;
  for (auto s : config.block_sizes) n += s;
  const int width = static_cast<int>(std::to_string(n).size());

  PlantedGraph out;
  std::vector<std::size_t> block_of(n);
  for (std::size_t b = 0, v = 0; b < config.block_sizes.size(); ++b) {
    out.blocks.emplace_back();
    for (std::size_t i = 0; i < config.block_sizes[b]; ++i, ++v) {
      block_of[v] = b;
      out.blocks.back().push_back(static_cast<VertexId>(v));
      out.ppi.add_protein(fmt::format("P{:0{}}", v + 1, width));
    }
  }

  SplitMix64 rng(config.seed);
  std::vector<WeightedEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const bool inside = block_of[u] == block_of[v];
      // Draw both numbers unconditionally so the weights of one pair do not
      // depend on whether earlier pairs were linked.
      const double coin = rng.uniform();
      const double w = inside ? rng.uniform(config.in_lo, config.in_hi)
                              : rng.uniform(config.out_lo, config.out_hi);
      if (coin >= (inside ? config.p_in : config.p_out)) continue;
      out.ppi.add_edge(u, v);
      edges.push_back({u, v, w});
    }
  }
  out.network.labels = out.ppi.labels();
  out.network.graph = WeightedNetwork(n, std::move(edges));
  return out;
}

ExpressionMatrix generate_expression(const PlantedGraph& graph, const PlantedConfig& config) {
  config.validate();
  SplitMix64 rng(config.seed ^ 0x5eed5eed5eed5eedULL);
  const std::size_t m = config.samples;
  // Unrelated background genes keep the block signal from dominating any
  // sample column; otherwise quantile normalization would erase it.
  const std::size_t n = graph.network.labels.size();
  const std::size_t rows = n + config.background_genes;
  std::vector<double> values(rows * m);
  auto fill = [&](std::size_t g, std::span<const double> latent) {
    const double base = rng.uniform(2.0, 14.0);
    for (std::size_t k = 0; k < m; ++k) {
      values[g * m + k] = base + latent[k] + config.noise * rng.normal();
    }
  };
  std::vector<double> latent(m);
  for (const auto& block : graph.blocks) {
    for (auto& x : latent) x = rng.normal();
    for (VertexId v : block) fill(v, latent);
  }
  for (std::size_t g = n; g < rows; ++g) {
    for (auto& x : latent) x = rng.normal();
    fill(g, latent);
  }
  std::vector<std::string> genes = graph.network.labels.labels();
  for (std::size_t g = n; g < rows; ++g) genes.push_back(fmt::format("BG{:04}", g - n + 1));
  std::vector<std::string> samples;
  for (std::size_t k = 0; k < m; ++k) samples.push_back(fmt::format("S{}", k + 1));
  return ExpressionMatrix(std::move(genes), std::move(samples),
                          std::move(values));
}

ComplexCatalogue planted_catalogue(const PlantedGraph& graph) {
  std::vector<Complex> entries;
  for (std::size_t b = 0; b < graph.blocks.size(); ++b) {
    if (graph.blocks[b].size() < 2) continue;
    Complex c{fmt::format("block_{}", b + 1), {}};
    for (VertexId v : graph.blocks[b]) c.proteins.push_back(graph.network.labels.label(v));
    entries.push_back(std::move(c));
  }
  return ComplexCatalogue(std::move(entries));
}

AnnotationSet planted_annotations(const PlantedGraph& graph, const PlantedConfig& config) {
  SplitMix64 rng(config.seed ^ 0xa11a11a11a11a11aULL);
  AnnotationSet out;
  for (std::size_t b = 0; b < graph.blocks.size(); ++b) {
    auto& term = out[fmt::format("TERM:{:04}", b + 1)];
    for (VertexId v : graph.blocks[b]) {
      const auto& label = graph.network.labels.label(v);
      term.push_back(label);
      if (rng.uniform() < 0.2) out["TERM:decoy"].push_back(label);
    }
  }
  for (auto& [term, proteins] : out) proteins = make_protein_set(std::move(proteins));
  return out;
}

}  // namespace ppicd::cli
