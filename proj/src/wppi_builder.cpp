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

#include "ppicd/wppi_builder.hpp"

#include <cmath>
#include <unordered_map>

namespace ppicd {

WppiBuild build_wppi(const PpiNetwork& ppi, const ExpressionMatrix& matrix,
                     const ProteinGeneMap* mapping, const WppiOptions& options,
                     const Executor& executor) {
  if (ppi.num_edges() == 0) throw InputError("empty network");
  if (!ppi.labelled()) throw Error("co-expression weighting needs protein labels");
  if (options.default_weight &&
      !(*options.default_weight >= 0.0 && *options.default_weight <= 1.0)) {
    throw InputError("default weight must lie in [0, 1]");
  }

  WppiBuild out;
  const GeneMatch match = match_genes(ppi.labels(), matrix, mapping);
  out.stats.matched_proteins = match.matched;
  out.stats.matching_ratio_percent = match.ratio_percent;

  // Distinct gene pairs, in order of first use, form a small gene graph whose
  // edges are mapped in parallel.
  const auto edges = ppi.edges();
  constexpr std::size_t kNoPair = SIZE_MAX;
  std::vector<std::size_t> pair_of_edge(edges.size(), kNoPair);
  std::vector<VertexPair> gene_pairs;
  std::unordered_map<std::uint64_t, std::size_t> pair_index;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ri = match.row_of[edges[e].first];
    const auto& rj = match.row_of[edges[e].second];
    if (!ri || !rj) continue;
    auto a = static_cast<VertexId>(std::min(*ri, *rj));
    auto b = static_cast<VertexId>(std::max(*ri, *rj));
    const auto key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto [it, inserted] = pair_index.emplace(key, gene_pairs.size());
    if (inserted) gene_pairs.push_back({a, b});
    pair_of_edge[e] = it->second;
  }
  out.stats.unique_gene_pairs = gene_pairs.size();

  const std::size_t k = options.partitions != 0 ? options.partitions
                                                : executor.threads();
  const auto partitioning =
      partition_edges(gene_pairs, matrix.num_genes(), k, options.strategy);
  const auto correlations = parallel_edge_map<Correlation>(
      partitioning, executor, [&](std::size_t p) {
        return pearson(matrix.row(gene_pairs[p].first),
                       matrix.row(gene_pairs[p].second));
      });

  std::vector<WeightedEdge> weighted(edges.size());
  std::vector<bool> needs_fallback(edges.size(), false);
  std::vector<double> matched_weights;
  matched_weights.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    weighted[e] = {edges[e].first, edges[e].second, 0.0};
    if (pair_of_edge[e] == kNoPair) {
      needs_fallback[e] = true;
      continue;
    }
    const Correlation& c = correlations[pair_of_edge[e]];
    if (c.zero_variance) ++out.stats.zero_variance_edges;
    const double w = edge_weight(c.value, true);
    if (w == 0.0 && options.zero_as_unmatched) {
      needs_fallback[e] = true;
      continue;
    }
    weighted[e].weight = w;
    matched_weights.push_back(w);
  }
  out.stats.matched_edges = matched_weights.size();

  if (options.default_weight) {
    out.stats.fallback_weight = *options.default_weight;
  } else if (!matched_weights.empty()) {
    const double sum = deterministic_reduce<double>(
        matched_weights, std::plus<>{}, executor);
    out.stats.fallback_weight =
        std::min(1.0, sum / static_cast<double>(matched_weights.size()));
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (needs_fallback[e]) {
      weighted[e].weight = out.stats.fallback_weight;
      ++out.stats.fallback_edges;
    }
  }

  out.network.labels = ppi.labels();
  out.network.graph = WeightedNetwork(ppi.num_vertices(), std::move(weighted));
  return out;
}

}  // namespace ppicd
