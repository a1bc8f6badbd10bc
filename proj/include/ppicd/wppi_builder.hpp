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

#include "ppicd/engine.hpp"
#include "ppicd/expression.hpp"
#include "ppicd/network_io.hpp"
#include "ppicd/ppi_network.hpp"

namespace ppicd {

// Weight used for unmatched edges when no matched edge exists to average.
inline constexpr double kGlobalDefaultWeight = 0.5;

// |correlation| on an interacting pair, 0 otherwise.
inline double edge_weight(double correlation, bool adjacent) {
  return adjacent ? (correlation < 0 ? -correlation : correlation) : 0.0;
}

struct WppiOptions {
  // Replaces the computed fallback weight when set. Must lie in [0, 1].
  std::optional<double> default_weight;
  // Gives edges whose correlation is exactly 0 the fallback weight too.
  bool zero_as_unmatched = false;
  // Edge partitions for the correlation map; 0 means one per thread.
  std::size_t partitions = 0;
  PartitionStrategy strategy = PartitionStrategy::kRange;
};

struct WppiStats {
  std::size_t matched_proteins = 0;
  double matching_ratio_percent = 0.0;
  std::size_t matched_edges = 0;
  std::size_t fallback_edges = 0;
  std::size_t zero_variance_edges = 0;
  std::size_t unique_gene_pairs = 0;
  double fallback_weight = kGlobalDefaultWeight;
};

struct WppiBuild {
  LabelledNetwork network;
  WppiStats stats;
};

// Weights every interaction by the absolute co-expression of its endpoints'
// genes. Edges with an unmatched endpoint receive the mean weight of the
// matched edges (kGlobalDefaultWeight if there are none) unless
// options.default_weight overrides it. Correlations are computed once per
// distinct gene pair. The edge set and order equal the input's.
// Throws InputError("empty network") when the network has no edges.
WppiBuild build_wppi(const PpiNetwork& ppi, const ExpressionMatrix& matrix,
                     const ProteinGeneMap* mapping, const WppiOptions& options,
                     const Executor& executor);

}  // namespace ppicd
