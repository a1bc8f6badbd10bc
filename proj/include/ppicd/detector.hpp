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

// Two-stage agglomerative community detection on a weighted interaction
// network.
//
// Stage 1 seeds singleton communities at hub vertices (weighted degree above
// a threshold, by default the mean) and grows each one by repeatedly
// appending the adjacent vertex that most increases its modularity ratio
//   Q(C) = sum of member weight inside C / sum of member weight leaving C.
// Growth is append-only: a candidate must be unassigned or the sole member
// of a singleton community, so communities that have grown never lose
// members. Vertices no community absorbed are promoted to new seeds.
//
// Stage 2 collapses each stage-1 community into a super-vertex and merges
// super-vertices whose union keeps the functional cohesion
//   FC = interaction intensity x connectivity
// at or above a threshold lambda.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppicd/engine.hpp"
#include "ppicd/partition.hpp"
#include "ppicd/weighted_network.hpp"

namespace ppicd {

struct HubConfig {
  // Weighted-degree threshold for hub seeds; the mean degree when unset.
  std::optional<double> d_alpha;
  // Functional-cohesion threshold; useful range is roughly (1, 3).
  double lambda = 2.0;
  std::size_t max_stage2_passes = 32;
  std::size_t max_stage1_sweeps = 10000;

  // Throws InputError on d_alpha < 0, lambda <= 0 or zero pass caps.
  void validate() const;
};

// Denominator used for Q when a community has no outgoing weight.
inline constexpr double kSaturationEpsilon = 1e-12;

inline double weighted_degree(const WeightedNetwork& network, VertexId v) {
  return network.weighted_degree(v);
}

struct HubSelection {
  std::vector<VertexId> hubs;  // ascending
  double threshold = 0.0;
  // No vertex exceeded the threshold, so every vertex was seeded.
  bool degenerate = false;
};

// Vertices with degree strictly above the threshold (default: mean degree).
// Throws InputError on an empty degree list.
HubSelection select_hubs(std::span<const double> degrees,
                         std::optional<double> d_alpha = std::nullopt);

struct SeedPartition {
  Partition partition;
  HubSelection selection;
};

// Seed partition with one singleton community per hub, in ascending vertex
// order; every other vertex is unassigned.
SeedPartition select_hubs(const WeightedNetwork& network, const HubConfig& config);

// in / out, with out replaced by kSaturationEpsilon when below it.
inline double modularity_ratio(double in_sum, double out_sum) {
  return in_sum / (out_sum < kSaturationEpsilon ? kSaturationEpsilon : out_sum);
}

// Q of community k from the cached sums. Throws Error if k is empty.
double community_modularity(const Partition& partition, CommunityId k);

// Q(C_k + v) - Q(C_k). Throws Error if v is already in C_k or has no edge
// into C_k.
double delta_modularity(const Partition& partition, CommunityId k, VertexId v);

// A vertex that stage-1 growth may append: unassigned or alone in its
// community.
bool is_joinable(const Partition& partition, VertexId v);

struct Stage1Stats {
  std::size_t sweeps = 0;
  std::size_t moves = 0;
  std::size_t promoted = 0;
  bool capped = false;
};

struct Stage1Result {
  Partition partition;
  Stage1Stats stats;
};

// Grows the seeds until a full sweep appends nothing and no vertex is left
// unassigned. Communities take turns in ascending id order; during its turn
// a community keeps appending its best joinable neighbour (largest positive
// delta Q, ties to the lowest vertex index) until none improves it. When a
// sweep changes nothing, leftover unassigned vertices become new singleton
// seeds and sweeping resumes. The returned partition is total.
Stage1Result stage1_agglomerate(Partition seeds, const HubConfig& config);

// Network of stage-1 communities. Super-vertex i stands for members[i].
struct CompressedNetwork {
  // Super-edges carry the summed weight of original edges crossing the two
  // communities.
  WeightedNetwork graph;
  std::vector<std::vector<VertexId>> members;
  // Sum of the original weighted degrees of the members.
  std::vector<double> degree;
  // Summed weight of original edges inside the community, each edge once.
  std::vector<double> self_weight;

  std::size_t size() const { return members.size(); }
};

// One super-vertex per non-empty community, in ascending community id order.
// Throws Error if the partition leaves any vertex unassigned.
CompressedNetwork compress(const Partition& partition);

// 2e / (n (n - 1)). Throws Error for n < 2.
double connectivity(std::size_t members, std::size_t internal_edges);

// 2 * internal weight / sum of members' mean neighbour weights; 0 when the
// denominator is 0.
double interaction_intensity(double internal_weight, double mean_neighbor_weight_sum);

inline double functional_cohesion(double interaction_intensity, double connectivity) {
  return interaction_intensity * connectivity;
}

// Mean weight over all neighbours of v. Throws Error("isolated super-vertex")
// when v has none.
double mean_neighbor_weight(const WeightedNetwork& graph, VertexId v);

struct CohesionMetrics {
  std::size_t internal_edges = 0;
  double internal_weight = 0.0;
  double mean_neighbor_weight_sum = 0.0;
  double connectivity = 0.0;
  double interaction_intensity = 0.0;
  double functional_cohesion = 0.0;
};

// Cohesion of a member set of `graph` (at least two distinct members, each
// with a neighbour). Only edges between distinct members are internal.
CohesionMetrics evaluate_cohesion(const WeightedNetwork& graph,
                                  std::span<const VertexId> members);

struct Stage2Result {
  // Communities of super-vertex ids, ordered by their smallest super-vertex.
  std::vector<std::vector<VertexId>> communities;
  std::size_t passes = 0;
  std::size_t merges = 0;
  bool capped = false;
};

// Starts from singleton super-vertex communities and visits super-vertices in
// descending degree (ties to the lowest index). Each neighbour that is still
// alone is tentatively appended to the visited vertex's community and kept
// when the community's FC is at least lambda. Passes repeat until one makes
// no change or max_stage2_passes is reached.
Stage2Result stage2_refine(const CompressedNetwork& compressed, const HubConfig& config);

struct DetectedCommunity {
  std::vector<VertexId> members;  // ascending
  double functional_cohesion = 0.0;  // 0 for singletons
  double modularity = 0.0;
};

struct DetectionStats {
  std::size_t hubs = 0;
  double hub_threshold = 0.0;
  bool degenerate_seeding = false;
  Stage1Stats stage1;
  std::size_t stage1_communities = 0;
  std::size_t stage2_passes = 0;
  std::size_t stage2_merges = 0;
  bool stage2_capped = false;
};

struct DetectionResult {
  // Disjoint, covering every vertex, ordered by smallest member.
  std::vector<DetectedCommunity> communities;
  DetectionStats stats;
  std::vector<std::string> warnings;
};

// select_hubs -> stage1_agglomerate -> compress -> stage2_refine, expanded to
// original vertices, with FC and Q of every final community measured on the
// original network. Throws InputError on an empty network.
DetectionResult detect(const WeightedNetwork& network, const HubConfig& config,
                       const Executor& executor);

}  // namespace ppicd
