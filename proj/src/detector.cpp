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

#include "ppicd/detector.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <fmt/format.h>

namespace ppicd {

void HubConfig::validate() const {
  if (d_alpha && !(*d_alpha >= 0.0)) throw InputError("d_alpha must be >= 0");
  if (!(lambda > 0.0)) throw InputError("lambda must be > 0");
  if (max_stage2_passes == 0) throw InputError("max_stage2_passes must be positive");
  if (max_stage1_sweeps == 0) throw InputError("max_stage1_sweeps must be positive");
}

HubSelection select_hubs(std::span<const double> degrees,
                         std::optional<double> d_alpha) {
  if (degrees.empty()) throw InputError("empty network");
  HubSelection sel;
  if (d_alpha) {
    sel.threshold = *d_alpha;
  } else {
    sel.threshold = std::accumulate(degrees.begin(), degrees.end(), 0.0) /
                    static_cast<double>(degrees.size());
  }
  for (VertexId v = 0; v < degrees.size(); ++v) {
    if (degrees[v] > sel.threshold) sel.hubs.push_back(v);
  }
  if (sel.hubs.empty()) {
    sel.degenerate = true;
    sel.hubs.resize(degrees.size());
    std::iota(sel.hubs.begin(), sel.hubs.end(), VertexId{0});
  }
  return sel;
}

SeedPartition select_hubs(const WeightedNetwork& network, const HubConfig& config) {
  SeedPartition seeds{Partition(network),
                      select_hubs(network.weighted_degrees(), config.d_alpha)};
  for (VertexId v : seeds.selection.hubs) seeds.partition.add_singleton(v);
  return seeds;
}

double community_modularity(const Partition& partition, CommunityId k) {
  if (partition.empty(k)) throw Error(fmt::format("community {} is empty", k));
  return modularity_ratio(partition.in_sum(k), partition.out_sum(k));
}

double delta_modularity(const Partition& partition, CommunityId k, VertexId v) {
  if (partition.community_of(v) == k) {
    throw Error(fmt::format("vertex {} already belongs to community {}", v, k));
  }
  bool adjacent = false;
  for (const auto& n : partition.network().neighbors(v)) {
    if (partition.community_of(n.vertex) == k) {
      adjacent = true;
      break;
    }
  }
  if (!adjacent) {
    throw Error(fmt::format("vertex {} has no edge into community {}", v, k));
  }
  const double a = partition.weight_to(v, k);
  const double d = partition.network().weighted_degree(v);
  const double in = partition.in_sum(k);
  const double out = partition.out_sum(k);
  return modularity_ratio(in + 2.0 * a, out + d - 2.0 * a) -
         modularity_ratio(in, out);
}

bool is_joinable(const Partition& partition, VertexId v) {
  const CommunityId c = partition.community_of(v);
  return c == kUnassigned || partition.size(c) == 1;
}

namespace {

// Frontier of a growing community: weight from each adjacent non-member into
// the community, kept in dense scratch arrays reused across communities.
class Frontier {
 public:
  explicit Frontier(std::size_t n) : weight_(n, 0.0), listed_(n, 0) {}

  void add(VertexId v, double w) {
    if (!listed_[v]) {
      listed_[v] = 1;
      vertices_.push_back(v);
    }
    weight_[v] += w;
  }
  void remove(VertexId v) {
    listed_[v] = 0;
    weight_[v] = 0.0;
    vertices_.erase(std::find(vertices_.begin(), vertices_.end(), v));
  }
  void clear() {
    for (VertexId v : vertices_) {
      listed_[v] = 0;
      weight_[v] = 0.0;
    }
    vertices_.clear();
  }
  std::span<const VertexId> vertices() const { return vertices_; }
  double weight(VertexId v) const { return weight_[v]; }

 private:
  std::vector<double> weight_;
  std::vector<char> listed_;
  std::vector<VertexId> vertices_;
};

// Appends best joinable neighbours to c until none has positive delta Q.
// Returns the number of vertices appended.
std::size_t grow(Partition& p, CommunityId c, Frontier& frontier) {
  const WeightedNetwork& g = p.network();
  frontier.clear();
  for (VertexId m : p.members(c)) {
    for (const auto& n : g.neighbors(m)) {
      if (p.community_of(n.vertex) != c) frontier.add(n.vertex, n.weight);
    }
  }

  std::size_t appended = 0;
  while (true) {
    const double in = p.in_sum(c);
    const double out = p.out_sum(c);
    const double q = modularity_ratio(in, out);
    std::optional<VertexId> best;
    double best_gain = 0.0;
    for (VertexId u : frontier.vertices()) {
      if (!is_joinable(p, u)) continue;
      const double a = frontier.weight(u);
      const double gain =
          modularity_ratio(in + 2.0 * a, out + g.weighted_degree(u) - 2.0 * a) - q;
      if (gain <= 0.0) continue;
      if (!best || gain > best_gain || (gain == best_gain && u < *best)) {
        best = u;
        best_gain = gain;
      }
    }
    if (!best) break;

    p.move(*best, c);
    ++appended;
    frontier.remove(*best);
    for (const auto& n : g.neighbors(*best)) {
      if (p.community_of(n.vertex) != c) frontier.add(n.vertex, n.weight);
    }
  }
  frontier.clear();
  return appended;
}

}  // namespace

Stage1Result stage1_agglomerate(Partition seeds, const HubConfig& config) {
  Stage1Result result{std::move(seeds), {}};
  Partition& p = result.partition;
  Frontier frontier(p.network().num_vertices());

  while (true) {
    if (result.stats.sweeps == config.max_stage1_sweeps) {
      result.stats.capped = true;
      break;
    }
    ++result.stats.sweeps;
    std::size_t moves = 0;
    for (CommunityId c = 0; c < p.num_communities(); ++c) {
      if (!p.empty(c)) moves += grow(p, c, frontier);
    }
    result.stats.moves += moves;
    if (moves > 0) continue;
    if (p.unassigned_count() == 0) break;
    for (VertexId v = 0; v < p.network().num_vertices(); ++v) {
      if (p.community_of(v) == kUnassigned) {
        p.add_singleton(v);
        ++result.stats.promoted;
      }
    }
  }

  for (VertexId v = 0; v < p.network().num_vertices(); ++v) {
    if (p.community_of(v) == kUnassigned) {
      p.add_singleton(v);
      ++result.stats.promoted;
    }
  }
  return result;
}

CompressedNetwork compress(const Partition& partition) {
  if (partition.unassigned_count() != 0) {
    throw Error("compression needs every vertex assigned");
  }
  const WeightedNetwork& g = partition.network();
  CompressedNetwork out;
  std::vector<VertexId> super_of_community(partition.num_communities(),
                                           static_cast<VertexId>(-1));
  for (CommunityId c = 0; c < partition.num_communities(); ++c) {
    if (partition.empty(c)) continue;
    super_of_community[c] = static_cast<VertexId>(out.members.size());
    std::vector<VertexId> m(partition.members(c).begin(), partition.members(c).end());
    std::sort(m.begin(), m.end());
    double d = 0.0;
    for (VertexId v : m) d += g.weighted_degree(v);
    out.degree.push_back(d);
    out.members.push_back(std::move(m));
  }
  out.self_weight.assign(out.members.size(), 0.0);

  std::map<std::pair<VertexId, VertexId>, double> crossing;
  for (const auto& e : g.edges()) {
    const VertexId a = super_of_community[partition.community_of(e.u)];
    const VertexId b = super_of_community[partition.community_of(e.v)];
    if (a == b) {
      out.self_weight[a] += e.weight;
    } else {
      crossing[{std::min(a, b), std::max(a, b)}] += e.weight;
    }
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(crossing.size());
  for (const auto& [key, w] : crossing) edges.push_back({key.first, key.second, w});
  out.graph = WeightedNetwork(out.members.size(), std::move(edges));
  return out;
}

double connectivity(std::size_t members, std::size_t internal_edges) {
  if (members < 2) throw Error("connectivity undefined for singleton");
  const double n = static_cast<double>(members);
  return 2.0 * static_cast<double>(internal_edges) / (n * (n - 1.0));
}

double interaction_intensity(double internal_weight, double mean_neighbor_weight_sum) {
  if (mean_neighbor_weight_sum <= 0.0) return 0.0;
  return 2.0 * internal_weight / mean_neighbor_weight_sum;
}

double mean_neighbor_weight(const WeightedNetwork& graph, VertexId v) {
  const auto adj = graph.neighbors(v);
  if (adj.empty()) throw Error("isolated super-vertex");
  return graph.weighted_degree(v) / static_cast<double>(adj.size());
}

CohesionMetrics evaluate_cohesion(const WeightedNetwork& graph,
                                  std::span<const VertexId> members) {
  std::vector<VertexId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 2) throw Error("connectivity undefined for singleton");

  CohesionMetrics m;
  for (VertexId v : sorted) {
    m.mean_neighbor_weight_sum += mean_neighbor_weight(graph, v);
    for (const auto& n : graph.neighbors(v)) {
      if (n.vertex > v && std::binary_search(sorted.begin(), sorted.end(), n.vertex)) {
        ++m.internal_edges;
        m.internal_weight += n.weight;
      }
    }
  }
  m.connectivity = connectivity(sorted.size(), m.internal_edges);
  m.interaction_intensity =
      interaction_intensity(m.internal_weight, m.mean_neighbor_weight_sum);
  m.functional_cohesion = functional_cohesion(m.interaction_intensity, m.connectivity);
  return m;
}

Stage2Result stage2_refine(const CompressedNetwork& compressed, const HubConfig& config) {
  const WeightedNetwork& g = compressed.graph;
  const std::size_t n = compressed.size();

  std::vector<double> mnw(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) > 0) mnw[v] = mean_neighbor_weight(g, v);
  }

  struct State {
    std::size_t size = 1;
    std::size_t edges = 0;
    double weight = 0.0;
    double mnw_sum = 0.0;
  };
  std::vector<VertexId> community(n);
  std::iota(community.begin(), community.end(), VertexId{0});
  std::vector<State> state(n);
  for (VertexId v = 0; v < n; ++v) state[v].mnw_sum = mnw[v];

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return compressed.degree[a] > compressed.degree[b];
  });

  Stage2Result result;
  while (true) {
    if (result.passes == config.max_stage2_passes) {
      result.capped = true;
      break;
    }
    ++result.passes;
    std::size_t merges = 0;
    for (VertexId v : order) {
      for (const auto& nb : g.neighbors(v)) {
        const VertexId u = nb.vertex;
        const VertexId c = community[v];
        if (community[u] == c || state[community[u]].size != 1) continue;

        std::size_t e_add = 0;
        double w_add = 0.0;
        for (const auto& x : g.neighbors(u)) {
          if (community[x.vertex] == c) {
            ++e_add;
            w_add += x.weight;
          }
        }
        const State& s = state[c];
        const double con = connectivity(s.size + 1, s.edges + e_add);
        const double ii = interaction_intensity(s.weight + w_add, s.mnw_sum + mnw[u]);
        if (functional_cohesion(ii, con) < config.lambda) continue;

        state[community[u]].size = 0;
        community[u] = c;
        State& t = state[c];
        ++t.size;
        t.edges += e_add;
        t.weight += w_add;
        t.mnw_sum += mnw[u];
        ++merges;
      }
    }
    result.merges += merges;
    if (merges == 0) break;
  }

  std::vector<std::vector<VertexId>> groups(n);
  for (VertexId v = 0; v < n; ++v) groups[community[v]].push_back(v);
  for (auto& grp : groups) {
    if (!grp.empty()) result.communities.push_back(std::move(grp));
  }
  std::sort(result.communities.begin(), result.communities.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

DetectionResult detect(const WeightedNetwork& network, const HubConfig& config,
                       const Executor& executor) {
  config.validate();
  if (network.num_vertices() == 0) throw InputError("empty network");

  DetectionResult result;
  auto seeds = select_hubs(network, config);
  result.stats.hubs = seeds.selection.hubs.size();
  result.stats.hub_threshold = seeds.selection.threshold;
  result.stats.degenerate_seeding = seeds.selection.degenerate;
  if (seeds.selection.degenerate) {
    result.warnings.push_back("no vertex exceeds the hub threshold; every vertex seeded");
  }

  auto stage1 = stage1_agglomerate(std::move(seeds.partition), config);
  result.stats.stage1 = stage1.stats;
  if (stage1.stats.capped) {
    result.warnings.push_back(
        fmt::format("stage 1 stopped at the {}-sweep cap", config.max_stage1_sweeps));
  }

  const CompressedNetwork compressed = compress(stage1.partition);
  result.stats.stage1_communities = compressed.size();
  const Stage2Result stage2 = stage2_refine(compressed, config);
  result.stats.stage2_passes = stage2.passes;
  result.stats.stage2_merges = stage2.merges;
  result.stats.stage2_capped = stage2.capped;
  if (stage2.capped) {
    result.warnings.push_back(
        fmt::format("stage 2 stopped at the {}-pass cap", config.max_stage2_passes));
  }

  for (const auto& group : stage2.communities) {
    DetectedCommunity dc;
    for (VertexId s : group) {
      dc.members.insert(dc.members.end(), compressed.members[s].begin(),
                        compressed.members[s].end());
    }
    std::sort(dc.members.begin(), dc.members.end());
    result.communities.push_back(std::move(dc));
  }
  std::sort(result.communities.begin(), result.communities.end(),
            [](const auto& a, const auto& b) { return a.members.front() < b.members.front(); });

  Partition final_partition(network);
  for (const auto& dc : result.communities) {
    const CommunityId c = final_partition.add_community();
    for (VertexId v : dc.members) final_partition.move(v, c);
  }
  executor.run(result.communities.size(), [&](std::size_t i) {
    auto& dc = result.communities[i];
    dc.modularity = community_modularity(final_partition, static_cast<CommunityId>(i));
    if (dc.members.size() >= 2) {
      dc.functional_cohesion = evaluate_cohesion(network, dc.members).functional_cohesion;
    }
  });
  return result;
}

}  // namespace ppicd
