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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <bit>
#include <random>
#include <set>

#include "ppicd/engine.hpp"
#include "support.hpp"

using namespace ppicd;

namespace {

void check_partitioning(const EdgePartitioning& p, std::span<const VertexPair> edges,
                        std::size_t n) {
  REQUIRE(p.partition_of_edge.size() == edges.size());
  std::vector<int> seen(edges.size(), 0);
  for (std::size_t q = 0; q < p.num_partitions; ++q) {
    for (std::size_t e : p.edges_of[q]) {
      ++seen[e];
      CHECK(p.partition_of_edge[e] == q);
    }
  }
  for (int s : seen) CHECK(s == 1);
  // Routing table from scratch.
  std::vector<std::set<std::uint32_t>> expect(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    expect[edges[e].first].insert(p.partition_of_edge[e]);
    expect[edges[e].second].insert(p.partition_of_edge[e]);
  }
  for (std::size_t v = 0; v < n; ++v) {
    CHECK(std::vector<std::uint32_t>(expect[v].begin(), expect[v].end()) ==
          p.routing_table[v]);
  }
}

std::vector<VertexPair> pairs_of(const WeightedNetwork& g) {
  std::vector<VertexPair> out;
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

TEST_CASE("executor visits every index once and rethrows the lowest failure") {
  for (std::size_t threads : {1u, 2u, 4u, 8u}) {
    const Executor ex(threads);
    std::vector<std::atomic<int>> hits(1000);
    ex.run(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) CHECK(h.load() == 1);
    CHECK_THROWS_WITH(ex.run(100,
                             [](std::size_t i) {
                               if (i == 17 || i == 60) throw Error(std::to_string(i));
                             }),
                      "17");
  }
}

TEST_CASE("k = 1 puts everything in partition 0") {
  std::mt19937_64 rng(1);
  const auto g = testing::random_network(rng, 30, 0.2);
  const auto p = partition_edges(g, 1);
  CHECK(p.num_partitions == 1);
  CHECK(p.edges_of[0].size() == g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) CHECK(p.routing_table[v] == std::vector<std::uint32_t>{0});
  }
  CHECK_THROWS_AS(partition_edges(g, 0), InputError);
}

TEST_CASE("a vertex shared by three partitions is routed to all of them") {
  // A-B, B-C, C-D, D-E, D-F, D-G, E-F, F-G, G-H: D joins every range.
  const std::vector<VertexPair> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5},
                                      {3, 6}, {4, 5}, {5, 6}, {6, 7}};
  const auto p = partition_edges(edges, 8, 3);
  check_partitioning(p, edges, 8);
  CHECK(p.routing_table[3] == std::vector<std::uint32_t>{0, 1});
  CHECK(p.routing_table[3].size() > 1);
  std::set<std::uint32_t> parts;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first == 3 || edges[e].second == 3) parts.insert(p.partition_of_edge[e]);
  }
  CHECK(parts.size() == p.routing_table[3].size());
}

TEST_CASE("random graphs partition into disjoint covering sets under both strategies") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto g = testing::random_network(rng, 50, 0.1);
    const auto edges = pairs_of(g);
    for (std::size_t k : {1u, 2u, 3u, 7u, 16u}) {
      for (auto s : {PartitionStrategy::kRange, PartitionStrategy::kHash}) {
        const auto p = partition_edges(edges, 50, k, s);
        check_partitioning(p, edges, 50);
        if (s == PartitionStrategy::kRange) {
          std::size_t lo = SIZE_MAX, hi = 0;
          for (const auto& e : p.edges_of) {
            lo = std::min(lo, e.size());
            hi = std::max(hi, e.size());
          }
          CHECK(hi - lo <= 1);
        }
        const auto again = partition_edges(edges, 50, k, s);
        CHECK(again.partition_of_edge == p.partition_of_edge);
      }
    }
  }
}

TEST_CASE("range partitioning follows source order") {
  const std::vector<VertexPair> edges{{2, 3}, {0, 1}, {1, 2}, {0, 3}};
  const auto p = partition_edges(edges, 4, 2);
  CHECK(p.edges_of[0] == std::vector<std::size_t>{1, 3});
  CHECK(p.edges_of[1] == std::vector<std::size_t>{2, 0});
}

TEST_CASE("more partitions than edges leaves some empty") {
  const std::vector<VertexPair> edges{{0, 1}};
  const auto p = partition_edges(edges, 2, 4);
  CHECK(p.has_empty_partition());
  check_partitioning(p, edges, 2);
  const auto none = partition_edges(std::span<const VertexPair>{}, 3, 2);
  CHECK(none.partition_of_edge.empty());
  CHECK(parallel_edge_map<int>(none, Executor(2), [](std::size_t) { return 1; }).empty());
}

TEST_CASE("parallel_edge_map equals the serial map and reports the first failure") {
  std::mt19937_64 rng(4);
  const auto g = testing::random_network(rng, 80, 0.1);
  const auto edges = pairs_of(g);
  auto f = [&](std::size_t e) { return std::sin(g.edges()[e].weight * 7.0) / (1.0 + e); };
  std::vector<double> serial;
  for (std::size_t e = 0; e < edges.size(); ++e) serial.push_back(f(e));
  for (std::size_t k : {1u, 2u, 4u, 8u}) {
    const Executor ex(k);
    const auto p = partition_edges(edges, 80, k);
    const auto out = parallel_edge_map<double>(p, ex, f);
    for (std::size_t e = 0; e < out.size(); ++e) {
      CHECK(std::bit_cast<std::uint64_t>(out[e]) == std::bit_cast<std::uint64_t>(serial[e]));
    }
    try {
      parallel_edge_map<int>(partition_edges(edges, 80, k, PartitionStrategy::kHash), ex,
                             [](std::size_t e) -> int {
                               if (e == 5 || e == 40) throw Error("boom");
                               return 0;
                             });
      FAIL("expected EdgeMapError");
    } catch (const EdgeMapError& err) {
      CHECK(err.edge_index() == 5);
    }
  }
}

TEST_CASE("deterministic_reduce is bit-identical across thread counts") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::vector<double> values(1'000'000);
  for (auto& v : values) v = u(rng);
  const double base = deterministic_reduce<double>(values, std::plus<>{}, Executor(1));
  const double eight = deterministic_reduce<double>(values, std::plus<>{}, Executor(8));
  CHECK(std::bit_cast<std::uint64_t>(base) == std::bit_cast<std::uint64_t>(eight));

  const std::vector<double> small{1.0, 2.0, 3.0};
  CHECK(deterministic_reduce<double>(small, std::plus<>{}, Executor(4)) == 6.0);
  CHECK_THROWS_AS(deterministic_reduce<double>(std::span<const double>{}, std::plus<>{},
                                               Executor(1)),
                  Error);
  CHECK(deterministic_reduce<double>(std::span<const double>{}, 0.0, std::plus<>{},
                                     Executor(1)) == 0.0);

  // Max with ties broken towards the lower index.
  std::vector<std::pair<int, std::size_t>> keyed;
  for (std::size_t i = 0; i < 10000; ++i) keyed.emplace_back(static_cast<int>(i % 7), i);
  auto best = [](const auto& a, const auto& b) {
    return (b.first > a.first || (b.first == a.first && b.second < a.second)) ? b : a;
  };
  for (std::size_t k : {1u, 3u, 8u}) {
    const auto w = deterministic_reduce<std::pair<int, std::size_t>>(keyed, best, Executor(k));
    CHECK(w.first == 6);
    CHECK(w.second == 6);
  }
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_thread_count(3) == 3);
  ::unsetenv("WPPI_THREADS");
  CHECK(resolve_thread_count(std::nullopt) == 0);  // hardware parallelism
  ::setenv("WPPI_THREADS", "5", 1);
  CHECK(resolve_thread_count(std::nullopt) == 5);
  CHECK(resolve_thread_count(2) == 2);
  ::setenv("WPPI_THREADS", "many", 1);
  CHECK_THROWS_AS(resolve_thread_count(std::nullopt), InputError);
  ::unsetenv("WPPI_THREADS");
  CHECK(parse_partition_strategy("hash") == PartitionStrategy::kHash);
  CHECK_FALSE(parse_partition_strategy("round-robin").has_value());
}
