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

// Shared-memory execution substrate.
//
// The contract for every parallel stage: shared inputs are immutable, each
// task writes only to its own output slots, and results are merged in a
// fixed order. Outputs are therefore bit-identical for every thread count.
//
// Pipeline shape:
//   edge weighting     - per-edge map over a vertex-cut edge partitioning
//                        (no regrouping needed, a narrow dependence)
//   fallback statistics - fixed-tree reduction over per-edge results
//                        (a global regroup, a wide dependence)
//   detection          - serial move application in deterministic order
//   evaluation         - per-community map merged in community order

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppicd/ppi_network.hpp"
#include "ppicd/types.hpp"
#include "ppicd/weighted_network.hpp"

namespace ppicd {

// Runs batches of independent tasks on a fixed number of worker threads.
class Executor {
 public:
  // threads == 0 selects the available hardware parallelism.
  explicit Executor(std::size_t threads = 0);

  std::size_t threads() const { return threads_; }

  // Calls task(i) for every i in [0, n). Tasks are claimed dynamically; if any
  // throw, the exception of the lowest failing i is rethrown after all
  // workers finish.
  void run(std::size_t n, const std::function<void(std::size_t)>& task) const;

 private:
  std::size_t threads_;
};

// Thread count from an explicit value, else the WPPI_THREADS environment
// variable, else 0 (hardware parallelism).
std::size_t resolve_thread_count(std::optional<std::size_t> requested);

enum class PartitionStrategy { kRange, kHash };

std::optional<PartitionStrategy> parse_partition_strategy(std::string_view name);
std::string_view to_string(PartitionStrategy strategy);

// Vertex-cut assignment of edges to partitions: every edge lives in exactly
// one partition, vertices are replicated to every partition holding one of
// their edges.
struct EdgePartitioning {
  std::size_t num_partitions = 0;
  // Global edge indices held by each partition, in processing order.
  std::vector<std::vector<std::size_t>> edges_of;
  std::vector<std::uint32_t> partition_of_edge;
  // Sorted partition ids holding at least one edge incident to the vertex.
  std::vector<std::vector<std::uint32_t>> routing_table;

  bool has_empty_partition() const {
    return std::any_of(edges_of.begin(), edges_of.end(),
                       [](const auto& e) { return e.empty(); });
  }
};

// Range strategy: edges sorted by (source, destination) and cut into k
// contiguous runs whose sizes differ by at most one. Hash strategy: a fixed
// mix of the endpoint pair modulo k. Throws InputError when k == 0.
EdgePartitioning partition_edges(std::span<const VertexPair> edges,
                                 std::size_t num_vertices, std::size_t k,
                                 PartitionStrategy strategy = PartitionStrategy::kRange);
EdgePartitioning partition_edges(const WeightedNetwork& network, std::size_t k,
                                 PartitionStrategy strategy = PartitionStrategy::kRange);

class EdgeMapError : public Error {
 public:
  EdgeMapError(std::size_t edge_index, const std::string& what)
      : Error("edge " + std::to_string(edge_index) + ": " + what),
        edge_index_(edge_index) {}
  std::size_t edge_index() const { return edge_index_; }

 private:
  std::size_t edge_index_;
};

// Applies a pure per-edge function f(global_edge_index) -> R with one task
// per partition. Results are indexed by global edge index. If f throws for
// any edge, EdgeMapError names the smallest failing global index.
template <class R, class F>
std::vector<R> parallel_edge_map(const EdgePartitioning& partitioning,
                                 const Executor& executor, F&& f) {
  std::vector<R> results(partitioning.partition_of_edge.size());
  struct Failure {
    std::size_t edge = SIZE_MAX;
    std::string message;
  };
  std::vector<Failure> failures(partitioning.num_partitions);
  executor.run(partitioning.num_partitions, [&](std::size_t p) {
    for (std::size_t e : partitioning.edges_of[p]) {
      try {
        results[e] = f(e);
      } catch (const std::exception& ex) {
        if (e < failures[p].edge) failures[p] = {e, ex.what()};
      }
    }
  });
  auto first = std::min_element(
      failures.begin(), failures.end(),
      [](const Failure& a, const Failure& b) { return a.edge < b.edge; });
  if (first != failures.end() && first->edge != SIZE_MAX) {
    throw EdgeMapError(first->edge, first->message);
  }
  return results;
}

// Block length of the fixed reduction tree. Independent of thread count.
inline constexpr std::size_t kReduceBlock = 4096;

// Left fold within consecutive blocks of kReduceBlock values, then a left fold
// of the block results. The association order depends only on the number of
// values, so floating-point results do not vary with the thread count.
// Throws Error on empty input.
template <class T, class Op>
T deterministic_reduce(std::span<const T> values, Op op, const Executor& executor) {
  if (values.empty()) throw Error("reduction of an empty sequence");
  const std::size_t blocks = (values.size() + kReduceBlock - 1) / kReduceBlock;
  std::vector<std::optional<T>> partial(blocks);
  executor.run(blocks, [&](std::size_t b) {
    const std::size_t lo = b * kReduceBlock;
    const std::size_t hi = std::min(values.size(), lo + kReduceBlock);
    T acc = values[lo];
    for (std::size_t i = lo + 1; i < hi; ++i) acc = op(acc, values[i]);
    partial[b] = std::move(acc);
  });
  T acc = std::move(*partial[0]);
  for (std::size_t b = 1; b < blocks; ++b) acc = op(acc, *partial[b]);
  return acc;
}

// As above, but returns `identity` for empty input.
template <class T, class Op>
T deterministic_reduce(std::span<const T> values, T identity, Op op,
                       const Executor& executor) {
  if (values.empty()) return identity;
  return deterministic_reduce(values, op, executor);
}

}  // namespace ppicd
