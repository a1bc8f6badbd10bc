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

#include "ppicd/engine.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <thread>

#include "ppicd/tsv.hpp"

namespace ppicd {

Executor::Executor(std::size_t threads) : threads_(threads) {
  if (threads_ == 0) {
    threads_ = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }
}

void Executor::run(std::size_t n,
                   const std::function<void(std::size_t)>& task) const {
  if (n == 0) return;
  std::vector<std::exception_ptr> errors(n);
  const std::size_t workers = std::min(threads_, n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          task(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::size_t resolve_thread_count(std::optional<std::size_t> requested) {
  if (requested) return *requested;
  if (const char* env = std::getenv("WPPI_THREADS"); env != nullptr) {
    const auto v = tsv::parse_double(env);
    if (!v || *v < 0 || *v != static_cast<double>(static_cast<std::size_t>(*v))) {
      throw InputError(std::string("WPPI_THREADS is not a thread count: ") + env);
    }
    return static_cast<std::size_t>(*v);
  }
  return 0;
}

std::optional<PartitionStrategy> parse_partition_strategy(std::string_view name) {
  if (name == "range") return PartitionStrategy::kRange;
  if (name == "hash") return PartitionStrategy::kHash;
  return std::nullopt;
}

std::string_view to_string(PartitionStrategy strategy) {
  return strategy == PartitionStrategy::kRange ? "range" : "hash";
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finaliser
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

EdgePartitioning partition_edges(std::span<const VertexPair> edges,
                                 std::size_t num_vertices, std::size_t k,
                                 PartitionStrategy strategy) {
  if (k == 0) throw InputError("partition count must be at least 1");
  EdgePartitioning out;
  out.num_partitions = k;
  out.edges_of.resize(k);
  out.partition_of_edge.resize(edges.size());
  out.routing_table.resize(num_vertices);

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return edges[a] < edges[b];
  });

  if (strategy == PartitionStrategy::kRange) {
    const std::size_t base = edges.size() / k;
    const std::size_t extra = edges.size() % k;
    std::size_t pos = 0;
    for (std::size_t p = 0; p < k; ++p) {
      const std::size_t len = base + (p < extra ? 1 : 0);
      out.edges_of[p].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                             order.begin() + static_cast<std::ptrdiff_t>(pos + len));
      pos += len;
    }
  } else {
    for (std::size_t e : order) {
      const auto key = (static_cast<std::uint64_t>(edges[e].first) << 32) |
                       edges[e].second;
      out.edges_of[mix(key) % k].push_back(e);
    }
  }

  for (std::uint32_t p = 0; p < k; ++p) {
    for (std::size_t e : out.edges_of[p]) {
      out.partition_of_edge[e] = p;
      for (VertexId v : {edges[e].first, edges[e].second}) {
        auto& routes = out.routing_table.at(v);
        if (routes.empty() || routes.back() != p) routes.push_back(p);
      }
    }
  }
  return out;
}

EdgePartitioning partition_edges(const WeightedNetwork& network, std::size_t k,
                                 PartitionStrategy strategy) {
  std::vector<VertexPair> pairs;
  pairs.reserve(network.num_edges());
  for (const auto& e : network.edges()) pairs.push_back({e.u, e.v});
  return partition_edges(pairs, network.num_vertices(), k, strategy);
}

}  // namespace ppicd
