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

#include <span>
#include <vector>

#include "ppicd/types.hpp"
#include "ppicd/weighted_network.hpp"

namespace ppicd {

// Disjoint assignment of vertices to communities over a fixed network.
// Vertices may be unassigned (kUnassigned) while stage-1 seeding is in
// progress. Each community caches
//   in_sum  = sum over members of the weight to other members, and
//   out_sum = sum over members of the weight to non-members,
// so in_sum counts every internal edge twice.
//
// The network must outlive the partition. Single writer; concurrent readers
// are fine between moves.
class Partition {
 public:
  explicit Partition(const WeightedNetwork& network);

  const WeightedNetwork& network() const { return *network_; }

  // Creates an empty community and returns its id. Ids are never reused.
  CommunityId add_community();
  // Creates a community holding only `v`, moving `v` out of its current one.
  CommunityId add_singleton(VertexId v);
  // Moves `v` into `target`; kUnassigned unassigns it.
  void move(VertexId v, CommunityId target);

  CommunityId community_of(VertexId v) const { return assignment_.at(v); }
  std::span<const CommunityId> assignment() const { return assignment_; }

  std::size_t num_communities() const { return members_.size(); }
  std::size_t num_nonempty() const;
  std::span<const VertexId> members(CommunityId c) const { return members_.at(c); }
  std::size_t size(CommunityId c) const { return members_.at(c).size(); }
  bool empty(CommunityId c) const { return members_.at(c).empty(); }

  double in_sum(CommunityId c) const { return in_.at(c); }
  double out_sum(CommunityId c) const { return out_.at(c); }

  // Sum of weights from `v` to members of `c` other than `v` itself.
  double weight_to(VertexId v, CommunityId c) const;

  std::size_t unassigned_count() const { return unassigned_; }

  struct Sums {
    double in = 0.0;
    double out = 0.0;
  };
  // Full recomputation over the member lists, bypassing the cache.
  Sums recompute_sums(CommunityId c) const;

 private:
  void detach(VertexId v);
  void attach(VertexId v, CommunityId c);

  const WeightedNetwork* network_;
  std::vector<CommunityId> assignment_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<VertexId>> members_;
  std::vector<double> in_;
  std::vector<double> out_;
  std::size_t unassigned_ = 0;
};

}  // namespace ppicd
