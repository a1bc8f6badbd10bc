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

#include "ppicd/partition.hpp"

#include <algorithm>

namespace ppicd {

Partition::Partition(const WeightedNetwork& network)
    : network_(&network),
      assignment_(network.num_vertices(), kUnassigned),
      position_(network.num_vertices(), 0),
      unassigned_(network.num_vertices()) {}

std::size_t Partition::num_nonempty() const {
  return static_cast<std::size_t>(std::count_if(
      members_.begin(), members_.end(), [](const auto& m) { return !m.empty(); }));
}

CommunityId Partition::add_community() {
  members_.emplace_back();
  in_.push_back(0.0);
  out_.push_back(0.0);
  return static_cast<CommunityId>(members_.size() - 1);
}

CommunityId Partition::add_singleton(VertexId v) {
  const CommunityId c = add_community();
  move(v, c);
  return c;
}

double Partition::weight_to(VertexId v, CommunityId c) const {
  if (c == kUnassigned) return 0.0;
  double a = 0.0;
  for (const auto& n : network_->neighbors(v)) {
    if (assignment_[n.vertex] == c) a += n.weight;
  }
  return a;
}

void Partition::move(VertexId v, CommunityId target) {
  if (v >= assignment_.size()) throw Error("vertex out of range");
  if (target != kUnassigned && target >= members_.size()) {
    throw Error("community out of range");
  }
  if (assignment_[v] == target) return;
  detach(v);
  if (target != kUnassigned) attach(v, target);
}

void Partition::detach(VertexId v) {
  const CommunityId c = assignment_[v];
  if (c == kUnassigned) return;
  const double d = network_->weighted_degree(v);
  const double a = weight_to(v, c);
  in_[c] -= 2.0 * a;
  out_[c] -= d - 2.0 * a;

  auto& m = members_[c];
  const std::size_t pos = position_[v];
  m[pos] = m.back();
  position_[m[pos]] = pos;
  m.pop_back();
  if (m.empty()) {
    // Snap the cache so rounding residue cannot leak into a reused id.
    in_[c] = 0.0;
    out_[c] = 0.0;
  }
  assignment_[v] = kUnassigned;
  ++unassigned_;
}

void Partition::attach(VertexId v, CommunityId c) {
  const double d = network_->weighted_degree(v);
  const double a = weight_to(v, c);
  in_[c] += 2.0 * a;
  out_[c] += d - 2.0 * a;
  position_[v] = members_[c].size();
  members_[c].push_back(v);
  assignment_[v] = c;
  --unassigned_;
}

Partition::Sums Partition::recompute_sums(CommunityId c) const {
  Sums s;
  for (VertexId v : members_.at(c)) {
    for (const auto& n : network_->neighbors(v)) {
      if (assignment_[n.vertex] == c) {
        s.in += n.weight;
      } else {
        s.out += n.weight;
      }
    }
  }
  return s;
}

}  // namespace ppicd
