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

#include "ppicd/label_index.hpp"

namespace ppicd {

VertexId LabelIndex::intern(std::string_view label) {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  const auto id = static_cast<VertexId>(labels_.size());
  labels_.emplace_back(label);
  index_.emplace(labels_.back(), id);
  return id;
}

std::optional<VertexId> LabelIndex::find(std::string_view label) const {
  if (auto it = index_.find(label); it != index_.end()) return it->second;
  return std::nullopt;
}

LabelIndex intern_proteins(std::span<const std::string> labels) {
  if (labels.empty()) throw InputError("no proteins");
  LabelIndex index;
  for (const auto& l : labels) index.intern(l);
  return index;
}

}  // namespace ppicd
