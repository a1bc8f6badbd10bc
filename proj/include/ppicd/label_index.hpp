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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ppicd/types.hpp"

namespace ppicd {

// Bijection between protein labels and dense vertex indices. Indices are
// handed out in order of first appearance.
class LabelIndex {
 public:
  LabelIndex() = default;

  // Returns the existing index for `label` or assigns the next one.
  VertexId intern(std::string_view label);

  std::optional<VertexId> find(std::string_view label) const;
  const std::string& label(VertexId id) const { return labels_.at(id); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId, Hash, std::equal_to<>> index_;
};

// Interns every label; throws InputError("no proteins") on empty input.
LabelIndex intern_proteins(std::span<const std::string> labels);

}  // namespace ppicd
