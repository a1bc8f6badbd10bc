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

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppicd/detector.hpp"
#include "ppicd/evaluator.hpp"
#include "ppicd/label_index.hpp"

namespace ppicd::cli {

using nlohmann::json;

inline constexpr std::string_view kCommunitiesHeader = "# community_id\tproteins\tfc\tq";

// community_id<TAB>p1,p2,...<TAB>fc<TAB>q, numbers with six decimals.
std::string render_communities(const DetectionResult& result, const LabelIndex& labels);

struct CommunityRow {
  std::string id;
  ProteinSet proteins;
};
std::vector<CommunityRow> read_communities(std::istream& in, const std::string& source);

std::string render_matches(const MatchReport& report);
std::string render_sweep(const std::vector<std::pair<double, std::size_t>>& sweep);
std::string render_enrichment(const std::vector<Enrichment>& rows,
                              const std::vector<CommunityRow>& communities);

json to_json(const DetectionResult& result, const LabelIndex& labels);
json to_json(const MatchReport& report, const std::vector<CommunityRow>& communities);
json to_json(const std::vector<std::pair<double, std::size_t>>& sweep);
json to_json(const std::vector<Enrichment>& rows,
             const std::vector<CommunityRow>& communities);

}  // namespace ppicd::cli
