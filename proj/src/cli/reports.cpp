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

#include "ppicd/cli/reports.hpp"

#include <set>

#include <fmt/format.h>

#include "ppicd/tsv.hpp"

namespace ppicd::cli {

namespace {

std::string join_labels(const std::vector<VertexId>& members, const LabelIndex& labels) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += labels.label(members[i]);
  }
  return out;
}

}  // namespace

std::string render_communities(const DetectionResult& result, const LabelIndex& labels) {
  std::string out(kCommunitiesHeader);
  out += '\n';
  for (std::size_t i = 0; i < result.communities.size(); ++i) {
    const auto& c = result.communities[i];
    out += fmt::format("{}\t{}\t{}\t{}\n", i, join_labels(c.members, labels),
                       tsv::format_fixed(c.functional_cohesion),
                       tsv::format_fixed(c.modularity));
  }
  return out;
}

std::vector<CommunityRow> read_communities(std::istream& in, const std::string& source) {
  tsv::LineReader reader(in, source);
  std::vector<CommunityRow> rows;
  std::set<std::string> ids;
  std::set<std::string> seen;
  while (auto line = reader.next_data()) {
    const auto fields = tsv::split(*line);
    if (fields.size() < 2) reader.fail("expected community_id<TAB>proteins");
    CommunityRow row{std::string(tsv::trim(fields[0])), {}};
    if (!ids.insert(row.id).second) reader.fail("duplicate community id");
    for (auto p : tsv::split(fields[1], ',')) {
      p = tsv::trim(p);
      if (p.empty()) continue;
      if (!seen.emplace(p).second) reader.fail(fmt::format("protein '{}' in two communities", p));
      row.proteins.emplace_back(p);
    }
    if (row.proteins.empty()) reader.fail("empty community");
    row.proteins = make_protein_set(std::move(row.proteins));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_matches(const MatchReport& report) {
  std::string out =
      "# community_id\tcomplex\tcommunity_size\tcomplex_size\toverlap\tos\trecall\tmatched\n";
  for (const auto& r : report.rows) {
    out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", r.community,
                       r.complex.empty() ? "-" : r.complex, r.community_size,
                       r.complex_size, r.overlap, tsv::format_fixed(r.overlap_score),
                       tsv::format_fixed(r.recall), r.matched ? 1 : 0);
  }
  return out;
}

std::string render_sweep(const std::vector<std::pair<double, std::size_t>>& sweep) {
  std::string out = "# threshold\tmatched\n";
  for (const auto& [t, n] : sweep) out += fmt::format("{}\t{}\n", tsv::format_fixed(t), n);
  return out;
}

std::string render_enrichment(const std::vector<Enrichment>& rows,
                              const std::vector<CommunityRow>& communities) {
  std::string out = "# community_id\tterm\tcommunity_size\tgroup_size\toverlap\tp_value\n";
  for (const auto& r : rows) {
    // P-values span many orders of magnitude, so they use scientific notation.
    out += fmt::format("{}\t{}\t{}\t{}\t{}\t{:.6e}\n", communities[r.community].id, r.term,
                       r.community_size, r.group_size, r.overlap, r.p_value);
  }
  return out;
}

json to_json(const DetectionResult& result, const LabelIndex& labels) {
  json communities = json::array();
  for (std::size_t i = 0; i < result.communities.size(); ++i) {
    const auto& c = result.communities[i];
    json proteins = json::array();
    for (VertexId v : c.members) proteins.push_back(labels.label(v));
    communities.push_back({{"id", std::to_string(i)},
                           {"proteins", std::move(proteins)},
                           {"fc", c.functional_cohesion},
                           {"q", c.modularity}});
  }
  const auto& s = result.stats;
  return {{"communities", std::move(communities)},
          {"stats",
           {{"hubs", s.hubs},
            {"hub_threshold", s.hub_threshold},
            {"degenerate_seeding", s.degenerate_seeding},
            {"stage1_sweeps", s.stage1.sweeps},
            {"stage1_moves", s.stage1.moves},
            {"stage1_promoted", s.stage1.promoted},
            {"stage1_capped", s.stage1.capped},
            {"stage1_communities", s.stage1_communities},
            {"stage2_passes", s.stage2_passes},
            {"stage2_merges", s.stage2_merges},
            {"stage2_capped", s.stage2_capped},
            {"communities", result.communities.size()}}},
          {"warnings", result.warnings}};
}

json to_json(const MatchReport& report, const std::vector<CommunityRow>& communities) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"community_id", communities[r.community].id},
                    {"complex", r.complex.empty() ? json(nullptr) : json(r.complex)},
                    {"community_size", r.community_size},
                    {"complex_size", r.complex_size},
                    {"overlap", r.overlap},
                    {"overlap_score", r.overlap_score},
                    {"recall", r.recall},
                    {"matched", r.matched}});
  }
  return {{"threshold", report.threshold},
          {"matched", report.matched},
          {"total", report.total},
          {"rows", std::move(rows)},
          {"warnings", report.warnings}};
}

json to_json(const std::vector<std::pair<double, std::size_t>>& sweep) {
  json out = json::array();
  for (const auto& [t, n] : sweep) out.push_back({{"threshold", t}, {"matched", n}});
  return out;
}

json to_json(const std::vector<Enrichment>& rows,
             const std::vector<CommunityRow>& communities) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"community_id", communities[r.community].id},
                   {"term", r.term},
                   {"community_size", r.community_size},
                   {"group_size", r.group_size},
                   {"overlap", r.overlap},
                   {"p_value", r.p_value}});
  }
  return out;
}

}  // namespace ppicd::cli
