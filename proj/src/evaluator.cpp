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

#include "ppicd/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include <fmt/format.h>

#include "ppicd/tsv.hpp"

namespace ppicd {

ProteinSet make_protein_set(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

std::size_t intersection_size(const ProteinSet& a, const ProteinSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

ComplexCatalogue::ComplexCatalogue(std::vector<Complex> entries)
    : entries_(std::move(entries)) {
  std::set<std::string> names;
  for (auto& e : entries_) {
    e.proteins = make_protein_set(std::move(e.proteins));
    if (e.proteins.size() < 2) {
      throw InputError(fmt::format("complex '{}' has fewer than 2 proteins", e.name));
    }
    if (!names.insert(e.name).second) {
      throw InputError(fmt::format("duplicate complex name '{}'", e.name));
    }
  }
}

ComplexCatalogue read_catalogue(std::istream& in, const std::string& source) {
  tsv::LineReader reader(in, source);
  std::vector<Complex> entries;
  std::set<std::string> names;
  while (auto line = reader.next_data()) {
    const auto fields = tsv::split(*line);
    if (fields.size() != 2) reader.fail("expected name<TAB>comma-separated proteins");
    Complex c{std::string(tsv::trim(fields[0])), {}};
    if (c.name.empty()) reader.fail("empty complex name");
    for (auto p : tsv::split(fields[1], ',')) {
      p = tsv::trim(p);
      if (!p.empty()) c.proteins.emplace_back(p);
    }
    c.proteins = make_protein_set(std::move(c.proteins));
    if (c.proteins.size() < 2) reader.fail("complex needs at least 2 proteins");
    if (!names.insert(c.name).second) reader.fail("duplicate complex name");
    entries.push_back(std::move(c));
  }
  return ComplexCatalogue(std::move(entries));
}

AnnotationSet read_annotations(std::istream& in, const std::string& source) {
  tsv::LineReader reader(in, source);
  std::map<std::string, std::vector<std::string>> raw;
  bool first = true;
  while (auto line = reader.next_data()) {
    const auto fields = tsv::split(*line);
    if (fields.size() < 2) reader.fail("expected protein<TAB>term");
    const auto protein = tsv::trim(fields[0]);
    const auto term = tsv::trim(fields[1]);
    if (first && protein == "protein_label" && term == "term_id") {
      first = false;
      continue;
    }
    first = false;
    if (protein.empty() || term.empty()) reader.fail("empty field");
    raw[std::string(term)].emplace_back(protein);
  }
  AnnotationSet out;
  for (auto& [term, proteins] : raw) out.emplace(term, make_protein_set(std::move(proteins)));
  return out;
}

double overlap_score(std::size_t intersection, std::size_t pc_size, std::size_t kc_size) {
  if (pc_size == 0 || kc_size == 0) throw Error("overlap score of an empty set");
  if (intersection > pc_size || intersection > kc_size) {
    throw Error("intersection larger than a set");
  }
  const double i = static_cast<double>(intersection);
  return (i * i) / (static_cast<double>(pc_size) * static_cast<double>(kc_size));
}

double overlap_score(const ProteinSet& pc, const ProteinSet& kc) {
  return overlap_score(intersection_size(pc, kc), pc.size(), kc.size());
}

double recall_ratio(std::size_t intersection, std::size_t kc_size) {
  if (kc_size == 0) throw Error("recall against an empty complex");
  if (intersection > kc_size) throw Error("intersection larger than the complex");
  return static_cast<double>(intersection) / static_cast<double>(kc_size);
}

double recall_ratio(const ProteinSet& pc, const ProteinSet& kc) {
  return recall_ratio(intersection_size(pc, kc), kc.size());
}

MatchReport match_complexes(std::span<const ProteinSet> communities,
                            const ComplexCatalogue& catalogue, double threshold,
                            const Executor& executor) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InputError("match threshold must lie in (0, 1]");
  }
  MatchReport report;
  report.threshold = threshold;
  report.total = communities.size();
  report.rows.resize(communities.size());
  if (catalogue.empty()) report.warnings.push_back("empty complex catalogue");

  executor.run(communities.size(), [&](std::size_t i) {
    ComplexMatch& row = report.rows[i];
    row.community = i;
    row.community_size = communities[i].size();
    if (communities[i].empty()) return;
    for (const Complex& kc : catalogue.entries()) {
      const std::size_t overlap = intersection_size(communities[i], kc.proteins);
      const double os = overlap_score(overlap, communities[i].size(), kc.proteins.size());
      if (row.complex.empty() || os > row.overlap_score) {
        row.complex = kc.name;
        row.complex_size = kc.proteins.size();
        row.overlap = overlap;
        row.overlap_score = os;
        row.recall = recall_ratio(overlap, kc.proteins.size());
      }
    }
    row.matched = !row.complex.empty() && row.overlap_score >= threshold;
  });
  report.matched = static_cast<std::size_t>(std::count_if(
      report.rows.begin(), report.rows.end(), [](const auto& r) { return r.matched; }));
  return report;
}

std::vector<std::pair<double, std::size_t>> threshold_sweep(
    std::span<const ProteinSet> communities, const ComplexCatalogue& catalogue,
    const Executor& executor) {
  // The best OS per community does not depend on the threshold.
  const MatchReport base = match_complexes(communities, catalogue, 1.0, executor);
  std::vector<std::pair<double, std::size_t>> out;
  for (int step = 1; step <= 6; ++step) {
    const double t = step / 10.0;
    const auto n = std::count_if(base.rows.begin(), base.rows.end(), [&](const auto& r) {
      return !r.complex.empty() && r.overlap_score >= t;
    });
    out.emplace_back(t, static_cast<std::size_t>(n));
  }
  return out;
}

LogFactorials::LogFactorials(std::size_t max_n) : table_(max_n + 1, 0.0) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    table_[n] = std::lgamma(static_cast<double>(n) + 1.0);
  }
}

double LogFactorials::log_choose(std::size_t n, std::size_t k) const {
  return table_.at(n) - table_.at(k) - table_.at(n - k);
}

double hypergeom_pvalue(std::size_t population, std::size_t community,
                        std::size_t group, std::size_t k) {
  return hypergeom_pvalue(population, community, group, k, LogFactorials(population));
}

double hypergeom_pvalue(std::size_t population, std::size_t community,
                        std::size_t group, std::size_t k, const LogFactorials& lf) {
  if (community > population) {
    throw InputError(fmt::format("community size {} exceeds population {}", community,
                                 population));
  }
  if (group > population) {
    throw InputError(fmt::format("group size {} exceeds population {}", group, population));
  }
  if (k > std::min(community, group)) {
    throw InputError(fmt::format("overlap {} exceeds min(community {}, group {})", k,
                                 community, group));
  }
  if (lf.max_n() < population) throw Error("log-factorial table too small");
  if (k == 0) return 1.0;

  // Summing the upper tail directly keeps tiny P-values accurate; it equals
  // 1 minus the lower tail.
  const double log_total = lf.log_choose(population, community);
  double sum = 0.0;
  double carry = 0.0;
  const std::size_t hi = std::min(community, group);
  for (std::size_t i = k; i <= hi; ++i) {
    if (community - i > population - group) continue;
    const double term = std::exp(lf.log_choose(group, i) +
                                 lf.log_choose(population - group, community - i) -
                                 log_total);
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return std::clamp(sum, 0.0, 1.0);
}

std::vector<Enrichment> enrich(std::span<const ProteinSet> communities,
                               const AnnotationSet& annotations,
                               const ProteinSet& universe,
                               const EnrichmentOptions& options,
                               const Executor& executor) {
  // Restrict term sets to the network.
  std::unordered_map<std::string, std::vector<std::size_t>> terms_of;
  std::vector<const std::string*> term_names;
  std::vector<std::size_t> group_size;
  std::set<std::string> annotated;
  for (const auto& [term, proteins] : annotations) {
    std::size_t in_network = 0;
    const std::size_t id = term_names.size();
    for (const auto& p : proteins) {
      if (!std::binary_search(universe.begin(), universe.end(), p)) continue;
      ++in_network;
      terms_of[p].push_back(id);
      annotated.insert(p);
    }
    term_names.push_back(&term);
    group_size.push_back(in_network);
  }
  const std::size_t population =
      options.annotated_universe ? annotated.size() : universe.size();
  const LogFactorials lf(population);

  std::vector<Enrichment> out(communities.size());
  executor.run(communities.size(), [&](std::size_t i) {
    Enrichment& row = out[i];
    row.community = i;
    row.term = "unannotated";
    std::map<std::size_t, std::size_t> overlap;
    std::size_t size = 0;
    for (const auto& p : communities[i]) {
      auto it = terms_of.find(p);
      const bool has_terms = it != terms_of.end();
      if (!options.annotated_universe || has_terms) ++size;
      if (!has_terms) continue;
      for (std::size_t t : it->second) ++overlap[t];
    }
    if (!options.annotated_universe) {
      // Members outside the universe cannot be drawn from it.
      size = 0;
      for (const auto& p : communities[i]) {
        if (std::binary_search(universe.begin(), universe.end(), p)) ++size;
      }
    }
    row.community_size = size;
    for (const auto& [t, k] : overlap) {
      const double p = hypergeom_pvalue(population, size, group_size[t], k, lf);
      if (row.term == "unannotated" || p < row.p_value ||
          (p == row.p_value && *term_names[t] < row.term)) {
        row.term = *term_names[t];
        row.group_size = group_size[t];
        row.overlap = k;
        row.p_value = p;
      }
    }
  });
  std::stable_sort(out.begin(), out.end(), [](const Enrichment& a, const Enrichment& b) {
    return a.p_value < b.p_value;
  });
  return out;
}

}  // namespace ppicd
