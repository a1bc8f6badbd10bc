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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ppicd/engine.hpp"

namespace ppicd {

// A community or complex as a sorted, duplicate-free list of protein labels.
using ProteinSet = std::vector<std::string>;

ProteinSet make_protein_set(std::vector<std::string> labels);
std::size_t intersection_size(const ProteinSet& a, const ProteinSet& b);

struct Complex {
  std::string name;
  ProteinSet proteins;
};

// Known complexes. Names are unique and every entry has >= 2 proteins.
class ComplexCatalogue {
 public:
  ComplexCatalogue() = default;
  // Throws InputError on duplicate names or entries with < 2 proteins.
  explicit ComplexCatalogue(std::vector<Complex> entries);

  std::span<const Complex> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Complex> entries_;
};

// "name<TAB>p1,p2,..." per line.
ComplexCatalogue read_catalogue(std::istream& in, const std::string& source);

// Annotation term -> proteins carrying it. Every set is non-empty.
using AnnotationSet = std::map<std::string, ProteinSet>;

// "protein<TAB>term" per line.
AnnotationSet read_annotations(std::istream& in, const std::string& source);

// |pc & kc|^2 / (|pc| |kc|). Throws Error if either size is 0 or the
// intersection exceeds either size.
double overlap_score(std::size_t intersection, std::size_t pc_size, std::size_t kc_size);
double overlap_score(const ProteinSet& pc, const ProteinSet& kc);

// |pc & kc| / |kc|. Throws Error if kc is empty.
double recall_ratio(std::size_t intersection, std::size_t kc_size);
double recall_ratio(const ProteinSet& pc, const ProteinSet& kc);

struct ComplexMatch {
  std::size_t community = 0;
  std::string complex;  // empty when the catalogue is empty
  std::size_t community_size = 0;
  std::size_t complex_size = 0;
  std::size_t overlap = 0;
  double overlap_score = 0.0;
  double recall = 0.0;
  bool matched = false;
};

struct MatchReport {
  double threshold = 0.0;
  std::vector<ComplexMatch> rows;  // one per community, in community order
  std::size_t matched = 0;
  std::size_t total = 0;
  std::vector<std::string> warnings;
};

// Best-OS catalogue entry for each community (ties to the earlier entry);
// matched when that OS >= threshold. Throws InputError unless
// 0 < threshold <= 1.
MatchReport match_complexes(std::span<const ProteinSet> communities,
                            const ComplexCatalogue& catalogue, double threshold,
                            const Executor& executor);

// Matched counts at 0.1, 0.2, ..., 0.6.
std::vector<std::pair<double, std::size_t>> threshold_sweep(
    std::span<const ProteinSet> communities, const ComplexCatalogue& catalogue,
    const Executor& executor);

// Table of log(n!) for n <= max_n.
class LogFactorials {
 public:
  explicit LogFactorials(std::size_t max_n);
  double operator()(std::size_t n) const { return table_.at(n); }
  double log_choose(std::size_t n, std::size_t k) const;
  std::size_t max_n() const { return table_.size() - 1; }

 private:
  std::vector<double> table_;
};

// P(X >= k) for X hypergeometric: a community of `community` proteins drawn
// from `population`, of which `group` carry the term. Throws InputError
// naming the violated constraint.
double hypergeom_pvalue(std::size_t population, std::size_t community,
                        std::size_t group, std::size_t k);
double hypergeom_pvalue(std::size_t population, std::size_t community,
                        std::size_t group, std::size_t k, const LogFactorials& lf);

struct Enrichment {
  std::size_t community = 0;
  std::string term;  // "unannotated" when no member carries any term
  std::size_t community_size = 0;
  std::size_t group_size = 0;
  std::size_t overlap = 0;
  double p_value = 1.0;
};

struct EnrichmentOptions {
  // Count only annotated proteins in the population and the community.
  bool annotated_universe = false;
};

// Best (smallest P) term per community, ties to the lexicographically first
// term. Sorted ascending by P, then community. `universe` is every protein of
// the network.
std::vector<Enrichment> enrich(std::span<const ProteinSet> communities,
                               const AnnotationSet& annotations,
                               const ProteinSet& universe,
                               const EnrichmentOptions& options,
                               const Executor& executor);

}  // namespace ppicd
