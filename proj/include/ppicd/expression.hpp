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
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ppicd/label_index.hpp"

namespace ppicd {

// Genes x samples matrix of expression levels, row-major. Every value is
// finite and there are at least two samples.
class ExpressionMatrix {
 public:
  ExpressionMatrix(std::vector<std::string> genes,
                   std::vector<std::string> samples, std::vector<double> values);

  std::size_t num_genes() const { return genes_.size(); }
  std::size_t num_samples() const { return samples_.size(); }
  std::span<const double> row(std::size_t gene) const {
    return {values_.data() + gene * num_samples(), num_samples()};
  }
  std::span<const double> values() const { return values_; }
  const std::vector<std::string>& genes() const { return genes_; }
  const std::vector<std::string>& samples() const { return samples_; }
  std::optional<std::size_t> find(const std::string& gene) const;

 private:
  std::vector<std::string> genes_;
  std::vector<std::string> samples_;
  std::vector<double> values_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct GedLoad {
  ExpressionMatrix matrix;
  // Genes with more than half of their cells missing; treated as absent.
  std::vector<std::string> dropped_genes;
  std::size_t imputed_cells = 0;
  std::size_t duplicate_genes = 0;
};

// Parses the expression TSV: a header "gene_id<TAB>sample..." followed by one
// row per gene. Empty cells, "NA" and "NaN" are missing and are replaced by
// the row mean of the present cells.
GedLoad read_ged(std::istream& in, const std::string& source);

// Quantile normalisation of the columns of a row-major rows x cols block.
// Rank r of each column is replaced by the mean of the r-th order statistics
// across columns; tied values share the mean of the reference values over the
// ranks they span. Works for any cols >= 1.
std::vector<double> quantile_normalize_columns(std::span<const double> values,
                                               std::size_t rows,
                                               std::size_t cols);

ExpressionMatrix quantile_normalize(const ExpressionMatrix& matrix);

struct Correlation {
  double value = 0.0;
  // Set when either vector is constant; value is then 0.
  bool zero_variance = false;
};

// Pearson correlation with population (1/M) standard deviations. Throws
// InputError on length mismatch or fewer than two samples.
Correlation pearson(std::span<const double> a, std::span<const double> b);

using ProteinGeneMap = std::unordered_map<std::string, std::string>;

// "protein_id<TAB>gene_id" lines; an optional header with exactly those
// column names is skipped. The first mapping of a protein wins.
ProteinGeneMap read_mapping(std::istream& in, const std::string& source);

struct GeneMatch {
  // Expression row per vertex, nullopt when unmatched.
  std::vector<std::optional<std::size_t>> row_of;
  std::size_t matched = 0;
  // matched / total * 100.
  double ratio_percent = 0.0;
};

// Joins proteins to expression rows, by label unless `mapping` is given.
GeneMatch match_genes(const LabelIndex& proteins, const ExpressionMatrix& matrix,
                      const ProteinGeneMap* mapping = nullptr);

}  // namespace ppicd
