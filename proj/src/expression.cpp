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

#include "ppicd/expression.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "ppicd/tsv.hpp"

namespace ppicd {

namespace {

bool is_missing(std::string_view cell) {
  cell = tsv::trim(cell);
  return cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan";
}

}  // namespace

ExpressionMatrix::ExpressionMatrix(std::vector<std::string> genes,
                                   std::vector<std::string> samples,
                                   std::vector<double> values)
    : genes_(std::move(genes)),
      samples_(std::move(samples)),
      values_(std::move(values)) {
  if (samples_.size() < 2) throw InputError("insufficient samples");
  if (values_.size() != genes_.size() * samples_.size()) {
    throw Error("expression matrix shape mismatch");
  }
  if (!std::all_of(values_.begin(), values_.end(),
                   [](double x) { return std::isfinite(x); })) {
    throw InputError("expression matrix holds non-finite values");
  }
  for (std::size_t g = 0; g < genes_.size(); ++g) {
    index_.emplace(genes_[g], g);
  }
}

std::optional<std::size_t> ExpressionMatrix::find(const std::string& gene) const {
  if (auto it = index_.find(gene); it != index_.end()) return it->second;
  return std::nullopt;
}

GedLoad read_ged(std::istream& in, const std::string& source) {
  tsv::LineReader reader(in, source);
  auto header = reader.next_data();
  if (!header) throw InputError(source + ": empty expression file");
  const auto head = tsv::split(*header);
  std::vector<std::string> samples;
  for (std::size_t i = 1; i < head.size(); ++i) {
    samples.emplace_back(tsv::trim(head[i]));
  }
  const std::size_t m = samples.size();
  if (m < 2) throw InputError(reader.where() + ": insufficient samples");

  std::vector<std::string> genes;
  std::vector<double> values;
  std::vector<std::string> dropped;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t imputed = 0;
  std::size_t duplicates = 0;
  std::vector<double> row(m);
  std::vector<bool> present(m);

  while (auto line = reader.next_data()) {
    const auto cells = tsv::split(*line);
    if (cells.size() != m + 1) {
      reader.fail(fmt::format("expected {} columns, found {}", m + 1,
                              cells.size()));
    }
    std::string gene(tsv::trim(cells[0]));
    if (gene.empty()) reader.fail("empty gene label");
    std::size_t missing = 0;
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if (is_missing(cells[k + 1])) {
        present[k] = false;
        ++missing;
        continue;
      }
      const auto v = tsv::parse_double(cells[k + 1]);
      if (!v || !std::isfinite(*v)) {
        reader.fail(fmt::format("invalid expression value '{}'", cells[k + 1]));
      }
      row[k] = *v;
      present[k] = true;
      sum += *v;
    }
    if (seen.contains(gene)) {
      ++duplicates;
      continue;
    }
    seen.emplace(gene, genes.size());
    if (2 * missing > m) {
      dropped.push_back(std::move(gene));
      continue;
    }
    const double mean = sum / static_cast<double>(m - missing);
    for (std::size_t k = 0; k < m; ++k) {
      if (!present[k]) {
        row[k] = mean;
        ++imputed;
      }
    }
    genes.push_back(std::move(gene));
    values.insert(values.end(), row.begin(), row.end());
  }

  return GedLoad{ExpressionMatrix(std::move(genes), std::move(samples),
                                  std::move(values)),
                 std::move(dropped), imputed, duplicates};
}

std::vector<double> quantile_normalize_columns(std::span<const double> values,
                                               std::size_t rows,
                                               std::size_t cols) {
  if (values.size() != rows * cols) throw Error("matrix shape mismatch");
  if (rows == 0 || cols == 0) return {values.begin(), values.end()};

  // order[c] lists row indices of column c sorted by value (stable on row).
  std::vector<std::vector<std::size_t>> order(cols, std::vector<std::size_t>(rows));
  std::vector<double> reference(rows, 0.0);
  for (std::size_t c = 0; c < cols; ++c) {
    auto& o = order[c];
    std::iota(o.begin(), o.end(), std::size_t{0});
    std::stable_sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) {
      return values[a * cols + c] < values[b * cols + c];
    });
    for (std::size_t r = 0; r < rows; ++r) reference[r] += values[o[r] * cols + c];
  }
  for (auto& x : reference) x /= static_cast<double>(cols);

  std::vector<double> out(values.size());
  for (std::size_t c = 0; c < cols; ++c) {
    const auto& o = order[c];
    std::size_t r = 0;
    while (r < rows) {
      std::size_t s = r + 1;
      const double v = values[o[r] * cols + c];
      while (s < rows && values[o[s] * cols + c] == v) ++s;
      double level = reference[r];
      if (s - r > 1) {
        level = 0.0;
        for (std::size_t t = r; t < s; ++t) level += reference[t];
        level /= static_cast<double>(s - r);
      }
      for (std::size_t t = r; t < s; ++t) out[o[t] * cols + c] = level;
      r = s;
    }
  }
  return out;
}

ExpressionMatrix quantile_normalize(const ExpressionMatrix& matrix) {
  auto values = quantile_normalize_columns(matrix.values(), matrix.num_genes(),
                                           matrix.num_samples());
  return ExpressionMatrix(matrix.genes(), matrix.samples(), std::move(values));
}

Correlation pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InputError("expression vectors differ in length");
  }
  const std::size_t m = a.size();
  if (m < 2) throw InputError("insufficient samples");
  const double inv_m = 1.0 / static_cast<double>(m);

  double mean_a = 0.0;
  double mean_b = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    mean_a += a[k];
    mean_b += b[k];
  }
  mean_a *= inv_m;
  mean_b *= inv_m;

  double saa = 0.0;
  double sbb = 0.0;
  double sab = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double da = a[k] - mean_a;
    const double db = b[k] - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  const double sigma_a = std::sqrt(saa * inv_m);
  const double sigma_b = std::sqrt(sbb * inv_m);
  // A constant vector can leave rounding residue of a few ulps of its mean.
  constexpr double kRelTol = 1e-12;
  if (sigma_a <= kRelTol * (1.0 + std::abs(mean_a)) ||
      sigma_b <= kRelTol * (1.0 + std::abs(mean_b))) {
    return {0.0, true};
  }
  const double r = (sab * inv_m) / (sigma_a * sigma_b);
  return {std::clamp(r, -1.0, 1.0), false};
}

ProteinGeneMap read_mapping(std::istream& in, const std::string& source) {
  tsv::LineReader reader(in, source);
  ProteinGeneMap map;
  bool first = true;
  while (auto line = reader.next_data()) {
    const auto fields = tsv::split(*line);
    if (fields.size() < 2) reader.fail("expected protein_id<TAB>gene_id");
    const auto protein = tsv::trim(fields[0]);
    const auto gene = tsv::trim(fields[1]);
    if (first && protein == "protein_id" && gene == "gene_id") {
      first = false;
      continue;
    }
    first = false;
    if (protein.empty() || gene.empty()) reader.fail("empty identifier");
    map.emplace(std::string(protein), std::string(gene));
  }
  return map;
}

GeneMatch match_genes(const LabelIndex& proteins, const ExpressionMatrix& matrix,
                      const ProteinGeneMap* mapping) {
  GeneMatch result;
  result.row_of.resize(proteins.size());
  for (VertexId v = 0; v < proteins.size(); ++v) {
    const std::string& label = proteins.label(v);
    if (mapping == nullptr) {
      result.row_of[v] = matrix.find(label);
    } else if (auto it = mapping->find(label); it != mapping->end()) {
      result.row_of[v] = matrix.find(it->second);
    }
    if (result.row_of[v]) ++result.matched;
  }
  if (!proteins.empty()) {
    result.ratio_percent = 100.0 * static_cast<double>(result.matched) /
                           static_cast<double>(proteins.size());
  }
  return result;
}

}  // namespace ppicd
