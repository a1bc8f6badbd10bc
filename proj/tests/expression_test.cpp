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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "ppicd/expression.hpp"
#include "ppicd/label_index.hpp"

using namespace ppicd;

namespace {

std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
  std::vector<double> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<std::vector<double>> random_matrix(std::mt19937_64& rng, std::size_t n,
                                               std::size_t m, bool ties) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_int_distribution<int> small(0, 4);
  std::vector<std::vector<double>> rows(n, std::vector<double>(m));
  for (auto& r : rows) {
    for (auto& x : r) x = ties ? small(rng) : u(rng);
  }
  return rows;
}

}  // namespace

TEST_CASE("pearson on simple vectors") {
  const std::vector<double> a{1, 2, 3}, b{3, 2, 1}, c{1, 2, 4}, d{2, 2, 5};
  CHECK(pearson(a, a).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pearson(a, b).value == doctest::Approx(-1.0).epsilon(1e-15));
  // Hand-derived: covariance sum 5, deviation sums 14/3 and 6.
  CHECK(std::abs(pearson(c, d).value - 5.0 / std::sqrt(28.0)) < 1e-12);
  CHECK(std::abs(pearson(c, d).value - testing::oracle_pearson(c, d)) < 1e-12);
}

TEST_CASE("pearson on a constant vector is flagged zero") {
  const std::vector<double> k{2, 2, 2}, a{1, 2, 3};
  const auto r = pearson(k, a);
  CHECK(r.value == 0.0);
  CHECK(r.zero_variance);
  CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{2}), InputError);
  CHECK_THROWS_AS(pearson(a, std::vector<double>{1, 2}), InputError);
}

TEST_CASE("pearson agrees with the straight-line oracle and its invariants") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> len(2, 64);
  std::normal_distribution<double> g(0.0, 3.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t m = len(rng);
    std::vector<double> a(m), b(m);
    for (auto& x : a) x = g(rng);
    for (auto& x : b) x = g(rng);
    const double r = pearson(a, b).value;
    CHECK(std::abs(r - testing::oracle_pearson(a, b)) <= 1e-12);
    CHECK(std::abs(r) <= 1.0 + 1e-12);
    CHECK(pearson(b, a).value == doctest::Approx(r).epsilon(1e-14));

    const double alpha = scale(rng), beta = g(rng);
    std::vector<double> pos(m), neg(m);
    for (std::size_t k = 0; k < m; ++k) {
      pos[k] = alpha * a[k] + beta;
      neg[k] = -alpha * a[k] + beta;
    }
    CHECK(std::abs(pearson(pos, b).value - r) <= 1e-10);
    CHECK(std::abs(pearson(neg, b).value + r) <= 1e-10);
  }
}

TEST_CASE("quantile normalization of the 2x2 example") {
  const auto out = quantile_normalize_columns(std::vector<double>{1, 4, 3, 2}, 2, 2);
  CHECK(out == std::vector<double>{1.5, 3.5, 3.5, 1.5});
  const auto oracle = testing::oracle_quantile({{1, 4}, {3, 2}});
  CHECK(flatten(oracle) == out);
}

TEST_CASE("quantile normalization averages tied ranks") {
  // Reference values 2, 2.5, 3.5; the tied 1s span ranks 1 and 2.
  const auto out = quantile_normalize_columns(std::vector<double>{1, 3, 1, 4, 2, 5}, 3, 2);
  CHECK(out[0] == doctest::Approx(2.25));
  CHECK(out[2] == doctest::Approx(2.25));
  CHECK(out[4] == doctest::Approx(3.5));
  CHECK(out[1] == doctest::Approx(2.0));
}

TEST_CASE("quantile normalization fixed points") {
  const std::vector<double> same{1, 1, 5, 5, 3, 3};
  CHECK(quantile_normalize_columns(same, 3, 2) == same);
  const std::vector<double> one{4, 1, 3};
  CHECK(quantile_normalize_columns(one, 3, 1) == one);
  CHECK_THROWS_AS(ExpressionMatrix({"g"}, {"s"}, {1.0}), InputError);
}

TEST_CASE("quantile normalization matches the oracle, equalizes columns, is idempotent") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 30, m = 2 + rng() % 8;
    const auto rows = random_matrix(rng, n, m, t % 2 == 0);
    const auto once = quantile_normalize_columns(flatten(rows), n, m);
    const auto oracle = flatten(testing::oracle_quantile(rows));
    for (std::size_t i = 0; i < once.size(); ++i) CHECK(std::abs(once[i] - oracle[i]) <= 1e-12);

    if (t % 2 == 1) {  // tie averaging changes the reference, so only tie-free input is a fixed point
      const auto twice = quantile_normalize_columns(once, n, m);
      for (std::size_t i = 0; i < once.size(); ++i) CHECK(std::abs(once[i] - twice[i]) <= 1e-12);
    }

    if (t % 2 == 1) {  // without ties every column holds the same multiset
      std::vector<double> first;
      for (std::size_t i = 0; i < n; ++i) first.push_back(once[i * m]);
      std::sort(first.begin(), first.end());
      for (std::size_t c = 1; c < m; ++c) {
        std::vector<double> col;
        for (std::size_t i = 0; i < n; ++i) col.push_back(once[i * m + c]);
        std::sort(col.begin(), col.end());
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(col[i] - first[i]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("read_ged imputes, drops sparse rows and validates shape") {
  std::istringstream in(
      "gene_id\ts1\ts2\ts3\ts4\n"
      "G1\t1\t2\t\t3\n"
      "G2\tNA\tNaN\t1\t\n"
      "G3\t4\t5\t6\t7\n"
      "G3\t0\t0\t0\t0\n");
  const GedLoad load = read_ged(in, "ged");
  CHECK(load.matrix.num_genes() == 2);
  CHECK(load.matrix.num_samples() == 4);
  CHECK(load.imputed_cells == 1);
  CHECK(load.dropped_genes == std::vector<std::string>{"G2"});
  CHECK(load.duplicate_genes == 1);
  CHECK(load.matrix.row(0)[2] == doctest::Approx(2.0));
  CHECK(load.matrix.row(1)[0] == 4.0);

  std::istringstream one("gene_id\ts1\nG1\t1\n");
  CHECK_THROWS_WITH_AS(read_ged(one, "ged"), doctest::Contains("insufficient samples"),
                       InputError);
  std::istringstream ragged("gene_id\ts1\ts2\nG1\t1\n");
  CHECK_THROWS_WITH_AS(read_ged(ragged, "g.tsv"), doctest::Contains("g.tsv:2"), InputError);
  std::istringstream junk("gene_id\ts1\ts2\nG1\t1\tabc\n");
  CHECK_THROWS_AS(read_ged(junk, "g"), InputError);
}

TEST_CASE("match_genes by label and by mapping") {
  const ExpressionMatrix m({"A", "B", "X"}, {"s1", "s2"}, {1, 2, 3, 4, 5, 6});
  const std::vector<std::string> names{"A", "B", "C", "D"};
  const LabelIndex proteins = intern_proteins(names);
  const auto direct = match_genes(proteins, m);
  CHECK(direct.matched == 2);
  CHECK(direct.ratio_percent == 50.0);
  CHECK(direct.row_of[0] == 0u);
  CHECK_FALSE(direct.row_of[2].has_value());

  std::istringstream map_in("protein_id\tgene_id\nC\tX\nD\tnope\n");
  const ProteinGeneMap mapping = read_mapping(map_in, "map");
  const auto mapped = match_genes(proteins, m, &mapping);
  CHECK_FALSE(mapped.row_of[0].has_value());  // a mapping replaces label matching
  CHECK(mapped.row_of[2] == 2u);
  CHECK_FALSE(mapped.row_of[3].has_value());

  const ExpressionMatrix none({"Q"}, {"s1", "s2"}, {1, 2});
  CHECK(match_genes(proteins, none).ratio_percent == 0.0);
}
