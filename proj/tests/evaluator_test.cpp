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

#include <fstream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "oracles.hpp"
#include "ppicd/evaluator.hpp"
#include "ppicd/tsv.hpp"

using namespace ppicd;

namespace {

ProteinSet set_of(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return make_protein_set(std::move(v));
}

ProteinSet numbered(std::size_t from, std::size_t to) {
  std::vector<std::string> v;
  for (std::size_t i = from; i < to; ++i) v.push_back("p" + std::to_string(i));
  return make_protein_set(std::move(v));
}

}  // namespace

TEST_CASE("overlap score and recall") {
  const auto a = set_of({"A", "B", "C"});
  CHECK(overlap_score(a, a) == 1.0);
  CHECK(overlap_score(a, set_of({"X", "Y"})) == 0.0);
  CHECK(overlap_score(3, 3, 6) == 0.5);
  CHECK(recall_ratio(3, 8) == 0.375);
  CHECK(recall_ratio(a, a) == 1.0);
  CHECK(recall_ratio(a, set_of({"X"})) == 0.0);
  CHECK_THROWS_AS(overlap_score(ProteinSet{}, a), Error);
  CHECK_THROWS_AS(recall_ratio(a, ProteinSet{}), Error);
}

TEST_CASE("overlap score is symmetric and factors into the two ratios") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const auto a = numbered(rng() % 10, 10 + rng() % 10);
    const auto b = numbered(rng() % 15, 15 + rng() % 10);
    const double i = static_cast<double>(intersection_size(a, b));
    CHECK(overlap_score(a, b) == overlap_score(b, a));
    const double prod = (i / a.size()) * (i / b.size());
    CHECK(overlap_score(a, b) == doctest::Approx(prod).epsilon(1e-15));
    CHECK(overlap_score(a, b) <= std::min(i / a.size(), i / b.size()) + 1e-15);
  }
}

TEST_CASE("self-catalogue matches everything; sweep is monotone") {
  std::vector<ProteinSet> communities{numbered(0, 4), numbered(4, 9), numbered(9, 11)};
  std::vector<Complex> entries;
  for (std::size_t i = 0; i < communities.size(); ++i) {
    entries.push_back({"C" + std::to_string(i), communities[i]});
  }
  const ComplexCatalogue self(entries);
  const auto rep = match_complexes(communities, self, 0.5, Executor(2));
  CHECK(rep.matched == 3);
  for (const auto& r : rep.rows) CHECK(r.overlap_score == 1.0);
  for (const auto& [t, n] : threshold_sweep(communities, self, Executor(1))) CHECK(n == 3);

  const ComplexCatalogue other({{"K", numbered(0, 6)}, {"L", numbered(8, 12)}});
  const auto strict = match_complexes(communities, other, 1.0, Executor(1));
  CHECK(strict.matched == 0);
  const auto sweep = threshold_sweep(communities, other, Executor(1));
  REQUIRE(sweep.size() == 6);
  CHECK(sweep.front().first == 0.1);
  CHECK(sweep.back().first == 0.6);
  for (std::size_t i = 1; i < sweep.size(); ++i) CHECK(sweep[i].second <= sweep[i - 1].second);

  const auto empty = match_complexes(communities, ComplexCatalogue{}, 0.1, Executor(1));
  CHECK(empty.matched == 0);
  CHECK(empty.warnings.size() == 1);
  CHECK_THROWS_AS(match_complexes(communities, self, 0.0, Executor(1)), InputError);
}

TEST_CASE("best match ties go to the earlier entry") {
  const std::vector<ProteinSet> c{set_of({"A", "B"})};
  const ComplexCatalogue cat({{"first", set_of({"A", "X"})}, {"second", set_of({"B", "Y"})}});
  CHECK(match_complexes(c, cat, 0.1, Executor(1)).rows[0].complex == "first");
}

TEST_CASE("catalogue validation") {
  CHECK_THROWS_AS(ComplexCatalogue({{"a", set_of({"X"})}}), InputError);
  CHECK_THROWS_AS(ComplexCatalogue({{"a", set_of({"X", "Y"})}, {"a", set_of({"Z", "W"})}}),
                  InputError);
  std::istringstream in("# c\nK1\tA, B,C\nK2\tD,E\n");
  const auto cat = read_catalogue(in, "cat");
  CHECK(cat.size() == 2);
  CHECK(cat.entries()[0].proteins == set_of({"A", "B", "C"}));
  std::istringstream single("K1\tA\n");
  CHECK_THROWS_WITH_AS(read_catalogue(single, "cat"), doctest::Contains("cat:1"), InputError);
}

TEST_CASE("hypergeometric worked example and edge cases") {
  CHECK(std::abs(hypergeom_pvalue(10, 4, 5, 3) - 55.0 / 210.0) <= 1e-12);
  CHECK(hypergeom_pvalue(10, 4, 5, 0) == 1.0);
  // C - i > V - F terms vanish: with V=10, F=8, C=4 every draw has >= 2 hits.
  CHECK(hypergeom_pvalue(10, 4, 8, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_WITH_AS(hypergeom_pvalue(10, 11, 2, 1), doctest::Contains("community size"),
                       InputError);
  CHECK_THROWS_WITH_AS(hypergeom_pvalue(10, 2, 11, 1), doctest::Contains("group size"),
                       InputError);
  CHECK_THROWS_WITH_AS(hypergeom_pvalue(10, 2, 3, 3), doctest::Contains("overlap"), InputError);
}

TEST_CASE("hypergeometric agrees with enumeration for V <= 14") {
  // The acceptance suite covers V <= 20.
  for (unsigned V = 1; V <= 14; ++V) {
    const LogFactorials lf(V);
    for (unsigned C = 0; C <= V; ++C) {
      for (unsigned F = 0; F <= V; ++F) {
        double prev = 2.0;
        for (unsigned k = 0; k <= std::min(C, F); ++k) {
          const double p = hypergeom_pvalue(V, C, F, k, lf);
          CHECK(std::abs(p - testing::oracle_hypergeom(V, C, F, k)) <= 1e-10);
          CHECK(p <= prev);
          CHECK(p >= 0.0);
          CHECK(p <= 1.0);
          prev = p;
        }
      }
    }
  }
}

TEST_CASE("hypergeometric tails stay accurate at genome scale") {
  const LogFactorials lf(20000);
  // Perfect enrichment: 1 / C(V, C) for F = C.
  const double p = hypergeom_pvalue(20000, 5, 5, 5, lf);
  CHECK(p == doctest::Approx(std::exp(-lf.log_choose(20000, 5))).epsilon(1e-9));
  CHECK(p > 0.0);
  CHECK(hypergeom_pvalue(10000, 500, 700, 1, lf) <= 1.0);
}

TEST_CASE("enrichment picks the smallest P and sorts ascending") {
  const ProteinSet universe = numbered(0, 20);
  AnnotationSet ann;
  ann["T1"] = numbered(0, 5);
  ann["T2"] = set_of({"p0", "p10", "p11"});
  ann["T3"] = set_of({"p18", "p19", "zz_not_in_network"});
  const std::vector<ProteinSet> comm{numbered(0, 5), numbered(10, 12), set_of({"p15"})};
  const auto rows = enrich(comm, ann, universe, {}, Executor(2));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].community == 0);
  CHECK(rows[0].term == "T1");
  CHECK(rows[0].p_value == doctest::Approx(testing::oracle_hypergeom(20, 5, 5, 5)).epsilon(1e-10));
  CHECK(rows[1].community == 1);
  CHECK(rows[1].term == "T2");
  CHECK(rows[1].p_value == doctest::Approx(testing::oracle_hypergeom(20, 2, 3, 2)).epsilon(1e-10));
  CHECK(rows[2].term == "unannotated");
  CHECK(rows[2].p_value == 1.0);

  // Only the 9 annotated network proteins form the population.
  const auto narrow = enrich(comm, ann, universe, {.annotated_universe = true}, Executor(1));
  CHECK(narrow[0].p_value ==
        doctest::Approx(testing::oracle_hypergeom(9, 5, 5, 5)).epsilon(1e-10));
  CHECK(narrow[1].community_size == 2);
}

TEST_CASE("random enrichment agrees with enumeration at V = 20") {
  std::mt19937_64 rng(33);
  const ProteinSet universe = numbered(0, 20);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::string> c, f;
    for (const auto& p : universe) {
      if (rng() % 3 == 0) c.push_back(p);
      if (rng() % 4 == 0) f.push_back(p);
    }
    if (c.empty() || f.empty()) continue;
    AnnotationSet ann{{"T", make_protein_set(f)}};
    const auto cs = make_protein_set(c);
    const auto rows = enrich(std::vector<ProteinSet>{cs}, ann, universe, {}, Executor(1));
    const auto k = intersection_size(cs, ann["T"]);
    if (k == 0) {
      CHECK(rows[0].term == "unannotated");
      continue;
    }
    CHECK(std::abs(rows[0].p_value -
                   testing::oracle_hypergeom(20, cs.size(), ann["T"].size(), k)) <= 1e-10);
  }
}

TEST_CASE("annotation reader") {
  std::istringstream in("protein_label\tterm_id\nA\tGO:1\nB\tGO:1\nA\tGO:2\n");
  const auto ann = read_annotations(in, "ann");
  CHECK(ann.size() == 2);
  CHECK(ann.at("GO:1") == set_of({"A", "B"}));
  std::istringstream bad("A\n");
  CHECK_THROWS_AS(read_annotations(bad, "ann"), InputError);
}

TEST_CASE("complex table rows parse and follow the recall convention") {
  std::ifstream in(PPICD_TEST_DATA "/tables/matched_complexes.tsv");
  REQUIRE(in);
  tsv::LineReader reader(in, "matched_complexes.tsv");
  int rows = 0, os_agree = 0;
  while (auto line = reader.next_data()) {
    const auto f = tsv::split(*line);
    REQUIRE(f.size() == 9);
    const auto known = static_cast<std::size_t>(*tsv::parse_double(f[2]));
    for (int net = 0; net < 2; ++net) {
      const auto size = static_cast<std::size_t>(*tsv::parse_double(f[3 + 3 * net]));
      const auto overlap = static_cast<std::size_t>(*tsv::parse_double(f[4 + 3 * net]));
      const double printed = *tsv::parse_double(f[5 + 3 * net]);
      CHECK(std::abs(100.0 * recall_ratio(overlap, known) - printed) < 0.005);
      os_agree += std::abs(100.0 * overlap_score(overlap, size, known) - printed) < 0.005;
      CHECK(tsv::format_fixed(100.0 * recall_ratio(overlap, known), 2) == std::string(f[5 + 3 * net]));
    }
    ++rows;
  }
  CHECK(rows == 6);
  CHECK(os_agree == 1);  // only the 3-of-6 row agrees with the squared score too
}

TEST_CASE("functional module table rows parse and render") {
  std::ifstream in(PPICD_TEST_DATA "/tables/functional_modules.tsv");
  REQUIRE(in);
  tsv::LineReader reader(in, "functional_modules.tsv");
  int rows = 0;
  while (auto line = reader.next_data()) {
    const auto f = tsv::split(*line);
    REQUIRE(f.size() == 3);
    const auto proteins = tsv::split(f[1], ',');
    CHECK(proteins.size() >= 3);
    const auto p = tsv::parse_double(f[2]);
    REQUIRE(p.has_value());
    CHECK(*p > 0.0);
    CHECK(*p < 0.01);
    std::string rendered = fmt::format("{:.2E}", *p);
    CHECK(rendered == std::string(f[2]));
    ++rows;
  }
  CHECK(rows == 6);
}
