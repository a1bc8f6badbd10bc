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

// ppicd: weighted PPI network construction, community detection and
// evaluation.
//
//   ppicd gen-synthetic --output data --seed 7
//   ppicd pipeline --ppi data/ppi.tsv --ged data/ged.tsv \
//       --catalogue data/catalogue.tsv --annotations data/annotations.tsv \
//       --output out
//
// Exit codes: 0 success, 1 computation error, 2 usage or input error.

#include <iostream>

#include <CLI11.hpp>

#include "ppicd/cli/commands.hpp"

namespace {

using ppicd::cli::PipelineConfig;

void add_threads(CLI::App* cmd, PipelineConfig& c) {
  cmd->add_option("--threads", c.threads, "Worker threads (default: WPPI_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
}

void add_output(CLI::App* cmd, PipelineConfig& c) {
  cmd->add_option("--output", c.output, "Output directory")->capture_default_str();
  cmd->add_option("--format", c.format, "tsv (default) or json")
      ->transform(CLI::CheckedTransformer(
                      std::map<std::string, ppicd::cli::OutputFormat>{
                          {"tsv", ppicd::cli::OutputFormat::kTsv},
                          {"json", ppicd::cli::OutputFormat::kJson}},
                      CLI::ignore_case)
                      .description(""))
      ->option_text("FORMAT");
  cmd->add_option("--seed", c.seed, "Seed recorded for reproducibility");
}

void add_build(CLI::App* cmd, PipelineConfig& c) {
  cmd->add_option("--ppi", c.ppi, "PPI edge list (protein_a<TAB>protein_b)");
  cmd->add_option("--ged", c.ged, "Gene expression matrix TSV");
  cmd->add_option("--mapping", c.mapping, "protein_id<TAB>gene_id table");
  cmd->add_option("--default-weight", c.default_weight,
                  "Weight for edges without expression data (default: mean matched weight)")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--zero-as-unmatched", c.zero_as_unmatched,
                "Give edges with correlation exactly 0 the default weight");
  cmd->add_option("--partitions", c.partitions, "Edge partitions (default: one per thread)");
  cmd->add_option_function<std::string>(
         "--partition-strategy",
         [&c](const std::string& name) {
           c.strategy = *ppicd::parse_partition_strategy(name);
         },
         "range (default) or hash")
      ->check(CLI::IsMember({"range", "hash"}));
}

void add_detect(CLI::App* cmd, PipelineConfig& c) {
  cmd->add_option("--wppi", c.wppi, "Weighted network (# wppi v1)");
  cmd->add_option("--d-alpha", c.hub.d_alpha, "Hub weighted-degree threshold (default: mean)");
  cmd->add_option("--lambda", c.hub.lambda, "Functional cohesion threshold")
      ->capture_default_str();
  cmd->add_option("--max-stage2-passes", c.hub.max_stage2_passes, "Cap on refinement passes")
      ->capture_default_str();
}

void add_evaluate(CLI::App* cmd, PipelineConfig& c) {
  cmd->add_option("--catalogue", c.catalogue, "Known complexes: name<TAB>p1,p2,...");
  cmd->add_option("--annotations", c.annotations, "protein_label<TAB>term_id");
  cmd->add_option("--match-threshold", c.match_threshold, "Overlap score for a match")
      ->capture_default_str();
  cmd->add_flag("--annotated-universe", c.annotated_universe,
                "Count only annotated proteins in enrichment tests");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted PPI community detection"};
  app.require_subcommand(1);
  PipelineConfig config;
  ppicd::cli::PlantedConfig planted;
  std::filesystem::path synthetic_out = ".";

  auto* build = app.add_subcommand("build-wppi", "Weight PPI edges by co-expression");
  add_build(build, config);
  add_threads(build, config);
  add_output(build, config);

  auto* detect = app.add_subcommand("detect", "Detect communities");
  add_build(detect, config);
  add_detect(detect, config);
  add_threads(detect, config);
  add_output(detect, config);

  auto* evaluate = app.add_subcommand("evaluate", "Score communities");
  evaluate->add_option("--communities", config.communities, "communities.tsv from detect");
  add_evaluate(evaluate, config);
  add_threads(evaluate, config);
  add_output(evaluate, config);

  auto* pipeline = app.add_subcommand("pipeline", "build-wppi, detect and evaluate");
  add_build(pipeline, config);
  add_detect(pipeline, config);
  add_evaluate(pipeline, config);
  add_threads(pipeline, config);
  add_output(pipeline, config);
  pipeline->add_flag("--no-intermediates", config.no_intermediates,
                     "Do not write wppi.tsv");

  auto* gen = app.add_subcommand("gen-synthetic", "Write a planted-partition data set");
  gen->add_option("--blocks", planted.block_sizes, "Block sizes")->capture_default_str();
  gen->add_option("--p-in", planted.p_in)->capture_default_str();
  gen->add_option("--p-out", planted.p_out)->capture_default_str();
  gen->add_option("--samples", planted.samples)->capture_default_str();
  gen->add_option("--noise", planted.noise)->capture_default_str();
  gen->add_option("--background-genes", planted.background_genes)->capture_default_str();
  gen->add_option("--seed", planted.seed)->capture_default_str();
  gen->add_option("--output", synthetic_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) ppicd::cli::cmd_build_wppi(config, std::cout);
    if (*detect) ppicd::cli::cmd_detect(config, std::cout);
    if (*evaluate) ppicd::cli::cmd_evaluate(config, std::cout);
    if (*pipeline) ppicd::cli::cmd_pipeline(config, std::cout);
    if (*gen) ppicd::cli::cmd_gen_synthetic(planted, synthetic_out, std::cout);
  } catch (const ppicd::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
