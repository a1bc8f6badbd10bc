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

#include "ppicd/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <fmt/format.h>

#include "ppicd/cli/files.hpp"
#include "ppicd/cli/reports.hpp"
#include "ppicd/evaluator.hpp"
#include "ppicd/expression.hpp"
#include "ppicd/network_io.hpp"
#include "ppicd/tsv.hpp"
#include "ppicd/wppi_builder.hpp"

namespace ppicd::cli {

namespace {

constexpr std::string_view kVersion = "0.1.0";

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json path_json(const std::optional<fs::path>& p) {
  return p ? json(p->string()) : json(nullptr);
}

// Accumulates the report every command emits.
class Run {
 public:
  Run(const PipelineConfig& config, std::string_view command, const Executor& executor)
      : config_(config) {
    report_ = {{"tool", "ppicd"},
               {"version", kVersion},
               {"command", command},
               {"config", config.to_json()},
               {"inputs", json::object()},
               {"outputs", json::array()},
               {"timings_ms", json::object()},
               {"warnings", json::array()}};
    report_["config"]["threads"] = executor.threads();
  }

  void input(std::string_view name, const fs::path& path) {
    report_["inputs"][std::string(name)] = {{"path", path.string()},
                                            {"sha256", sha256_file(path)}};
  }

  void timing(std::string_view name, Clock::time_point start) {
    report_["timings_ms"][std::string(name)] = ms_since(start);
  }

  void warn(const std::string& message) { report_["warnings"].push_back(message); }

  void write(std::string_view name, std::string_view content) {
    write_atomic(config_.output / name, content);
    report_["outputs"].push_back(name);
  }

  // manifest.json for TSV output, report.json for JSON output.
  void finish() {
    write(config_.format == OutputFormat::kJson ? "report.json" : "manifest.json",
          report_.dump(2) + "\n");
  }

  json& operator[](const char* key) { return report_[key]; }

 private:
  const PipelineConfig& config_;
  json report_;
};

template <class Stream>
Stream open_named(const fs::path& path, Run& run, std::string_view name) {
  run.input(name, path);
  return open_input(path);
}

std::vector<double> quantiles(std::vector<double> values) {
  if (values.empty()) return {};
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double q : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto idx = static_cast<std::size_t>(q * static_cast<double>(values.size() - 1) + 0.5);
    out.push_back(values[idx]);
  }
  return out;
}

WppiBuild build_from_files(const PipelineConfig& config, const Executor& executor, Run& run,
                           std::ostream& log) {
  if (!config.ppi) throw InputError("--ppi is required");
  if (!config.ged) throw InputError("--ged is required");
  const auto start = Clock::now();

  auto ppi_in = open_named<std::ifstream>(*config.ppi, run, "ppi");
  const PpiNetwork ppi = read_ppi(ppi_in, config.ppi->string());
  auto ged_in = open_named<std::ifstream>(*config.ged, run, "ged");
  GedLoad ged = read_ged(ged_in, config.ged->string());
  std::optional<ProteinGeneMap> mapping;
  if (config.mapping) {
    auto in = open_named<std::ifstream>(*config.mapping, run, "mapping");
    mapping = read_mapping(in, config.mapping->string());
  }
  run.timing("load", start);

  const auto build_start = Clock::now();
  const ExpressionMatrix normalized = quantile_normalize(ged.matrix);
  WppiOptions options;
  options.default_weight = config.default_weight;
  options.zero_as_unmatched = config.zero_as_unmatched;
  options.partitions = config.partitions;
  options.strategy = config.strategy;
  WppiBuild build =
      build_wppi(ppi, normalized, mapping ? &*mapping : nullptr, options, executor);
  run.timing("build_wppi", build_start);

  if (ppi.duplicates_dropped()) {
    run.warn(fmt::format("{} duplicate PPI edges dropped", ppi.duplicates_dropped()));
  }
  if (ppi.self_loops_dropped()) {
    run.warn(fmt::format("{} PPI self-loops dropped", ppi.self_loops_dropped()));
  }
  if (!ged.dropped_genes.empty()) {
    run.warn(fmt::format("{} genes with more than half their values missing dropped",
                         ged.dropped_genes.size()));
  }

  std::vector<double> weights;
  for (const auto& e : build.network.graph.edges()) weights.push_back(e.weight);
  const auto q = quantiles(weights);
  const auto& s = build.stats;
  run["wppi"] = {{"vertices", build.network.graph.num_vertices()},
                 {"edges", build.network.graph.num_edges()},
                 {"genes", ged.matrix.num_genes()},
                 {"samples", ged.matrix.num_samples()},
                 {"imputed_cells", ged.imputed_cells},
                 {"dropped_genes", ged.dropped_genes.size()},
                 {"duplicate_genes", ged.duplicate_genes},
                 {"matched_proteins", s.matched_proteins},
                 {"matching_ratio_percent", s.matching_ratio_percent},
                 {"matched_edges", s.matched_edges},
                 {"fallback_edges", s.fallback_edges},
                 {"fallback_weight", s.fallback_weight},
                 {"zero_variance_edges", s.zero_variance_edges},
                 {"unique_gene_pairs", s.unique_gene_pairs},
                 {"weight_quantiles", q}};

  log << fmt::format("N={} |E|={} matching ratio={:.2f}%\n",
                     build.network.graph.num_vertices(), build.network.graph.num_edges(),
                     s.matching_ratio_percent);
  log << fmt::format("weight quantiles min={:.6f} q25={:.6f} median={:.6f} q75={:.6f} "
                     "max={:.6f}\n",
                     q[0], q[1], q[2], q[3], q[4]);
  return build;
}

LabelledNetwork load_network(const PipelineConfig& config, const Executor& executor, Run& run,
                             std::ostream& log) {
  if (config.wppi) {
    const auto start = Clock::now();
    auto in = open_named<std::ifstream>(*config.wppi, run, "wppi");
    LabelledNetwork net = read_wppi(in, config.wppi->string());
    run.timing("load", start);
    return net;
  }
  if (config.ppi && config.ged) return build_from_files(config, executor, run, log).network;
  throw InputError("detect needs --wppi, or --ppi together with --ged");
}

std::vector<CommunityRow> detect_and_write(const LabelledNetwork& net,
                                           const PipelineConfig& config,
                                           const Executor& executor, Run& run,
                                           std::ostream& log) {
  const auto start = Clock::now();
  const DetectionResult result = detect(net.graph, config.hub, executor);
  run.timing("detect", start);
  for (const auto& w : result.warnings) run.warn(w);

  run.write("communities.tsv", render_communities(result, net.labels));
  json detection = to_json(result, net.labels);
  if (config.format == OutputFormat::kTsv) detection.erase("communities");
  detection.erase("warnings");
  run["detection"] = std::move(detection);

  std::size_t nontrivial = 0;
  for (const auto& c : result.communities) nontrivial += c.members.size() >= 2;
  log << fmt::format("{} communities ({} with two or more proteins), {} hubs\n",
                     result.communities.size(), nontrivial, result.stats.hubs);

  std::vector<CommunityRow> rows;
  for (std::size_t i = 0; i < result.communities.size(); ++i) {
    CommunityRow row{std::to_string(i), {}};
    for (VertexId v : result.communities[i].members) {
      row.proteins.push_back(net.labels.label(v));
    }
    row.proteins = make_protein_set(std::move(row.proteins));
    rows.push_back(std::move(row));
  }
  return rows;
}

void evaluate_and_write(const std::vector<CommunityRow>& rows, const PipelineConfig& config,
                        const Executor& executor, Run& run, std::ostream& log) {
  if (!config.catalogue && !config.annotations) {
    throw InputError("evaluation needs --catalogue and/or --annotations");
  }
  std::vector<ProteinSet> sets;
  std::vector<std::string> universe;
  for (const auto& r : rows) {
    sets.push_back(r.proteins);
    universe.insert(universe.end(), r.proteins.begin(), r.proteins.end());
  }
  universe = make_protein_set(std::move(universe));

  const bool as_json = config.format == OutputFormat::kJson;
  json evaluation = json::object();
  const auto start = Clock::now();
  if (config.catalogue) {
    auto in = open_named<std::ifstream>(*config.catalogue, run, "catalogue");
    const ComplexCatalogue catalogue = read_catalogue(in, config.catalogue->string());
    const MatchReport report = match_complexes(sets, catalogue, config.match_threshold, executor);
    const auto sweep = threshold_sweep(sets, catalogue, executor);
    for (const auto& w : report.warnings) run.warn(w);
    if (as_json) {
      evaluation["complexes"] = to_json(report, rows);
      evaluation["complexes"].erase("warnings");
      evaluation["sweep"] = to_json(sweep);
    } else {
      run.write("complexes.tsv", render_matches(report));
      run.write("sweep.tsv", render_sweep(sweep));
      evaluation["matched"] = report.matched;
      evaluation["total"] = report.total;
      evaluation["sweep"] = to_json(sweep);
    }
    log << fmt::format("{} of {} communities matched at OS >= {}\n", report.matched,
                       report.total, config.match_threshold);
  }
  if (config.annotations) {
    auto in = open_named<std::ifstream>(*config.annotations, run, "annotations");
    const AnnotationSet annotations = read_annotations(in, config.annotations->string());
    const auto rows_e = enrich(sets, annotations, universe,
                               {.annotated_universe = config.annotated_universe}, executor);
    if (as_json) {
      evaluation["enrichment"] = to_json(rows_e, rows);
    } else {
      run.write("enrichment.tsv", render_enrichment(rows_e, rows));
    }
    const auto significant = std::count_if(rows_e.begin(), rows_e.end(),
                                           [](const auto& e) { return e.p_value < 0.01; });
    log << fmt::format("{} communities enriched at P < 0.01\n", significant);
  }
  run.timing("evaluate", start);
  run["evaluation"] = std::move(evaluation);
}

}  // namespace

void PipelineConfig::validate_paths() const {
  for (const auto* p : {&ppi, &ged, &mapping, &wppi, &communities, &catalogue, &annotations}) {
    if (*p && !fs::is_regular_file(**p)) {
      throw InputError(fmt::format("cannot open '{}'", (*p)->string()));
    }
  }
  if (!(match_threshold > 0.0 && match_threshold <= 1.0)) {
    throw InputError("match threshold must lie in (0, 1]");
  }
  if (default_weight && !(*default_weight >= 0.0 && *default_weight <= 1.0)) {
    throw InputError("default weight must lie in [0, 1]");
  }
  hub.validate();
}

json PipelineConfig::to_json() const {
  return {{"ppi", path_json(ppi)},
          {"ged", path_json(ged)},
          {"mapping", path_json(mapping)},
          {"wppi", path_json(wppi)},
          {"communities", path_json(communities)},
          {"catalogue", path_json(catalogue)},
          {"annotations", path_json(annotations)},
          {"d_alpha", hub.d_alpha ? json(*hub.d_alpha) : json("mean")},
          {"lambda", hub.lambda},
          {"max_stage1_sweeps", hub.max_stage1_sweeps},
          {"max_stage2_passes", hub.max_stage2_passes},
          {"default_weight", default_weight ? json(*default_weight) : json("mean_matched")},
          {"zero_as_unmatched", zero_as_unmatched},
          {"threads", threads ? json(*threads) : json(nullptr)},
          {"partitions", partitions},
          {"partition_strategy", std::string(ppicd::to_string(strategy))},
          {"match_threshold", match_threshold},
          {"annotated_universe", annotated_universe},
          {"no_intermediates", no_intermediates},
          {"output", output.string()},
          {"format", format == OutputFormat::kJson ? "json" : "tsv"},
          {"seed", seed}};
}

void cmd_build_wppi(const PipelineConfig& config, std::ostream& log) {
  config.validate_paths();
  const Executor executor(resolve_thread_count(config.threads));
  Run run(config, "build-wppi", executor);
  const WppiBuild build = build_from_files(config, executor, run, log);
  std::ostringstream out;
  write_wppi(out, build.network);
  run.write("wppi.tsv", out.str());
  run.finish();
}

void cmd_detect(const PipelineConfig& config, std::ostream& log) {
  config.validate_paths();
  const Executor executor(resolve_thread_count(config.threads));
  Run run(config, "detect", executor);
  const LabelledNetwork net = load_network(config, executor, run, log);
  detect_and_write(net, config, executor, run, log);
  run.finish();
}

void cmd_evaluate(const PipelineConfig& config, std::ostream& log) {
  config.validate_paths();
  if (!config.communities) throw InputError("--communities is required");
  const Executor executor(resolve_thread_count(config.threads));
  Run run(config, "evaluate", executor);
  auto in = open_named<std::ifstream>(*config.communities, run, "communities");
  const auto rows = read_communities(in, config.communities->string());
  evaluate_and_write(rows, config, executor, run, log);
  run.finish();
}

void cmd_pipeline(const PipelineConfig& config, std::ostream& log) {
  config.validate_paths();
  if (!config.wppi && !(config.ppi && config.ged)) {
    throw InputError("pipeline needs --ppi and --ged, or --wppi");
  }
  if (!config.catalogue && !config.annotations) {
    throw InputError("pipeline needs --catalogue and/or --annotations");
  }
  const auto start = Clock::now();
  const Executor executor(resolve_thread_count(config.threads));
  Run run(config, "pipeline", executor);
  LabelledNetwork net;
  if (config.wppi) {
    net = load_network(config, executor, run, log);
  } else {
    net = build_from_files(config, executor, run, log).network;
    if (!config.no_intermediates) {
      std::ostringstream out;
      write_wppi(out, net);
      run.write("wppi.tsv", out.str());
    }
  }
  const auto rows = detect_and_write(net, config, executor, run, log);
  evaluate_and_write(rows, config, executor, run, log);
  run.timing("total", start);
  run.finish();
}

void cmd_gen_synthetic(const PlantedConfig& planted, const fs::path& output,
                       std::ostream& log) {
  const PlantedGraph graph = generate_planted(planted);
  const ExpressionMatrix ged = generate_expression(graph, planted);
  const auto& labels = graph.network.labels;

  std::string ppi = "# protein_a\tprotein_b\n";
  for (const auto& e : graph.ppi.edges()) {
    ppi += fmt::format("{}\t{}\n", labels.label(e.first), labels.label(e.second));
  }
  write_atomic(output / "ppi.tsv", ppi);

  std::string ged_text = "gene_id";
  for (const auto& s : ged.samples()) ged_text += "\t" + s;
  ged_text += '\n';
  for (std::size_t g = 0; g < ged.num_genes(); ++g) {
    ged_text += ged.genes()[g];
    for (double x : ged.row(g)) ged_text += "\t" + tsv::format_fixed(x);
    ged_text += '\n';
  }
  write_atomic(output / "ged.tsv", ged_text);

  std::ostringstream wppi;
  write_wppi(wppi, graph.network);
  write_atomic(output / "wppi.tsv", wppi.str());

  std::string catalogue;
  const ComplexCatalogue complexes = planted_catalogue(graph);
  for (const auto& c : complexes.entries()) {
    catalogue += c.name + "\t";
    for (std::size_t i = 0; i < c.proteins.size(); ++i) {
      catalogue += (i ? "," : "") + c.proteins[i];
    }
    catalogue += '\n';
  }
  write_atomic(output / "catalogue.tsv", catalogue);

  std::string annotations = "protein_label\tterm_id\n";
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [term, proteins] : planted_annotations(graph, planted)) {
    for (const auto& p : proteins) pairs.emplace_back(p, term);
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [p, t] : pairs) annotations += p + "\t" + t + "\n";
  write_atomic(output / "annotations.tsv", annotations);

  std::string truth = "# block\tproteins\n";
  for (std::size_t b = 0; b < graph.blocks.size(); ++b) {
    truth += std::to_string(b);
    truth += '\t';
    for (std::size_t i = 0; i < graph.blocks[b].size(); ++i) {
      truth += (i ? "," : "") + labels.label(graph.blocks[b][i]);
    }
    truth += '\n';
  }
  write_atomic(output / "truth.tsv", truth);

  log << fmt::format("{} proteins, {} edges, {} blocks written to {}\n",
                     graph.network.graph.num_vertices(), graph.network.graph.num_edges(),
                     graph.blocks.size(), output.string());
}

}  // namespace ppicd::cli
