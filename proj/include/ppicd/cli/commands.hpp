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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include <json.hpp>

#include "ppicd/cli/synthetic.hpp"
#include "ppicd/detector.hpp"
#include "ppicd/engine.hpp"

namespace ppicd::cli {

namespace fs = std::filesystem;

enum class OutputFormat { kTsv, kJson };

struct PipelineConfig {
  std::optional<fs::path> ppi;
  std::optional<fs::path> ged;
  std::optional<fs::path> mapping;
  std::optional<fs::path> wppi;
  std::optional<fs::path> communities;
  std::optional<fs::path> catalogue;
  std::optional<fs::path> annotations;

  HubConfig hub;
  std::optional<double> default_weight;
  bool zero_as_unmatched = false;
  std::optional<std::size_t> threads;
  std::size_t partitions = 0;
  PartitionStrategy strategy = PartitionStrategy::kRange;
  double match_threshold = 0.10;
  bool annotated_universe = false;
  bool no_intermediates = false;

  fs::path output = ".";
  OutputFormat format = OutputFormat::kTsv;
  std::uint64_t seed = 1;

  // Throws InputError when a given input path is not a readable file.
  void validate_paths() const;
  nlohmann::json to_json() const;
};

// Each command writes into config.output and prints a short summary to `log`.
// Errors surface as InputError (bad usage or input) or Error.
void cmd_build_wppi(const PipelineConfig& config, std::ostream& log);
void cmd_detect(const PipelineConfig& config, std::ostream& log);
void cmd_evaluate(const PipelineConfig& config, std::ostream& log);
void cmd_pipeline(const PipelineConfig& config, std::ostream& log);

// Writes ppi.tsv, ged.tsv, wppi.tsv, catalogue.tsv, annotations.tsv and
// truth.tsv for a planted partition.
void cmd_gen_synthetic(const PlantedConfig& planted, const fs::path& output,
                       std::ostream& log);

}  // namespace ppicd::cli
