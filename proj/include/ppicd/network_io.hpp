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
#include <ostream>
#include <string>

#include "ppicd/label_index.hpp"
#include "ppicd/ppi_network.hpp"
#include "ppicd/weighted_network.hpp"

namespace ppicd {

// A weighted graph together with the protein labels of its vertices.
struct LabelledNetwork {
  LabelIndex labels;
  WeightedNetwork graph;
};

// Header line of the weighted interaction file.
inline constexpr std::string_view kWppiHeader = "# wppi v1";

// Reads "protein_a<TAB>protein_b[<TAB>ignored...]" lines. Blank lines and
// lines starting with '#' are skipped; duplicates and self-loops are dropped
// and counted on the returned network.
PpiNetwork read_ppi(std::istream& in, const std::string& source);

enum class WeightFormat {
  kFixed6,     // six decimals, the interchange format
  kRoundTrip,  // shortest exact representation
};

void write_wppi(std::ostream& out, const LabelledNetwork& network,
                WeightFormat format = WeightFormat::kFixed6);

LabelledNetwork read_wppi(std::istream& in, const std::string& source);

}  // namespace ppicd
