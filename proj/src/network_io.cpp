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

#include "ppicd/network_io.hpp"

#include <cmath>
#include <unordered_set>

#include "ppicd/tsv.hpp"

namespace ppicd {

PpiNetwork read_ppi(std::istream& in, const std::string& source) {
  tsv::LineReader reader(in, source);
  PpiNetwork network;
  while (auto line = reader.next_data()) {
    const auto fields = tsv::split(*line);
    if (fields.size() < 2) {
      reader.fail("expected protein_a<TAB>protein_b");
    }
    const auto a = tsv::trim(fields[0]);
    const auto b = tsv::trim(fields[1]);
    if (a.empty() || b.empty()) reader.fail("empty protein label");
    network.add_edge(a, b);
  }
  return network;
}

void write_wppi(std::ostream& out, const LabelledNetwork& network,
                WeightFormat format) {
  out << kWppiHeader << '\n';
  for (const auto& e : network.graph.edges()) {
    out << network.labels.label(e.u) << '\t' << network.labels.label(e.v)
        << '\t'
        << (format == WeightFormat::kFixed6 ? tsv::format_fixed(e.weight)
                                            : tsv::format_roundtrip(e.weight))
        << '\n';
  }
}

LabelledNetwork read_wppi(std::istream& in, const std::string& source) {
  tsv::LineReader reader(in, source);
  auto header = reader.next();
  if (!header || tsv::trim(*header) != kWppiHeader) {
    reader.fail("missing '# wppi v1' header");
  }
  LabelledNetwork result;
  std::vector<WeightedEdge> edges;
  std::unordered_set<std::uint64_t> seen;
  while (auto line = reader.next_data()) {
    const auto fields = tsv::split(*line);
    if (fields.size() != 3) {
      reader.fail("expected protein_a<TAB>protein_b<TAB>weight");
    }
    const auto w = tsv::parse_double(fields[2]);
    if (!w || !std::isfinite(*w) || *w < 0.0 || *w > 1.0) {
      reader.fail("weight must be a number in [0, 1]");
    }
    VertexId u = result.labels.intern(tsv::trim(fields[0]));
    VertexId v = result.labels.intern(tsv::trim(fields[1]));
    if (u == v) reader.fail("self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second) {
      reader.fail("duplicate edge");
    }
    edges.push_back({u, v, *w});
  }
  result.graph = WeightedNetwork(result.labels.size(), std::move(edges));
  return result;
}

}  // namespace ppicd
