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
#include <string>
#include <string_view>
#include <vector>

#include "ppicd/types.hpp"

namespace ppicd::tsv {

// Line reader that tracks "<source>:<line>" for error messages and strips a
// trailing carriage return.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  // Next raw line, or nullopt at end of input.
  std::optional<std::string_view> next();
  // Next line that is neither blank nor a '#' comment.
  std::optional<std::string_view> next_data();

  std::size_t line_number() const { return line_; }
  std::string where() const;
  [[noreturn]] void fail(std::string_view message) const;

 private:
  std::istream& in_;
  std::string source_;
  std::string buffer_;
  std::size_t line_ = 0;
};

std::vector<std::string_view> split(std::string_view line, char sep = '\t');
std::string_view trim(std::string_view s);

// Strict decimal parse of the whole field; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view field);

// Shortest text that parses back to the identical double.
std::string format_roundtrip(double value);
// Fixed-point with `decimals` places.
std::string format_fixed(double value, int decimals = 6);

}  // namespace ppicd::tsv
