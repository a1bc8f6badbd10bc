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
#include <limits>
#include <stdexcept>
#include <string>

namespace ppicd {

// Dense vertex index in [0, N).
using VertexId = std::uint32_t;
using CommunityId = std::uint32_t;

inline constexpr CommunityId kUnassigned =
    std::numeric_limits<CommunityId>::max();

// Computation failure (exit code 1 at the CLI).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or bad arguments (exit code 2 at the CLI).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace ppicd
