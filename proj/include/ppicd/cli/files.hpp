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

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

namespace ppicd::cli {

namespace fs = std::filesystem;

// Throws InputError naming the path when it cannot be opened.
std::ifstream open_input(const fs::path& path);

// Writes `content` to a temporary sibling of `path` and renames it into
// place, so readers never see a partial file.
void write_atomic(const fs::path& path, std::string_view content);

// Lower-case hex SHA-256 of the file contents.
std::string sha256_file(const fs::path& path);

}  // namespace ppicd::cli
