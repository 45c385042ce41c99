// Copyright 2026 The pitchdict Authors.
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
#include <string>
#include <string_view>
#include <vector>

namespace pitchdict::text {

std::vector<std::string> split(std::string_view line, char sep);

// Comma-separated fields with double-quote escaping, as in MeCab CSVs.
std::vector<std::string> split_csv(std::string_view line);
std::string quote_csv(std::string_view field);

std::string_view trim(std::string_view s);

// Parses a whole base-10 integer; throws std::invalid_argument otherwise.
int parse_int(std::string_view s);
double parse_double(std::string_view s);

// Reads a text file into lines (without trailing '\r'). Throws IoError when
// the file cannot be opened.
std::vector<std::string> read_lines(const std::filesystem::path& path);

}  // namespace pitchdict::text
