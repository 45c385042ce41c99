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
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pitchdict/metrics.hpp"
#include "pitchdict/mora.hpp"
#include "pitchdict/text.hpp"

namespace pitchdict::testing {

inline std::filesystem::path data_path(const std::string& rel) {
  return std::filesystem::path(PITCHDICT_DATA_DIR) / rel;
}

// Fresh scratch directory under the build tree.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::path(PITCHDICT_BINARY_DIR) / "scratch" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline AccentVector av(std::initializer_list<int> v) {
  AccentVector out;
  for (int x : v) out.push_back(static_cast<Accent>(x));
  return out;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Rows of "predicted<TAB>gold<TAB>category" in accent-mark notation.
inline std::vector<EvalPair> read_eval_pairs(const std::filesystem::path& p) {
  std::vector<EvalPair> out;
  for (const auto& line : text::read_lines(p)) {
    if (line.empty() || line[0] == '#') continue;
    const auto cols = text::split(line, '\t');
    out.push_back(EvalPair{parse_marked(cols.at(0)).accent, parse_marked(cols.at(1)).accent,
                           cols.size() > 2 ? cols[2] : ""});
  }
  return out;
}

}  // namespace pitchdict::testing
