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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pitchdict/features.hpp"
#include "pitchdict/lexicon.hpp"
#include "pitchdict/model.hpp"

namespace pitchdict {

enum class Category : std::uint8_t {
  kEmojiSymbol,
  kCompanyKK,
  kCompanyYK,
  kStation,
  kRoad,
  kSchool,
  kAddress,
  kPersonKatakana,
  kPersonKanjiKana,
  kPersonOther,
  kNumeral,
  kDate,
  kNumeralLike,
  kKatakanaWords,
  kRomajiSymbols,
  kKanjiKana,
  kKanjiKanaRomaji,
  kOther,
  kIgnored,
};
inline constexpr int kNumCategories = static_cast<int>(Category::kIgnored) + 1;

std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view name);

struct ClassifyOptions {
  // Flag katakana spellings of short native or Sino-Japanese words as noise.
  bool detect_ignored = false;
};

// First match over an ordered list of patterns; kOther when nothing matches.
// Total on valid UTF-8; invalid UTF-8 is kOther.
Category classify_category(std::string_view surface, const MoraSeq& yomi,
                           const ClassifyOptions& opt = {});

struct CostConfig {
  int base_cost = 5000;
  std::map<Category, int> offsets;  // missing categories add 0
};

// base_cost + offset, clamped to [kMinCost, kMaxCost].
int adjust_cost(int base_cost, Category cat, const CostConfig& cfg);

struct DictConfig {
  CostConfig cost;
  ClassifyOptions classify;
  SelectionConfig selection;
  int fallback_id = 1;  // connection id used when the last entry is an unknown node
  Pos fallback_pos = Pos::kNoun;
};

struct DictRow {
  std::string surface;
  int left_id = 0;
  int right_id = 0;
  int cost = 0;
  Pos pos = Pos::kNoun;
  MoraSeq yomi;
  AccentVector accent;
  Category category = Category::kOther;

  std::string to_csv() const;
};

struct SkippedRow {
  std::size_t line = 0;  // 1-based
  std::string text;
  std::string reason;
};

struct DictResult {
  std::vector<DictRow> rows;
  std::vector<SkippedRow> skipped;
  std::size_t input_rows = 0;
};

// Word list rows are "surface TAB yomi"; '#' lines and blank lines are
// ignored. Rows that cannot be read are skipped with a reason. Output rows
// keep the input order.
DictResult build_dictionary(const std::vector<std::string>& lines, const Network<float>& net,
                            const Lexicon& lex, const DictConfig& cfg);
DictResult build_dictionary(const std::filesystem::path& wordlist, const Network<float>& net,
                            const Lexicon& lex, const DictConfig& cfg);

// Writes the CSV rows. Throws IoError when the file cannot be written.
void write_dictionary(const DictResult& result, const std::filesystem::path& out);

}  // namespace pitchdict
