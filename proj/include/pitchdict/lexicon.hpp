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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pitchdict/mora.hpp"

namespace pitchdict {

enum class Pos : std::uint8_t {
  kUnknown, kNoun, kProperNoun, kPlaceName, kSurname, kGivenName, kNumeral,
  kSuffix, kCounter, kPrefix, kParticle, kVerb, kAdjective, kSymbol,
};
inline constexpr int kNumPos = static_cast<int>(Pos::kSymbol) + 1;

enum class Goshu : std::uint8_t {
  kUnknown, kNative, kSino, kWestern, kMixed, kProper, kSymbol,
};
inline constexpr int kNumGoshu = static_cast<int>(Goshu::kSymbol) + 1;

// Accent sandhi class: how the word places the nucleus when it is the rear
// part of a compound.
enum class Sandhi : std::uint8_t { kNone, kC1, kC2, kC3, kC4, kC5 };
inline constexpr int kNumSandhi = 6;

std::string_view to_string(Pos p);
std::string_view to_string(Goshu g);
std::string_view to_string(Sandhi s);
std::optional<Pos> parse_pos(std::string_view name);
std::optional<Goshu> parse_goshu(std::string_view name);
std::optional<Sandhi> parse_sandhi(std::string_view name);

inline constexpr int kMinCost = -32768;
inline constexpr int kMaxCost = 32767;

// Connection-context id used by the sentence boundary nodes.
inline constexpr int kBoundaryId = 0;

struct LexEntry {
  std::string surface;
  MoraSeq yomi;
  AccentVector accent;  // of the word in isolation; |accent| == |yomi|
  Pos pos = Pos::kUnknown;
  Goshu goshu = Goshu::kUnknown;
  Sandhi sandhi = Sandhi::kNone;
  int left_id = kBoundaryId;
  int right_id = kBoundaryId;
  int cost = 0;
  bool unknown = false;  // synthesized from an unknown-word template

  AccentedReading reading() const { return {yomi, accent}; }
  friend bool operator==(const LexEntry&, const LexEntry&) = default;
};

// Dense bigram cost table indexed by (right id of the left word, left id of
// the right word).
class ConnectionMatrix {
 public:
  ConnectionMatrix() = default;
  ConnectionMatrix(int rights, int lefts, std::vector<int> costs = {});

  // Text format: "R L" on the first line, then R*L integers row-major.
  static ConnectionMatrix load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  int rights() const { return rights_; }
  int lefts() const { return lefts_; }
  bool contains(int right_id, int left_id) const {
    return right_id >= 0 && right_id < rights_ && left_id >= 0 && left_id < lefts_;
  }
  // Throws std::out_of_range for unknown ids.
  int cost(int right_id, int left_id) const;
  void set(int right_id, int left_id, int cost);

 private:
  int rights_ = 0;
  int lefts_ = 0;
  std::vector<int> costs_;
};

enum class CharClass : std::uint8_t {
  kKanji, kHiragana, kKatakana, kLatin, kDigit, kSymbol,
};
inline constexpr int kNumCharClasses = 6;
CharClass char_class(char32_t cp);
std::string_view to_string(CharClass c);

// How an out-of-vocabulary character run becomes a lattice node.
struct UnknownTemplate {
  int left_id = kBoundaryId;
  int right_id = kBoundaryId;
  int cost = 10000;
  bool group = true;  // one node for the whole run instead of one per char
};

struct LexMatch {
  LexEntry entry;
  std::size_t span = 0;  // in code points
  int index = -1;        // entry index in the lexicon, -1 for unknown nodes
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<LexEntry> entries, ConnectionMatrix matrix = {});

  // Reads a TSV lexicon (or the comma-separated rows written by the
  // dictionary builder when the extension is .csv). Without an explicit
  // matrix, "matrix.def" next to the lexicon is used when present;
  // otherwise an all-zero matrix large enough for every referenced id.
  static Lexicon load(const std::filesystem::path& path,
                      const std::optional<std::filesystem::path>& matrix = std::nullopt);

  // Writes the TSV schema read by load().
  void save(const std::filesystem::path& path) const;

  const std::vector<LexEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const ConnectionMatrix& matrix() const { return matrix_; }

  // Entries whose surface is a prefix of surface[pos..]. When none exists,
  // a single unknown-word node built from the character class at pos.
  // Throws std::out_of_range unless pos < surface.size().
  std::vector<LexMatch> prefix_lookup(std::u32string_view surface, std::size_t pos) const;
  std::vector<LexMatch> prefix_lookup(std::string_view surface, std::size_t pos) const;

  int connection_cost(int right_id, int left_id) const {
    return matrix_.cost(right_id, left_id);
  }

  UnknownTemplate& unknown_template(CharClass c) {
    return unknown_[static_cast<int>(c)];
  }
  const UnknownTemplate& unknown_template(CharClass c) const {
    return unknown_[static_cast<int>(c)];
  }

  // Builds the node for an out-of-vocabulary run starting at pos.
  LexMatch unknown_node(std::u32string_view surface, std::size_t pos) const;

 private:
  struct TrieNode {
    std::vector<std::pair<char32_t, std::uint32_t>> children;  // sorted
    std::vector<std::uint32_t> entries;
  };

  void build_index();
  void check_ids() const;

  std::vector<LexEntry> entries_;
  ConnectionMatrix matrix_;
  std::vector<TrieNode> trie_;
  UnknownTemplate unknown_[kNumCharClasses] = {
      {kBoundaryId, kBoundaryId, 12000, true},  // kanji
      {kBoundaryId, kBoundaryId, 10000, true},  // hiragana
      {kBoundaryId, kBoundaryId, 8000, true},   // katakana
      {kBoundaryId, kBoundaryId, 8000, true},   // latin
      {kBoundaryId, kBoundaryId, 6000, true},   // digit
      {kBoundaryId, kBoundaryId, 8000, false},  // symbol
  };
};

// Parses one lexicon TSV row (9 columns). Exposed for the dataset readers.
LexEntry parse_lexicon_row(std::string_view line, const std::string& file, std::size_t lineno);

}  // namespace pitchdict
