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

#include "pitchdict/lexicon.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pitchdict/error.hpp"
#include "pitchdict/text.hpp"
#include "pitchdict/utf8.hpp"

namespace pitchdict {
namespace {

constexpr std::array<std::string_view, kNumPos> kPosNames = {
    "unk",    "noun",    "proper", "place",    "surname", "given", "numeral",
    "suffix", "counter", "prefix", "particle", "verb",    "adj",   "symbol"};
constexpr std::array<std::string_view, kNumGoshu> kGoshuNames = {
    "unk", "native", "sino", "western", "mixed", "proper", "symbol"};
constexpr std::array<std::string_view, kNumSandhi> kSandhiNames = {
    "none", "C1", "C2", "C3", "C4", "C5"};
constexpr std::array<std::string_view, kNumCharClasses> kCharClassNames = {
    "kanji", "hiragana", "katakana", "latin", "digit", "symbol"};

template <typename E, std::size_t N>
std::optional<E> lookup_name(const std::array<std::string_view, N>& names,
                             std::string_view name) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<E>(i);
  }
  return std::nullopt;
}

int parse_field_int(const std::string& field, const std::string& what,
                    const std::string& file, std::size_t lineno) {
  try {
    return text::parse_int(field);
  } catch (const std::invalid_argument&) {
    throw FormatError(file, lineno, what + " is not an integer: '" + field + "'");
  }
}

// Yomi and marked reading must describe the same morae.
void attach_reading(LexEntry& e, const std::string& yomi, const std::string& marked,
                    const std::string& file, std::size_t lineno) {
  AccentedReading r;
  try {
    e.yomi = parse_kana(yomi);
    r = parse_marked(marked);
  } catch (const NotationError& err) {
    throw FormatError(file, lineno, err.what());
  }
  if (e.yomi.empty()) throw FormatError(file, lineno, "empty yomi");
  if (r.morae.size() != e.yomi.size()) {
    throw FormatError(file, lineno,
                      "accent/yomi length mismatch: " + std::to_string(r.accent.size()) +
                          " accent labels for " + std::to_string(e.yomi.size()) + " morae");
  }
  for (std::size_t i = 0; i < e.yomi.size(); ++i) {
    if (!r.morae[i].same_sound(e.yomi[i])) {
      throw FormatError(file, lineno, "marked reading '" + marked + "' does not match yomi '" +
                                          yomi + "'");
    }
  }
  e.accent = std::move(r.accent);
}

void check_cost(const LexEntry& e, const std::string& file, std::size_t lineno) {
  if (e.cost < kMinCost || e.cost > kMaxCost) {
    throw FormatError(file, lineno, "cost out of range: " + std::to_string(e.cost));
  }
}

LexEntry parse_csv_row(std::string_view line, const std::string& file, std::size_t lineno) {
  std::vector<std::string> cols;
  try {
    cols = text::split_csv(line);
  } catch (const std::invalid_argument& err) {
    throw FormatError(file, lineno, err.what());
  }
  if (cols.size() != 7) {
    throw FormatError(file, lineno,
                      "expected 7 comma-separated columns, got " + std::to_string(cols.size()));
  }
  LexEntry e;
  e.surface = cols[0];
  if (e.surface.empty()) throw FormatError(file, lineno, "empty surface");
  e.left_id = parse_field_int(cols[1], "left_id", file, lineno);
  e.right_id = parse_field_int(cols[2], "right_id", file, lineno);
  e.cost = parse_field_int(cols[3], "cost", file, lineno);
  auto pos = parse_pos(cols[4]);
  if (!pos) throw FormatError(file, lineno, "unknown pos '" + cols[4] + "'");
  e.pos = *pos;
  attach_reading(e, cols[5], cols[6], file, lineno);
  check_cost(e, file, lineno);
  return e;
}

}  // namespace

std::string_view to_string(Pos p) { return kPosNames[static_cast<int>(p)]; }
std::string_view to_string(Goshu g) { return kGoshuNames[static_cast<int>(g)]; }
std::string_view to_string(Sandhi s) { return kSandhiNames[static_cast<int>(s)]; }
std::string_view to_string(CharClass c) { return kCharClassNames[static_cast<int>(c)]; }
std::optional<Pos> parse_pos(std::string_view name) { return lookup_name<Pos>(kPosNames, name); }
std::optional<Goshu> parse_goshu(std::string_view name) {
  return lookup_name<Goshu>(kGoshuNames, name);
}
std::optional<Sandhi> parse_sandhi(std::string_view name) {
  return lookup_name<Sandhi>(kSandhiNames, name);
}

CharClass char_class(char32_t cp) {
  if ((cp >= 0x3041 && cp <= 0x309F)) return CharClass::kHiragana;
  if ((cp >= 0x30A0 && cp <= 0x30FF) || (cp >= 0x31F0 && cp <= 0x31FF) ||
      (cp >= 0xFF66 && cp <= 0xFF9F)) {
    return CharClass::kKatakana;
  }
  if ((cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) ||
      (cp >= 0xF900 && cp <= 0xFAFF) || cp == 0x3005 || cp == 0x3006) {
    return CharClass::kKanji;
  }
  if ((cp >= U'0' && cp <= U'9') || (cp >= 0xFF10 && cp <= 0xFF19)) return CharClass::kDigit;
  if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z') ||
      (cp >= 0xFF21 && cp <= 0xFF3A) || (cp >= 0xFF41 && cp <= 0xFF5A) ||
      (cp >= 0xC0 && cp <= 0x24F && cp != 0xD7 && cp != 0xF7)) {
    return CharClass::kLatin;
  }
  return CharClass::kSymbol;
}

// ---------------------------------------------------------------------------
// ConnectionMatrix

ConnectionMatrix::ConnectionMatrix(int rights, int lefts, std::vector<int> costs)
    : rights_(rights), lefts_(lefts), costs_(std::move(costs)) {
  if (rights < 0 || lefts < 0) throw std::invalid_argument("negative matrix size");
  if (costs_.empty()) costs_.assign(static_cast<std::size_t>(rights) * lefts, 0);
  if (costs_.size() != static_cast<std::size_t>(rights) * lefts) {
    throw std::invalid_argument("matrix cost count does not match its shape");
  }
}

ConnectionMatrix ConnectionMatrix::load(const std::filesystem::path& path) {
  const std::string file = path.string();
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) throw IoError(file + ": file not found");
    throw IoError(file + ": cannot open file");
  }
  long long rights = -1, lefts = -1;
  if (!(in >> rights >> lefts) || rights < 0 || lefts < 0 || rights > 65536 || lefts > 65536) {
    throw FormatError(file, 1, "expected header 'R L'");
  }
  std::vector<int> costs(static_cast<std::size_t>(rights * lefts));
  for (auto& c : costs) {
    long long v;
    if (!(in >> v)) throw FormatError(file, 0, "fewer costs than R*L");
    if (v < kMinCost || v > kMaxCost) throw FormatError(file, 0, "connection cost out of range");
    c = static_cast<int>(v);
  }
  std::string extra;
  if (in >> extra) throw FormatError(file, 0, "more costs than R*L");
  return ConnectionMatrix(static_cast<int>(rights), static_cast<int>(lefts), std::move(costs));
}

void ConnectionMatrix::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw IoError(path.string() + ": cannot write file");
  out << rights_ << ' ' << lefts_ << '\n';
  for (int r = 0; r < rights_; ++r) {
    for (int l = 0; l < lefts_; ++l) {
      if (l) out << ' ';
      out << costs_[static_cast<std::size_t>(r) * lefts_ + l];
    }
    out << '\n';
  }
}

int ConnectionMatrix::cost(int right_id, int left_id) const {
  if (!contains(right_id, left_id)) {
    throw std::out_of_range("connection ids out of range: (" + std::to_string(right_id) + ", " +
                            std::to_string(left_id) + ")");
  }
  return costs_[static_cast<std::size_t>(right_id) * lefts_ + left_id];
}

void ConnectionMatrix::set(int right_id, int left_id, int cost) {
  if (!contains(right_id, left_id)) throw std::out_of_range("connection ids out of range");
  costs_[static_cast<std::size_t>(right_id) * lefts_ + left_id] = cost;
}

// ---------------------------------------------------------------------------
// Lexicon

LexEntry parse_lexicon_row(std::string_view line, const std::string& file, std::size_t lineno) {
  const auto cols = text::split(line, '\t');
  if (cols.size() != 9) {
    throw FormatError(file, lineno,
                      "expected 9 tab-separated columns, got " + std::to_string(cols.size()));
  }
  LexEntry e;
  e.surface = cols[0];
  if (e.surface.empty()) throw FormatError(file, lineno, "empty surface");
  try {
    utf8::decode(e.surface);
  } catch (const Error& err) {
    throw FormatError(file, lineno, err.what());
  }
  attach_reading(e, cols[1], cols[2], file, lineno);
  auto pos = parse_pos(cols[3]);
  if (!pos) throw FormatError(file, lineno, "unknown pos '" + cols[3] + "'");
  auto goshu = parse_goshu(cols[4]);
  if (!goshu) throw FormatError(file, lineno, "unknown goshu '" + cols[4] + "'");
  auto sandhi = parse_sandhi(cols[5]);
  if (!sandhi) throw FormatError(file, lineno, "unknown sandhi type '" + cols[5] + "'");
  e.pos = *pos;
  e.goshu = *goshu;
  e.sandhi = *sandhi;
  e.left_id = parse_field_int(cols[6], "left_id", file, lineno);
  e.right_id = parse_field_int(cols[7], "right_id", file, lineno);
  e.cost = parse_field_int(cols[8], "cost", file, lineno);
  check_cost(e, file, lineno);
  return e;
}

Lexicon::Lexicon(std::vector<LexEntry> entries, ConnectionMatrix matrix)
    : entries_(std::move(entries)), matrix_(std::move(matrix)) {
  if (matrix_.rights() == 0 && matrix_.lefts() == 0) {
    int max_right = kBoundaryId, max_left = kBoundaryId;
    for (const auto& e : entries_) {
      max_right = std::max(max_right, e.right_id);
      max_left = std::max(max_left, e.left_id);
    }
    matrix_ = ConnectionMatrix(max_right + 1, max_left + 1);
  }
  check_ids();
  build_index();
}

Lexicon Lexicon::load(const std::filesystem::path& path,
                      const std::optional<std::filesystem::path>& matrix) {
  const std::string file = path.string();
  const auto lines = text::read_lines(path);
  const bool csv = path.extension() == ".csv";
  std::vector<LexEntry> entries;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (text::trim(line).empty() || line[0] == '#') continue;
    entries.push_back(csv ? parse_csv_row(line, file, i + 1)
                          : parse_lexicon_row(line, file, i + 1));
  }
  ConnectionMatrix m;
  if (matrix) {
    m = ConnectionMatrix::load(*matrix);
  } else if (auto sibling = path.parent_path() / "matrix.def"; std::filesystem::exists(sibling)) {
    m = ConnectionMatrix::load(sibling);
  }
  try {
    return Lexicon(std::move(entries), std::move(m));
  } catch (const std::out_of_range& err) {
    throw FormatError(file, 0, err.what());
  }
}

void Lexicon::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string() + ": cannot write file");
  out << "# surface\tyomi\taccent\tpos\tgoshu\tsandhi\tleft_id\tright_id\tcost\n";
  for (const auto& e : entries_) {
    out << e.surface << '\t' << kana_of(e.yomi) << '\t' << render_marked(e.reading()) << '\t'
        << to_string(e.pos) << '\t' << to_string(e.goshu) << '\t' << to_string(e.sandhi) << '\t'
        << e.left_id << '\t' << e.right_id << '\t' << e.cost << '\n';
  }
}

void Lexicon::check_ids() const {
  for (const auto& e : entries_) {
    if (!matrix_.contains(e.right_id, e.left_id) || !matrix_.contains(e.left_id, e.right_id) ||
        !matrix_.contains(kBoundaryId, e.left_id) || !matrix_.contains(e.right_id, kBoundaryId)) {
      throw std::out_of_range("entry '" + e.surface + "' uses connection ids (" +
                              std::to_string(e.left_id) + ", " + std::to_string(e.right_id) +
                              ") outside the " + std::to_string(matrix_.rights()) + "x" +
                              std::to_string(matrix_.lefts()) + " matrix");
    }
  }
}

void Lexicon::build_index() {
  trie_.assign(1, TrieNode{});
  for (std::uint32_t idx = 0; idx < entries_.size(); ++idx) {
    std::uint32_t node = 0;
    for (char32_t cp : utf8::decode(entries_[idx].surface)) {
      auto& kids = trie_[node].children;
      auto it = std::lower_bound(kids.begin(), kids.end(), cp,
                                 [](const auto& p, char32_t c) { return p.first < c; });
      if (it != kids.end() && it->first == cp) {
        node = it->second;
      } else {
        const auto next = static_cast<std::uint32_t>(trie_.size());
        kids.insert(it, {cp, next});
        trie_.emplace_back();
        node = next;
      }
    }
    trie_[node].entries.push_back(idx);
  }
}

std::vector<LexMatch> Lexicon::prefix_lookup(std::u32string_view surface, std::size_t pos) const {
  if (pos >= surface.size()) {
    throw std::out_of_range("prefix_lookup position " + std::to_string(pos) +
                            " outside string of length " + std::to_string(surface.size()));
  }
  std::vector<LexMatch> out;
  std::uint32_t node = 0;
  for (std::size_t i = pos; i < surface.size(); ++i) {
    const auto& kids = trie_[node].children;
    auto it = std::lower_bound(kids.begin(), kids.end(), surface[i],
                               [](const auto& p, char32_t c) { return p.first < c; });
    if (it == kids.end() || it->first != surface[i]) break;
    node = it->second;
    for (std::uint32_t idx : trie_[node].entries) {
      out.push_back(LexMatch{entries_[idx], i - pos + 1, static_cast<int>(idx)});
    }
  }
  if (out.empty()) out.push_back(unknown_node(surface, pos));
  return out;
}

std::vector<LexMatch> Lexicon::prefix_lookup(std::string_view surface, std::size_t pos) const {
  return prefix_lookup(std::u32string_view(utf8::decode(surface)), pos);
}

LexMatch Lexicon::unknown_node(std::u32string_view surface, std::size_t pos) const {
  const CharClass cls = char_class(surface[pos]);
  const UnknownTemplate& tpl = unknown_template(cls);
  std::size_t end = pos + 1;
  if (tpl.group) {
    while (end < surface.size() && char_class(surface[end]) == cls) ++end;
  }
  const std::u32string_view run = surface.substr(pos, end - pos);
  LexEntry e;
  e.surface = utf8::encode(run);
  e.pos = Pos::kUnknown;
  e.goshu = Goshu::kUnknown;
  e.sandhi = Sandhi::kNone;
  e.left_id = tpl.left_id;
  e.right_id = tpl.right_id;
  e.cost = tpl.cost;
  e.unknown = true;
  if (cls == CharClass::kHiragana || cls == CharClass::kKatakana) {
    try {
      e.yomi = parse_kana(e.surface);
    } catch (const NotationError&) {
      e.yomi.clear();
    }
  }
  if (e.yomi.empty()) {
    Mora placeholder;
    placeholder.kana_text = "・";
    placeholder.special = Special::kPause;
    e.yomi.assign(run.size(), placeholder);
  }
  e.accent.assign(e.yomi.size(), Accent::kNone);
  return LexMatch{std::move(e), run.size(), -1};
}

}  // namespace pitchdict
