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

#include "pitchdict/mora.hpp"

#include <array>
#include <map>
#include <sstream>

#include "pitchdict/error.hpp"
#include "pitchdict/utf8.hpp"

namespace pitchdict {
namespace detail {
extern const std::string_view kKanaTableData;
}  // namespace detail

namespace {

constexpr std::array<std::string_view, kNumConsonants> kConsonantNames = {
    "none", "k",  "g",  "s",  "z",  "sh", "j",  "t",  "d",  "ch", "ts", "n",
    "h",    "b",  "p",  "f",  "m",  "y",  "r",  "w",  "v",  "ky", "gy", "ny",
    "hy",   "by", "py", "my", "ry", "ty", "dy", "fy", "kw", "gw"};
constexpr std::array<std::string_view, kNumVowels> kVowelNames = {
    "none", "a", "i", "u", "e", "o"};
constexpr std::array<std::string_view, kNumSpecials> kSpecialNames = {
    "plain", "N", "Q", "long", "pause"};

struct TableEntry {
  Consonant consonant;
  Vowel vowel;
  Special special;
};

class KanaTable {
 public:
  KanaTable() {
    std::istringstream in{std::string(detail::kKanaTableData)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      if (line[0] == '#') {
        if (version_.empty()) version_ = line.substr(2);
        continue;
      }
      std::array<std::string, 4> cols;
      std::istringstream fields(line);
      for (auto& col : cols) {
        if (!std::getline(fields, col, '\t')) {
          throw FormatError("kana_table.tsv", lineno, "expected 4 columns");
        }
      }
      auto c = parse_consonant(cols[1]);
      auto v = parse_vowel(cols[2]);
      auto s = parse_special(cols[3]);
      if (!c || !v || !s) {
        throw FormatError("kana_table.tsv", lineno, "unknown phoneme name");
      }
      const std::u32string key = utf8::decode(cols[0]);
      if (key.empty() || key.size() > 2) {
        throw FormatError("kana_table.tsv", lineno, "kana must be 1 or 2 characters");
      }
      entries_.emplace(key, TableEntry{*c, *v, *s});
    }
  }

  const TableEntry* find(std::u32string_view key) const {
    auto it = entries_.find(std::u32string(key));
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::string_view version() const { return version_; }

 private:
  std::map<std::u32string, TableEntry> entries_;
  std::string version_;
};

const KanaTable& table() {
  static const KanaTable t;
  return t;
}

char32_t fold_katakana(char32_t cp) {
  if (cp >= 0x30A1 && cp <= 0x30F6) return cp - 0x60;
  return cp;
}

// Appends the morae of text[begin, end) to `out`. Positions in errors are
// absolute indices into `text`.
void parse_kana_run(std::u32string_view text, std::size_t begin, std::size_t end,
                    MoraSeq& out) {
  const KanaTable& kana = table();
  std::size_t i = begin;
  while (i < end) {
    const TableEntry* hit = nullptr;
    std::size_t len = 0;
    if (i + 1 < end) {
      const char32_t pair[2] = {fold_katakana(text[i]), fold_katakana(text[i + 1])};
      hit = kana.find(std::u32string_view(pair, 2));
      if (hit) len = 2;
    }
    if (!hit) {
      const char32_t single = fold_katakana(text[i]);
      hit = kana.find(std::u32string_view(&single, 1));
      if (hit) len = 1;
    }
    if (!hit) {
      throw NotationError("not a kana character '" + utf8::encode(text[i]) + "'", i);
    }
    Mora m;
    m.kana_text = utf8::encode(text.substr(i, len));
    m.consonant = hit->consonant;
    m.vowel = hit->vowel;
    m.special = hit->special;
    if (m.special == Special::kLongVowel) {
      Vowel prev = Vowel::kNone;
      for (auto it = out.rbegin(); it != out.rend(); ++it) {
        if (it->vowel != Vowel::kNone) {
          prev = it->vowel;
          break;
        }
      }
      if (prev == Vowel::kNone) {
        throw NotationError("long-vowel mark without a preceding vowel", i);
      }
      m.vowel = prev;
    }
    out.push_back(std::move(m));
    i += len;
  }
}

template <typename E, std::size_t N>
std::optional<E> lookup_name(const std::array<std::string_view, N>& names,
                             std::string_view name) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<E>(i);
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Consonant c) { return kConsonantNames[static_cast<int>(c)]; }
std::string_view to_string(Vowel v) { return kVowelNames[static_cast<int>(v)]; }
std::string_view to_string(Special s) { return kSpecialNames[static_cast<int>(s)]; }

std::optional<Consonant> parse_consonant(std::string_view name) {
  return lookup_name<Consonant>(kConsonantNames, name);
}
std::optional<Vowel> parse_vowel(std::string_view name) {
  return lookup_name<Vowel>(kVowelNames, name);
}
std::optional<Special> parse_special(std::string_view name) {
  return lookup_name<Special>(kSpecialNames, name);
}

std::string Mora::romaji() const {
  switch (special) {
    case Special::kMoraicNasal:
      return "N";
    case Special::kGeminate:
      return "Q";
    case Special::kPause:
      return "_";
    case Special::kLongVowel:
      return std::string(to_string(vowel));
    case Special::kPlain:
      break;
  }
  std::string out;
  if (consonant != Consonant::kNone) out += to_string(consonant);
  out += to_string(vowel);
  return out;
}

bool Mora::same_sound(const Mora& other) const {
  auto norm = [](Special s) { return s == Special::kLongVowel ? Special::kPlain : s; };
  return consonant == other.consonant && vowel == other.vowel &&
         norm(special) == norm(other.special);
}

MoraSeq parse_kana(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  MoraSeq out;
  parse_kana_run(cps, 0, cps.size(), out);
  return out;
}

std::string kana_of(const MoraSeq& morae) {
  std::string out;
  for (const auto& m : morae) out += m.kana_text;
  return out;
}

std::string romaji_of(const MoraSeq& morae) {
  std::string out;
  for (const auto& m : morae) {
    if (!out.empty()) out += ' ';
    out += m.romaji();
  }
  return out;
}

AccentedReading parse_marked(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  AccentedReading r;
  std::size_t run_begin = 0;
  std::vector<std::size_t> mark_pos;  // position of the mark set on each mora
  for (std::size_t i = 0; i <= cps.size(); ++i) {
    const bool at_end = i == cps.size();
    if (!at_end && cps[i] != U'[' && cps[i] != U']') continue;
    parse_kana_run(cps, run_begin, i, r.morae);
    r.accent.resize(r.morae.size(), Accent::kNone);
    mark_pos.resize(r.morae.size(), 0);
    run_begin = i + 1;
    if (at_end) break;
    if (r.morae.empty()) {
      throw NotationError("accent mark before the first mora", i);
    }
    if (r.accent.back() != Accent::kNone) {
      throw NotationError("two accent marks at one mora boundary", i);
    }
    r.accent.back() = cps[i] == U'[' ? Accent::kRaise : Accent::kLower;
    mark_pos.back() = i;
  }
  if (auto bad = validate_accent(r.accent)) {
    throw NotationError(bad->message, mark_pos[bad->index]);
  }
  return r;
}

std::string render_marked(const AccentedReading& reading) {
  std::string out;
  for (std::size_t i = 0; i < reading.morae.size(); ++i) {
    out += reading.morae[i].kana_text;
    if (i < reading.accent.size()) {
      if (reading.accent[i] == Accent::kRaise) out += '[';
      if (reading.accent[i] == Accent::kLower) out += ']';
    }
  }
  return out;
}

std::optional<AccentViolation> validate_accent(const AccentVector& accent) {
  Accent last = Accent::kNone;
  for (std::size_t i = 0; i < accent.size(); ++i) {
    const Accent a = accent[i];
    if (a == Accent::kNone) continue;
    if (a == last) {
      return AccentViolation{i, a == Accent::kRaise
                                    ? "raise without a lower since the previous raise"
                                    : "lower without a raise since the previous lower"};
    }
    last = a;
  }
  return std::nullopt;
}

AccentVector repair_accent(const AccentVector& raw) {
  AccentVector out(raw.size(), Accent::kNone);
  Accent last = Accent::kNone;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == Accent::kNone || raw[i] == last) continue;
    out[i] = raw[i];
    last = raw[i];
  }
  return out;
}

std::string accent_to_string(const AccentVector& accent) {
  std::string out;
  for (Accent a : accent) {
    if (!out.empty()) out += ' ';
    out += a == Accent::kRaise ? "+1" : a == Accent::kLower ? "-1" : "0";
  }
  return out;
}

std::string_view kana_table_version() { return table().version(); }

}  // namespace pitchdict
