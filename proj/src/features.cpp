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

#include "pitchdict/features.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pitchdict/utf8.hpp"

namespace pitchdict {
namespace {

constexpr const char* kDigitKanji[] = {"〇", "一", "二", "三", "四", "五", "六", "七", "八", "九"};
constexpr const char* kGroupUnits[] = {"", "万", "億", "兆", "京"};
constexpr std::size_t kMaxPositionalDigits = 20;

int digit_value(char32_t cp) {
  if (cp >= U'0' && cp <= U'9') return static_cast<int>(cp - U'0');
  if (cp >= 0xFF10 && cp <= 0xFF19) return static_cast<int>(cp - 0xFF10);
  return -1;
}

bool is_decimal_point(char32_t cp) { return cp == U'.' || cp == 0xFF0E; }

// Reading of 0..9999 with the usual omission of 一 before 十, 百 and 千.
std::string read_group(int value) {
  static constexpr const char* kUnits[] = {"千", "百", "十", ""};
  static constexpr int kScale[] = {1000, 100, 10, 1};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const int d = value / kScale[i] % 10;
    if (d == 0) continue;
    if (d != 1 || i == 3) out += kDigitKanji[d];
    out += kUnits[i];
  }
  return out;
}

std::string read_integer(const std::vector<int>& digits) {
  const bool positional = digits.size() <= kMaxPositionalDigits &&
                          !(digits.size() > 1 && digits.front() == 0);
  std::string out;
  if (!positional) {
    for (int d : digits) out += kDigitKanji[d];
    return out;
  }
  const std::size_t groups = (digits.size() + 3) / 4;
  for (std::size_t g = 0; g < groups; ++g) {
    // Group g counted from the most significant side.
    const std::size_t unit = groups - 1 - g;
    const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(digits.size()) -
                              static_cast<std::ptrdiff_t>((unit + 1) * 4);
    int value = 0;
    for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(hi, 0); i < hi + 4; ++i) {
      value = value * 10 + digits[static_cast<std::size_t>(i)];
    }
    if (value == 0) continue;
    out += read_group(value);
    out += kGroupUnits[unit];
  }
  if (out.empty()) out = kDigitKanji[0];
  return out;
}

}  // namespace

std::string normalize_numerals(std::string_view surface) {
  const std::u32string cps = utf8::decode(surface);
  std::string out;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (digit_value(cps[i]) < 0) {
      out += utf8::encode(cps[i]);
      ++i;
      continue;
    }
    std::vector<int> digits;
    while (i < cps.size() && digit_value(cps[i]) >= 0) digits.push_back(digit_value(cps[i++]));
    out += read_integer(digits);
    if (i + 1 < cps.size() && is_decimal_point(cps[i]) && digit_value(cps[i + 1]) >= 0) {
      out += "点";
      ++i;
      while (i < cps.size() && digit_value(cps[i]) >= 0) out += kDigitKanji[digit_value(cps[i++])];
    }
  }
  return out;
}

std::size_t levenshtein(const MoraSeq& a, const MoraSeq& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t sub = diag + (a[i - 1].same_sound(b[j - 1]) ? 0 : 1);
      row[j] = std::min({sub, up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row[b.size()];
}

void SelectionConfig::validate() const {
  if (r_max < 1) throw std::invalid_argument("r_max must be positive");
  if (m_train < 1 || m_train > r_max) throw std::invalid_argument("m_train must be in [1, r_max]");
  if (m_infer < 1 || m_infer > r_max) throw std::invalid_argument("m_infer must be in [1, r_max]");
}

std::vector<Candidate> rank_candidates(std::string_view surface, const MoraSeq& yomi,
                                       const Lexicon& lex, const SelectionConfig& cfg) {
  cfg.validate();
  const Lattice lattice(normalize_numerals(surface), lex);
  std::vector<Candidate> out;
  for (auto& seg : nbest(lattice, static_cast<std::size_t>(cfg.r_max))) {
    const std::size_t d = levenshtein(seg.yomi(), yomi);
    out.push_back(Candidate{std::move(seg), d});
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.segmentation.total_cost != b.segmentation.total_cost) {
      return a.segmentation.total_cost < b.segmentation.total_cost;
    }
    return a.segmentation.rank < b.segmentation.rank;
  });
  return out;
}

Segmentation select_candidates(std::string_view surface, const MoraSeq& yomi,
                               const Lexicon& lex, const SelectionConfig& cfg, Mode mode,
                               Rng& rng) {
  auto ranked = rank_candidates(surface, yomi, lex, cfg);
  const std::size_t m = std::min<std::size_t>(
      ranked.size(), static_cast<std::size_t>(mode == Mode::kTrain ? cfg.m_train : cfg.m_infer));
  const std::size_t pick = mode == Mode::kTrain ? rng.below(m) : 0;
  return std::move(ranked[pick].segmentation);
}

int consonant_feature(const Mora& m) {
  switch (m.special) {
    case Special::kMoraicNasal:
      return kNumConsonants;
    case Special::kGeminate:
      return kNumConsonants + 1;
    case Special::kLongVowel:
      return kNumConsonants + 2;
    case Special::kPause:
      return kNumConsonants + 3;
    case Special::kPlain:
      break;
  }
  return static_cast<int>(m.consonant);
}

FeaturePair featurize(const Segmentation& seg, const MoraSeq& yomi) {
  FeaturePair fp;
  for (const auto& e : seg.entries) {
    for (std::size_t i = 0; i < e.yomi.size(); ++i) {
      SurfaceFeature f;
      f.consonant = static_cast<std::uint8_t>(consonant_feature(e.yomi[i]));
      f.vowel = static_cast<std::uint8_t>(e.yomi[i].vowel);
      f.pos = static_cast<std::uint8_t>(e.unknown ? Pos::kUnknown : e.pos);
      f.goshu = static_cast<std::uint8_t>(e.unknown ? Goshu::kUnknown : e.goshu);
      f.accent = static_cast<std::uint8_t>(static_cast<int>(e.accent[i]) + 1);
      f.sandhi = static_cast<std::uint8_t>(e.unknown ? kSandhiUnk : static_cast<int>(e.sandhi));
      fp.surface_side.push_back(f);
    }
  }
  for (const auto& m : yomi) {
    fp.yomi_side.push_back(YomiFeature{static_cast<std::uint8_t>(consonant_feature(m)),
                                       static_cast<std::uint8_t>(m.vowel)});
  }
  return fp;
}

std::string features_to_tsv(const FeaturePair& fp) {
  std::ostringstream out;
  out << "side\tindex\tconsonant\tvowel\tpos\tgoshu\taccent\tsandhi\n";
  for (std::size_t i = 0; i < fp.surface_side.size(); ++i) {
    const auto& f = fp.surface_side[i];
    out << "surface\t" << i << '\t' << int(f.consonant) << '\t' << int(f.vowel) << '\t'
        << int(f.pos) << '\t' << int(f.goshu) << '\t' << int(f.accent) - 1 << '\t'
        << int(f.sandhi) << '\n';
  }
  for (std::size_t i = 0; i < fp.yomi_side.size(); ++i) {
    const auto& f = fp.yomi_side[i];
    out << "yomi\t" << i << '\t' << int(f.consonant) << '\t' << int(f.vowel)
        << "\t-\t-\t-\t-\n";
  }
  return out.str();
}

}  // namespace pitchdict
