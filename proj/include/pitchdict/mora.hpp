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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pitchdict {

enum class Consonant : std::uint8_t {
  kNone, kK, kG, kS, kZ, kSh, kJ, kT, kD, kCh, kTs, kN, kH, kB, kP, kF, kM,
  kY, kR, kW, kV, kKy, kGy, kNy, kHy, kBy, kPy, kMy, kRy, kTy, kDy, kFy,
  kKw, kGw,
};
inline constexpr int kNumConsonants = static_cast<int>(Consonant::kGw) + 1;

enum class Vowel : std::uint8_t { kNone, kA, kI, kU, kE, kO };
inline constexpr int kNumVowels = 6;

enum class Special : std::uint8_t {
  kPlain,
  kMoraicNasal,  // ん
  kGeminate,     // っ
  kLongVowel,    // ー, repeats the previous vowel
  kPause,
};
inline constexpr int kNumSpecials = 5;

std::string_view to_string(Consonant c);
std::string_view to_string(Vowel v);
std::string_view to_string(Special s);
std::optional<Consonant> parse_consonant(std::string_view name);
std::optional<Vowel> parse_vowel(std::string_view name);
std::optional<Special> parse_special(std::string_view name);

struct Mora {
  std::string kana_text;  // exactly as written in the input
  Consonant consonant = Consonant::kNone;
  Vowel vowel = Vowel::kNone;
  Special special = Special::kPlain;

  // Romanized form, e.g. "shi", "N", "Q".
  std::string romaji() const;

  // True when both morae are pronounced the same. Ignores the kana script
  // and treats a long-vowel mark like the plain vowel it repeats.
  bool same_sound(const Mora& other) const;

  friend bool operator==(const Mora&, const Mora&) = default;
};

using MoraSeq = std::vector<Mora>;

// Pitch change at the boundary right after a mora.
enum class Accent : std::int8_t { kLower = -1, kNone = 0, kRaise = 1 };

using AccentVector = std::vector<Accent>;

struct AccentedReading {
  MoraSeq morae;
  AccentVector accent;

  friend bool operator==(const AccentedReading&, const AccentedReading&) = default;
};

// Splits kana text into morae. Accepts hiragana, katakana, small kana, the
// long-vowel bar and the pause marks 、・. Throws NotationError on anything
// else.
MoraSeq parse_kana(std::string_view text);

// Concatenated kana_text of the sequence.
std::string kana_of(const MoraSeq& morae);

// Space separated romaji, e.g. "shi N so o ga ku shu u".
std::string romaji_of(const MoraSeq& morae);

// Parses kana annotated with '[' (raise) and ']' (lower) after morae.
AccentedReading parse_marked(std::string_view text);

std::string render_marked(const AccentedReading& reading);

struct AccentViolation {
  std::size_t index;
  std::string message;
};

// nullopt when nonzero labels alternate in sign; otherwise the first index
// whose label repeats the sign of the previous nonzero label.
std::optional<AccentViolation> validate_accent(const AccentVector& accent);

// Drops every nonzero label whose sign equals the previous surviving nonzero
// label. The result always passes validate_accent.
AccentVector repair_accent(const AccentVector& raw);

// "+1 0 -1" style rendering for logs and test output.
std::string accent_to_string(const AccentVector& accent);

// Version line of the embedded kana table.
std::string_view kana_table_version();

}  // namespace pitchdict
