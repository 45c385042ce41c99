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
#include <string>
#include <string_view>
#include <vector>

#include "pitchdict/lattice.hpp"
#include "pitchdict/lexicon.hpp"
#include "pitchdict/mora.hpp"
#include "pitchdict/rng.hpp"

namespace pitchdict {

// Replaces every run of digits (optionally with one decimal point followed
// by digits) with its kanji reading: "10234.56" -> "一万二百三十四点五六".
// Runs with a leading zero, or longer than 20 digits, are read digit by
// digit. Everything else is copied unchanged.
std::string normalize_numerals(std::string_view surface);

// Unit-cost edit distance over morae, comparing pronunciation.
std::size_t levenshtein(const MoraSeq& a, const MoraSeq& b);

struct SelectionConfig {
  int r_max = 20;   // depth of the n-best analysis
  int m_train = 3;  // candidates kept for sampling while training
  int m_infer = 1;  // candidates kept at inference

  // Throws std::invalid_argument unless 1 <= m <= r_max for both modes.
  void validate() const;
};

enum class Mode { kTrain, kInfer };

struct Candidate {
  Segmentation segmentation;
  std::size_t distance = 0;  // levenshtein(segmentation.yomi(), target)
};

// The n-best analyses of the numeral-normalized surface, ordered by
// (yomi distance, lattice cost, rank).
std::vector<Candidate> rank_candidates(std::string_view surface, const MoraSeq& yomi,
                                       const Lexicon& lex, const SelectionConfig& cfg);

// Keeps the best m candidates (m_train or m_infer) and returns a uniformly
// sampled one in training mode, the first one at inference.
Segmentation select_candidates(std::string_view surface, const MoraSeq& yomi,
                               const Lexicon& lex, const SelectionConfig& cfg, Mode mode,
                               Rng& rng);

// Feature ids. The consonant feature folds the special mora classes in
// after the real consonants so that N, Q, long vowels and pauses stay
// distinguishable.
inline constexpr int kConsonantVocab = kNumConsonants + 4;
inline constexpr int kVowelVocab = kNumVowels;
inline constexpr int kPosVocab = kNumPos;        // Pos::kUnknown doubles as UNK
inline constexpr int kGoshuVocab = kNumGoshu;    // Goshu::kUnknown doubles as UNK
inline constexpr int kAccentVocab = 3;           // label + 1
inline constexpr int kSandhiVocab = kNumSandhi + 1;
inline constexpr int kSandhiUnk = kNumSandhi;

int consonant_feature(const Mora& m);

struct SurfaceFeature {
  std::uint8_t consonant = 0;
  std::uint8_t vowel = 0;
  std::uint8_t pos = 0;
  std::uint8_t goshu = 0;
  std::uint8_t accent = 1;
  std::uint8_t sandhi = 0;
  friend bool operator==(const SurfaceFeature&, const SurfaceFeature&) = default;
};

struct YomiFeature {
  std::uint8_t consonant = 0;
  std::uint8_t vowel = 0;
  friend bool operator==(const YomiFeature&, const YomiFeature&) = default;
};

struct FeaturePair {
  std::vector<SurfaceFeature> surface_side;  // one per mora of the segmentation's yomi
  std::vector<YomiFeature> yomi_side;        // one per mora of the target yomi

  friend bool operator==(const FeaturePair&, const FeaturePair&) = default;
};

FeaturePair featurize(const Segmentation& seg, const MoraSeq& yomi);

// Tab-separated dump, one row per mora, used by the `features` command.
std::string features_to_tsv(const FeaturePair& fp);

}  // namespace pitchdict
