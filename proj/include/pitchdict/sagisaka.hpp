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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "pitchdict/lexicon.hpp"
#include "pitchdict/mora.hpp"
#include "pitchdict/rng.hpp"

namespace pitchdict {

// Accent of `front` followed by `rear` as one compound word, decided by the
// sandhi class of the rear word:
//   C1    front rises after its first mora and stays high; rear keeps its accent
//   C2    nucleus after the first mora of rear
//   C3    nucleus after the last mora of front
//   C4    rise after the first mora, no nucleus
//   C5    front keeps its accent, rear is flat
//   none  both accents concatenated
// Every result goes through repair_accent. Throws std::invalid_argument when
// either part is empty.
AccentVector compound_accent(const AccentedReading& front, const LexEntry& rear);

enum class SynthRule { kPair, kQuad };

std::string_view to_string(SynthRule r);

struct SyntheticSample {
  std::string surface;
  MoraSeq yomi;
  AccentVector accent;
  SynthRule rule = SynthRule::kPair;
  // Connectives drawn for this sample; link2 and particle are empty for pairs.
  std::string link1, link2, particle;

  AccentedReading reading() const { return {yomi, accent}; }
};

// Connectives inserted into the yomi only, between the two nouns of a pair.
inline constexpr std::array<std::string_view, 5> kLinkYomi = {"", "の", "が", "つ", "わ"};

// Particles joining two pairs; written in both the surface and the yomi.
struct Particle {
  std::string_view surface;
  std::string_view yomi;
};
inline constexpr std::array<Particle, 5> kPhraseParticles = {
    Particle{"と", "と"}, Particle{"は", "わ"}, Particle{"が", "が"}, Particle{"の", "の"},
    Particle{"も", "も"}};

// s = a|b, y = a|link|b.
SyntheticSample compose_pair(const LexEntry& a, std::string_view link, const LexEntry& b);

// s = a|b|particle|c|d, y = a|link1|b|particle|c|link2|d. The particle is a
// phrase break: each side gets its own compound accent.
SyntheticSample compose_quad(const LexEntry& a, std::string_view link1, const LexEntry& b,
                             const Particle& particle, const LexEntry& c,
                             std::string_view link2, const LexEntry& d);

// Draws random nouns and connectives from a lexicon.
class Synthesizer {
 public:
  // Throws std::invalid_argument when the lexicon has fewer than two nouns.
  explicit Synthesizer(const Lexicon& lex);

  SyntheticSample draw(Rng& rng, SynthRule rule) const;

  std::size_t noun_count() const { return nouns_.size(); }

 private:
  const LexEntry& pick(Rng& rng) const;

  const Lexicon* lex_;
  std::vector<std::size_t> nouns_;
};

inline SyntheticSample synthesize(Rng& rng, const Lexicon& lex, SynthRule rule) {
  return Synthesizer(lex).draw(rng, rule);
}

}  // namespace pitchdict
