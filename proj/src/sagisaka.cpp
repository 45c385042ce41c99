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

#include "pitchdict/sagisaka.hpp"

#include <stdexcept>

namespace pitchdict {
namespace {

// Rises after the first mora and stays high for n morae.
AccentVector flat_high(std::size_t n) {
  AccentVector a(n, Accent::kNone);
  if (n) a[0] = Accent::kRaise;
  return a;
}

AccentedReading with_link(const AccentedReading& base, std::string_view link) {
  AccentedReading r = base;
  for (auto& m : parse_kana(link)) {
    r.morae.push_back(std::move(m));
    r.accent.push_back(Accent::kNone);
  }
  return r;
}

void append(SyntheticSample& s, const AccentedReading& r, const AccentVector& accent) {
  s.yomi.insert(s.yomi.end(), r.morae.begin(), r.morae.end());
  s.accent.insert(s.accent.end(), accent.begin(), accent.end());
}

}  // namespace

AccentVector compound_accent(const AccentedReading& front, const LexEntry& rear) {
  const std::size_t nf = front.morae.size();
  const std::size_t nr = rear.yomi.size();
  if (nf == 0 || nr == 0) throw std::invalid_argument("compound parts must not be empty");
  if (front.accent.size() != nf || rear.accent.size() != nr) {
    throw std::invalid_argument("accent length does not match the morae");
  }
  AccentVector out(nf + nr, Accent::kNone);
  auto front_part = out.begin();
  auto rear_part = out.begin() + static_cast<std::ptrdiff_t>(nf);
  switch (rear.sandhi) {
    case Sandhi::kC1: {
      const auto f = flat_high(nf);
      std::copy(f.begin(), f.end(), front_part);
      std::copy(rear.accent.begin(), rear.accent.end(), rear_part);
      break;
    }
    case Sandhi::kC2: {
      const auto f = flat_high(nf);
      std::copy(f.begin(), f.end(), front_part);
      *rear_part = Accent::kLower;
      break;
    }
    case Sandhi::kC3:
      if (nf > 1) out[0] = Accent::kRaise;
      out[nf - 1] = Accent::kLower;
      break;
    case Sandhi::kC4:
      out[0] = Accent::kRaise;
      break;
    case Sandhi::kC5:
      std::copy(front.accent.begin(), front.accent.end(), front_part);
      break;
    case Sandhi::kNone:
      std::copy(front.accent.begin(), front.accent.end(), front_part);
      std::copy(rear.accent.begin(), rear.accent.end(), rear_part);
      break;
  }
  return repair_accent(out);
}

std::string_view to_string(SynthRule r) { return r == SynthRule::kPair ? "pair" : "quad"; }

SyntheticSample compose_pair(const LexEntry& a, std::string_view link, const LexEntry& b) {
  SyntheticSample s;
  s.rule = SynthRule::kPair;
  s.surface = a.surface + b.surface;
  const AccentedReading front = with_link(a.reading(), link);
  append(s, front, {});
  s.yomi.insert(s.yomi.end(), b.yomi.begin(), b.yomi.end());
  s.accent = compound_accent(front, b);
  s.link1 = link;
  return s;
}

SyntheticSample compose_quad(const LexEntry& a, std::string_view link1, const LexEntry& b,
                             const Particle& particle, const LexEntry& c,
                             std::string_view link2, const LexEntry& d) {
  const SyntheticSample left = compose_pair(a, link1, b);
  const SyntheticSample right = compose_pair(c, link2, d);
  SyntheticSample s;
  s.rule = SynthRule::kQuad;
  s.surface = left.surface + std::string(particle.surface) + right.surface;
  append(s, left.reading(), left.accent);
  const MoraSeq p = parse_kana(particle.yomi);
  append(s, {p, AccentVector(p.size(), Accent::kNone)}, AccentVector(p.size(), Accent::kNone));
  append(s, right.reading(), right.accent);
  s.accent = repair_accent(s.accent);
  s.link1 = link1;
  s.link2 = link2;
  s.particle = particle.surface;
  return s;
}

Synthesizer::Synthesizer(const Lexicon& lex) : lex_(&lex) {
  for (std::size_t i = 0; i < lex.entries().size(); ++i) {
    const Pos p = lex.entries()[i].pos;
    if (p == Pos::kNoun || p == Pos::kProperNoun || p == Pos::kPlaceName || p == Pos::kSurname) {
      nouns_.push_back(i);
    }
  }
  if (nouns_.size() < 2) throw std::invalid_argument("lexicon needs at least two nouns");
}

const LexEntry& Synthesizer::pick(Rng& rng) const {
  return lex_->entries()[nouns_[rng.below(nouns_.size())]];
}

SyntheticSample Synthesizer::draw(Rng& rng, SynthRule rule) const {
  const LexEntry& a = pick(rng);
  const std::string_view link1 = kLinkYomi[rng.below(kLinkYomi.size())];
  const LexEntry& b = pick(rng);
  if (rule == SynthRule::kPair) return compose_pair(a, link1, b);
  const Particle& particle = kPhraseParticles[rng.below(kPhraseParticles.size())];
  const LexEntry& c = pick(rng);
  const std::string_view link2 = kLinkYomi[rng.below(kLinkYomi.size())];
  const LexEntry& d = pick(rng);
  return compose_quad(a, link1, b, particle, c, link2, d);
}

}  // namespace pitchdict
