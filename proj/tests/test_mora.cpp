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

#include <gtest/gtest.h>

#include "pitchdict/error.hpp"
#include "pitchdict/mora.hpp"
#include "pitchdict/rng.hpp"
#include "pitchdict/train.hpp"
#include "test_util.hpp"

namespace pitchdict {
namespace {

using testing::av;

std::vector<std::string> romaji(const MoraSeq& m) {
  std::vector<std::string> out;
  for (const auto& x : m) out.push_back(x.romaji());
  return out;
}

TEST(ParseKana, ShinsouGakushuu) {
  const MoraSeq m = parse_kana("しんそうがくしゅう");
  EXPECT_EQ(romaji(m),
            (std::vector<std::string>{"shi", "N", "so", "u", "ga", "ku", "shu", "u"}));
  EXPECT_EQ(m[1].special, Special::kMoraicNasal);
  EXPECT_EQ(m[3].vowel, Vowel::kU);
}

TEST(ParseKana, Empty) { EXPECT_TRUE(parse_kana("").empty()); }

TEST(ParseKana, DigraphIsOneMora) {
  const MoraSeq m = parse_kana("きょう");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].kana_text, "きょ");
  EXPECT_EQ(m[0].consonant, Consonant::kKy);
  EXPECT_EQ(m[0].vowel, Vowel::kO);
}

TEST(ParseKana, LongVowelRepeatsPreviousVowel) {
  const MoraSeq m = parse_kana("たわー");
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[2].special, Special::kLongVowel);
  EXPECT_EQ(m[2].vowel, Vowel::kA);
  EXPECT_TRUE(m[2].same_sound(parse_kana("あ")[0]));
}

TEST(ParseKana, KatakanaFoldsToHiraganaPhonemes) {
  const MoraSeq a = parse_kana("パイソン");
  const MoraSeq b = parse_kana("ぱいそん");
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].same_sound(b[i]));
  EXPECT_EQ(kana_of(a), "パイソン");
}

TEST(ParseKana, RejectsNonKanaWithPosition) {
  try {
    parse_kana("かaき");
    FAIL() << "expected an error";
  } catch (const NotationError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
  EXPECT_THROW(parse_kana("ーあ"), NotationError);
}

TEST(ParseKana, TextRoundTripsOnFixtures) {
  for (const auto& it : read_samples(testing::data_path("fixtures/notation_500.tsv"))) {
    const std::string k = kana_of(it.yomi);
    EXPECT_EQ(kana_of(parse_kana(k)), k);
  }
}

TEST(ParseMarked, TableOneExamples) {
  const auto sake = parse_marked("さ[け");
  EXPECT_EQ(romaji(sake.morae), (std::vector<std::string>{"sa", "ke"}));
  EXPECT_EQ(sake.accent, av({1, 0}));
  const auto tama = parse_marked("た[ま]");
  EXPECT_EQ(romaji(tama.morae), (std::vector<std::string>{"ta", "ma"}));
  EXPECT_EQ(tama.accent, av({1, -1}));
  const auto hashi = parse_marked("はし");
  EXPECT_EQ(hashi.accent, av({0, 0}));
}

TEST(ParseMarked, Errors) {
  EXPECT_THROW(parse_marked("[さけ"), NotationError);
  EXPECT_THROW(parse_marked("さ[け["), NotationError);
  EXPECT_THROW(parse_marked("さ[[け"), NotationError);
  EXPECT_THROW(parse_marked("さ]け]"), NotationError);
  EXPECT_THROW(parse_marked("さ[]け"), NotationError);
  try {
    parse_marked("あ[い[う");
    FAIL();
  } catch (const NotationError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(RenderMarked, Examples) {
  EXPECT_EQ(render_marked({parse_kana("さけ"), av({1, 0})}), "さ[け");
  EXPECT_EQ(render_marked({parse_kana("しんそうがくしゅう"), av({1, 0, 0, 0, -1, 0, 0, 0})}),
            "し[んそうが]くしゅう");
  EXPECT_EQ(render_marked({parse_kana("はし"), av({0, 0})}), "はし");
}

TEST(RenderMarked, RoundTripOnFixtures) {
  for (const auto& it : read_samples(testing::data_path("fixtures/notation_500.tsv"))) {
    const AccentedReading r{it.yomi, it.gold};
    EXPECT_EQ(parse_marked(render_marked(r)), r) << it.surface;
  }
}

TEST(ValidateAccent, Examples) {
  EXPECT_FALSE(validate_accent(av({1, -1})));
  const auto bad = validate_accent(av({1, 1}));
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->index, 1u);
  EXPECT_FALSE(validate_accent({}));
  EXPECT_EQ(validate_accent(av({-1, 0, 1, 0, 1}))->index, 4u);
}

TEST(RepairAccent, Examples) {
  EXPECT_EQ(repair_accent(av({1, 1, -1})), av({1, 0, -1}));
  EXPECT_EQ(repair_accent(av({1, 0, -1, 1})), av({1, 0, -1, 1}));
  EXPECT_EQ(repair_accent(av({0, 0, 0})), av({0, 0, 0}));
  EXPECT_EQ(repair_accent(av({-1, -1, 1, 1, -1})), av({-1, 0, 1, 0, -1}));
}

TEST(RepairAccent, AlwaysValidAndIdempotent) {
  Rng rng(5);
  for (int n = 0; n < 2000; ++n) {
    AccentVector a(rng.below(12));
    for (auto& x : a) x = static_cast<Accent>(static_cast<int>(rng.below(3)) - 1);
    const AccentVector r = repair_accent(a);
    EXPECT_FALSE(validate_accent(r));
    EXPECT_EQ(repair_accent(r), r);
    if (!validate_accent(a)) {
      EXPECT_EQ(r, a);
    }
  }
}

TEST(AccentToString, Format) { EXPECT_EQ(accent_to_string(av({1, 0, -1})), "+1 0 -1"); }

}  // namespace
}  // namespace pitchdict
