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

#include "oracles.hpp"
#include "pitchdict/lattice.hpp"
#include "test_util.hpp"

namespace pitchdict {
namespace {

const Lexicon& mini() {
  static const Lexicon lex = Lexicon::load(testing::data_path("mini_lexicon.tsv"));
  return lex;
}

std::string romaji_word(const MoraSeq& m) {
  std::string out;
  for (const auto& x : m) out += x.romaji();
  return out;
}

std::string readings(const Segmentation& s) {
  std::string out;
  for (const auto& e : s.entries) {
    if (!out.empty()) out += '|';
    out += romaji_word(e.yomi);
  }
  return out;
}

TEST(Lattice, EmptySurfaceThrows) {
  EXPECT_THROW(build_lattice("", mini()), std::invalid_argument);
}

TEST(Lattice, NodesCoverEveryPosition) {
  const Lattice lat = build_lattice("一日千秋", mini());
  ASSERT_EQ(lat.surface().size(), 4u);
  for (std::size_t pos = 0; pos < 4; ++pos) {
    EXPECT_FALSE(lat.starting_at(pos).empty());
    for (auto idx : lat.starting_at(pos)) {
      const auto& n = lat.nodes()[idx];
      EXPECT_EQ(n.begin, pos);
      EXPECT_EQ(n.end, pos + n.match.span);
    }
  }
}

TEST(Nbest, IchinichiSenshuu) {
  const auto paths = nbest(build_lattice("一日千秋", mini()), 20);
  ASSERT_FALSE(paths.empty());
  EXPECT_EQ(readings(paths[0]), "ichi|nichi|chiaki");
  std::size_t rank = 0;
  for (const auto& p : paths) {
    if (readings(p) == "ichi|jitsu|seNshuu") rank = static_cast<std::size_t>(p.rank);
  }
  EXPECT_GT(rank, 1u);
  const auto all = testing::brute_force_paths("一日千秋", mini());
  std::size_t brute_rank = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string r;
    for (int idx : all[i].indices) {
      if (!r.empty()) r += '|';
      r += romaji_word(mini().entries()[static_cast<std::size_t>(idx)].yomi);
    }
    if (r == "ichi|jitsu|seNshuu") brute_rank = i + 1;
  }
  EXPECT_EQ(rank, brute_rank);
}

TEST(Nbest, RanksAreSortedAndUnique) {
  const auto paths = nbest(build_lattice("東京都庁舎", mini()), 50);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    EXPECT_EQ(paths[i].rank, static_cast<int>(i + 1));
    if (i > 0) {
      EXPECT_LE(paths[i - 1].total_cost, paths[i].total_cost);
      EXPECT_NE(paths[i - 1].entry_indices, paths[i].entry_indices);
    }
  }
}

TEST(Nbest, UnknownRunIsOneNode) {
  const auto paths = nbest(build_lattice("ズルムケ", mini()), 5);
  ASSERT_EQ(paths.size(), 1u);
  ASSERT_EQ(paths[0].entries.size(), 1u);
  EXPECT_TRUE(paths[0].entries[0].unknown);
  EXPECT_EQ(paths[0].entry_indices, std::vector<int>{-1});
}

TEST(Nbest, KZeroAndLargeK) {
  EXPECT_THROW(nbest(build_lattice("一日", mini()), 0), std::invalid_argument);
  const auto all = testing::brute_force_paths("一日千秋", mini());
  EXPECT_EQ(nbest(build_lattice("一日千秋", mini()), 1000).size(), all.size());
}

TEST(Nbest, MatchesBruteForceOnLexiconWordsAndPairs) {
  const auto surfaces = testing::short_surfaces(mini(), 6);
  ASSERT_GT(surfaces.size(), 1000u);
  std::size_t failures = 0;
  for (const auto& s : surfaces) {
    const std::string err = testing::compare_nbest(s, mini(), 20);
    if (!err.empty() && ++failures <= 10) ADD_FAILURE() << err;
  }
  EXPECT_EQ(failures, 0u);
}

TEST(Nbest, MatchesBruteForceOnFixtureSurfaces) {
  for (const char* s : {"深層学習", "箸", "東京駅", "二千二十年", "一日千秋", "海浜", "Python"}) {
    EXPECT_EQ(testing::compare_nbest(s, mini(), 20), "");
  }
}

TEST(Nbest, TieBreakOnEqualCost) {
  std::vector<LexEntry> entries(3);
  const char* surf[] = {"あい", "あ", "い"};
  const char* yomi[] = {"あい", "あ", "い"};
  const int cost[] = {200, 100, 100};
  for (int i = 0; i < 3; ++i) {
    entries[i].surface = surf[i];
    entries[i].yomi = parse_kana(yomi[i]);
    entries[i].accent.assign(entries[i].yomi.size(), Accent::kNone);
    entries[i].cost = cost[i];
  }
  const Lexicon lex(entries);
  const auto paths = nbest(build_lattice("あい", lex), 5);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].total_cost, 200);
  EXPECT_EQ(paths[1].total_cost, 200);
  // Equal cost: the path with the shorter first span comes first.
  EXPECT_EQ(paths[0].spans, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(testing::compare_nbest("あい", lex, 5), "");
}

}  // namespace
}  // namespace pitchdict
