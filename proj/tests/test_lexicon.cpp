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

#include <algorithm>
#include <fstream>

#include "pitchdict/error.hpp"
#include "pitchdict/lexicon.hpp"
#include "pitchdict/utf8.hpp"
#include "test_util.hpp"

namespace pitchdict {
namespace {

using testing::av;
using testing::data_path;

Lexicon mini() { return Lexicon::load(data_path("mini_lexicon.tsv")); }

void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream(p) << body;
}

TEST(Lexicon, LoadsMiniLexicon) {
  const Lexicon lex = mini();
  EXPECT_EQ(lex.size(), 334u);
  EXPECT_EQ(lex.matrix().rights(), 12);
  EXPECT_EQ(lex.matrix().lefts(), 12);
  for (const auto& e : lex.entries()) {
    EXPECT_EQ(e.yomi.size(), e.accent.size()) << e.surface;
    EXPECT_FALSE(validate_accent(e.accent)) << e.surface;
    EXPECT_FALSE(e.unknown);
  }
}

TEST(Lexicon, HashiHomographs) {
  const Lexicon lex = mini();
  const auto hits = lex.prefix_lookup(std::string_view("箸"), 0);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(render_marked(hits[0].entry.reading()), "は]し");
  EXPECT_EQ(hits[0].entry.sandhi, Sandhi::kC2);
  int found = 0;
  for (const auto& e : lex.entries()) {
    if (e.surface == "橋") {
      EXPECT_EQ(e.accent, av({1, -1}));
      ++found;
    }
    if (e.surface == "端") {
      EXPECT_EQ(e.accent, av({1, 0}));
      ++found;
    }
  }
  EXPECT_EQ(found, 2);
}

TEST(Lexicon, PrefixLookupMatchesLinearScan) {
  const Lexicon lex = mini();
  const std::u32string s = U"一日千秋東京駅";
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    std::vector<int> expected;
    for (std::size_t i = 0; i < lex.size(); ++i) {
      const std::u32string w = utf8::decode(lex.entries()[i].surface);
      if (s.compare(pos, w.size(), w) == 0) expected.push_back(static_cast<int>(i));
    }
    std::vector<int> got;
    for (const auto& m : lex.prefix_lookup(std::u32string_view(s), pos)) {
      if (m.index >= 0) got.push_back(m.index);
      EXPECT_EQ(m.span, utf8::decode(m.entry.surface).size());
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << pos;
  }
}

TEST(Lexicon, UnknownNodesFollowCharClass) {
  const Lexicon lex = mini();
  const auto kata = lex.prefix_lookup(std::string_view("ズルムケ"), 0);
  ASSERT_EQ(kata.size(), 1u);
  EXPECT_TRUE(kata[0].entry.unknown);
  EXPECT_EQ(kata[0].index, -1);
  EXPECT_EQ(kata[0].span, 4u);
  EXPECT_EQ(kana_of(kata[0].entry.yomi), "ズルムケ");
  EXPECT_EQ(kata[0].entry.accent, av({0, 0, 0, 0}));
  const auto sym = lex.prefix_lookup(std::string_view("!?"), 0);
  ASSERT_EQ(sym.size(), 1u);
  EXPECT_EQ(sym[0].span, 1u);
  EXPECT_EQ(sym[0].entry.yomi[0].special, Special::kPause);
  EXPECT_THROW(lex.prefix_lookup(std::string_view("あ"), 1), std::out_of_range);
}

TEST(Lexicon, CharClass) {
  EXPECT_EQ(char_class(U'漢'), CharClass::kKanji);
  EXPECT_EQ(char_class(U'あ'), CharClass::kHiragana);
  EXPECT_EQ(char_class(U'ア'), CharClass::kKatakana);
  EXPECT_EQ(char_class(U'ー'), CharClass::kKatakana);
  EXPECT_EQ(char_class(U'A'), CharClass::kLatin);
  EXPECT_EQ(char_class(U'7'), CharClass::kDigit);
  EXPECT_EQ(char_class(U'!'), CharClass::kSymbol);
}

TEST(Lexicon, SaveLoadRoundTrip) {
  const Lexicon lex = mini();
  const auto dir = testing::scratch_dir("lexicon_roundtrip");
  lex.save(dir / "lex.tsv");
  lex.matrix().save(dir / "matrix.def");
  const Lexicon back = Lexicon::load(dir / "lex.tsv");
  EXPECT_EQ(back.entries(), lex.entries());
  for (int r = 0; r < lex.matrix().rights(); ++r)
    for (int l = 0; l < lex.matrix().lefts(); ++l)
      EXPECT_EQ(back.connection_cost(r, l), lex.connection_cost(r, l));
}

TEST(Lexicon, RejectsMalformedRows) {
  const auto dir = testing::scratch_dir("lexicon_bad");
  const std::string header = "# surface\tyomi\taccent\tpos\tgoshu\tsandhi\tleft_id\tright_id\tcost\n";
  struct Case {
    std::string row, needle;
  };
  const std::vector<Case> cases = {
      {"犬\tいぬ\tい]ぬ\tnoun\tnative\tC1\t1\t1", "expected 9"},
      {"犬\tいぬ\tね]こ\tnoun\tnative\tC1\t1\t1\t100", "does not match"},
      {"犬\tいぬ\tい]ぬ]\tnoun\tnative\tC1\t1\t1\t100", "lower without a raise"},
      {"犬\tいぬ\tい]ぬ\tverbish\tnative\tC1\t1\t1\t100", "unknown pos"},
      {"犬\tいぬ\tい]ぬ\tnoun\tnative\tC9\t1\t1\t100", "unknown sandhi"},
      {"犬\tいぬ\tい]ぬ\tnoun\tnative\tC1\t1\t1\t99999", "cost out of range"},
      {"犬\tいぬ\tい]\tnoun\tnative\tC1\t1\t1\t100", "length mismatch"},
  };
  for (const auto& c : cases) {
    write_file(dir / "bad.tsv", header + c.row + "\n");
    try {
      Lexicon::load(dir / "bad.tsv");
      ADD_FAILURE() << c.row;
    } catch (const FormatError& e) {
      const std::string msg = e.what();
      EXPECT_NE(msg.find("bad.tsv:2:"), std::string::npos) << msg;
      EXPECT_NE(msg.find(c.needle), std::string::npos) << c.needle << " / " << msg;
    }
  }
}

TEST(Lexicon, MissingFile) {
  EXPECT_THROW(Lexicon::load("/nonexistent/lex.tsv"), IoError);
}

TEST(Lexicon, IdOutsideMatrixIsRejected) {
  const auto dir = testing::scratch_dir("lexicon_ids");
  write_file(dir / "matrix.def", "2 2\n0 0 0 0\n");
  write_file(dir / "lex.tsv", "犬\tいぬ\tい]ぬ\tnoun\tnative\tC1\t5\t1\t100\n");
  EXPECT_THROW(Lexicon::load(dir / "lex.tsv"), Error);
}

TEST(ConnectionMatrix, ParsesAndIndexes) {
  const auto dir = testing::scratch_dir("matrix");
  write_file(dir / "m.def", "2 3\n1 2 3\n4 5 6\n");
  const auto m = ConnectionMatrix::load(dir / "m.def");
  EXPECT_EQ(m.cost(1, 2), 6);
  EXPECT_EQ(m.cost(0, 1), 2);
  EXPECT_THROW(m.cost(2, 0), std::out_of_range);
  write_file(dir / "short.def", "2 2\n1 2 3\n");
  EXPECT_THROW(ConnectionMatrix::load(dir / "short.def"), FormatError);
}

TEST(Lexicon, CsvRowsFromDictionaryBuilder) {
  const auto dir = testing::scratch_dir("lexicon_csv");
  write_file(dir / "d.csv", "\"深層学習\",1,1,5000,noun,しんそうがくしゅう,し[んそうが]くしゅう\n");
  const Lexicon lex = Lexicon::load(dir / "d.csv");
  ASSERT_EQ(lex.size(), 1u);
  EXPECT_EQ(lex.entries()[0].accent, av({1, 0, 0, 0, -1, 0, 0, 0}));
  EXPECT_EQ(lex.entries()[0].cost, 5000);
}

}  // namespace
}  // namespace pitchdict
