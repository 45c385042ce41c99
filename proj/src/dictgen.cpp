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

#include "pitchdict/dictgen.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <regex>

#include "pitchdict/error.hpp"
#include "pitchdict/text.hpp"
#include "pitchdict/utf8.hpp"

namespace pitchdict {

namespace {

constexpr std::string_view kCategoryNames[kNumCategories] = {
    "emoji-symbol",   "company-kk",      "company-yk",        "station",
    "road",           "school",          "address",           "person-katakana",
    "person-kanji-kana", "person-other", "numeral",           "date",
    "numeral-like",   "katakana-words",  "romaji-symbols",    "kanji-kana",
    "kanji-kana-romaji", "other",        "ignored",
};

#define KANJI L"㐀-䶿一-鿿々〆ヶ"
#define HIRA L"ぁ-ゖゝゞ"
#define KATA L"ァ-ヺー-ヾ"
#define DIGIT L"0-9０-９"
#define LATIN L"A-Za-zＡ-Ｚａ-ｚ"
#define KNUM L"〇一二三四五六七八九十百千万億兆"
#define NUMBER L"(?:[" DIGIT L"]+|[" KNUM L"]+)"

struct Rule {
  Category category;
  std::wregex pattern;
};

const std::vector<Rule>& rules() {
  static const std::vector<Rule> table = [] {
    const auto re = [](const wchar_t* p) { return std::wregex(p, std::regex::ECMAScript); };
    return std::vector<Rule>{
        {Category::kCompanyKK, re(L"株式会社|[（(]株[）)]")},
        {Category::kCompanyYK, re(L"有限会社|[（(]有[）)]")},
        {Category::kStation, re(L"駅$")},
        {Category::kRoad, re(L"(国道|県道|都道|府道|道道|市道|町道).*号|号線$|自動車道$|街道$")},
        {Category::kSchool, re(L"(学校|高校|中学|大学|学院|学園|幼稚園|保育園)$")},
        {Category::kAddress,
         re(L"^[" KANJI HIRA KATA L"]+?[都道府県][" KANJI HIRA KATA L"]+?[市区町村郡]|"
            L"^[" KANJI L"]+[市区町村][" KANJI HIRA KATA L"]*" NUMBER L"(丁目|番地?)")},
        {Category::kPersonKatakana, re(L"^[" KATA L"]+[・＝=][" KATA L"・＝=]+$")},
        {Category::kPersonKanjiKana,
         re(L"^(佐藤|鈴木|高橋|田中|伊藤|渡辺|山本|中村|小林|加藤|吉田|山田|佐々木|山口|松本|"
            L"井上|木村|斎藤|清水|山崎|森|池田|橋本|阿部|石川|徳川|織田|豊臣|源|平|藤原|"
            L"古今亭|三遊亭|林家|柳家)[" KANJI HIRA KATA L"]{1,4}$")},
        {Category::kPersonOther, re(L"製作委員会$|^[A-Z][a-z]+ [A-Z][a-z]+$")},
        {Category::kDate, re(L"^" NUMBER L"年(" NUMBER L"月)?(" NUMBER L"日)?$|^" NUMBER L"月(" NUMBER
                             L"日)?$")},
        {Category::kNumeral,
         re(L"^[$＄¥￥€£]?[" DIGIT L"]+([.．,，][" DIGIT L"]+)*[" LATIN L"%％℃°]*$|^[" KNUM
            L"点]+$")},
        {Category::kNumeralLike,
         re(L"^[$＄¥￥]?[" DIGIT L"]+([.．][" DIGIT L"]+)?[" KANJI HIRA KATA L"]+$")},
        {Category::kKatakanaWords, re(L"^[" KATA L"]+$")},
        {Category::kRomajiSymbols, re(L"^[" LATIN L"][" LATIN L"' \\-!.&]*$")},
        {Category::kKanjiKana, re(L"^[" KANJI HIRA KATA L"]+$")},
        {Category::kKanjiKanaRomaji,
         re(L"^(?=.*[" LATIN L"])(?=.*[" KANJI HIRA KATA L"])[" KANJI HIRA KATA LATIN DIGIT
            L"' \\-!.&・]+$")},
    };
  }();
  return table;
}

const std::wregex& ignored_pattern() {
  // Short katakana spellings without long vowels or small kana, e.g. a
  // Sino-Japanese word written in katakana for emphasis.
  static const std::wregex re(L"^(?:(?![ァィゥェォッャュョヮヵヶ])[ア-ン]){1,3}$");
  return re;
}

bool in(char32_t c, char32_t lo, char32_t hi) { return c >= lo && c <= hi; }

// No kanji, kana or digits, and symbols outnumber letters two to one.
bool is_emoji_symbol(const std::u32string& s) {
  std::size_t letters = 0, symbols = 0;
  for (char32_t c : s) {
    if (in(c, 0xFF9E, 0xFF9F)) {  // half-width sound marks used as decoration
      ++symbols;
      continue;
    }
    const CharClass cls = char_class(c);
    if (cls == CharClass::kKanji || cls == CharClass::kHiragana || cls == CharClass::kKatakana ||
        cls == CharClass::kDigit) {
      return false;
    }
    if (cls == CharClass::kLatin) {
      ++letters;
    } else if (!in(c, U' ', U' ') && !in(c, U'　', U'　')) {
      ++symbols;
    }
  }
  return symbols > 2 * letters;
}

#undef KANJI
#undef HIRA
#undef KATA
#undef DIGIT
#undef LATIN
#undef KNUM
#undef NUMBER

}  // namespace

std::string_view to_string(Category c) { return kCategoryNames[static_cast<int>(c)]; }

std::optional<Category> parse_category(std::string_view name) {
  for (int i = 0; i < kNumCategories; ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

Category classify_category(std::string_view surface, const MoraSeq& yomi,
                           const ClassifyOptions& opt) {
  (void)yomi;
  std::u32string u;
  try {
    u = utf8::decode(surface);
  } catch (const Error&) {
    return Category::kOther;
  }
  if (u.empty()) return Category::kOther;
  const std::wstring w(u.begin(), u.end());
  if (opt.detect_ignored && std::regex_match(w, ignored_pattern())) return Category::kIgnored;
  if (is_emoji_symbol(u)) return Category::kEmojiSymbol;
  for (const auto& r : rules()) {
    if (std::regex_search(w, r.pattern)) return r.category;
  }
  return Category::kOther;
}

int adjust_cost(int base_cost, Category cat, const CostConfig& cfg) {
  long long v = base_cost;
  if (auto it = cfg.offsets.find(cat); it != cfg.offsets.end()) v += it->second;
  return static_cast<int>(std::clamp<long long>(v, kMinCost, kMaxCost));
}

std::string DictRow::to_csv() const {
  return text::quote_csv(surface) + ',' + std::to_string(left_id) + ',' +
         std::to_string(right_id) + ',' + std::to_string(cost) + ',' +
         std::string(to_string(pos)) + ',' + kana_of(yomi) + ',' +
         render_marked({yomi, accent});
}

DictResult build_dictionary(const std::vector<std::string>& lines, const Network<float>& net,
                            const Lexicon& lex, const DictConfig& cfg) {
  DictResult result;
  std::vector<FeaturePair> features;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string& line = lines[ln];
    if (text::trim(line).empty() || line.front() == '#') continue;
    ++result.input_rows;
    auto skip = [&](std::string reason) {
      result.skipped.push_back({ln + 1, line, std::move(reason)});
    };
    const auto cols = text::split(line, '\t');
    if (cols.size() != 2) {
      skip("expected surface TAB yomi");
      continue;
    }
    DictRow row;
    row.surface = cols[0];
    if (row.surface.empty()) {
      skip("empty surface");
      continue;
    }
    try {
      row.yomi = parse_kana(cols[1]);
    } catch (const NotationError& e) {
      skip(std::string("yomi is not kana: ") + e.what());
      continue;
    }
    if (row.yomi.empty()) {
      skip("empty yomi");
      continue;
    }
    row.category = classify_category(row.surface, row.yomi, cfg.classify);
    if (row.category == Category::kIgnored) {
      skip("ignored category");
      continue;
    }
    std::vector<Candidate> ranked;
    try {
      ranked = rank_candidates(row.surface, row.yomi, lex, cfg.selection);
    } catch (const std::exception& e) {
      skip(std::string("analysis failed: ") + e.what());
      continue;
    }
    const Segmentation& seg = ranked.front().segmentation;
    const LexEntry& last = seg.entries.back();
    if (last.unknown) {
      row.left_id = row.right_id = cfg.fallback_id;
      row.pos = cfg.fallback_pos;
    } else {
      row.left_id = last.left_id;
      row.right_id = last.right_id;
      row.pos = last.pos;
    }
    row.cost = adjust_cost(cfg.cost.base_cost, row.category, cfg.cost);
    features.push_back(featurize(seg, row.yomi));
    result.rows.push_back(std::move(row));
  }
  constexpr std::size_t kBatch = 64;
  for (std::size_t lo = 0; lo < features.size(); lo += kBatch) {
    const std::size_t hi = std::min(features.size(), lo + kBatch);
    const std::vector<FeaturePair> batch(features.begin() + lo, features.begin() + hi);
    const auto out = net.infer(batch);
    for (std::size_t i = lo; i < hi; ++i) result.rows[i].accent = decode(out[i - lo]);
  }
  return result;
}

DictResult build_dictionary(const std::filesystem::path& wordlist, const Network<float>& net,
                            const Lexicon& lex, const DictConfig& cfg) {
  return build_dictionary(text::read_lines(wordlist), net, lex, cfg);
}

void write_dictionary(const DictResult& result, const std::filesystem::path& out) {
  std::ofstream f(out, std::ios::binary);
  if (!f) throw IoError(out.string() + ": cannot write file");
  for (const auto& row : result.rows) f << row.to_csv() << '\n';
  if (!f) throw IoError(out.string() + ": write failed");
}

}  // namespace pitchdict
