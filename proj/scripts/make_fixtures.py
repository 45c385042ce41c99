#!/usr/bin/env python3
# Copyright 2026 The pitchdict Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the hand-made fixtures under data/fixtures.

The notation fixture is topped up to 500 rows with synthetic compounds from
the CLI, so build the project first:

    python3 scripts/make_fixtures.py build/tools/pitchdict
"""

import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "data" / "fixtures"

# surface, yomi, marked, category
READINGS = [
    ("酒", "さけ", "さ[け", "kanji-kana"),
    ("鮭", "さけ", "さ]け", "kanji-kana"),
    ("藤", "ふじ", "ふ[じ", "kanji-kana"),
    ("富士", "ふじ", "ふ]じ", "kanji-kana"),
    ("玉", "たま", "た[ま]", "kanji-kana"),
    ("多摩", "たま", "た]ま", "kanji-kana"),
    ("伝記", "でんき", "で[んき", "kanji-kana"),
    ("電気", "でんき", "で]んき", "kanji-kana"),
    ("箸", "はし", "は]し", "kanji-kana"),
    ("端", "はし", "は[し", "kanji-kana"),
    ("橋", "はし", "は[し]", "kanji-kana"),
    ("深層学習", "しんそうがくしゅう", "し[んそうが]くしゅう", "kanji-kana"),
    ("機械学習", "きかいがくしゅう", "き[かいが]くしゅう", "kanji-kana"),
    ("清涼飲料水", "せいりょういんりょうすい", "せ[いりょういんりょ]うすい", "kanji-kana"),
    ("量子コンピューター", "りょうしこんぴゅーたー", "りょ[うしこんぴゅ]ーたー", "kanji-kana"),
    ("リチウムイオン電池", "りちうむいおんでんち", "り[ちうむいおんで]んち", "kanji-kana"),
    ("モバイルバッテリー", "もばいるばってりー", "も[ばいるば]ってりー", "katakana-words"),
    ("京都タワー", "きょうとたわー", "きょ[うとた]わー", "kanji-kana"),
    ("五稜郭", "ごりょうかく", "ご[りょ]うかく", "kanji-kana"),
    ("横浜赤レンガ倉庫", "よこはまあかれんがそうこ", "よ[こはまあかれんがそ]うこ", "kanji-kana"),
    ("江戸東京博物館", "えどとうきょうはくぶつかん", "え[どとうきょうはくぶつ]かん", "kanji-kana"),
    ("御御御付け", "おみおつけ", "お[みお]つけ", "kanji-kana"),
    ("36協定", "さぶろくきょうてい", "さ[ぶろくきょ]うてい", "numeral-like"),
    ("八ッ場ダム", "やんばだむ", "や[んばだ]む", "kanji-kana"),
    ("井戸端会議", "いどばたかいぎ", "い[どばたか]いぎ", "kanji-kana"),
    ("赤血球", "せっけっきゅう", "せ[っけ]っきゅう", "kanji-kana"),
    ("黄色ブドウ球菌", "おうしょくぶどうきゅうきん", "お[うしょくぶどうきゅ]うきん", "kanji-kana"),
    ("Python", "ぱいそん", "ぱ]いそん", "romaji-symbols"),
    ("word2vec", "わーどつーべっく", "わ[ーどつーべ]っく", "other"),
    ("Led Zeppelin", "れっどつぇっぺりん", "れ[っどつぇ]っぺりん", "romaji-symbols"),
    ("FreeBSD", "ふりーびーえすでぃー", "ふ[りーびーえすでぃ]ー", "romaji-symbols"),
    ("980hPa", "きゅうひゃくはちじゅうへくとぱすかる", "きゅ]うひゃくは[ちじゅうへくとぱ]すかる", "numeral"),
    ("2468円", "にせんよんひゃくろくじゅうはちえん", "に[せ]ん[よ]んひゃくろ[くじゅうはち]えん", "numeral-like"),
    ("W杯", "わーるどかっぷ", "わ[ーるどか]っぷ", "kanji-kana-romaji"),
    ("九蓮宝燈", "ちゅうれんぽうとう", "ちゅ[うれんぽ]うとう", "kanji-kana"),
    ("平昌オリンピック", "ぴょんちゃんおりんぴっく", "ぴょ[んちゃんおりんぴ]っく", "kanji-kana"),
    ("棒々鶏", "ばんばんじー", "ば[んば]んじー", "kanji-kana"),
    ("東京都国立市", "とうきょうとくにたちし", "と[うきょ]うとく[にたち]し", "address"),
    ("目黒のさんま", "めぐろのさんま", "め]ぐろのさ[んま", "kanji-kana"),
    ("東海道五十三次", "とうかいどうごじゅうさんつぎ", "と[うか]いどうご[じゅうさ]んつぎ", "kanji-kana"),
    ("世界の終わりとハードボイルドワンダーランド",
     "せかいのおわりとはーどぼいるどわんだーらんど",
     "せ]かいのおわりとは[ーどぼいるどわんだーら]んど", "kanji-kana"),
    ("東京都道・埼玉県道25号飯田橋石神井新座線",
     "とうきょうとどうさいたまけんどうにじゅうごごういいだばししゃくじいにいざせん",
     "と[うきょうと]どうさ[いたまけ]んどう[に]じゅう[ご]ごうい[いだ]ばししゃ[くじ]いに[いざせん",
     "road"),
    ("海浜しめじ茸と炭酸兎", "かいひんしめじたけとたんさんうさぎ",
     "か[いひんしめじ]たけとた[んさんう]さぎ", "kanji-kana"),
]

# Build-dict word list: surface, yomi. Every row is valid.
WORDS = [
    ("Python", "パイソン"), ("機械学習", "きかいがくしゅう"), ("深層学習", "しんそうがくしゅう"),
    ("京都タワー", "きょうとたわー"), ("五稜郭", "ごりょうかく"), ("渋谷駅", "しぶやえき"),
    ("東京駅", "とうきょうえき"), ("新宿駅", "しんじゅくえき"), ("株式会社山田", "かぶしきがいしゃやまだ"),
    ("有限会社田中", "ゆうげんがいしゃたなか"), ("千葉県立千葉高等学校", "ちばけんりつちばこうとうがっこう"),
    ("東京都港区", "とうきょうとみなとく"), ("ポール・マッカートニー", "ぽーるまっかーとにー"),
    ("徳川家康", "とくがわいえやす"), ("10月21日", "じゅうがつにじゅういちにち"),
    ("十月二十一日", "じゅうがつにじゅういちにち"), ("35kg", "さんじゅうごきろぐらむ"),
    ("980hPa", "きゅうひゃくはちじゅうへくとぱすかる"), ("100円ショップ", "ひゃくえんしょっぷ"),
    ("3秒ルール", "さんびょうるーる"), ("バスケットボールリーグ", "ばすけっとぼーるりーぐ"),
    ("Kubernetes", "くーばねてぃす"), ("pink floyd", "ぴんくふろいど"), ("可換環", "かかんかん"),
    ("こいぬ座", "こいぬざ"), ("東京タワー", "とうきょうたわー"), ("Tシャツ", "てぃーしゃつ"),
    ("SDカード", "えすでぃーかーど"), ("W杯", "わーるどかっぷ"), ("word2vec", "わーどつーべっく"),
    ("1Q84", "いちきゅうはちよん"), ("♨", "おんせん"), ("一日千秋", "いちじつせんしゅう"),
    ("海浜", "かいひん"), ("炭酸", "たんさん"), ("兎", "うさぎ"), ("酒", "さけ"), ("鮭", "さけ"),
    ("玉", "たま"), ("多摩", "たま"), ("電気", "でんき"), ("伝記", "でんき"),
    ("清涼飲料水", "せいりょういんりょうすい"), ("赤血球", "せっけっきゅう"),
    ("井戸端会議", "いどばたかいぎ"), ("棒々鶏", "ばんばんじー"), ("目黒のさんま", "めぐろのさんま"),
    ("九蓮宝燈", "ちゅうれんぽうとう"), ("量子コンピューター", "りょうしこんぴゅーたー"),
    ("モバイルバッテリー", "もばいるばってりー"),
]


def write(path, header, rows):
    with open(path, "w", encoding="utf-8") as f:
        f.write(header + "\n")
        for r in rows:
            f.write("\t".join(r) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    assert len(WORDS) == 50, len(WORDS)
    write(OUT / "annotated.tsv", "# surface\tyomi\tmarked\tcategory", READINGS)
    write(OUT / "wordlist_50.tsv", "# surface\tyomi", WORDS)

    fill = 500 - len(READINGS)
    rows = [r[:3] for r in READINGS]
    if len(sys.argv) > 1:
        out = subprocess.run(
            [sys.argv[1], "synth", "--count", str(fill), "--seed", "500"],
            check=True, capture_output=True, text=True).stdout
        rows += [tuple(line.split("\t")[:3]) for line in out.splitlines() if line]
    write(OUT / "notation_500.tsv", "# surface\tyomi\tmarked", rows)


if __name__ == "__main__":
    main()
