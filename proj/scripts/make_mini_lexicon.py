#!/usr/bin/env python3
"""Regenerates data/mini_lexicon.tsv and data/matrix.def.

Source rows are "surface marked-reading pos goshu sandhi cost"; the yomi
column is the marked reading without '[' and ']', and the connection ids are
assigned from the part of speech.
"""
import pathlib

IDS = {"noun": 1, "proper": 2, "place": 2, "surname": 2, "given": 3, "numeral": 4,
       "suffix": 5, "counter": 6, "particle": 7, "prefix": 8, "verb": 9, "adj": 10,
       "symbol": 11}
NUM_IDS = 12

ROWS = """
一 い[ち numeral sino C3 3000
二 に] numeral sino C3 3000
三 さ[ん numeral sino C3 3000
四 よ[ん numeral sino C3 3200
五 ご] numeral sino C3 3000
六 ろ[く numeral sino C3 3000
七 な[な] numeral native C3 3200
八 は[ち numeral sino C3 3000
九 きゅ]う numeral sino C3 3200
十 じゅ]う numeral sino C3 3000
百 ひゃ[く numeral sino C3 3000
千 せ[ん numeral sino C3 3000
万 ま]ん numeral sino C3 3000
億 お]く numeral sino C3 3200
兆 ちょ]う numeral sino C3 3400
〇 ぜ]ろ numeral western C3 3400
点 て]ん numeral sino C4 3000
一日 い[ちにち] noun sino C2 9000
日 に]ち suffix sino C3 2500
日 じつ suffix sino C4 4500
日 ひ] noun native C1 4000
日 か counter native C4 5000
千秋 ち]あき given proper none 3000
千秋 せ[んしゅう noun sino C2 6000
秋 あ]き noun native C2 4000
月 が[つ counter sino C4 3500
月 つ]き noun native C2 4500
年 ね[ん counter sino C4 3500
円 え[ん counter sino C4 3500
分 ふ[ん counter sino C4 3500
秒 びょ]う counter sino C3 3800
号 ご]う counter sino C3 3800
個 こ counter sino C4 4000
人 に[ん counter sino C4 4200
本 ほ[ん counter sino C4 4200
の の particle native none 1000
が が particle native none 1000
と と particle native none 1000
は わ particle native none 1000
も も particle native none 1200
を を particle native none 1200
に に particle native none 1200
で で particle native none 1200
や や particle native none 1400
酒 さ[け noun native C1 4500
鮭 さ]け noun native C2 4600
藤 ふ[じ noun native C1 4600
富士 ふ]じ place proper C1 4000
玉 た[ま] noun native C3 4500
多摩 た]ま place proper C1 4000
伝記 で[んき noun sino C1 4500
電気 で]んき noun sino C2 4200
橋 は[し] noun native C3 4300
箸 は]し noun native C2 4500
端 は[し noun native C1 4600
深層 し[んそう noun sino C1 5200
学習 が[くしゅう noun sino C2 4200
機械 き[か]い noun sino C1 4300
清涼 せ[いりょう noun sino C1 5400
飲料 い[んりょう noun sino C2 5000
水 み[ず noun native C3 3800
量子 りょ]うし noun sino C1 5200
京都 きょ]うと place proper C1 3800
東京 と[うきょう place proper C1 3500
タワー た]わー noun western C2 4800
博物館 は[くぶ]つかん noun sino C2 5000
倉庫 そ]うこ noun sino C2 5000
赤 あ[か noun native C1 4500
レンガ れ[んが noun western C1 5200
横浜 よ[こはま place proper C1 3800
江戸 え]ど place proper C1 4000
大学 だ[いがく noun sino C2 4000
大学院 だ[いがくいん noun sino C2 4800
信号 し[んごう noun sino C1 4600
処理 しょ]り noun sino C2 4500
洗濯 せ[んたく noun sino C1 4800
海浜 か[いひん noun sino C1 5600
しめじ茸 し[めじ]たけ noun native C1 6000
炭酸 た[んさん noun sino C1 5200
兎 う[さぎ noun native C2 5000
茸 き[のこ noun native C2 5200
花 は[な] noun native C3 4300
鼻 は[な noun native C1 4500
雨 あ]め noun native C2 4300
飴 あ[め noun native C1 4800
雲 く]も noun native C2 4600
空 そ]ら noun native C2 4300
山 や[ま] noun native C3 4000
川 か[わ] noun native C3 4000
海 う]み noun native C2 4200
森 も]り noun native C2 4600
林 は[やし noun native C5 4800
石 い[し] noun native C3 4500
岩 い[わ noun native C1 4800
島 し[ま] noun native C3 4500
道 み[ち noun native C4 4300
坂 さ[か] noun native C3 4800
池 い[け] noun native C3 4800
湖 み[ずうみ noun native C1 5000
風 か[ぜ noun native C1 4500
雪 ゆ[き] noun native C3 4500
星 ほ[し noun native C1 4600
月光 げ[っこう noun sino C1 5600
太陽 た[いよう noun sino C1 4800
地球 ち]きゅう noun sino C2 4800
宇宙 う]ちゅう noun sino C2 4800
電話 で[んわ noun sino C1 4300
電車 で[んしゃ noun sino C1 4400
自動車 じ[どうしゃ noun sino C2 4800
鉄道 て[つどう noun sino C1 4800
道路 ど]うろ noun sino C2 4800
公園 こ[うえん noun sino C1 4600
図書館 と]しょかん noun sino C2 4800
病院 びょ[ういん noun sino C1 4500
学校 が[っこう noun sino C1 4300
会社 か[いしゃ noun sino C1 4300
銀行 ぎ[んこう noun sino C1 4500
市場 い]ちば noun native C2 4800
工場 こ[うじょう noun sino C5 4800
空港 く[うこう noun sino C1 4800
港 み[なと noun native C1 4800
駅 え]き suffix sino C2 3500
市 し] suffix sino C3 3500
県 け[ん suffix sino C4 3500
区 く] suffix sino C3 3600
町 ちょ[う suffix sino C4 3600
村 む]ら suffix native C2 3800
線 せ[ん suffix sino C4 3600
座 ざ suffix sino C4 3800
式 し]き suffix sino C3 3800
家 か suffix sino C4 4000
会議 か]いぎ noun sino C2 4500
井戸端 い[どばた noun native C1 5600
仕事 し[ごと noun native C1 4300
言葉 こ[とば] noun native C3 4400
音楽 お]んがく noun sino C2 4500
映画 え]いが noun sino C2 4500
写真 しゃ[しん noun sino C1 4500
新聞 し[んぶん noun sino C1 4600
雑誌 ざ[っし noun sino C1 4800
番組 ば[んぐみ noun sino C1 4800
時計 と[けい noun sino C1 4600
眼鏡 め]がね noun native C2 4800
帽子 ぼ[うし noun sino C1 4800
靴 く]つ noun native C2 4800
鞄 か[ばん noun native C1 4800
机 つ[くえ noun native C1 4800
椅子 い[す noun sino C1 4800
部屋 へ[や] noun native C3 4600
窓 ま[ど noun native C1 4800
扉 と[びら noun native C5 5000
庭 に[わ noun native C1 4800
家族 か]ぞく noun sino C2 4500
友達 と[もだち noun native C1 4500
先生 せ[んせ]い noun sino C3 4400
学生 が[くせい noun sino C1 4400
医者 い[しゃ noun sino C1 4800
料理 りょ]うり noun sino C2 4500
野菜 や[さい noun sino C1 4800
果物 く[だ]もの noun native C3 4800
肉 に[く] noun sino C3 4600
魚 さ[かな noun native C1 4600
卵 た[まご] noun native C3 4800
牛乳 ぎゅ[うにゅう noun sino C1 4800
お茶 お[ちゃ noun mixed C1 4600
珈琲 こ[ーひー noun western C1 5200
紅茶 こ]うちゃ noun sino C2 5000
砂糖 さ[とう] noun sino C3 5000
塩 し[お] noun native C3 5000
米 こ]め noun native C2 4800
麦 む[ぎ noun native C1 5000
豆 ま[め noun native C1 5000
猫 ね[こ noun native C1 4600
犬 い]ぬ noun native C2 4600
馬 う[ま] noun native C3 4800
牛 う]し noun native C2 4800
鳥 と[り noun native C1 4800
象 ぞ]う noun sino C2 5000
熊 く[ま noun native C1 5000
狐 き[つね noun native C1 5200
狸 た[ぬき noun native C1 5200
亀 か]め noun native C2 5200
蛙 か[える noun native C1 5200
蝶 ちょ]う noun sino C2 5200
桜 さ[くら noun native C1 4800
梅 う]め noun native C2 5000
松 ま]つ noun native C2 5000
竹 た[け noun native C1 5000
菊 き]く noun sino C2 5200
薔薇 ば[ら noun native C1 5400
草 く[さ] noun native C3 5000
葉 は noun native C4 5000
根 ね] noun native C2 5200
種 た]ね noun native C2 5200
色 い[ろ] noun native C3 4800
白 し[ろ] noun native C3 4800
黒 く[ろ] noun native C3 4800
青 あ]お noun native C2 4800
緑 み]どり noun native C2 5000
金 か[ね noun native C1 4800
銀 ぎ]ん noun sino C2 5000
鉄 て]つ noun sino C2 5000
紙 か[み] noun native C3 4800
布 ぬ[の noun native C1 5000
糸 い[と noun native C1 5000
針 は]り noun native C2 5000
箱 は[こ noun native C1 4800
袋 ふ[くろ] noun native C3 5000
瓶 び]ん noun sino C2 5200
皿 さ[ら noun native C1 5000
鍋 な]べ noun native C2 5000
火 ひ noun native C4 5000
光 ひ[かり] noun native C3 4800
影 か[げ] noun native C3 5000
音 お[と] noun native C3 4800
声 こ]え noun native C2 4800
夢 ゆ]め noun native C2 4800
心 こ[ころ] noun native C3 4800
頭 あ[たま] noun native C3 4800
顔 か[お noun native C1 4800
目 め] noun native C2 4800
耳 み[み] noun native C3 4800
口 く[ち noun native C1 4800
手 て] noun native C2 4800
足 あ[し] noun native C3 4800
体 か[らだ noun native C1 4800
時間 じ[かん noun sino C1 4300
世界 せ]かい noun sino C2 4300
社会 しゃ[かい noun sino C1 4400
経済 け[いざい noun sino C1 4500
政治 せ[いじ noun sino C1 4500
歴史 れ[きし noun sino C1 4500
文化 ぶ]んか noun sino C2 4500
科学 か]がく noun sino C2 4500
技術 ぎ]じゅつ noun sino C2 4500
情報 じょ[うほう noun sino C1 4400
研究 け[んきゅう noun sino C1 4400
教育 きょ[ういく noun sino C1 4500
問題 も[んだい noun sino C1 4300
計算 け[いさん noun sino C1 4500
言語 げ]んご noun sino C2 4600
数学 す[うがく] noun sino C3 4600
物理 ぶ]つり noun sino C2 4600
化学 か]がく noun sino C2 4700
生物 せ[いぶつ noun sino C1 4700
地図 ち]ず noun sino C2 4800
天気 て]んき noun sino C2 4600
季節 き]せつ noun sino C2 4800
春 は]る noun native C2 4600
夏 な]つ noun native C2 4600
冬 ふ[ゆ] noun native C3 4600
朝 あ]さ noun native C2 4600
夜 よ]る noun native C2 4600
昼 ひ[る] noun native C3 4600
祭 ま[つり noun native C1 5000
旅行 りょ[こう noun sino C1 4800
温泉 お[んせん noun sino C1 5000
神社 じ]んじゃ noun sino C2 5000
寺 て[ら] noun native C3 5000
城 し[ろ noun native C1 5000
塔 と]う noun sino C2 5200
門 も]ん noun sino C2 5200
城下町 じょ[うかまち noun sino C1 5800
運動 う[んどう noun sino C1 4800
野球 や[きゅう noun sino C1 4800
相撲 す[もう noun native C1 5000
試合 し[あい noun native C1 4800
選手 せ]んしゅ noun sino C2 4800
記録 き[ろく noun sino C1 4800
宝 た[から] noun native C3 5200
手箱 て[ばこ noun native C1 5600
鉛筆 え[んぴつ noun sino C1 5000
電子 で]んし noun sino C2 5000
計画 け[いかく noun sino C1 4800
事件 じ]けん noun sino C2 4800
会話 か[いわ noun sino C1 4800
食堂 しょ[くどう noun sino C1 5000
台所 だ[いどころ noun native C1 5200
階段 か[いだん noun sino C1 5000
屋根 や]ね noun native C2 5000
煙突 え[んとつ noun sino C1 5400
灯台 と[うだい noun sino C1 5400
船 ふ]ね noun native C2 4800
飛行機 ひ[こうき] noun sino C3 5000
自転車 じ[てんしゃ] noun sino C3 5000
バス ば]す noun western C2 4800
テレビ て]れび noun western C2 4600
ラジオ ら]じお noun western C2 4800
カメラ か]めら noun western C2 4800
ピアノ ぴ[あの noun western C1 5000
ギター ぎ]たー noun western C2 5000
パン ぱ]ん noun western C2 4800
ケーキ け]ーき noun western C2 5000
ボール ぼ[ーる noun western C1 5000
ゲーム げ]ーむ noun western C2 5000
ニュース にゅ]ーす noun western C2 4800
モバイル も[ばいる noun western C1 5400
バッテリー ば]ってりー noun western C2 5400
コンピューター こ[んぴゅ]ーたー noun western C2 5200
オリンピック お[りんぴ]っく noun western C2 5200
リチウム り[ちうむ noun western C1 5600
イオン い]おん noun western C2 5400
バスケットボール ば[すけっとぼ]ーる noun western C2 5600
リーグ り]ーぐ noun western C2 5200
シャツ しゃ]つ noun western C2 5200
カード か]ーど noun western C2 5000
ダム だ]む noun western C2 5200
ブドウ ぶ[どう noun native C1 5200
球菌 きゅ[うきん noun sino C1 5800
黄色 き[いろ noun native C1 5200
田中 た[なか surname proper C1 3500
佐藤 さ[とう surname proper C1 3500
鈴木 す[ずき surname proper C1 3500
山田 や]まだ surname proper C1 3600
徳川 と[くがわ surname proper C1 3800
家康 い[えやす given proper none 3800
太郎 た]ろう given proper none 3500
花子 は]なこ given proper none 3600
浦島 う[ら]しま surname proper C1 4200
竜宮城 りゅ[うぐうじょう noun sino C2 5800
渋谷 し[ぶや place proper C1 3600
新宿 し[んじゅく place proper C1 3600
品川 し[な]がわ place proper C1 3800
上野 う[えの place proper C1 3800
国立 く[にたち place proper C1 4200
埼玉 さ[いたま place proper C1 3800
神奈川 か[なが]わ place proper C1 3800
千葉 ち]ば place proper C1 3800
大阪 お[おさか place proper C1 3600
名古屋 な[ごや place proper C1 3600
札幌 さ[っぽろ place proper C1 3800
五稜郭 ご[りょ]うかく place proper C1 4800
目黒 め]ぐろ place proper C1 4000
飯田 い[いだ place proper C1 4200
""".strip().splitlines()


def matrix():
    m = [[0] * NUM_IDS for _ in range(NUM_IDS)]
    noun, proper, given, numeral, suffix, counter, particle, prefix = 1, 2, 3, 4, 5, 6, 7, 8
    for r in range(1, NUM_IDS):
        for l in range(1, NUM_IDS):
            m[r][l] = 400
    m[0][particle] = 1500
    m[particle][0] = 800
    for a in (noun, proper, given):
        m[a][particle] = -300
        m[particle][a] = 0
        m[a][suffix] = -200
        for b in (noun, proper, given):
            m[a][b] = 300
    m[numeral][numeral] = -300
    m[numeral][suffix] = -400
    m[numeral][counter] = -800
    m[numeral][noun] = 500
    m[suffix][given] = 0
    m[suffix][noun] = 200
    m[counter][numeral] = 600
    m[proper][given] = -400
    m[prefix][noun] = -500
    return m


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "data"
    seen = set()
    out = ["# surface\tyomi\taccent\tpos\tgoshu\tsandhi\tleft_id\tright_id\tcost"]
    for row in ROWS:
        surface, marked, pos, goshu, sandhi, cost = row.split()
        yomi = marked.replace("[", "").replace("]", "")
        key = (surface, yomi, pos)
        assert key not in seen, key
        seen.add(key)
        cid = IDS[pos]
        out.append("\t".join([surface, yomi, marked, pos, goshu, sandhi, str(cid), str(cid), cost]))
    (root / "mini_lexicon.tsv").write_text("\n".join(out) + "\n", encoding="utf-8")
    m = matrix()
    lines = [f"{NUM_IDS} {NUM_IDS}"] + [" ".join(str(v) for v in row) for row in m]
    (root / "matrix.def").write_text("\n".join(lines) + "\n")
    print(len(ROWS), "entries")


if __name__ == "__main__":
    main()
