// Copyright 2026 The Epitag Authors.
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

#include "epitag/defaults.h"

namespace epitag::defaults {

namespace {

// Kinship titles with generation and code. Codes are opaque.
constexpr std::string_view kKinship = R"(# surface,generation,code
远祖,G-1,2
其先,G-1,2
三十一世祖,G-31,000
十八世祖,G-18,17
十六代祖,G-16,20
十五代祖,G-15,21
十三代祖,G-13,23
十二世祖,G-12,24
十二代祖,G-12,24
六代祖,G-6,36
)";

// 兩浙 is intentionally missing. 長子 is listed so the exclusion list has
// something to prune.
constexpr std::string_view kPlace = R"(# surface[,category]
眉州
茂州
春州
彭城
長子
開封府
河南府
應天府
大名府
京兆府
河中府
太原府
成都府
江寧府
建康府
臨安府
平江府
紹興府
慶元府
鎮江府
隆興府
江陵府
興元府
永興軍
杭州
蘇州
越州
明州
揚州
潤州
常州
湖州
婺州
衢州
福州
泉州
建州
洪州
吉州
潭州
鄂州
襄州
青州
齊州
鄆州
廣州
桂州
廬州
壽州
亳州
宿州
泗州
楚州
海州
)";

constexpr std::string_view kOffice = R"(# surface[,category]
右武衛大將軍
右監門衛大將軍
右千牛衛將軍
左武衛大將軍
左監門衛大將軍
左千牛衛將軍
太子右監門率府率
太子右內率府率
太子左監門率府率
太子左內率府率
太子庶子
太子
大將軍
將軍
刺史
團練使
防禦使
觀察使
節度使
進士
儒林郎
承事郎
承務郎
宣德郎
通直郎
朝奉郎
朝散大夫
朝請大夫
中大夫
轉運司物料官
轉運使
轉運判官
提點刑獄
知州
知縣
通判
倅
主簿
縣尉
縣令
司戶參軍
司理參軍
教授
大理寺丞
大理評事
秘書省校書郎
將作監主簿
殿中丞
太常博士
國子博士
翰林學士
龍圖閣直學士
監察御史
殿中侍御史
員外郎
郎中
侍郎
尚書
縣君
郡君
)";

// Appointment verbs, plus the occupation verbs 業 and 習.
constexpr std::string_view kApptVerb = R"(# surface[,category]
權,appointment
遷,appointment
授,appointment
贈,appointment
除,appointment
知,appointment
攝,appointment
試,appointment
拜,appointment
補,appointment
判,appointment
改,appointment
調,appointment
累贈,appointment
累遷,appointment
業,occupation
習,occupation
)";

// category<TAB>surface. Surfaces listed under two categories in the source
// lists (幼, 俱, 業, 未仕) appear once, under the first.
constexpr std::string_view kInterference = R"(# category	surface
次序	長
次序	次
次序	幼
次序	曰
次序	季曰
次序	伯曰
次序	仲曰
次序	叔曰
次序	長即
次序	也
次序	次即
科举	貢
科举	等
科举	第
科举	及第
科举	中第
科举	中舉
科举	舉子
科举	登
科举	科
官职动词	今
官职动词	今以
官职动词	今爲
官职动词	授
官职动词	事
官职动词	都
官职动词	轄
官职动词	新
官职动词	知
官职动词	舊
官职动词	監
官职动词	倉
官职动词	庫
官职动词	起
官职动词	終
官职动词	故
官职动词	前
官职动词	後
官职动词	左
官职动词	右
行政区	州
行政区	軍
行政区	路
行政区	郡
行政区	縣
行政区	府
地名	江淮
地名	兩浙
地名	寺
官职	尉
官职	某官
官职	官
官职	稅務
官职	支鹽
社会身份	士族
社会身份	士人
职业	俱
职业	業
职业	習
复数提示	皆
复数提示	並
复数提示	并
复数提示	餘
复数提示	竝
人生过程	未
人生过程	未冠
人生过程	未仕
人生过程	未官
人生过程	未命
人生过程	先歿
人生过程	先亡
人生过程	先公
人生过程	早夭
人生过程	早亡
人生过程	早世
人生过程	夭
人生过程	卒
人生过程	尚
人生过程	尚幼
人生过程	未名
人生过程	前卒
人生过程	先卒
人生过程	蚤卒
人生过程	俱有
人生过程	早
人生过程	早卒
人生过程	喪
人生过程	早喪
仕宦	未銓
仕宦	左銓
仕宦	司戶
仕宦	戶部
仕宦	戶
固定搭配	一
固定搭配	一人
固定搭配	二
固定搭配	二人
固定搭配	一尚
固定搭配	二尚
固定搭配	三尚
固定搭配	三
固定搭配	三人
固定搭配	三曰
固定搭配	四人
)";

// Entries without a category neutralize kinship keywords in the sentence
// filter and are pruned from the gazetteers; "gazetteer" entries only prune.
constexpr std::string_view kExclusion = R"(# surface[,category]
考課
考等
考其
考卒
考終
壽考
月考
諸弟
諸孫
經子
高弟
孔子
孟子
老子
莊子
庄子
父母
父子
男女
兄弟
長子,gazetteer
)";

constexpr std::string_view kRules = R"(# keyword	kind	required-terms
祖	direct	
考	direct	
妣	direct	
父	direct	
母	direct	
子	direct	
男	direct	
女	direct	
孫	direct	
婿	direct	
壻	direct	
兄	direct	
弟	direct	
姊	direct	
妹	direct	
妻	direct	
姪	direct	
甥	direct	
娶	marriage	
嫁	marriage	
配	marriage	氏|夫人|女|女孫
歸	marriage	氏|夫人|女|女孫
適	marriage	氏|夫人|女|女孫
)";

// id, expression, relation-capture, count-capture, enabled, target,
// name-capture.
// Most specific first. The S* patterns are the descendant heads; T6-* are
// ancestor, mother and marriage clauses; T6-1 is a direct pattern on raw
// text.
constexpr std::string_view kRegistry = R"(# id	expression	relation	count	enabled	target	name
S3	((?:曾孫|子|孫)男)(?:凡|共|有)?([一二三四五六七八九十]{1,3})人	1	2	true	compressed
S1	(?:^|[^女])(曾孫|孫)(?:凡|共|有)?([一二三四五六七八九十]{1,3})人	1	2	true	compressed
S2	(?:^|[^女])(孫子|子)(?:凡|共|有)?([一二三四五六七八九十]{1,3})人	1	2	true	compressed
S4	(?:^|[^子孫])(男)(?:凡|共|有)?([一二三四五六七八九十]{1,3})人	1	2	true	compressed
S5	(曾孫男|孫男|子男|曾孫|孫|子|男)([一二三四五六七八九十]{1,3})/	1	2	true	compressed
S6	(曾孫男|孫男|子男|曾孫|孫|子|男|女|婿)曰(?=[^/])	1		true	compressed
S7	生([一二三四五六七八九十])(男|子)(?=[^女孫]|$)	2	1	true	compressed
S8	(?:^|[^第])([一二三四五六七八九十])(男|子)(?=/wm/|[^女孫].{0,150}?/wm/)	2	1	true	compressed
T6-4	(曾祖考|曾王父|曾大父|祖考|祖父|王父|大父|曾祖|祖|父)(?:諱|曰)(?=[^/])	1		true	compressed
T6-5	(曾祖妣|曾王妣|曾祖母|祖妣|王妣|皇妣|祖母|曾妣|母|妣)曰(?=[^/])	1		true	compressed
T6-6	(娶|取)(?:/?[a-z_]+/|[^/a-z]){1,8}?(?:氏|夫人)	1		true	compressed
T6-1	諱([^，。；：]{1,5})[，；]([^，。；：]{1,6})也	2		true	raw	1
)";

}  // namespace

std::string_view DictionaryText(DictKind kind) {
  switch (kind) {
    case DictKind::kKinship: return kKinship;
    case DictKind::kPlace: return kPlace;
    case DictKind::kOffice: return kOffice;
    case DictKind::kApptVerb: return kApptVerb;
    case DictKind::kInterference: return kInterference;
    case DictKind::kExclusion: return kExclusion;
  }
  return {};
}

std::string_view FilterRulesText() { return kRules; }
std::string_view RegistryText() { return kRegistry; }

std::string_view DictionaryFileName(DictKind kind) {
  switch (kind) {
    case DictKind::kKinship: return "kinship.csv";
    case DictKind::kPlace: return "place.csv";
    case DictKind::kOffice: return "office.csv";
    case DictKind::kApptVerb: return "appt_verb.csv";
    case DictKind::kInterference: return "interference.tsv";
    case DictKind::kExclusion: return "exclusion.csv";
  }
  return {};
}

}  // namespace epitag::defaults
