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

#include "epitag/extractor.h"

#include <sstream>

#include <gtest/gtest.h>

#include "epitag/compressor.h"
#include "epitag/defaults.h"
#include "epitag/errors.h"
#include "epitag/pipeline.h"
#include "test_support.h"

namespace epitag {
namespace {

using testing::MakeSentence;
using testing::U;

const Resources& Res() {
  static const Resources kRes = Resources::Defaults();
  return kRes;
}

CompressedSentence Compress(const std::string& text) {
  const Compressor c(Res().place, Res().office, Res().appt);
  return c.Compress(MakeSentence(text));
}

SentenceExtraction Extract(const std::string& text,
                           HarvestRules rules = {}) {
  const Extractor e(Res().registry, Res().catalog, Res().kinship, rules);
  return e.Extract(Compress(text));
}

std::vector<std::string> Names(const KinshipRecord& r) {
  std::vector<std::string> out;
  for (const auto& n : r.names) out.push_back(EncodeUtf8(n.surface));
  return out;
}

// Digit-by-digit reading: 二十三 = 2 * 10 + 3.
int OracleParse(const std::u32string& s) {
  const std::u32string digits = U"一二三四五六七八九";
  auto digit = [&](char32_t c) {
    return static_cast<int>(digits.find(c)) + 1;
  };
  const size_t ten = s.find(U'十');
  if (ten == std::u32string::npos) return digit(s[0]);
  const int tens = ten == 0 ? 1 : digit(s[0]);
  const int units = ten + 1 < s.size() ? digit(s[ten + 1]) : 0;
  return tens * 10 + units;
}

TEST(NumeralTest, ExhaustiveRoundTrip) {
  for (int n = 1; n <= 99; ++n) {
    const std::u32string s = FormatChineseNumeral(n);
    EXPECT_EQ(ParseChineseNumeral(s), n);
    EXPECT_EQ(OracleParse(s), n) << EncodeUtf8(s);
  }
  EXPECT_EQ(FormatChineseNumeral(10), U"十");
  EXPECT_EQ(FormatChineseNumeral(20), U"二十");
  EXPECT_EQ(FormatChineseNumeral(15), U"十五");
}

TEST(NumeralTest, RejectsMalformed) {
  for (const char* bad : {"", "零", "十十", "一二", "百", "二十十", "一十一二",
                          "甲"}) {
    EXPECT_THROW(ParseChineseNumeral(U(bad)), UnparsableNumeral) << bad;
    EXPECT_FALSE(TryParseChineseNumeral(U(bad)).has_value()) << bad;
  }
  EXPECT_THROW(FormatChineseNumeral(0), std::out_of_range);
  EXPECT_THROW(FormatChineseNumeral(100), std::out_of_range);
}

TEST(RegistryTest, DefaultsCompileAndRoundTrip) {
  std::istringstream in{std::string(defaults::RegistryText())};
  const PatternRegistry reg = PatternRegistry::Parse(in);
  EXPECT_GE(reg.size(), 10u);
  std::istringstream again(reg.Serialize());
  const PatternRegistry round = PatternRegistry::Parse(again);
  ASSERT_EQ(round.size(), reg.size());
  for (size_t i = 0; i < reg.size(); ++i) {
    EXPECT_EQ(round.specs()[i].id, reg.specs()[i].id);
    EXPECT_EQ(round.specs()[i].expression, reg.specs()[i].expression);
    EXPECT_EQ(round.specs()[i].enabled, reg.specs()[i].enabled);
    EXPECT_EQ(round.specs()[i].target, reg.specs()[i].target);
    EXPECT_EQ(round.specs()[i].name_capture, reg.specs()[i].name_capture);
  }
}

TEST(RegistryTest, CompileErrors) {
  EXPECT_THROW(PatternRegistry({{"bad", "(孫", 1, 0}}), PatternCompileError);
  EXPECT_THROW(PatternRegistry({{"cap", "(孫)男", 2, 0}}),
               PatternCompileError);
  EXPECT_THROW(PatternRegistry({{"name", "(孫)男", 1, 0, true,
                                 PatternTarget::kCompressed, 3}}),
               PatternCompileError);
  std::istringstream short_row("x\t(孫)男\t1\n");
  EXPECT_THROW(PatternRegistry::Parse(short_row), PatternCompileError);
  std::istringstream bad_number("x\t(孫)男\tone\t\ttrue\n");
  EXPECT_THROW(PatternRegistry::Parse(bad_number), PatternCompileError);
}

TEST(FindHitsTest, FirstRegisteredPatternWinsOverlap) {
  const auto hits = FindHits(Compress("孫男二人：長某"), Res().registry);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].pattern_id, "S3");
  EXPECT_EQ(hits[0].relation_label, U"孫男");
  EXPECT_EQ(hits[0].raw_count_text, U"二");
  EXPECT_EQ(hits[0].sentence_span, (Span{0, 4}));
}

TEST(FindHitsTest, DisabledPatternsDoNotFire) {
  std::vector<PatternSpec> specs = Res().registry.specs();
  for (auto& s : specs) s.enabled = false;
  EXPECT_TRUE(FindHits(Compress("孫男二人：長某"), PatternRegistry(specs)).empty());
}

TEST(ExtractTest, DirectPatternTakesNameFromCapture) {
  const auto x = Extract("故宋州虞城令諱微，公長兄也");
  ASSERT_EQ(x.records.size(), 1u);
  const KinshipRecord& r = x.records[0];
  EXPECT_EQ(r.pattern_id, "T6-1");
  EXPECT_EQ(x.hits[0].target, PatternTarget::kRaw);
  EXPECT_EQ(r.relation_label, "公長兄");
  EXPECT_EQ(Names(r), std::vector<std::string>{"微"});
  EXPECT_EQ(r.names[0].span, (Span{7, 8}));
}

TEST(ExtractTest, NameCaptureOnCompressedPattern) {
  const PatternRegistry reg({{"N", "(子)曰([^/]+)", 1, 0, true,
                              PatternTarget::kCompressed, 2}});
  const Extractor e(reg, Res().catalog, Res().kinship);
  const auto x = e.Extract(Compress("子曰某某某，次"));
  ASSERT_EQ(x.records.size(), 1u);
  ASSERT_EQ(x.records[0].rejected.size(), 1u);
  EXPECT_EQ(x.records[0].rejected[0].surface, U"某某某");
  EXPECT_EQ(x.records[0].rejected[0].span, (Span{2, 5}));
}

TEST(ExtractTest, BirthClause) {
  const auto x = Extract("生二男，長曰昇，次曰旦");
  ASSERT_EQ(x.records.size(), 1u);
  const KinshipRecord& r = x.records[0];
  EXPECT_EQ(r.relation_label, "男");
  EXPECT_EQ(r.declared_count, 2);
  EXPECT_EQ(Names(r), (std::vector<std::string>{"昇", "旦"}));
  EXPECT_FALSE(r.count_mismatch);
}

TEST(ExtractTest, MaxNameLength) {
  HarvestRules rules;
  rules.max_name_len = 3;
  const auto x = Extract(testing::ReferenceSentences()[0], rules);
  ASSERT_EQ(x.records.size(), 1u);
  EXPECT_EQ(Names(x.records[0]),
            (std::vector<std::string>{"應運", "丙戌", "即亨之", "應龍"}));
  EXPECT_TRUE(x.records[0].rejected.empty());
}

TEST(ExtractTest, PlaceholderAdjacentRejection) {
  HarvestRules rules;
  rules.reject_placeholder_adjacent = true;
  const auto x = Extract(testing::ReferenceSentences()[0], rules);
  ASSERT_EQ(x.records.size(), 1u);
  EXPECT_EQ(Names(x.records[0]), (std::vector<std::string>{"應運", "應龍"}));
  bool found = false;
  for (const auto& c : x.records[0].rejected) {
    if (c.surface == U"丙戌") {
      found = true;
      EXPECT_EQ(c.rejection, RejectReason::kPlaceholderAdjacent);
    }
  }
  EXPECT_TRUE(found);
}

TEST(ExtractTest, RecordCarriesKinshipCode) {
  const PatternRegistry reg({{"K", "(远祖)諱", 1, 0}});
  const Extractor e(reg, Res().catalog, Res().kinship);
  const auto x = e.Extract(Compress("远祖諱某"));
  ASSERT_EQ(x.records.size(), 1u);
  ASSERT_TRUE(x.records[0].kinship_code.has_value());
  EXPECT_EQ(x.records[0].kinship_code->code, "2");
  EXPECT_EQ(x.records[0].kinship_code->generation, "G-1");
  EXPECT_FALSE(x.records[0].declared_count.has_value());
  EXPECT_FALSE(x.records[0].count_mismatch);
}

TEST(ExtractTest, UncodedRelationHasNoCode) {
  const auto x = Extract(testing::ReferenceSentences()[2]);
  ASSERT_EQ(x.records.size(), 1u);
  EXPECT_FALSE(x.records[0].kinship_code.has_value());
  EXPECT_EQ(x.records[0].pattern_id, "S3");
  EXPECT_EQ(x.records[0].original, testing::ReferenceSentences()[2].substr(
                                       0, x.records[0].original.size()));
}

TEST(ExtractTest, NameSpansPointAtSentence) {
  for (const auto& s : testing::ReferenceSentences()) {
    const auto x = Extract(s);
    for (const auto& r : x.records) {
      for (const auto& n : r.names) {
        const std::u32string at =
            x.cleaned.original.substr(n.span.start, n.span.length());
        EXPECT_TRUE(at.ends_with(n.surface)) << EncodeUtf8(at);
      }
    }
  }
}

TEST(ExtractTest, NoHitNoRecord) {
  EXPECT_TRUE(Extract("無一語及私").records.empty());
  EXPECT_TRUE(Extract("女二人，適士人").records.empty());
}

}  // namespace
}  // namespace epitag
