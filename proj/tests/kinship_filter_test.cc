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

#include "epitag/kinship_filter.h"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

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

FilterDecision Decide(const std::string& text) {
  const KinshipFilter filter(Res().rules, Res().exclusion);
  return filter.Decide(MakeSentence(text));
}

TEST(KinshipFilterTest, ReferenceSentencesAreAccepted) {
  for (const auto& s : testing::ReferenceSentences()) {
    EXPECT_TRUE(Decide(s).accepted) << s;
  }
}

TEST(KinshipFilterTest, RejectionReasons) {
  EXPECT_EQ(Decide("無一語及私").rejection_reason, "no kinship keyword");
  EXPECT_EQ(Decide("孔子言之").rejection_reason,
            "keyword 子 neutralized by exclusion");
  EXPECT_EQ(Decide("母曰：「勉之」").rejection_reason,
            "keyword 母 introduces speech");
  EXPECT_EQ(Decide("歸葬故里").rejection_reason,
            "marriage keyword 歸 without co-occurring term");
}

TEST(KinshipFilterTest, MatchedKeywordsFollowRuleOrder) {
  const FilterDecision d = Decide("娶劉氏，生子三人");
  ASSERT_TRUE(d.accepted);
  EXPECT_EQ(d.matched_keywords, (std::vector<std::string>{"子", "娶"}));
  EXPECT_FALSE(d.rejection_reason.has_value());
}

TEST(KinshipFilterTest, NeutralizationIsLocal) {
  EXPECT_FALSE(Decide("孔子之道").accepted);
  EXPECT_TRUE(Decide("孔子之道，傳其子").accepted);
  EXPECT_FALSE(Decide("父母俱存").accepted);
  EXPECT_TRUE(Decide("父母俱存，有弟二人").accepted);
}

TEST(KinshipFilterTest, GazetteerExclusionsDoNotNeutralize) {
  // 長子 is a county name; it prunes the gazetteers but is kept as kinship.
  EXPECT_TRUE(Decide("長子曰某").accepted);
}

TEST(KinshipFilterTest, ExclusionsOnlyRemoveAcceptances) {
  std::mt19937 rng(5);
  const auto& all = Res().exclusion.entries();
  std::vector<std::string> texts;
  for (const auto& s : testing::ReferenceSentences()) texts.push_back(s);
  for (const auto& e : all) {
    texts.push_back("有" + EncodeUtf8(e.surface) + "焉");
    texts.push_back(EncodeUtf8(e.surface) + "，子一人");
  }
  for (int round = 0; round < 50; ++round) {
    Dictionary small(DictKind::kExclusion);
    Dictionary large(DictKind::kExclusion);
    for (const auto& e : all) {
      const int pick = rng() % 3;
      if (pick == 0) small.Add(e);
      if (pick <= 1) large.Add(e);
    }
    const KinshipFilter fs(Res().rules, small);
    const KinshipFilter fl(Res().rules, large);
    for (const auto& t : texts) {
      const Sentence s = MakeSentence(t);
      if (fl.Decide(s).accepted) {
        EXPECT_TRUE(fs.Decide(s).accepted) << t;
      }
    }
  }
}

TEST(FilterRulesTest, ParseAndSerializeRoundTrip) {
  std::istringstream in(
      "# keyword\tkind\trequires\n子\tdirect\t\n配\tmarriage\t氏|夫人\n");
  const auto rules = ParseFilterRules(in);
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_TRUE(rules[0].unconditional());
  EXPECT_EQ(rules[1].kind, RuleKind::kMarriage);
  EXPECT_EQ(rules[1].requires_any,
            (std::vector<std::u32string>{U"氏", U"夫人"}));
  std::istringstream again(SerializeFilterRules(rules));
  const auto round = ParseFilterRules(again);
  ASSERT_EQ(round.size(), 2u);
  EXPECT_EQ(round[1].requires_any, rules[1].requires_any);
}

TEST(FilterRulesTest, BadKindIsConfigError) {
  std::istringstream in("子\tcousin\t\n");
  EXPECT_THROW(ParseFilterRules(in), ConfigError);
}

TEST(FilterRulesTest, DefaultsParse) {
  std::istringstream in{std::string(defaults::FilterRulesText())};
  EXPECT_GT(ParseFilterRules(in).size(), 20u);
}

TEST(FilterRulesTest, KinshipSurfacesGetCovered) {
  std::vector<FilterRule> rules;
  EnsureKeywordCoverage(rules, Res().kinship);
  EXPECT_EQ(rules.size(), Res().kinship.size());
  const KinshipFilter filter(rules, Dictionary(DictKind::kExclusion));
  EXPECT_TRUE(filter.Decide(MakeSentence("其远祖某")).accepted);
}

TEST(SelectTest, OneDecisionPerSentence) {
  const Document doc = MakeDocument("d", "孔子曰。子三人。歸葬。");
  const auto sentences = SplitSentences(doc);
  const auto decisions =
      SelectKinshipSentences(sentences, Res().rules, Res().exclusion);
  ASSERT_EQ(decisions.size(), 3u);
  EXPECT_FALSE(decisions[0].accepted);
  EXPECT_TRUE(decisions[1].accepted);
  EXPECT_EQ(decisions[1].sentence_index, 1);
  EXPECT_FALSE(decisions[2].accepted);
}

}  // namespace
}  // namespace epitag
