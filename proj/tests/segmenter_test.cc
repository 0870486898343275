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

#include "epitag/segmenter.h"

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "epitag/errors.h"
#include "epitag/text.h"

namespace epitag {
namespace {

TEST(PunctTest, ClassifiesDefaultInventory) {
  EXPECT_EQ(ClassifyPunct(U'。'), PunctClass::kSentenceEnd);
  EXPECT_EQ(ClassifyPunct(U'？'), PunctClass::kSentenceEnd);
  EXPECT_EQ(ClassifyPunct(U'：'), PunctClass::kHeadMark);
  EXPECT_EQ(ClassifyPunct(U'，'), PunctClass::kSeparator);
  EXPECT_EQ(ClassifyPunct(U'、'), PunctClass::kSeparator);
  EXPECT_EQ(ClassifyPunct(U'；'), PunctClass::kSeparator);
  EXPECT_EQ(ClassifyPunct(U'孫'), PunctClass::kOther);
}

TEST(SplitSentencesTest, SpansPointIntoDocument) {
  const Document doc = MakeDocument("d", "公諱某。 子三人：甲、乙。。女一人");
  const auto sentences = SplitSentences(doc);
  ASSERT_EQ(sentences.size(), 3u);
  for (size_t i = 0; i < sentences.size(); ++i) {
    const Sentence& s = sentences[i];
    EXPECT_EQ(s.index, static_cast<int>(i));
    EXPECT_EQ(s.doc_id, "d");
    EXPECT_EQ(doc.text.substr(s.span.start, s.span.length()), s.raw_text);
  }
  EXPECT_EQ(sentences[0].raw_text, U"公諱某");
  EXPECT_EQ(sentences[1].raw_text, U"子三人：甲、乙");
  EXPECT_EQ(sentences[2].raw_text, U"女一人");
}

TEST(SplitSentencesTest, NoSentenceContainsTerminator) {
  const Document doc = MakeDocument("d", "甲！乙？丙。丁");
  for (const Sentence& s : SplitSentences(doc)) {
    for (char32_t c : s.raw_text) {
      EXPECT_NE(ClassifyPunct(c), PunctClass::kSentenceEnd);
    }
  }
}

TEST(SplitSentencesTest, CustomTerminators) {
  PunctConfig punct = PunctConfig::Default();
  punct.terminators = U"|";
  const Document doc = MakeDocument("d", "甲。乙|丙");
  const auto sentences = SplitSentences(doc, punct);
  ASSERT_EQ(sentences.size(), 2u);
  EXPECT_EQ(sentences[0].raw_text, U"甲。乙");
}

class CorpusTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("epitag_seg_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  void Write(const std::string& name, const std::string& body) {
    std::ofstream(dir_ / name) << body;
  }
  std::filesystem::path dir_;
};

TEST_F(CorpusTest, DirectoryIsReadInNameOrder) {
  Write("b.txt", "乙。");
  Write("a.txt", "甲 \n甲。");
  const auto docs = LoadCorpusDir(dir_.string());
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].id, "a");
  EXPECT_EQ(docs[0].text, U"甲甲。");
  EXPECT_EQ(docs[1].id, "b");
}

TEST_F(CorpusTest, TsvSkipsComments) {
  Write("c.tsv", "# header\nx\t甲。\ny\t乙。\n");
  const auto docs = LoadCorpusTsv((dir_ / "c.tsv").string());
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[1].id, "y");
}

TEST_F(CorpusTest, InvalidUtf8IsReported) {
  Write("bad.txt", "\xFF\xFE");
  EXPECT_THROW(LoadCorpusDir(dir_.string()), EncodingError);
}

TEST_F(CorpusTest, MissingDirectory) {
  EXPECT_THROW(LoadCorpusDir((dir_ / "nope").string()), IoError);
}

}  // namespace
}  // namespace epitag
