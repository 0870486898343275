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

#include "epitag/pipeline.h"

#include <sys/wait.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "epitag/defaults.h"
#include "epitag/errors.h"
#include "test_support.h"

namespace epitag {
namespace {

namespace fs = std::filesystem;
using testing::ReadAll;

const std::string kFixtures = EPITAG_FIXTURES;
const std::string kCli = EPITAG_CLI;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    work_ = fs::temp_directory_path() /
            (std::string("epitag_") + info->test_suite_name() + "_" +
             info->name());
    fs::remove_all(work_);
    fs::create_directories(work_);
  }
  void TearDown() override { fs::remove_all(work_); }

  RunConfig ReferenceConfig(const std::string& out) const {
    RunConfig cfg;
    cfg.corpus = kFixtures + "/reference_sentences.tsv";
    cfg.corpus_format = CorpusFormat::kTsv;
    cfg.out_dir = (work_ / out).string();
    return cfg;
  }

  int Cli(const std::string& args) const {
    const std::string cmd =
        "\"" + kCli + "\" " + args + " >" + (work_ / "cli.log").string() +
        " 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }

  std::string Path(const std::string& rel) const {
    return (work_ / rel).string();
  }

  fs::path work_;
};

TEST(ParallelForTest, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> seen(1000);
  ParallelFor(seen.size(), 8, [&](size_t i) { seen[i]++; });
  for (const auto& s : seen) EXPECT_EQ(s.load(), 1);
  ParallelFor(0, 4, [](size_t) { FAIL(); });
}

TEST_F(PipelineTest, ReferenceFixtureRun) {
  RunConfig cfg = ReferenceConfig("out");
  cfg.emit_compressed = true;
  RunPipeline(cfg);
  std::istringstream review(ReadAll(cfg.out_dir + "/review.csv"));
  EXPECT_EQ(ParseCsv(review).size(), 5u);
  EXPECT_NE(ReadAll(cfg.out_dir + "/stats.kv").find("mismatch_count=2"),
            std::string::npos);
  for (const char* f : {"audit.tsv", "rejected.csv", "stats.txt",
                        "compressed.jsonl", "cleaned.txt"}) {
    EXPECT_TRUE(fs::exists(cfg.out_dir + "/" + f)) << f;
  }
}

TEST_F(PipelineTest, StagesComposeToRun) {
  RunConfig whole = ReferenceConfig("whole");
  whole.corpus = kFixtures + "/epitaphs";
  whole.corpus_format = CorpusFormat::kDir;
  RunPipeline(whole);

  RunConfig staged = whole;
  staged.out_dir = Path("staged");
  RunFilterCommand(staged);
  RunCompressCommand(staged, staged.out_dir + "/audit.tsv");
  RunExtractCommand(staged, staged.out_dir + "/compressed.jsonl");
  EXPECT_EQ(ReadAll(staged.out_dir + "/review.csv"),
            ReadAll(whole.out_dir + "/review.csv"));
  EXPECT_EQ(ReadAll(staged.out_dir + "/rejected.csv"),
            ReadAll(whole.out_dir + "/rejected.csv"));

  RunConfig direct = whole;
  direct.out_dir = Path("direct");
  RunCompressCommand(direct, "");
  RunExtractCommand(direct, direct.out_dir + "/compressed.jsonl");
  EXPECT_EQ(ReadAll(direct.out_dir + "/review.csv"),
            ReadAll(whole.out_dir + "/review.csv"));
}

TEST_F(PipelineTest, WorkerCountDoesNotChangeOutput) {
  RunConfig one = ReferenceConfig("w1");
  one.corpus = kFixtures + "/epitaphs";
  one.corpus_format = CorpusFormat::kDir;
  one.emit_compressed = true;
  RunConfig many = one;
  many.out_dir = Path("w8");
  many.workers = 8;
  RunPipeline(one);
  RunPipeline(many);
  for (const char* f : {"review.csv", "rejected.csv", "audit.tsv",
                        "stats.txt", "stats.kv", "compressed.jsonl",
                        "cleaned.txt"}) {
    EXPECT_EQ(ReadAll(one.out_dir + "/" + f), ReadAll(many.out_dir + "/" + f))
        << f;
  }
}

TEST_F(PipelineTest, CompressedJsonlRoundTrips) {
  std::vector<Document> docs = LoadCorpusDir(kFixtures + "/epitaphs");
  const PipelineResult r = RunOnDocuments(docs, Resources::Defaults());
  std::ostringstream out;
  WriteCompressed(r.compressed, out);
  std::istringstream in(out.str());
  const auto back = ReadCompressed(in);
  ASSERT_EQ(back.size(), r.compressed.size());
  for (size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].tokens, r.compressed[i].tokens);
    EXPECT_EQ(back[i].doc_id, r.compressed[i].doc_id);
  }
}

TEST_F(PipelineTest, CorruptCompressedInputIsRejected) {
  std::istringstream bad(
      "{\"doc_id\":\"d\",\"sentence_index\":0,\"original\":\"孫男\","
      "\"tokens\":[[\"text\",0,1]]}\n");
  EXPECT_THROW(ReadCompressed(bad), Error);
}

TEST_F(PipelineTest, MissingDictionaryIsConfigError) {
  RunConfig cfg = ReferenceConfig("out");
  cfg.dict_paths[DictKind::kPlace] = Path("nope.csv");
  EXPECT_THROW(RunPipeline(cfg), ConfigError);
  EXPECT_FALSE(fs::exists(cfg.out_dir));
}

TEST_F(PipelineTest, EmptyCorpusWritesHeaders) {
  fs::create_directories(Path("empty"));
  RunConfig cfg = ReferenceConfig("out");
  cfg.corpus = Path("empty");
  cfg.corpus_format = CorpusFormat::kDir;
  RunPipeline(cfg);
  std::istringstream review(ReadAll(cfg.out_dir + "/review.csv"));
  EXPECT_EQ(ParseCsv(review).size(), 1u);
  std::istringstream rejected(ReadAll(cfg.out_dir + "/rejected.csv"));
  EXPECT_EQ(ParseCsv(rejected).size(), 1u);
}

TEST_F(PipelineTest, UserDictionariesReplaceDefaults) {
  WriteDefaults(Path("data"));
  RunConfig cfg = ReferenceConfig("out");
  cfg.dict_paths[DictKind::kKinship] = Path("data/kinship.csv");
  cfg.dict_paths[DictKind::kPlace] = Path("data/place.csv");
  cfg.rules_path = Path("data/filter_rules.tsv");
  cfg.registry_path = Path("data/registry.tsv");
  RunPipeline(cfg);
  RunConfig plain = ReferenceConfig("plain");
  RunPipeline(plain);
  EXPECT_EQ(ReadAll(cfg.out_dir + "/review.csv"),
            ReadAll(plain.out_dir + "/review.csv"));
}

TEST_F(PipelineTest, DictCheckCountsIssues) {
  std::ofstream(Path("place.csv")) << "眉州\n令\n";
  RunConfig cfg;
  cfg.dict_paths[DictKind::kPlace] = Path("place.csv");
  std::ostringstream out;
  EXPECT_EQ(RunDictCheck(cfg, out), 1u);
  EXPECT_NE(out.str().find("ROW 2"), std::string::npos);
}

TEST_F(PipelineTest, CliExitCodes) {
  const std::string corpus =
      "--corpus " + kFixtures + "/reference_sentences.tsv --corpus-format tsv";
  EXPECT_EQ(Cli("run " + corpus + " --out " + Path("ok")), 0);
  EXPECT_EQ(Cli("run " + corpus + " --out " + Path("x") +
                " --dict-place " + Path("missing.csv")),
            2);
  EXPECT_EQ(Cli("run " + corpus + " --out " + Path("x") + " --workers 0"), 2);
  EXPECT_EQ(Cli("frobnicate"), 2);
  std::ofstream(Path("bad_place.csv")) << "令\n";
  EXPECT_EQ(Cli("run " + corpus + " --out " + Path("x") + " --dict-place " +
                Path("bad_place.csv") + " --strict-dicts"),
            3);
  EXPECT_EQ(Cli("dict-check --dict-place " + Path("bad_place.csv") +
                " --strict-dicts"),
            3);
  std::ofstream(Path("bad.tsv")) << "d\t\xFF\xFE\n";
  EXPECT_EQ(Cli("run --corpus " + Path("bad.tsv") +
                " --corpus-format tsv --out " + Path("x")),
            4);
  std::ofstream(Path("bad_registry.tsv")) << "x\t(孫\t1\t\ttrue\n";
  EXPECT_EQ(Cli("run " + corpus + " --out " + Path("x") + " --registry " +
                Path("bad_registry.tsv")),
            2);
}

TEST_F(PipelineTest, CliConfigFileWithFlagOverride) {
  std::ofstream(Path("run.conf"))
      << "# recorded run\ncorpus=" << kFixtures
      << "/reference_sentences.tsv\ncorpus-format=tsv\nout=" << Path("from_conf")
      << "\nmax-name-len=3\nemit-compressed=true\n";
  ASSERT_EQ(Cli("run --config " + Path("run.conf")), 0);
  EXPECT_TRUE(fs::exists(Path("from_conf/compressed.jsonl")));
  // 即亨之 is three characters long.
  EXPECT_NE(ReadAll(Path("from_conf/review.csv")).find("即亨之"),
            std::string::npos);

  ASSERT_EQ(Cli("run --config " + Path("run.conf") +
                " --max-name-len 2 --out " + Path("from_flags")),
            0);
  EXPECT_EQ(ReadAll(Path("from_flags/review.csv")).find("應運|丙戌|即亨之"),
            std::string::npos);

  std::ofstream(Path("broken.conf")) << "workers\n";
  EXPECT_EQ(Cli("run --config " + Path("broken.conf")), 2);
  EXPECT_EQ(Cli("run --config " + Path("absent.conf")), 2);
}

TEST_F(PipelineTest, CliDefaultsCommand) {
  ASSERT_EQ(Cli("defaults --out " + Path("data")), 0);
  for (DictKind kind : kAllDictKinds) {
    EXPECT_TRUE(fs::exists(Path("data/" + std::string(
                                    defaults::DictionaryFileName(kind)))));
  }
  EXPECT_EQ(Cli("dict-check --dict-place " + Path("data/place.csv") +
                " --strict-dicts"),
            0);
}

}  // namespace
}  // namespace epitag
