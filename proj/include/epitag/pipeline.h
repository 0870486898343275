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

#ifndef EPITAG_PIPELINE_H_
#define EPITAG_PIPELINE_H_

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "epitag/compressor.h"
#include "epitag/extractor.h"
#include "epitag/kinship_filter.h"
#include "epitag/lexicon.h"
#include "epitag/noise_filter.h"
#include "epitag/review_output.h"
#include "epitag/segmenter.h"

namespace epitag {

enum class CorpusFormat { kDir, kTsv };

struct RunConfig {
  std::string corpus;
  CorpusFormat corpus_format = CorpusFormat::kDir;
  // Unset kinds use the built-in defaults.
  std::map<DictKind, std::string> dict_paths;
  std::string rules_path;
  std::string registry_path;
  std::string out_dir;
  bool emit_compressed = false;
  bool strict_dicts = false;
  size_t max_name_len = 2;
  int workers = 1;

  // Throws ConfigError if a referenced path is missing or a value is out
  // of range. `need_corpus` is false for stages that read other inputs.
  void Validate(bool need_corpus = true) const;
};

// Everything the stages read. Immutable once loaded and shared by workers.
struct Resources {
  Dictionary kinship{DictKind::kKinship};
  Dictionary place{DictKind::kPlace};
  Dictionary office{DictKind::kOffice};
  Dictionary appt{DictKind::kApptVerb};
  Dictionary exclusion{DictKind::kExclusion};
  InterferenceCatalog catalog;
  std::vector<FilterRule> rules;
  PatternRegistry registry{std::vector<PatternSpec>{}};
  HarvestRules harvest;
  // Gazetteer overlaps and exclusion removals, for dict-check.
  std::vector<std::string> notes;

  // Loads the configured files, falling back to the built-in data. Place
  // and office are pruned by the exclusions and by kinship surfaces; rules
  // are extended to cover every kinship surface.
  static Resources Load(const RunConfig& config);
  static Resources Defaults();

  const Dictionary& dictionary(DictKind kind) const;
};

// Runs fn(i) for i in [0, n) on up to `workers` threads.
void ParallelFor(size_t n, int workers, const std::function<void(size_t)>& fn);

std::vector<Sentence> SegmentCorpus(const std::vector<Document>& docs);
std::vector<FilterDecision> RunFilterStage(
    const std::vector<Sentence>& sentences, const Resources& res,
    int workers);
std::vector<CompressedSentence> RunCompressStage(
    const std::vector<Sentence>& sentences, const Resources& res,
    int workers);
std::vector<SentenceExtraction> RunExtractStage(
    const std::vector<CompressedSentence>& compressed, const Resources& res,
    int workers);

struct PipelineResult {
  std::vector<Sentence> sentences;
  std::vector<FilterDecision> decisions;
  std::vector<CompressedSentence> compressed;  // accepted sentences only
  std::vector<SentenceExtraction> extractions;
  std::vector<KinshipRecord> records;
  RunStats stats;
};

// segment -> filter -> compress -> delete -> extract, in memory.
PipelineResult RunOnDocuments(const std::vector<Document>& docs,
                              const Resources& res, int workers = 1);

std::vector<Document> LoadCorpus(const RunConfig& config);

// Stage files.
// audit.tsv: doc_id, sentence_index, start, end, accepted, matched, reason,
// text. Rejected sentences are included; readers keep accepted ones.
void WriteAudit(const std::vector<Sentence>& sentences,
                const std::vector<FilterDecision>& decisions,
                std::ostream& out);
std::vector<Sentence> ReadAcceptedSentences(std::istream& in);

// compressed.jsonl: one JSON object per sentence with doc_id,
// sentence_index, original, serialized and tokens ([kind, start, end]).
void WriteCompressed(const std::vector<CompressedSentence>& compressed,
                     std::ostream& out);
std::vector<CompressedSentence> ReadCompressed(std::istream& in);

// Whole runs writing into config.out_dir. Each throws ConfigError,
// DictionaryError or IoError; messages start with the failing stage.
void RunPipeline(const RunConfig& config);
void RunFilterCommand(const RunConfig& config);
void RunCompressCommand(const RunConfig& config, const std::string& input);
void RunExtractCommand(const RunConfig& config, const std::string& input);
// Returns the number of validation issues found.
size_t RunDictCheck(const RunConfig& config, std::ostream& out);
void WriteDefaults(const std::string& dir);

}  // namespace epitag

#endif  // EPITAG_PIPELINE_H_
