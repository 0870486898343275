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

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <mutex>
#include <thread>

#include "epitag/defaults.h"
#include "epitag/errors.h"
#include "epitag/text.h"
#include "json.hpp"

namespace epitag {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

enum class StageKind { kConfig, kDictionary, kIo };

// Runs `fn`, prefixing any library error with the stage name. Encoding
// errors count as dictionary errors while loading resources and as I/O
// errors elsewhere.
template <typename Fn>
auto InStage(const std::string& stage, Fn&& fn, bool loading = false) {
  auto tag = [&](const std::exception& e) {
    return "[" + stage + "] " + e.what();
  };
  try {
    return fn();
  } catch (const ConfigError& e) {
    throw ConfigError(tag(e));
  } catch (const PatternCompileError& e) {
    throw ConfigError(tag(e));
  } catch (const DictionaryError& e) {
    throw DictionaryError(tag(e));
  } catch (const EncodingError& e) {
    if (loading) throw DictionaryError(tag(e));
    throw IoError(tag(e));
  } catch (const IoError& e) {
    throw IoError(tag(e));
  }
}

void RequireFile(const std::string& path, const std::string& what) {
  std::error_code ec;
  if (path.empty() || !fs::exists(path, ec)) {
    throw ConfigError(what + " not found: '" + path + "'");
  }
}

std::ofstream OpenOut(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

void PrepareOutDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError("cannot create output directory " + dir);
  }
}

std::string_view TokenKindName(TokenKind kind) {
  return kind == TokenKind::kText ? "text" : MarkerName(kind);
}

TokenKind ParseTokenKind(const std::string& name) {
  for (TokenKind k : {TokenKind::kText, TokenKind::kHeadMark, TokenKind::kSep,
                      TokenKind::kPlace, TokenKind::kOffice,
                      TokenKind::kApptVerb}) {
    if (TokenKindName(k) == name) return k;
  }
  throw IoError("unknown token kind '" + name + "'");
}

std::vector<KinshipRecord> CollectRecords(
    const std::vector<SentenceExtraction>& extractions) {
  std::vector<KinshipRecord> records;
  for (const auto& x : extractions) {
    records.insert(records.end(), x.records.begin(), x.records.end());
  }
  return records;
}

void WriteOutputs(const std::string& dir,
                  const std::vector<KinshipRecord>& records,
                  const RunStats& stats) {
  const fs::path out(dir);
  {
    auto f = OpenOut(out / "review.csv");
    WriteReviewCsv(records, f);
  }
  {
    auto f = OpenOut(out / "rejected.csv");
    WriteRejectedCsv(records, f);
  }
  OpenOut(out / "stats.txt") << stats.ToText();
  OpenOut(out / "stats.kv") << stats.ToKeyValue();
}

}  // namespace

// ---------------------------------------------------------------------------
// Configuration and resources

void RunConfig::Validate(bool need_corpus) const {
  if (need_corpus) RequireFile(corpus, "corpus");
  for (const auto& [kind, path] : dict_paths) {
    RequireFile(path, std::string(DictKindName(kind)) + " dictionary");
  }
  if (!rules_path.empty()) RequireFile(rules_path, "rules file");
  if (!registry_path.empty()) RequireFile(registry_path, "registry file");
  if (max_name_len < 1) throw ConfigError("max-name-len must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
}

Resources Resources::Load(const RunConfig& config) {
  Resources res;
  LoadOptions options;
  options.strict = config.strict_dicts;
  auto load = [&](DictKind kind) {
    auto it = config.dict_paths.find(kind);
    if (it != config.dict_paths.end()) {
      return Dictionary::Load(it->second, kind, options);
    }
    return Dictionary::ParseString(defaults::DictionaryText(kind), kind,
                                   options);
  };
  res.kinship = load(DictKind::kKinship);
  res.exclusion = load(DictKind::kExclusion);
  res.appt = load(DictKind::kApptVerb);
  for (auto [kind, target] : {std::pair{DictKind::kPlace, &res.place},
                              std::pair{DictKind::kOffice, &res.office}}) {
    Dictionary raw = load(kind);
    Dictionary pruned = ApplyExclusions(
        ApplyExclusions(raw, res.exclusion), res.kinship);
    if (pruned.removed_count() > 0) {
      res.notes.push_back(std::string(DictKindName(kind)) + ": " +
                          std::to_string(pruned.removed_count()) +
                          " entr(ies) removed by exclusions/kinship");
    }
    *target = std::move(pruned);
  }
  for (const ValidationIssue& issue : CrossCheck(res.place, res.office)) {
    res.notes.push_back("office " + issue.ToString());
  }

  res.catalog = InterferenceCatalog::FromDictionary(load(DictKind::kInterference));
  if (options.strict && !res.catalog.surfaces().report().empty()) {
    throw DictionaryError("interference catalog: " +
                          res.catalog.surfaces().report().front().ToString());
  }

  if (config.rules_path.empty()) {
    std::istringstream in{std::string(defaults::FilterRulesText())};
    res.rules = ParseFilterRules(in);
  } else {
    res.rules = LoadFilterRules(config.rules_path);
  }
  EnsureKeywordCoverage(res.rules, res.kinship);

  if (config.registry_path.empty()) {
    std::istringstream in{std::string(defaults::RegistryText())};
    res.registry = PatternRegistry::Parse(in);
  } else {
    res.registry = PatternRegistry::Load(config.registry_path);
  }
  res.harvest.max_name_len = config.max_name_len;
  return res;
}

Resources Resources::Defaults() { return Load(RunConfig{}); }

const Dictionary& Resources::dictionary(DictKind kind) const {
  switch (kind) {
    case DictKind::kKinship: return kinship;
    case DictKind::kPlace: return place;
    case DictKind::kOffice: return office;
    case DictKind::kApptVerb: return appt;
    case DictKind::kInterference: return catalog.surfaces();
    case DictKind::kExclusion: return exclusion;
  }
  return kinship;
}

// ---------------------------------------------------------------------------
// Stages

void ParallelFor(size_t n, int workers,
                 const std::function<void(size_t)>& fn) {
  const size_t threads =
      std::min<size_t>(n, static_cast<size_t>(std::max(workers, 1)));
  if (threads <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

std::vector<Sentence> SegmentCorpus(const std::vector<Document>& docs) {
  std::vector<Sentence> sentences;
  for (const Document& doc : docs) {
    auto part = SplitSentences(doc);
    sentences.insert(sentences.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
  }
  return sentences;
}

std::vector<FilterDecision> RunFilterStage(
    const std::vector<Sentence>& sentences, const Resources& res,
    int workers) {
  const KinshipFilter filter(res.rules, res.exclusion);
  std::vector<FilterDecision> decisions(sentences.size());
  ParallelFor(sentences.size(), workers,
              [&](size_t i) { decisions[i] = filter.Decide(sentences[i]); });
  return decisions;
}

std::vector<CompressedSentence> RunCompressStage(
    const std::vector<Sentence>& sentences, const Resources& res,
    int workers) {
  const Compressor compressor(res.place, res.office, res.appt);
  std::vector<CompressedSentence> out(sentences.size());
  ParallelFor(sentences.size(), workers,
              [&](size_t i) { out[i] = compressor.Compress(sentences[i]); });
  return out;
}

std::vector<SentenceExtraction> RunExtractStage(
    const std::vector<CompressedSentence>& compressed, const Resources& res,
    int workers) {
  const Extractor extractor(res.registry, res.catalog, res.kinship,
                            res.harvest);
  std::vector<SentenceExtraction> out(compressed.size());
  ParallelFor(compressed.size(), workers,
              [&](size_t i) { out[i] = extractor.Extract(compressed[i]); });
  return out;
}

PipelineResult RunOnDocuments(const std::vector<Document>& docs,
                              const Resources& res, int workers) {
  PipelineResult r;
  r.sentences = SegmentCorpus(docs);
  r.decisions = RunFilterStage(r.sentences, res, workers);
  std::vector<Sentence> accepted;
  for (size_t i = 0; i < r.sentences.size(); ++i) {
    if (r.decisions[i].accepted) accepted.push_back(r.sentences[i]);
  }
  r.compressed = RunCompressStage(accepted, res, workers);
  r.extractions = RunExtractStage(r.compressed, res, workers);
  r.records = CollectRecords(r.extractions);
  r.stats = ComputeStats(r.decisions, r.records);
  return r;
}

std::vector<Document> LoadCorpus(const RunConfig& config) {
  return config.corpus_format == CorpusFormat::kTsv
             ? LoadCorpusTsv(config.corpus)
             : LoadCorpusDir(config.corpus);
}

// ---------------------------------------------------------------------------
// Stage files

void WriteAudit(const std::vector<Sentence>& sentences,
                const std::vector<FilterDecision>& decisions,
                std::ostream& out) {
  out << "doc_id\tsentence_index\tstart\tend\taccepted\tmatched\treason\ttext\n";
  for (size_t i = 0; i < sentences.size(); ++i) {
    const Sentence& s = sentences[i];
    const FilterDecision& d = decisions[i];
    std::string matched;
    for (size_t k = 0; k < d.matched_keywords.size(); ++k) {
      if (k) matched += '|';
      matched += d.matched_keywords[k];
    }
    out << s.doc_id << '\t' << s.index << '\t' << s.span.start << '\t'
        << s.span.end << '\t' << (d.accepted ? "true" : "false") << '\t'
        << matched << '\t' << d.rejection_reason.value_or("") << '\t'
        << EncodeUtf8(s.raw_text) << '\n';
  }
}

std::vector<Sentence> ReadAcceptedSentences(std::istream& in) {
  std::vector<Sentence> out;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (row == 1 && line.starts_with("doc_id\t")) continue;
    if (line.empty()) continue;
    auto f = SplitFields(line, '\t');
    if (f.size() != 8) {
      throw IoError("audit row " + std::to_string(row) + ": expected 8 columns");
    }
    if (f[4] != "true") continue;
    Sentence s;
    s.doc_id = f[0];
    try {
      s.index = std::stoi(f[1]);
      s.span = {std::stoul(f[2]), std::stoul(f[3])};
    } catch (const std::exception&) {
      throw IoError("audit row " + std::to_string(row) + ": bad number");
    }
    s.raw_text = DecodeUtf8(f[7]);
    out.push_back(std::move(s));
  }
  return out;
}

void WriteCompressed(const std::vector<CompressedSentence>& compressed,
                     std::ostream& out) {
  for (const CompressedSentence& cs : compressed) {
    json tokens = json::array();
    for (const Token& t : cs.tokens) {
      tokens.push_back(
          {std::string(TokenKindName(t.kind)), t.span.start, t.span.end});
    }
    json line = {{"doc_id", cs.doc_id},
                 {"sentence_index", cs.sentence_index},
                 {"original", EncodeUtf8(cs.original)},
                 {"serialized", Serialize(cs)},
                 {"tokens", std::move(tokens)}};
    out << line.dump() << '\n';
  }
}

std::vector<CompressedSentence> ReadCompressed(std::istream& in) {
  std::vector<CompressedSentence> out;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      CompressedSentence cs;
      cs.doc_id = j.at("doc_id").get<std::string>();
      cs.sentence_index = j.at("sentence_index").get<int>();
      cs.original = DecodeUtf8(j.at("original").get<std::string>());
      for (const json& t : j.at("tokens")) {
        Token tok;
        tok.kind = ParseTokenKind(t.at(0).get<std::string>());
        tok.span = {t.at(1).get<size_t>(), t.at(2).get<size_t>()};
        if (tok.span.end > cs.original.size() || tok.span.empty()) {
          throw IoError("token span out of range");
        }
        tok.surface = cs.original.substr(tok.span.start, tok.span.length());
        cs.tokens.push_back(std::move(tok));
      }
      if (!TilesOriginal(cs)) throw IoError("tokens do not tile the sentence");
      out.push_back(std::move(cs));
    } catch (const json::exception& e) {
      throw IoError("compressed row " + std::to_string(row) + ": " + e.what());
    } catch (const Error& e) {
      throw IoError("compressed row " + std::to_string(row) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands

void RunPipeline(const RunConfig& config) {
  InStage("config", [&] { config.Validate(); });
  const Resources res =
      InStage("load-resources", [&] { return Resources::Load(config); }, true);
  const auto docs = InStage("segment", [&] { return LoadCorpus(config); });
  InStage("write", [&] { PrepareOutDir(config.out_dir); });
  const PipelineResult r = InStage(
      "extract", [&] { return RunOnDocuments(docs, res, config.workers); });
  InStage("write", [&] {
    const fs::path out(config.out_dir);
    {
      auto f = OpenOut(out / "audit.tsv");
      WriteAudit(r.sentences, r.decisions, f);
    }
    if (config.emit_compressed) {
      auto f = OpenOut(out / "compressed.jsonl");
      WriteCompressed(r.compressed, f);
      std::vector<CompressedSentence> cleaned;
      for (const auto& x : r.extractions) cleaned.push_back(x.cleaned);
      auto g = OpenOut(out / "cleaned.txt");
      for (const auto& cs : cleaned) {
        g << cs.doc_id << '\t' << cs.sentence_index << '\t' << Serialize(cs)
          << '\n';
      }
    }
    WriteOutputs(config.out_dir, r.records, r.stats);
  });
}

void RunFilterCommand(const RunConfig& config) {
  InStage("config", [&] { config.Validate(); });
  const Resources res =
      InStage("load-resources", [&] { return Resources::Load(config); }, true);
  const auto docs = InStage("segment", [&] { return LoadCorpus(config); });
  const auto sentences = SegmentCorpus(docs);
  const auto decisions = RunFilterStage(sentences, res, config.workers);
  InStage("write", [&] {
    PrepareOutDir(config.out_dir);
    auto f = OpenOut(fs::path(config.out_dir) / "audit.tsv");
    WriteAudit(sentences, decisions, f);
  });
}

void RunCompressCommand(const RunConfig& config, const std::string& input) {
  InStage("config", [&] {
    config.Validate(input.empty());
    if (!input.empty()) RequireFile(input, "input");
  });
  const Resources res =
      InStage("load-resources", [&] { return Resources::Load(config); }, true);
  std::vector<Sentence> accepted;
  if (input.empty()) {
    const auto docs = InStage("segment", [&] { return LoadCorpus(config); });
    const auto sentences = SegmentCorpus(docs);
    const auto decisions = RunFilterStage(sentences, res, config.workers);
    for (size_t i = 0; i < sentences.size(); ++i) {
      if (decisions[i].accepted) accepted.push_back(sentences[i]);
    }
  } else {
    accepted = InStage("read-audit", [&] {
      auto in = OpenIn(input);
      return ReadAcceptedSentences(in);
    });
  }
  const auto compressed = RunCompressStage(accepted, res, config.workers);
  InStage("write", [&] {
    PrepareOutDir(config.out_dir);
    auto f = OpenOut(fs::path(config.out_dir) / "compressed.jsonl");
    WriteCompressed(compressed, f);
  });
}

void RunExtractCommand(const RunConfig& config, const std::string& input) {
  InStage("config", [&] {
    config.Validate(false);
    RequireFile(input, "input");
  });
  const Resources res =
      InStage("load-resources", [&] { return Resources::Load(config); }, true);
  const auto compressed = InStage("read-compressed", [&] {
    auto in = OpenIn(input);
    return ReadCompressed(in);
  });
  const auto extractions = RunExtractStage(compressed, res, config.workers);
  const auto records = CollectRecords(extractions);
  RunStats stats = ComputeStats({}, records);
  stats.sentences_total = stats.sentences_accepted = compressed.size();
  InStage("write", [&] {
    PrepareOutDir(config.out_dir);
    WriteOutputs(config.out_dir, records, stats);
  });
}

size_t RunDictCheck(const RunConfig& config, std::ostream& out) {
  InStage("config", [&] { config.Validate(false); });
  RunConfig lenient = config;
  lenient.strict_dicts = false;
  const Resources res = InStage(
      "load-resources", [&] { return Resources::Load(lenient); }, true);
  size_t issues = 0;
  for (DictKind kind : kAllDictKinds) {
    const Dictionary& d = res.dictionary(kind);
    out << "[" << DictKindName(kind) << "] " << d.size() << " entries, "
        << d.report().size() << " issue(s)\n";
    for (const ValidationIssue& issue : d.report()) {
      out << issue.ToString() << '\n';
    }
    issues += d.report().size();
  }
  for (const std::string& note : res.notes) out << "note: " << note << '\n';
  return issues;
}

void WriteDefaults(const std::string& dir) {
  InStage("write", [&] {
    PrepareOutDir(dir);
    const fs::path out(dir);
    for (DictKind kind : kAllDictKinds) {
      OpenOut(out / defaults::DictionaryFileName(kind))
          << defaults::DictionaryText(kind);
    }
    OpenOut(out / defaults::kRulesFileName) << defaults::FilterRulesText();
    OpenOut(out / defaults::kRegistryFileName) << defaults::RegistryText();
  });
}

}  // namespace epitag
