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

// Python bindings for the epitag pipeline.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epitag/compressor.h"
#include "epitag/errors.h"
#include "epitag/extractor.h"
#include "epitag/kinship_filter.h"
#include "epitag/noise_filter.h"
#include "epitag/pipeline.h"
#include "epitag/review_output.h"
#include "epitag/segmenter.h"
#include "epitag/text.h"

namespace py = pybind11;

namespace epitag {
namespace {

Sentence OneSentence(const std::string& text) {
  Sentence s;
  s.doc_id = "py";
  s.raw_text = StripWhitespace(DecodeUtf8(text));
  while (!s.raw_text.empty() &&
         ClassifyPunct(s.raw_text.back()) == PunctClass::kSentenceEnd) {
    s.raw_text.pop_back();
  }
  s.span = {0, s.raw_text.size()};
  return s;
}

py::dict RecordToDict(const KinshipRecord& r) {
  py::dict d;
  d["doc_id"] = r.doc_id;
  d["sentence_index"] = r.sentence_index;
  d["relation"] = r.relation_label;
  if (r.kinship_code) {
    d["kinship_code"] = r.kinship_code->code;
    d["generation"] = r.kinship_code->generation;
  } else {
    d["kinship_code"] = py::none();
    d["generation"] = py::none();
  }
  d["declared_count"] = r.declared_count;
  std::vector<std::string> names;
  for (const auto& n : r.names) names.push_back(EncodeUtf8(n.surface));
  d["names"] = names;
  py::list rejected;
  for (const auto& n : r.rejected) {
    rejected.append(py::make_tuple(
        EncodeUtf8(n.surface),
        std::string(RejectReasonName(n.rejection.value_or(RejectReason::kEmpty)))));
  }
  d["rejected"] = rejected;
  d["count_mismatch"] = r.count_mismatch;
  d["pattern_id"] = r.pattern_id;
  d["compressed_form"] = r.compressed_form;
  d["original"] = r.original;
  return d;
}

py::dict StatsToDict(const RunStats& s) {
  py::dict d;
  d["sentences_total"] = s.sentences_total;
  d["sentences_accepted"] = s.sentences_accepted;
  d["records_total"] = s.records_total;
  d["names_total"] = s.names_total;
  d["mismatch_count"] = s.mismatch_count;
  d["records_with_count"] = s.records_with_count;
  d["records_without_code"] = s.records_without_code;
  d["agreement"] = s.agreement();
  d["per_pattern_yields"] = s.per_pattern_yields;
  d["rejected_candidates_by_reason"] = s.rejected_candidates_by_reason;
  return d;
}

class PyPipeline {
 public:
  PyPipeline(const std::map<std::string, std::string>& dictionaries,
             const std::string& rules, const std::string& registry,
             bool strict, size_t max_name_len) {
    RunConfig cfg;
    for (const auto& [name, path] : dictionaries) {
      const auto kind = ParseDictKind(name);
      if (!kind) throw ConfigError("unknown dictionary kind " + name);
      cfg.dict_paths[*kind] = path;
    }
    cfg.rules_path = rules;
    cfg.registry_path = registry;
    cfg.strict_dicts = strict;
    cfg.max_name_len = max_name_len;
    cfg.Validate(false);
    res_ = Resources::Load(cfg);
  }

  py::dict Filter(const std::string& text) const {
    const KinshipFilter filter(res_.rules, res_.exclusion);
    const FilterDecision d = filter.Decide(OneSentence(text));
    py::dict out;
    out["accepted"] = d.accepted;
    out["keywords"] = d.matched_keywords;
    out["reason"] = d.rejection_reason;
    return out;
  }

  CompressedSentence DoCompress(const std::string& text) const {
    const Compressor c(res_.place, res_.office, res_.appt);
    return c.Compress(OneSentence(text));
  }

  std::string Compress(const std::string& text) const {
    return Serialize(DoCompress(text));
  }

  std::vector<py::tuple> Tokens(const std::string& text) const {
    std::vector<py::tuple> out;
    for (const Token& t : DoCompress(text).tokens) {
      const std::string kind = t.is_marker()
                                   ? std::string(MarkerName(t.kind))
                                   : std::string("text");
      out.push_back(py::make_tuple(kind, EncodeUtf8(t.surface), t.span.start,
                                   t.span.end));
    }
    return out;
  }

  std::string Clean(const std::string& text) const {
    return Serialize(MakeExtractor().Extract(DoCompress(text)).cleaned);
  }

  py::list Extract(const std::string& text) const {
    py::list out;
    for (const auto& r : MakeExtractor().Extract(DoCompress(text)).records) {
      out.append(RecordToDict(r));
    }
    return out;
  }

  py::dict Run(const std::vector<std::pair<std::string, std::string>>& docs,
               int workers) const {
    if (workers < 1) throw ConfigError("workers must be >= 1");
    std::vector<Document> documents;
    for (const auto& [id, text] : docs) {
      documents.push_back(MakeDocument(id, text));
    }
    PipelineResult r;
    {
      py::gil_scoped_release release;
      r = RunOnDocuments(documents, res_, workers);
    }
    py::list records;
    for (const auto& rec : r.records) records.append(RecordToDict(rec));
    py::dict out;
    out["records"] = records;
    out["stats"] = StatsToDict(r.stats);
    return out;
  }

 private:
  Extractor MakeExtractor() const {
    return Extractor(res_.registry, res_.catalog, res_.kinship, res_.harvest);
  }

  Resources res_;
};

void RunPipelinePy(const std::string& corpus, const std::string& out,
                   const std::string& corpus_format, int workers,
                   bool emit_compressed) {
  RunConfig cfg;
  cfg.corpus = corpus;
  if (corpus_format == "tsv") {
    cfg.corpus_format = CorpusFormat::kTsv;
  } else if (corpus_format != "dir") {
    throw ConfigError("corpus_format must be 'dir' or 'tsv'");
  }
  cfg.out_dir = out;
  cfg.workers = workers;
  cfg.emit_compressed = emit_compressed;
  py::gil_scoped_release release;
  RunPipeline(cfg);
}

}  // namespace
}  // namespace epitag

PYBIND11_MODULE(_core, m) {
  using namespace epitag;
  m.doc() = "Kinship extraction from classical Chinese epitaphs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<DictionaryError>(m, "DictionaryError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<EncodingError>(m, "EncodingError", base.ptr());
  py::register_exception<PatternCompileError>(m, "PatternCompileError",
                                              base.ptr());
  py::register_exception<UnparsableNumeral>(m, "UnparsableNumeral",
                                            PyExc_ValueError);

  m.def(
      "parse_numeral",
      [](const std::string& s) { return ParseChineseNumeral(DecodeUtf8(s)); },
      py::arg("text"), "Value of a Chinese numeral between 1 and 99.");
  m.def(
      "format_numeral",
      [](int n) {
        if (n < 1 || n > 99) throw py::value_error("value must be in 1..99");
        return EncodeUtf8(FormatChineseNumeral(n));
      },
      py::arg("value"));
  m.def(
      "split_sentences",
      [](const std::string& text) {
        std::vector<std::string> out;
        for (const Sentence& s : SplitSentences(MakeDocument("py", text))) {
          out.push_back(EncodeUtf8(s.raw_text));
        }
        return out;
      },
      py::arg("text"));

  py::class_<PyPipeline>(m, "Pipeline")
      .def(py::init<const std::map<std::string, std::string>&,
                    const std::string&, const std::string&, bool, size_t>(),
           py::arg("dictionaries") = std::map<std::string, std::string>{},
           py::arg("rules") = "", py::arg("registry") = "",
           py::arg("strict") = false, py::arg("max_name_len") = 2)
      .def("filter", &PyPipeline::Filter, py::arg("sentence"))
      .def("compress", &PyPipeline::Compress, py::arg("sentence"))
      .def("tokens", &PyPipeline::Tokens, py::arg("sentence"))
      .def("clean", &PyPipeline::Clean, py::arg("sentence"))
      .def("extract", &PyPipeline::Extract, py::arg("sentence"))
      .def("run", &PyPipeline::Run, py::arg("documents"),
           py::arg("workers") = 1);

  m.def("run_pipeline", &RunPipelinePy, py::arg("corpus"), py::arg("out"),
        py::arg("corpus_format") = "dir", py::arg("workers") = 1,
        py::arg("emit_compressed") = false);
}
