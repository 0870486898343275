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

#ifndef EPITAG_SEGMENTER_H_
#define EPITAG_SEGMENTER_H_

#include <string>
#include <string_view>
#include <vector>

#include "epitag/text.h"

namespace epitag {

enum class PunctClass { kSentenceEnd, kHeadMark, kSeparator, kOther };

// Punctuation roles. Quotes and brackets are deliberately absent and fall
// through to kOther.
struct PunctConfig {
  std::u32string terminators = U"。！？";
  std::u32string separators = U"，、；";
  std::u32string head_marks = U"：";

  PunctClass Classify(char32_t ch) const;

  static const PunctConfig& Default();
};

// Classification under the default configuration.
PunctClass ClassifyPunct(char32_t ch);

struct Document {
  std::string id;
  std::string source_ref;
  std::u32string text;
};

// Builds a document from UTF-8 text, stripping all whitespace.
Document MakeDocument(std::string id, std::string_view utf8_text,
                      std::string source_ref = "");

struct Sentence {
  std::string doc_id;
  int index = 0;
  std::u32string raw_text;
  // Offsets into Document::text, terminator excluded.
  Span span;
};

// Splits at terminators. The terminator is not part of the sentence; empty
// sentences (consecutive terminators) are skipped. Separators never split.
std::vector<Sentence> SplitSentences(const Document& doc,
                                     const PunctConfig& punct =
                                         PunctConfig::Default());

// Corpus readers. A directory holds one UTF-8 file per document (id is the
// file stem, files are read in lexicographic order); a TSV has id<TAB>text
// rows. Throw IoError / EncodingError.
std::vector<Document> LoadCorpusDir(const std::string& dir);
std::vector<Document> LoadCorpusTsv(const std::string& path);

}  // namespace epitag

#endif  // EPITAG_SEGMENTER_H_
