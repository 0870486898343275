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

#ifndef EPITAG_COMPRESSOR_H_
#define EPITAG_COMPRESSOR_H_

#include <string>
#include <string_view>
#include <vector>

#include "epitag/lexicon.h"
#include "epitag/segmenter.h"
#include "epitag/text.h"

namespace epitag {

enum class TokenKind { kText, kHeadMark, kSep, kPlace, kOffice, kApptVerb };

// Placeholder name used in the serialized notation: wm, wsep, ns, no_noc,
// vno. Empty for kText.
std::string_view MarkerName(TokenKind kind);
bool IsPlaceholder(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kText;
  std::u32string surface;  // original characters, never empty
  Span span;               // offsets into the sentence

  bool is_marker() const { return kind != TokenKind::kText; }
  bool operator==(const Token&) const = default;
};

enum class Stage { kCompressed, kCleaned };

struct CompressedSentence {
  std::string doc_id;
  int sentence_index = 0;
  std::vector<Token> tokens;
  std::u32string original;
  Stage stage = Stage::kCompressed;
};

struct CompressOptions {
  // An appointment verb becomes a placeholder only when a place, office or
  // another qualifying appointment verb follows it directly.
  bool appt_requires_following_title = true;
  PunctConfig punct;
};

// Left-to-right greedy substitution. At each position place is tried first,
// then office, then appointment verb, each by longest match. Terminators are
// dropped, head marks and separators become marker tokens, everything else
// coalesces into text tokens.
class Compressor {
 public:
  // The dictionaries must outlive the compressor.
  Compressor(const Dictionary& place, const Dictionary& office,
             const Dictionary& appt, CompressOptions options = {});

  CompressedSentence Compress(const Sentence& sentence) const;
  CompressedSentence Compress(std::u32string_view text) const;

 private:
  bool ApptQualifies(std::u32string_view text, size_t pos, size_t len) const;

  const Dictionary* place_;
  const Dictionary* office_;
  const Dictionary* appt_;
  CompressOptions options_;
};

enum class MarkerStyle {
  kShared,     // adjacent markers share one slash: /wsep/no_noc/
  kDelimited,  // every marker carries both slashes: /wsep//no_noc/
};

// Serialized notation. Compressed sentences use kShared, cleaned ones
// kDelimited.
std::string Serialize(const CompressedSentence& cs);
std::string Serialize(const CompressedSentence& cs, MarkerStyle style);

// As Serialize, in scalar values. If `offsets` is given it receives, for
// every serialized position plus one past the end, the sentence offset that
// position stands for: text characters map to themselves, marker characters
// to their token's start, the end to the sentence length.
std::u32string SerializeU32(const CompressedSentence& cs, MarkerStyle style,
                            std::vector<size_t>* offsets = nullptr);

// Token spans are ordered, non-overlapping, match their surfaces, and
// together with terminator positions cover the whole original.
bool TilesOriginal(const CompressedSentence& cs,
                   const PunctConfig& punct = PunctConfig::Default());

}  // namespace epitag

#endif  // EPITAG_COMPRESSOR_H_
