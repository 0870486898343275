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

#ifndef EPITAG_NOISE_FILTER_H_
#define EPITAG_NOISE_FILTER_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "epitag/compressor.h"
#include "epitag/lexicon.h"

namespace epitag {

// Interference words grouped by category (ordinals, examination terms,
// life events, ...). Surfaces are unique across categories; a surface listed
// twice keeps its first category.
class InterferenceCatalog {
 public:
  InterferenceCatalog();

  // Single 伯/仲/叔/季 are refused: they occur inside given names.
  static InterferenceCatalog FromDictionary(const Dictionary& dict);

  const Dictionary& surfaces() const { return surfaces_; }
  const std::map<std::string, std::vector<std::u32string>>& categories() const {
    return categories_;
  }
  bool Contains(std::u32string_view surface) const {
    return surfaces_.Contains(surface);
  }

 private:
  Dictionary surfaces_;
  std::map<std::string, std::vector<std::u32string>> categories_;
};

// Ordinal prefixes, matched longest first.
class OrdinalPrefixSet {
 public:
  explicit OrdinalPrefixSet(std::vector<std::u32string> prefixes);

  // 長, 次, 幼, 曰, 長即, 次即, 伯曰, 仲曰, 叔曰, 季曰.
  static OrdinalPrefixSet Default();

  const std::vector<std::u32string>& prefixes() const { return prefixes_; }

  // Length of the longest prefix of `text` in the set, 0 if none.
  size_t MatchLength(std::u32string_view text) const;

 private:
  std::vector<std::u32string> prefixes_;
};

// Removes at most one (the longest) matching prefix.
std::u32string StripOrdinalPrefix(std::u32string_view text,
                                  const OrdinalPrefixSet& prefixes);

// Spans of clause heads: text tokens directly followed by a head mark, as in
// 孫男二十人：. Heads carry the count and relation and are never cleaned.
std::vector<Span> ClauseHeadSpans(const CompressedSentence& cs);

// Deletes catalog surfaces inside text tokens, longest first, left to right.
// Characters inside `protect` are never deleted. Survivors keep their
// original spans; a text token cut in several places yields several tokens;
// tokens reduced to nothing are dropped. Marker tokens are untouched.
CompressedSentence DeleteInterference(const CompressedSentence& cs,
                                      const InterferenceCatalog& catalog,
                                      std::span<const Span> protect);

// Same, protecting ClauseHeadSpans(cs).
CompressedSentence DeleteInterference(const CompressedSentence& cs,
                                      const InterferenceCatalog& catalog);

}  // namespace epitag

#endif  // EPITAG_NOISE_FILTER_H_
