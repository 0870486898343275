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

#ifndef EPITAG_EXTRACTOR_H_
#define EPITAG_EXTRACTOR_H_

#include <iosfwd>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "epitag/compressor.h"
#include "epitag/lexicon.h"
#include "epitag/noise_filter.h"

namespace epitag {

// Chinese numerals 1..99 written with 一二三四五六七八九十 (五, 十, 十二,
// 二十, 二十一). Throws UnparsableNumeral for anything else.
int ParseChineseNumeral(std::u32string_view text);
std::optional<int> TryParseChineseNumeral(std::u32string_view text);
// Canonical form of 1..99; throws std::out_of_range otherwise.
std::u32string FormatChineseNumeral(int value);

enum class PatternTarget {
  kCompressed,  // serialized compressed sentence (shared-slash notation)
  kRaw,         // the uncompressed sentence ("direct" patterns)
};

struct PatternSpec {
  std::string id;
  std::string expression;  // ECMAScript syntax, matched per scalar value
  int relation_capture = 1;
  int count_capture = 0;  // 0: no count group
  bool enabled = true;
  PatternTarget target = PatternTarget::kCompressed;
  // 0: names are harvested after the match; otherwise this group is the name.
  int name_capture = 0;
};

// Ordered by specificity: on overlapping hits the earlier pattern wins.
class PatternRegistry {
 public:
  // Compiles every expression; throws PatternCompileError naming the id.
  explicit PatternRegistry(std::vector<PatternSpec> specs);

  // TSV: id, expression, relation-capture, count-capture, enabled[, target].
  static PatternRegistry Parse(std::istream& in);
  static PatternRegistry Load(const std::string& path);
  std::string Serialize() const;

  const std::vector<PatternSpec>& specs() const { return specs_; }
  const std::wregex& compiled(size_t i) const { return compiled_[i]; }
  size_t size() const { return specs_.size(); }

 private:
  std::vector<PatternSpec> specs_;
  std::vector<std::wregex> compiled_;
};

struct PatternHit {
  std::string pattern_id;
  size_t rank = 0;  // position in the registry
  PatternTarget target = PatternTarget::kCompressed;
  Span match_span;     // over the text the pattern ran on
  Span sentence_span;  // the same match in sentence offsets
  std::u32string relation_label;
  std::optional<std::u32string> raw_count_text;
  std::optional<Span> name_span;  // sentence offsets of the name group
};

// Hits of the enabled compressed-target patterns over a serialized
// sentence, earliest first. sentence_span equals match_span here.
std::vector<PatternHit> MatchPatterns(std::u32string_view serialized,
                                      const PatternRegistry& registry);

// Hits of all enabled patterns for one compressed sentence; compressed
// patterns see its shared-slash serialization, raw patterns the original.
// Overlaps are resolved in sentence offsets.
std::vector<PatternHit> FindHits(const CompressedSentence& compressed,
                                 const PatternRegistry& registry);

enum class RejectReason { kOverLength, kPlaceholderAdjacent, kEmpty };
std::string_view RejectReasonName(RejectReason reason);

struct NameCandidate {
  std::u32string surface;  // after ordinal stripping
  Span span;               // in the sentence
  bool accepted = false;
  std::optional<RejectReason> rejection;
};

struct HarvestRules {
  OrdinalPrefixSet prefixes = OrdinalPrefixSet::Default();
  size_t max_name_len = 2;
  // Reject a candidate glued to a following placeholder (丙戌進士). Off by
  // default.
  bool reject_placeholder_adjacent = false;
};

// Candidates are the text tokens of `cleaned` lying after the hit and before
// `stop` (a sentence offset, usually the next hit). A hit with a name span
// yields that span as its only candidate.
std::vector<NameCandidate> HarvestNames(const CompressedSentence& cleaned,
                                        const PatternHit& hit,
                                        const HarvestRules& rules,
                                        size_t stop = std::u32string::npos);

struct KinshipRecord {
  std::string doc_id;
  int sentence_index = 0;
  std::string relation_label;
  std::optional<KinshipCode> kinship_code;  // empty: relation not coded
  std::optional<int> declared_count;
  std::vector<NameCandidate> names;     // accepted
  std::vector<NameCandidate> rejected;  // kept for audit
  std::string pattern_id;
  bool count_mismatch = false;
  std::string compressed_form;  // cleaned serialization
  std::string original;
};

KinshipRecord BuildRecord(const PatternHit& hit,
                          std::vector<NameCandidate> candidates,
                          const Dictionary& kinship,
                          const CompressedSentence& cleaned);

struct SentenceExtraction {
  CompressedSentence cleaned;
  std::vector<PatternHit> hits;
  std::vector<KinshipRecord> records;
};

// Pattern matching, interference deletion (clause heads and hits
// protected), harvesting and record assembly for one sentence.
class Extractor {
 public:
  // All references must outlive the extractor.
  Extractor(const PatternRegistry& registry,
            const InterferenceCatalog& catalog, const Dictionary& kinship,
            HarvestRules rules = {});

  SentenceExtraction Extract(const CompressedSentence& compressed) const;

  const HarvestRules& rules() const { return rules_; }

 private:
  const PatternRegistry* registry_;
  const InterferenceCatalog* catalog_;
  const Dictionary* kinship_;
  HarvestRules rules_;
};

}  // namespace epitag

#endif  // EPITAG_EXTRACTOR_H_
