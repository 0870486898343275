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

#ifndef EPITAG_KINSHIP_FILTER_H_
#define EPITAG_KINSHIP_FILTER_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "epitag/lexicon.h"
#include "epitag/segmenter.h"

namespace epitag {

enum class RuleKind { kDirect, kMarriage };

struct FilterRule {
  std::u32string keyword;
  RuleKind kind = RuleKind::kDirect;
  // Empty means unconditional; otherwise the sentence must also contain at
  // least one of these terms.
  std::vector<std::u32string> requires_any;

  bool unconditional() const { return requires_any.empty(); }
};

struct FilterDecision {
  std::string doc_id;
  int sentence_index = 0;
  bool accepted = false;
  std::vector<std::string> matched_keywords;  // in rule order
  std::optional<std::string> rejection_reason;
};

// Rules file: keyword<TAB>kind<TAB>required-terms, kind is "direct" or
// "marriage", required terms are '|'-separated and may be empty.
std::vector<FilterRule> ParseFilterRules(std::istream& in);
std::vector<FilterRule> LoadFilterRules(const std::string& path);
std::string SerializeFilterRules(const std::vector<FilterRule>& rules);

// Adds an unconditional direct rule for every kinship surface that no rule
// covers yet.
void EnsureKeywordCoverage(std::vector<FilterRule>& rules,
                           const Dictionary& kinship);

class KinshipFilter {
 public:
  // Exclusion entries with category "gazetteer" only prune gazetteers and
  // are ignored here.
  KinshipFilter(std::vector<FilterRule> rules, const Dictionary& exclusions,
                PunctConfig punct = PunctConfig::Default());

  FilterDecision Decide(const Sentence& sentence) const;

  const std::vector<FilterRule>& rules() const { return rules_; }

 private:
  std::vector<FilterRule> rules_;
  Dictionary exclusions_;
  PunctConfig punct_;
};

std::vector<FilterDecision> SelectKinshipSentences(
    const std::vector<Sentence>& sentences,
    const std::vector<FilterRule>& rules, const Dictionary& exclusions);

}  // namespace epitag

#endif  // EPITAG_KINSHIP_FILTER_H_
