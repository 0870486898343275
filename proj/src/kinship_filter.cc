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

#include "epitag/kinship_filter.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "epitag/errors.h"
#include "epitag/text.h"

namespace epitag {

namespace {

constexpr std::u32string_view kOpeningQuotes = U"「『“‘\"";
constexpr char32_t kSay = U'曰';

std::string Join(const std::vector<std::u32string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += EncodeUtf8(parts[i]);
  }
  return out;
}

}  // namespace

std::vector<FilterRule> ParseFilterRules(std::istream& in) {
  std::vector<FilterRule> rules;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = SplitFields(line, '\t');
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty()) {
      throw ConfigError("rules row " + std::to_string(row) +
                        ": expected keyword<TAB>kind<TAB>required-terms");
    }
    FilterRule rule;
    rule.keyword = DecodeUtf8(fields[0]);
    if (fields[1] == "direct") {
      rule.kind = RuleKind::kDirect;
    } else if (fields[1] == "marriage") {
      rule.kind = RuleKind::kMarriage;
    } else {
      throw ConfigError("rules row " + std::to_string(row) +
                        ": unknown kind '" + fields[1] + "'");
    }
    if (fields.size() == 3 && !fields[2].empty()) {
      for (const std::string& term : SplitFields(fields[2], '|')) {
        if (!term.empty()) rule.requires_any.push_back(DecodeUtf8(term));
      }
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<FilterRule> LoadFilterRules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rules " + path);
  return ParseFilterRules(in);
}

std::string SerializeFilterRules(const std::vector<FilterRule>& rules) {
  std::string out;
  for (const FilterRule& r : rules) {
    out += EncodeUtf8(r.keyword);
    out += r.kind == RuleKind::kDirect ? "\tdirect\t" : "\tmarriage\t";
    out += Join(r.requires_any, '|');
    out += '\n';
  }
  return out;
}

void EnsureKeywordCoverage(std::vector<FilterRule>& rules,
                           const Dictionary& kinship) {
  for (const DictEntry& e : kinship.entries()) {
    const bool covered =
        std::any_of(rules.begin(), rules.end(),
                    [&](const FilterRule& r) { return r.keyword == e.surface; });
    if (!covered) rules.push_back({e.surface, RuleKind::kDirect, {}});
  }
}

KinshipFilter::KinshipFilter(std::vector<FilterRule> rules,
                             const Dictionary& exclusions, PunctConfig punct)
    : rules_(std::move(rules)),
      exclusions_(DictKind::kExclusion),
      punct_(std::move(punct)) {
  for (const DictEntry& e : exclusions.entries()) {
    if (e.category != "gazetteer") exclusions_.Add(e);
  }
}

FilterDecision KinshipFilter::Decide(const Sentence& sentence) const {
  const std::u32string& text = sentence.raw_text;
  FilterDecision decision;
  decision.doc_id = sentence.doc_id;
  decision.sentence_index = sentence.index;

  // Exclusion spans, greedy longest-first from the left.
  std::vector<Span> excluded;
  for (size_t pos = 0; pos < text.size();) {
    if (auto m = exclusions_.LongestMatchAt(text, pos)) {
      excluded.push_back({pos, pos + m->length});
      pos += m->length;
    } else {
      ++pos;
    }
  }
  auto neutralized_by_exclusion = [&](const Span& occ) {
    return std::any_of(excluded.begin(), excluded.end(),
                       [&](const Span& ex) { return ex.Contains(occ); });
  };
  // "母曰：" and "母曰「…": the relative speaks, nobody is named.
  auto is_speech = [&](const Span& occ) {
    if (occ.end + 1 >= text.size() || text[occ.end] != kSay) return false;
    const char32_t next = text[occ.end + 1];
    return punct_.Classify(next) == PunctClass::kHeadMark ||
           kOpeningQuotes.find(next) != std::u32string_view::npos;
  };

  std::string first_reason;
  for (const FilterRule& rule : rules_) {
    if (rule.keyword.empty()) continue;
    bool live = false;
    for (size_t at = text.find(rule.keyword); at != std::u32string::npos;
         at = text.find(rule.keyword, at + 1)) {
      const Span occ{at, at + rule.keyword.size()};
      if (neutralized_by_exclusion(occ)) {
        if (first_reason.empty()) {
          first_reason = "keyword " + EncodeUtf8(rule.keyword) +
                         " neutralized by exclusion";
        }
        continue;
      }
      if (is_speech(occ)) {
        if (first_reason.empty()) {
          first_reason = "keyword " + EncodeUtf8(rule.keyword) +
                         " introduces speech";
        }
        continue;
      }
      live = true;
      break;
    }
    if (!live) continue;
    if (!rule.unconditional()) {
      const bool co_occurs = std::any_of(
          rule.requires_any.begin(), rule.requires_any.end(),
          [&](const std::u32string& t) {
            return text.find(t) != std::u32string::npos;
          });
      if (!co_occurs) {
        if (first_reason.empty()) {
          first_reason = "marriage keyword " + EncodeUtf8(rule.keyword) +
                         " without co-occurring term";
        }
        continue;
      }
    }
    decision.matched_keywords.push_back(EncodeUtf8(rule.keyword));
  }
  decision.accepted = !decision.matched_keywords.empty();
  if (!decision.accepted) {
    decision.rejection_reason =
        first_reason.empty() ? "no kinship keyword" : first_reason;
  }
  return decision;
}

std::vector<FilterDecision> SelectKinshipSentences(
    const std::vector<Sentence>& sentences,
    const std::vector<FilterRule>& rules, const Dictionary& exclusions) {
  KinshipFilter filter(rules, exclusions);
  std::vector<FilterDecision> out;
  out.reserve(sentences.size());
  for (const Sentence& s : sentences) out.push_back(filter.Decide(s));
  return out;
}

}  // namespace epitag
