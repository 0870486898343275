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

#include "epitag/noise_filter.h"

#include <algorithm>

namespace epitag {

InterferenceCatalog::InterferenceCatalog()
    : surfaces_(DictKind::kInterference) {}

InterferenceCatalog InterferenceCatalog::FromDictionary(
    const Dictionary& dict) {
  static const std::u32string kNameChars = U"伯仲叔季";
  InterferenceCatalog cat;
  for (const DictEntry& e : dict.entries()) {
    if (e.surface.size() == 1 &&
        kNameChars.find(e.surface[0]) != std::u32string::npos) {
      cat.surfaces_.AddIssue({e.source_row, "name character, not deletable",
                              EncodeUtf8(e.surface)});
      continue;
    }
    if (cat.surfaces_.Add(e)) {
      cat.categories_[e.category].push_back(e.surface);
    }
  }
  for (const auto& issue : dict.report()) cat.surfaces_.AddIssue(issue);
  return cat;
}

OrdinalPrefixSet::OrdinalPrefixSet(std::vector<std::u32string> prefixes)
    : prefixes_(std::move(prefixes)) {
  std::erase_if(prefixes_, [](const auto& p) { return p.empty(); });
  std::stable_sort(prefixes_.begin(), prefixes_.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
}

OrdinalPrefixSet OrdinalPrefixSet::Default() {
  return OrdinalPrefixSet({U"長", U"次", U"幼", U"曰", U"長即", U"次即",
                           U"伯曰", U"仲曰", U"叔曰", U"季曰"});
}

size_t OrdinalPrefixSet::MatchLength(std::u32string_view text) const {
  for (const auto& p : prefixes_) {
    if (text.starts_with(p)) return p.size();
  }
  return 0;
}

std::u32string StripOrdinalPrefix(std::u32string_view text,
                                  const OrdinalPrefixSet& prefixes) {
  return std::u32string(text.substr(prefixes.MatchLength(text)));
}

std::vector<Span> ClauseHeadSpans(const CompressedSentence& cs) {
  std::vector<Span> heads;
  for (size_t i = 0; i + 1 < cs.tokens.size(); ++i) {
    if (cs.tokens[i].kind == TokenKind::kText &&
        cs.tokens[i + 1].kind == TokenKind::kHeadMark) {
      heads.push_back(cs.tokens[i].span);
    }
  }
  return heads;
}

CompressedSentence DeleteInterference(const CompressedSentence& cs,
                                      const InterferenceCatalog& catalog,
                                      std::span<const Span> protect) {
  CompressedSentence out;
  out.doc_id = cs.doc_id;
  out.sentence_index = cs.sentence_index;
  out.original = cs.original;
  out.stage = Stage::kCleaned;

  auto is_protected = [&](size_t offset) {
    return std::any_of(protect.begin(), protect.end(), [&](const Span& s) {
      return s.start <= offset && offset < s.end;
    });
  };

  for (const Token& t : cs.tokens) {
    if (t.kind != TokenKind::kText) {
      out.tokens.push_back(t);
      continue;
    }
    const std::u32string& text = t.surface;
    std::vector<bool> keep(text.size(), true);
    for (size_t i = 0; i < text.size();) {
      if (is_protected(t.span.start + i)) {
        ++i;
        continue;
      }
      auto m = catalog.surfaces().LongestMatchAt(text, i);
      bool blocked = false;
      if (m) {
        for (size_t k = 0; k < m->length; ++k) {
          if (is_protected(t.span.start + i + k)) blocked = true;
        }
      }
      if (m && !blocked) {
        std::fill_n(keep.begin() + i, m->length, false);
        i += m->length;
      } else {
        ++i;
      }
    }
    for (size_t i = 0; i < text.size();) {
      if (!keep[i]) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < text.size() && keep[j]) ++j;
      out.tokens.push_back({TokenKind::kText, text.substr(i, j - i),
                            {t.span.start + i, t.span.start + j}});
      i = j;
    }
  }
  return out;
}

CompressedSentence DeleteInterference(const CompressedSentence& cs,
                                      const InterferenceCatalog& catalog) {
  const std::vector<Span> heads = ClauseHeadSpans(cs);
  return DeleteInterference(cs, catalog, heads);
}

}  // namespace epitag
