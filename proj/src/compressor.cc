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

#include "epitag/compressor.h"

namespace epitag {

std::string_view MarkerName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kText: return "";
    case TokenKind::kHeadMark: return "wm";
    case TokenKind::kSep: return "wsep";
    case TokenKind::kPlace: return "ns";
    case TokenKind::kOffice: return "no_noc";
    case TokenKind::kApptVerb: return "vno";
  }
  return "";
}

bool IsPlaceholder(TokenKind kind) {
  return kind == TokenKind::kPlace || kind == TokenKind::kOffice ||
         kind == TokenKind::kApptVerb;
}

Compressor::Compressor(const Dictionary& place, const Dictionary& office,
                       const Dictionary& appt, CompressOptions options)
    : place_(&place), office_(&office), appt_(&appt),
      options_(std::move(options)) {}

bool Compressor::ApptQualifies(std::u32string_view text, size_t pos,
                               size_t len) const {
  if (!options_.appt_requires_following_title) return true;
  const size_t next = pos + len;
  if (next >= text.size()) return false;
  if (place_->LongestMatchAt(text, next) ||
      office_->LongestMatchAt(text, next)) {
    return true;
  }
  auto chained = appt_->LongestMatchAt(text, next);
  return chained && ApptQualifies(text, next, chained->length);
}

CompressedSentence Compressor::Compress(std::u32string_view text) const {
  CompressedSentence cs;
  cs.original = std::u32string(text);
  auto& tokens = cs.tokens;

  size_t text_start = std::u32string::npos;
  auto flush_text = [&](size_t end) {
    if (text_start != std::u32string::npos) {
      tokens.push_back({TokenKind::kText,
                        std::u32string(text.substr(text_start, end - text_start)),
                        {text_start, end}});
      text_start = std::u32string::npos;
    }
  };
  auto emit = [&](TokenKind kind, size_t pos, size_t len) {
    flush_text(pos);
    tokens.push_back(
        {kind, std::u32string(text.substr(pos, len)), {pos, pos + len}});
  };

  size_t pos = 0;
  while (pos < text.size()) {
    switch (options_.punct.Classify(text[pos])) {
      case PunctClass::kSentenceEnd:
        flush_text(pos);
        ++pos;
        continue;
      case PunctClass::kHeadMark:
        emit(TokenKind::kHeadMark, pos, 1);
        ++pos;
        continue;
      case PunctClass::kSeparator:
        emit(TokenKind::kSep, pos, 1);
        ++pos;
        continue;
      case PunctClass::kOther:
        break;
    }
    if (auto m = place_->LongestMatchAt(text, pos)) {
      emit(TokenKind::kPlace, pos, m->length);
      pos += m->length;
    } else if (auto m = office_->LongestMatchAt(text, pos)) {
      emit(TokenKind::kOffice, pos, m->length);
      pos += m->length;
    } else if (auto m = appt_->LongestMatchAt(text, pos);
               m && ApptQualifies(text, pos, m->length)) {
      emit(TokenKind::kApptVerb, pos, m->length);
      pos += m->length;
    } else {
      if (text_start == std::u32string::npos) text_start = pos;
      ++pos;
    }
  }
  flush_text(text.size());
  return cs;
}

CompressedSentence Compressor::Compress(const Sentence& sentence) const {
  CompressedSentence cs = Compress(sentence.raw_text);
  cs.doc_id = sentence.doc_id;
  cs.sentence_index = sentence.index;
  return cs;
}

std::u32string SerializeU32(const CompressedSentence& cs, MarkerStyle style,
                            std::vector<size_t>* offsets) {
  std::u32string out;
  if (offsets) offsets->clear();
  bool prev_marker = false;
  auto put = [&](std::u32string_view s, size_t origin) {
    out += s;
    if (offsets) offsets->insert(offsets->end(), s.size(), origin);
  };
  for (const Token& t : cs.tokens) {
    if (t.kind == TokenKind::kText) {
      out += t.surface;
      if (offsets) {
        for (size_t k = 0; k < t.surface.size(); ++k) {
          offsets->push_back(t.span.start + k);
        }
      }
      prev_marker = false;
      continue;
    }
    std::u32string name = DecodeUtf8(MarkerName(t.kind));
    if (style == MarkerStyle::kDelimited || !prev_marker) {
      put(U"/", t.span.start);
    }
    put(name + U"/", t.span.start);
    prev_marker = true;
  }
  if (offsets) offsets->push_back(cs.original.size());
  return out;
}

std::string Serialize(const CompressedSentence& cs, MarkerStyle style) {
  return EncodeUtf8(SerializeU32(cs, style));
}

std::string Serialize(const CompressedSentence& cs) {
  return Serialize(cs, cs.stage == Stage::kCompressed ? MarkerStyle::kShared
                                                      : MarkerStyle::kDelimited);
}

bool TilesOriginal(const CompressedSentence& cs, const PunctConfig& punct) {
  size_t pos = 0;
  auto skip_terminators = [&](size_t until) {
    for (; pos < until; ++pos) {
      if (punct.Classify(cs.original[pos]) != PunctClass::kSentenceEnd) {
        return false;
      }
    }
    return true;
  };
  for (const Token& t : cs.tokens) {
    if (t.surface.empty() || t.span.start < pos ||
        t.span.end > cs.original.size() ||
        t.span.length() != t.surface.size()) {
      return false;
    }
    if (!skip_terminators(t.span.start)) return false;
    if (cs.original.compare(t.span.start, t.span.length(), t.surface) != 0) {
      return false;
    }
    pos = t.span.end;
  }
  return skip_terminators(cs.original.size());
}

}  // namespace epitag
