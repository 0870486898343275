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

#include "epitag/extractor.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "epitag/errors.h"
#include "epitag/text.h"

namespace epitag {

static_assert(sizeof(wchar_t) == sizeof(char32_t),
              "patterns are matched as wchar_t scalar values");

namespace {

constexpr std::u32string_view kDigits = U"一二三四五六七八九";
constexpr char32_t kTen = U'十';

int DigitValue(char32_t ch) {
  size_t i = kDigits.find(ch);
  return i == std::u32string_view::npos ? 0 : static_cast<int>(i) + 1;
}

std::wstring ToWide(std::u32string_view s) {
  return std::wstring(s.begin(), s.end());
}

std::u32string FromWide(std::wstring_view s) {
  return std::u32string(s.begin(), s.end());
}

bool ParseBool(const std::string& s, bool* out) {
  if (s == "true" || s == "1" || s == "yes") {
    *out = true;
  } else if (s == "false" || s == "0" || s == "no") {
    *out = false;
  } else {
    return false;
  }
  return true;
}

struct RawMatch {
  Span span;
  std::u32string relation;
  std::optional<std::u32string> count;
  std::optional<Span> name;
};

std::vector<RawMatch> RunPattern(const std::wregex& re, const PatternSpec& spec,
                                 const std::wstring& text) {
  std::vector<RawMatch> out;
  for (auto it = std::wsregex_iterator(text.begin(), text.end(), re);
       it != std::wsregex_iterator(); ++it) {
    const std::wsmatch& m = *it;
    if (m.length(0) == 0) continue;
    const auto rel = static_cast<size_t>(spec.relation_capture);
    if (rel >= m.size() || !m[rel].matched || m.length(rel) == 0) continue;
    RawMatch raw;
    raw.span.start = static_cast<size_t>(m.position(0));
    raw.span.end = raw.span.start + static_cast<size_t>(m.length(0));
    raw.relation = FromWide(m.str(rel));
    const auto cnt = static_cast<size_t>(spec.count_capture);
    if (cnt > 0 && cnt < m.size() && m[cnt].matched && m.length(cnt) > 0) {
      raw.count = FromWide(m.str(cnt));
    }
    const auto name = static_cast<size_t>(spec.name_capture);
    if (name > 0 && name < m.size() && m[name].matched) {
      const auto at = static_cast<size_t>(m.position(name));
      raw.name = Span{at, at + static_cast<size_t>(m.length(name))};
    }
    out.push_back(std::move(raw));
  }
  return out;
}

// Earlier registry rank wins on overlap; result sorted by position.
std::vector<PatternHit> ResolveOverlaps(std::vector<PatternHit> hits) {
  std::stable_sort(hits.begin(), hits.end(),
                   [](const PatternHit& a, const PatternHit& b) {
                     if (a.rank != b.rank) return a.rank < b.rank;
                     return a.sentence_span.start < b.sentence_span.start;
                   });
  std::vector<PatternHit> kept;
  for (PatternHit& h : hits) {
    const bool clash =
        std::any_of(kept.begin(), kept.end(), [&](const PatternHit& k) {
          return k.sentence_span.Overlaps(h.sentence_span);
        });
    if (!clash) kept.push_back(std::move(h));
  }
  std::sort(kept.begin(), kept.end(),
            [](const PatternHit& a, const PatternHit& b) {
              if (a.sentence_span.start != b.sentence_span.start) {
                return a.sentence_span.start < b.sentence_span.start;
              }
              return a.rank < b.rank;
            });
  return kept;
}

}  // namespace

// ---------------------------------------------------------------------------
// Numerals

std::optional<int> TryParseChineseNumeral(std::u32string_view text) {
  if (text.empty() || text.size() > 3) return std::nullopt;
  const size_t ten = text.find(kTen);
  if (ten == std::u32string_view::npos) {
    if (text.size() != 1) return std::nullopt;
    int d = DigitValue(text[0]);
    return d ? std::optional<int>(d) : std::nullopt;
  }
  int tens = 1;
  if (ten == 1) {
    tens = DigitValue(text[0]);
    if (!tens) return std::nullopt;
  } else if (ten != 0) {
    return std::nullopt;
  }
  std::u32string_view rest = text.substr(ten + 1);
  int units = 0;
  if (rest.size() == 1) {
    units = DigitValue(rest[0]);
    if (!units) return std::nullopt;
  } else if (!rest.empty()) {
    return std::nullopt;
  }
  return tens * 10 + units;
}

int ParseChineseNumeral(std::u32string_view text) {
  auto v = TryParseChineseNumeral(text);
  if (!v) {
    throw UnparsableNumeral("not a numeral in 1..99: '" + EncodeUtf8(text) +
                            "'");
  }
  return *v;
}

std::u32string FormatChineseNumeral(int value) {
  if (value < 1 || value > 99) {
    throw std::out_of_range("numeral out of range: " + std::to_string(value));
  }
  std::u32string out;
  const int tens = value / 10;
  const int units = value % 10;
  if (tens > 1) out += kDigits[tens - 1];
  if (tens > 0) out += kTen;
  if (units > 0) out += kDigits[units - 1];
  return out;
}

// ---------------------------------------------------------------------------
// Registry

PatternRegistry::PatternRegistry(std::vector<PatternSpec> specs)
    : specs_(std::move(specs)) {
  compiled_.reserve(specs_.size());
  for (const PatternSpec& spec : specs_) {
    std::wregex re;
    try {
      re = std::wregex(ToWide(DecodeUtf8(spec.expression)),
                       std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw PatternCompileError("pattern " + spec.id + ": " + e.what());
    } catch (const EncodingError& e) {
      throw PatternCompileError("pattern " + spec.id + ": " + e.what());
    }
    const auto groups = static_cast<int>(re.mark_count());
    if (spec.relation_capture < 0 || spec.relation_capture > groups) {
      throw PatternCompileError("pattern " + spec.id +
                                ": relation capture out of range");
    }
    if (spec.count_capture < 0 || spec.count_capture > groups) {
      throw PatternCompileError("pattern " + spec.id +
                                ": count capture out of range");
    }
    if (spec.name_capture < 0 || spec.name_capture > groups) {
      throw PatternCompileError("pattern " + spec.id +
                                ": name capture out of range");
    }
    compiled_.push_back(std::move(re));
  }
}

PatternRegistry PatternRegistry::Parse(std::istream& in) {
  std::vector<PatternSpec> specs;
  std::string line;
  int row = 0;
  auto fail = [&](const std::string& what) {
    throw PatternCompileError("registry row " + std::to_string(row) + ": " +
                              what);
  };
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = SplitFields(line, '\t');
    if (f.size() < 5 || f.size() > 7) fail("expected 5 to 7 columns");
    PatternSpec spec;
    spec.id = f[0];
    spec.expression = f[1];
    try {
      spec.relation_capture = std::stoi(f[2]);
      spec.count_capture = f[3].empty() ? 0 : std::stoi(f[3]);
      if (f.size() == 7 && !f[6].empty()) spec.name_capture = std::stoi(f[6]);
    } catch (const std::exception&) {
      fail("capture index is not an integer");
    }
    if (!ParseBool(f[4], &spec.enabled)) fail("bad enabled flag '" + f[4] + "'");
    if (f.size() >= 6 && !f[5].empty()) {
      if (f[5] == "raw") {
        spec.target = PatternTarget::kRaw;
      } else if (f[5] != "compressed") {
        fail("unknown target '" + f[5] + "'");
      }
    }
    if (spec.id.empty()) fail("empty id");
    specs.push_back(std::move(spec));
  }
  return PatternRegistry(std::move(specs));
}

PatternRegistry PatternRegistry::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open registry " + path);
  return Parse(in);
}

std::string PatternRegistry::Serialize() const {
  std::string out;
  for (const PatternSpec& s : specs_) {
    out += s.id + "\t" + s.expression + "\t" +
           std::to_string(s.relation_capture) + "\t" +
           (s.count_capture ? std::to_string(s.count_capture) : "") + "\t" +
           (s.enabled ? "true" : "false") + "\t" +
           (s.target == PatternTarget::kRaw ? "raw" : "compressed") + "\t" +
           (s.name_capture ? std::to_string(s.name_capture) : "") + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matching

std::vector<PatternHit> MatchPatterns(std::u32string_view serialized,
                                      const PatternRegistry& registry) {
  const std::wstring wide = ToWide(serialized);
  std::vector<PatternHit> hits;
  for (size_t i = 0; i < registry.size(); ++i) {
    const PatternSpec& spec = registry.specs()[i];
    if (!spec.enabled || spec.target != PatternTarget::kCompressed) continue;
    for (RawMatch& m : RunPattern(registry.compiled(i), spec, wide)) {
      hits.push_back({spec.id, i, spec.target, m.span, m.span,
                      std::move(m.relation), std::move(m.count), m.name});
    }
  }
  return ResolveOverlaps(std::move(hits));
}

std::vector<PatternHit> FindHits(const CompressedSentence& compressed,
                                 const PatternRegistry& registry) {
  std::vector<size_t> offsets;
  const std::wstring serialized =
      ToWide(SerializeU32(compressed, MarkerStyle::kShared, &offsets));
  const std::wstring raw = ToWide(compressed.original);
  std::vector<PatternHit> hits;
  for (size_t i = 0; i < registry.size(); ++i) {
    const PatternSpec& spec = registry.specs()[i];
    if (!spec.enabled) continue;
    const bool on_raw = spec.target == PatternTarget::kRaw;
    for (RawMatch& m :
         RunPattern(registry.compiled(i), spec, on_raw ? raw : serialized)) {
      Span in_sentence = m.span;
      std::optional<Span> name = m.name;
      if (!on_raw) {
        in_sentence = {offsets[m.span.start], offsets[m.span.end]};
        // Matched only marker text; no sentence characters to point at.
        if (in_sentence.empty()) continue;
        if (name) name = Span{offsets[name->start], offsets[name->end]};
      }
      hits.push_back({spec.id, i, spec.target, m.span, in_sentence,
                      std::move(m.relation), std::move(m.count), name});
    }
  }
  return ResolveOverlaps(std::move(hits));
}

// ---------------------------------------------------------------------------
// Harvesting

std::string_view RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kOverLength: return "OverLength";
    case RejectReason::kPlaceholderAdjacent: return "PlaceholderAdjacent";
    case RejectReason::kEmpty: return "Empty";
  }
  return "";
}

std::vector<NameCandidate> HarvestNames(const CompressedSentence& cleaned,
                                        const PatternHit& hit,
                                        const HarvestRules& rules,
                                        size_t stop) {
  std::vector<NameCandidate> out;
  auto judge = [&](NameCandidate& c, bool glued) {
    if (c.surface.empty()) {
      c.rejection = RejectReason::kEmpty;
    } else if (c.surface.size() > rules.max_name_len) {
      c.rejection = RejectReason::kOverLength;
    } else if (rules.reject_placeholder_adjacent && glued) {
      c.rejection = RejectReason::kPlaceholderAdjacent;
    }
    c.accepted = !c.rejection.has_value();
  };
  if (hit.name_span) {
    const Span s = *hit.name_span;
    const std::u32string_view piece =
        std::u32string_view(cleaned.original).substr(s.start, s.length());
    NameCandidate c;
    const size_t strip = rules.prefixes.MatchLength(piece);
    c.surface = std::u32string(piece.substr(strip));
    c.span = {s.start + strip, s.end};
    judge(c, false);
    out.push_back(std::move(c));
    return out;
  }
  const size_t begin = hit.sentence_span.end;
  const auto& tokens = cleaned.tokens;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::kText) continue;
    const size_t from = std::max(t.span.start, begin);
    const size_t to = std::min(t.span.end, stop);
    if (from >= to) continue;
    std::u32string_view piece =
        std::u32string_view(t.surface).substr(from - t.span.start, to - from);

    NameCandidate c;
    const size_t strip = rules.prefixes.MatchLength(piece);
    c.surface = std::u32string(piece.substr(strip));
    c.span = {from + strip, to};
    const bool glued = i + 1 < tokens.size() &&
                       IsPlaceholder(tokens[i + 1].kind) &&
                       tokens[i + 1].span.start == t.span.end &&
                       to == t.span.end;
    judge(c, glued);
    out.push_back(std::move(c));
  }
  return out;
}

KinshipRecord BuildRecord(const PatternHit& hit,
                          std::vector<NameCandidate> candidates,
                          const Dictionary& kinship,
                          const CompressedSentence& cleaned) {
  KinshipRecord r;
  r.doc_id = cleaned.doc_id;
  r.sentence_index = cleaned.sentence_index;
  r.relation_label = EncodeUtf8(hit.relation_label);
  if (const DictEntry* e = kinship.Find(hit.relation_label)) {
    r.kinship_code = e->kinship;
  }
  if (hit.raw_count_text) {
    r.declared_count = TryParseChineseNumeral(*hit.raw_count_text);
  }
  for (NameCandidate& c : candidates) {
    (c.accepted ? r.names : r.rejected).push_back(std::move(c));
  }
  r.pattern_id = hit.pattern_id;
  r.count_mismatch = r.declared_count.has_value() &&
                     static_cast<size_t>(*r.declared_count) != r.names.size();
  r.compressed_form = Serialize(cleaned);
  r.original = EncodeUtf8(cleaned.original);
  return r;
}

Extractor::Extractor(const PatternRegistry& registry,
                     const InterferenceCatalog& catalog,
                     const Dictionary& kinship, HarvestRules rules)
    : registry_(&registry), catalog_(&catalog), kinship_(&kinship),
      rules_(std::move(rules)) {}

SentenceExtraction Extractor::Extract(
    const CompressedSentence& compressed) const {
  SentenceExtraction out;
  out.hits = FindHits(compressed, *registry_);

  std::vector<Span> protect = ClauseHeadSpans(compressed);
  for (const PatternHit& h : out.hits) protect.push_back(h.sentence_span);
  out.cleaned = DeleteInterference(compressed, *catalog_, protect);

  for (size_t i = 0; i < out.hits.size(); ++i) {
    const size_t stop = i + 1 < out.hits.size()
                            ? out.hits[i + 1].sentence_span.start
                            : std::u32string::npos;
    out.records.push_back(BuildRecord(
        out.hits[i], HarvestNames(out.cleaned, out.hits[i], rules_, stop),
        *kinship_, out.cleaned));
  }
  return out;
}

}  // namespace epitag
