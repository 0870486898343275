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

#include "epitag/lexicon.h"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "epitag/errors.h"
#include "epitag/segmenter.h"
#include "epitag/text.h"

namespace epitag {

std::string_view DictKindName(DictKind kind) {
  switch (kind) {
    case DictKind::kKinship: return "kinship";
    case DictKind::kPlace: return "place";
    case DictKind::kOffice: return "office";
    case DictKind::kApptVerb: return "appt-verb";
    case DictKind::kInterference: return "interference";
    case DictKind::kExclusion: return "exclusion";
  }
  return "unknown";
}

std::optional<DictKind> ParseDictKind(std::string_view name) {
  for (DictKind kind : kAllDictKinds) {
    if (DictKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

bool IsValidGeneration(std::string_view generation) {
  static const std::regex kPattern("G[-+][0-9]+");
  return std::regex_match(generation.begin(), generation.end(), kPattern);
}

std::string ValidationIssue::ToString() const {
  return "ROW " + std::to_string(row) + ": " + reason + ": " + surface;
}

// ---------------------------------------------------------------------------
// SurfaceTrie

SurfaceTrie::SurfaceTrie() : nodes_(1) {}

void SurfaceTrie::Insert(std::u32string_view key, uint32_t value) {
  uint32_t node = 0;
  for (char32_t ch : key) {
    auto it = nodes_[node].next.find(ch);
    if (it == nodes_[node].next.end()) {
      const auto child = static_cast<uint32_t>(nodes_.size());
      nodes_[node].next.emplace(ch, child);
      nodes_.emplace_back();
      node = child;
    } else {
      node = it->second;
    }
  }
  nodes_[node].value = value;
}

std::optional<std::pair<uint32_t, size_t>> SurfaceTrie::LongestMatchAt(
    std::u32string_view text, size_t pos) const {
  std::optional<std::pair<uint32_t, size_t>> best;
  uint32_t node = 0;
  for (size_t i = pos; i < text.size(); ++i) {
    auto it = nodes_[node].next.find(text[i]);
    if (it == nodes_[node].next.end()) break;
    node = it->second;
    if (nodes_[node].value >= 0) {
      best.emplace(static_cast<uint32_t>(nodes_[node].value), i + 1 - pos);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Dictionary

namespace {

bool IsStructural(char32_t ch) {
  return ch == U'/' || IsWhitespace(ch) ||
         ClassifyPunct(ch) != PunctClass::kOther;
}

std::string Trim(std::string s) {
  const char* ws = " \t\r";
  size_t b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

Dictionary::Dictionary(DictKind kind, LoadOptions options)
    : kind_(kind), options_(std::move(options)) {}

bool Dictionary::Add(DictEntry entry) {
  const std::string shown = EncodeUtf8(entry.surface);
  auto reject = [&](std::string reason) {
    report_.push_back({entry.source_row, std::move(reason), shown});
    return false;
  };
  if (entry.surface.empty()) return reject("empty surface");
  if (std::any_of(entry.surface.begin(), entry.surface.end(), IsStructural)) {
    return reject("contains structural character");
  }
  if ((kind_ == DictKind::kPlace || kind_ == DictKind::kOffice) &&
      entry.surface.size() < 2 &&
      !options_.single_char_whitelist.contains(entry.surface)) {
    return reject("single-character, not whitelisted");
  }
  if (kind_ == DictKind::kKinship) {
    if (!entry.kinship) return reject("missing kinship code");
    if (!IsValidGeneration(entry.kinship->generation)) {
      return reject("invalid generation '" + entry.kinship->generation + "'");
    }
    if (entry.kinship->code.empty()) return reject("empty code");
    entry.kinship->title = shown;
  }
  if (by_surface_.contains(entry.surface)) {
    return reject("duplicate surface");
  }
  const auto id = static_cast<uint32_t>(entries_.size());
  by_surface_.emplace(entry.surface, id);
  trie_.Insert(entry.surface, id);
  entries_.push_back(std::move(entry));
  return true;
}

void Dictionary::RebuildIndex() {
  by_surface_.clear();
  trie_ = SurfaceTrie();
  for (size_t i = 0; i < entries_.size(); ++i) {
    by_surface_.emplace(entries_[i].surface, i);
    trie_.Insert(entries_[i].surface, static_cast<uint32_t>(i));
  }
}

const DictEntry* Dictionary::Find(std::u32string_view surface) const {
  auto it = by_surface_.find(std::u32string(surface));
  return it == by_surface_.end() ? nullptr : &entries_[it->second];
}

std::optional<Dictionary::Match> Dictionary::LongestMatchAt(
    std::u32string_view text, size_t pos) const {
  auto hit = trie_.LongestMatchAt(text, pos);
  if (!hit) return std::nullopt;
  return Match{&entries_[hit->first], hit->second};
}

Dictionary Dictionary::Parse(std::istream& in, DictKind kind,
                             const LoadOptions& options) {
  Dictionary dict(kind, options);
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (row == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (Trim(line).empty() || line[0] == '#') continue;
    const char delim = line.find('\t') != std::string::npos ? '\t' : ',';
    std::vector<std::string> fields = SplitFields(line, delim);
    for (auto& f : fields) f = Trim(f);

    DictEntry entry;
    entry.source_row = row;
    std::string surface_field;
    bool malformed = false;
    switch (kind) {
      case DictKind::kKinship:
        if (fields.size() != 3) {
          malformed = true;
          break;
        }
        surface_field = fields[0];
        entry.kinship = KinshipCode{"", fields[1], fields[2]};
        break;
      case DictKind::kInterference:
        if (fields.size() == 1) {
          surface_field = fields[0];
        } else if (fields.size() == 2) {
          entry.category = fields[0];
          surface_field = fields[1];
        } else {
          malformed = true;
        }
        break;
      default:
        if (fields.size() > 2) {
          malformed = true;
          break;
        }
        surface_field = fields[0];
        if (fields.size() == 2) entry.category = fields[1];
        break;
    }
    if (malformed) {
      dict.report_.push_back(
          {row, "malformed record (" + std::to_string(fields.size()) +
                    " fields)", line});
      continue;
    }
    try {
      entry.surface = DecodeUtf8(surface_field);
    } catch (const EncodingError& e) {
      throw EncodingError("row " + std::to_string(row) + ": " + e.what());
    }
    dict.Add(std::move(entry));
  }
  if (options.strict && !dict.report_.empty()) {
    std::string msg = std::string(DictKindName(kind)) + " dictionary has " +
                      std::to_string(dict.report_.size()) +
                      " validation issue(s); first: " +
                      dict.report_.front().ToString();
    throw DictionaryError(msg);
  }
  return dict;
}

Dictionary Dictionary::ParseString(std::string_view data, DictKind kind,
                                   const LoadOptions& options) {
  std::istringstream in{std::string(data)};
  return Parse(in, kind, options);
}

Dictionary Dictionary::Load(const std::string& path, DictKind kind,
                            const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dictionary " + path);
  try {
    return Parse(in, kind, options);
  } catch (const DictionaryError& e) {
    throw DictionaryError(path + ": " + e.what());
  } catch (const EncodingError& e) {
    throw EncodingError(path + ": " + e.what());
  }
}

std::string Dictionary::Serialize() const {
  std::string out;
  for (const DictEntry& e : entries_) {
    const std::string surface = EncodeUtf8(e.surface);
    switch (kind_) {
      case DictKind::kKinship:
        out += surface + "," + e.kinship->generation + "," + e.kinship->code;
        break;
      case DictKind::kInterference:
        out += e.category.empty() ? surface : e.category + "\t" + surface;
        break;
      default:
        out += e.category.empty() ? surface : surface + "," + e.category;
        break;
    }
    out += '\n';
  }
  return out;
}

Dictionary ApplyExclusions(const Dictionary& dict,
                           const Dictionary& exclusions) {
  Dictionary out = dict;
  out.entries_.clear();
  size_t removed = 0;
  for (const DictEntry& e : dict.entries()) {
    if (exclusions.Contains(e.surface)) {
      ++removed;
    } else {
      out.entries_.push_back(e);
    }
  }
  out.removed_count_ = dict.removed_count() + removed;
  out.RebuildIndex();
  return out;
}

std::vector<ValidationIssue> CrossCheck(const Dictionary& place,
                                        const Dictionary& office) {
  std::vector<ValidationIssue> issues;
  for (const DictEntry& e : office.entries()) {
    if (place.Contains(e.surface)) {
      issues.push_back({e.source_row, "also in place dictionary (place wins)",
                        EncodeUtf8(e.surface)});
    }
  }
  return issues;
}

}  // namespace epitag
