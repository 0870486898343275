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

#ifndef EPITAG_LEXICON_H_
#define EPITAG_LEXICON_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace epitag {

enum class DictKind { kKinship, kPlace, kOffice, kApptVerb, kInterference,
                      kExclusion };

// Lower-case names as used in CLI flags: kinship, place, office, appt-verb,
// interference, exclusion.
std::string_view DictKindName(DictKind kind);
std::optional<DictKind> ParseDictKind(std::string_view name);
inline constexpr DictKind kAllDictKinds[] = {
    DictKind::kKinship,  DictKind::kPlace,        DictKind::kOffice,
    DictKind::kApptVerb, DictKind::kInterference, DictKind::kExclusion};

// Generation and code attached to a kinship title. Codes are opaque strings;
// the published table mixes "2", "000" and "17".
struct KinshipCode {
  std::string title;
  std::string generation;  // G-<n> or G+<n>
  std::string code;
};

bool IsValidGeneration(std::string_view generation);

struct DictEntry {
  std::u32string surface;
  std::optional<KinshipCode> kinship;  // kKinship only
  std::string category;                // optional, all other kinds
  int source_row = 0;
};

struct ValidationIssue {
  int row = 0;
  std::string reason;
  std::string surface;

  // "ROW <n>: <reason>: <surface>"
  std::string ToString() const;
};

struct LoadOptions {
  // Any validation issue becomes a DictionaryError.
  bool strict = false;
  // Single-character place/office entries allowed despite the length rule.
  std::set<std::u32string> single_char_whitelist = {U"倅"};
};

// Prefix tree over scalar values supporting longest match at a position.
class SurfaceTrie {
 public:
  SurfaceTrie();

  void Insert(std::u32string_view key, uint32_t value);

  // Value and length of the longest key that starts at `pos`.
  std::optional<std::pair<uint32_t, size_t>> LongestMatchAt(
      std::u32string_view text, size_t pos) const;

 private:
  struct Node {
    std::unordered_map<char32_t, uint32_t> next;
    int64_t value = -1;
  };
  std::vector<Node> nodes_;
};

class Dictionary {
 public:
  struct Match {
    const DictEntry* entry;
    size_t length;
  };

  explicit Dictionary(DictKind kind, LoadOptions options = {});

  // Loads a dictionary file. Column layout per kind:
  //   kinship        surface,generation,code
  //   interference   category,surface
  //   others         surface[,category]
  // Fields are tab-separated if the line has a tab, comma-separated
  // otherwise. Lines starting with '#' are comments.
  // Throws IoError, EncodingError, or DictionaryError in strict mode.
  static Dictionary Load(const std::string& path, DictKind kind,
                         const LoadOptions& options = {});
  static Dictionary Parse(std::istream& in, DictKind kind,
                          const LoadOptions& options = {});
  static Dictionary ParseString(std::string_view data, DictKind kind,
                                const LoadOptions& options = {});

  // Validates and inserts; invalid or duplicate entries go to the report.
  bool Add(DictEntry entry);

  DictKind kind() const { return kind_; }
  const std::vector<DictEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const LoadOptions& options() const { return options_; }

  const DictEntry* Find(std::u32string_view surface) const;
  bool Contains(std::u32string_view surface) const {
    return Find(surface) != nullptr;
  }

  std::optional<Match> LongestMatchAt(std::u32string_view text,
                                      size_t pos) const;

  const std::vector<ValidationIssue>& report() const { return report_; }
  void AddIssue(ValidationIssue issue) { report_.push_back(std::move(issue)); }

  // Entries removed by ApplyExclusions.
  size_t removed_count() const { return removed_count_; }

  // Writes entries in load order using the layout accepted by Parse.
  std::string Serialize() const;

 private:
  friend Dictionary ApplyExclusions(const Dictionary&, const Dictionary&);
  void RebuildIndex();

  DictKind kind_;
  LoadOptions options_;
  std::vector<DictEntry> entries_;
  std::unordered_map<std::u32string, size_t> by_surface_;
  SurfaceTrie trie_;
  std::vector<ValidationIssue> report_;
  size_t removed_count_ = 0;
};

// Returns `dict` without any surface present in `exclusions`. Idempotent.
Dictionary ApplyExclusions(const Dictionary& dict,
                           const Dictionary& exclusions);

// Surfaces present in both place and office dictionaries. Allowed (place
// wins at match time) but worth reporting.
std::vector<ValidationIssue> CrossCheck(const Dictionary& place,
                                        const Dictionary& office);

}  // namespace epitag

#endif  // EPITAG_LEXICON_H_
