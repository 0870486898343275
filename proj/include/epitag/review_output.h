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

#ifndef EPITAG_REVIEW_OUTPUT_H_
#define EPITAG_REVIEW_OUTPUT_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epitag/extractor.h"
#include "epitag/kinship_filter.h"

namespace epitag {

// Column order of review.csv.
inline constexpr const char* kReviewHeader[] = {
    "doc_id",         "sentence_index", "relation",  "kinship_code",
    "generation",     "declared_count", "names",     "count_mismatch",
    "pattern_id",     "compressed_form", "original"};

// Fields of one review.csv row, in header order.
std::vector<std::string> ReviewFields(const KinshipRecord& record);

// Records are written sorted by (doc_id, sentence_index); ties keep input
// order.
void WriteReviewCsv(const std::vector<KinshipRecord>& records,
                    std::ostream& out);
void EmitReviewCsv(const std::vector<KinshipRecord>& records,
                   const std::string& path);

// rejected.csv: doc_id, sentence_index, pattern_id, candidate, start, end,
// reason.
void WriteRejectedCsv(const std::vector<KinshipRecord>& records,
                      std::ostream& out);

// RFC 4180 quoting: fields with comma, quote, CR or LF are quoted.
std::string CsvEscape(const std::string& field);
void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields);
// Inverse of WriteCsvRow over a whole stream.
std::vector<std::vector<std::string>> ParseCsv(std::istream& in);

struct RunStats {
  size_t sentences_total = 0;
  size_t sentences_accepted = 0;
  size_t records_total = 0;
  size_t names_total = 0;
  size_t mismatch_count = 0;
  size_t records_with_count = 0;
  size_t records_without_code = 0;
  std::map<std::string, size_t> per_pattern_yields;
  std::map<std::string, size_t> rejected_candidates_by_reason;

  // Records whose declared count matches the harvest, over records with a
  // declared count. Unset when no record declares a count.
  std::optional<double> agreement() const;
  size_t agreeing() const { return records_with_count - mismatch_count; }

  RunStats& operator+=(const RunStats& other);
  bool operator==(const RunStats&) const = default;

  std::string ToText() const;
  std::string ToKeyValue() const;
};

RunStats ComputeStats(const std::vector<FilterDecision>& decisions,
                      const std::vector<KinshipRecord>& records);

}  // namespace epitag

#endif  // EPITAG_REVIEW_OUTPUT_H_
