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

#include "epitag/review_output.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "epitag/errors.h"
#include "epitag/text.h"

namespace epitag {

namespace {

std::vector<const KinshipRecord*> Sorted(
    const std::vector<KinshipRecord>& records) {
  std::vector<const KinshipRecord*> sorted;
  sorted.reserve(records.size());
  for (const auto& r : records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const KinshipRecord* a, const KinshipRecord* b) {
                     if (a->doc_id != b->doc_id) return a->doc_id < b->doc_id;
                     return a->sentence_index < b->sentence_index;
                   });
  return sorted;
}

std::string FormatRatio(const RunStats& s) {
  if (!s.agreement()) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%zu/%zu (%.4f)", s.agreeing(),
                s.records_with_count, *s.agreement());
  return buf;
}

}  // namespace

std::vector<std::string> ReviewFields(const KinshipRecord& r) {
  std::string names;
  for (size_t i = 0; i < r.names.size(); ++i) {
    if (i) names += '|';
    names += EncodeUtf8(r.names[i].surface);
  }
  return {r.doc_id,
          std::to_string(r.sentence_index),
          r.relation_label,
          r.kinship_code ? r.kinship_code->code : "",
          r.kinship_code ? r.kinship_code->generation : "",
          r.declared_count ? std::to_string(*r.declared_count) : "",
          names,
          r.count_mismatch ? "true" : "false",
          r.pattern_id,
          r.compressed_form,
          r.original};
}

std::string CsvEscape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void WriteCsvRow(std::ostream& out, const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << CsvEscape(fields[i]);
  }
  out << '\n';
}

std::vector<std::vector<std::string>> ParseCsv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteReviewCsv(const std::vector<KinshipRecord>& records,
                    std::ostream& out) {
  WriteCsvRow(out, std::vector<std::string>(std::begin(kReviewHeader),
                                            std::end(kReviewHeader)));
  for (const KinshipRecord* r : Sorted(records)) {
    WriteCsvRow(out, ReviewFields(*r));
  }
}

void EmitReviewCsv(const std::vector<KinshipRecord>& records,
                   const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  WriteReviewCsv(records, out);
  if (!out) throw IoError("write failed: " + path);
}

void WriteRejectedCsv(const std::vector<KinshipRecord>& records,
                      std::ostream& out) {
  WriteCsvRow(out, {"doc_id", "sentence_index", "pattern_id", "candidate",
                    "start", "end", "reason"});
  for (const KinshipRecord* r : Sorted(records)) {
    for (const NameCandidate& c : r->rejected) {
      WriteCsvRow(out, {r->doc_id, std::to_string(r->sentence_index),
                        r->pattern_id, EncodeUtf8(c.surface),
                        std::to_string(c.span.start),
                        std::to_string(c.span.end),
                        std::string(RejectReasonName(*c.rejection))});
    }
  }
}

std::optional<double> RunStats::agreement() const {
  if (records_with_count == 0) return std::nullopt;
  return static_cast<double>(agreeing()) /
         static_cast<double>(records_with_count);
}

RunStats& RunStats::operator+=(const RunStats& o) {
  sentences_total += o.sentences_total;
  sentences_accepted += o.sentences_accepted;
  records_total += o.records_total;
  names_total += o.names_total;
  mismatch_count += o.mismatch_count;
  records_with_count += o.records_with_count;
  records_without_code += o.records_without_code;
  for (const auto& [k, v] : o.per_pattern_yields) per_pattern_yields[k] += v;
  for (const auto& [k, v] : o.rejected_candidates_by_reason) {
    rejected_candidates_by_reason[k] += v;
  }
  return *this;
}

std::string RunStats::ToText() const {
  std::ostringstream out;
  auto line = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(28) << key << value << '\n';
  };
  line("sentences_total", std::to_string(sentences_total));
  line("sentences_accepted", std::to_string(sentences_accepted));
  line("records_total", std::to_string(records_total));
  line("names_total", std::to_string(names_total));
  line("mismatch_count", std::to_string(mismatch_count));
  line("records_without_code", std::to_string(records_without_code));
  line("count_agreement", FormatRatio(*this));
  for (const auto& [id, n] : per_pattern_yields) {
    line("yield[" + id + "]", std::to_string(n));
  }
  for (const auto& [reason, n] : rejected_candidates_by_reason) {
    line("rejected[" + reason + "]", std::to_string(n));
  }
  return out.str();
}

std::string RunStats::ToKeyValue() const {
  std::ostringstream out;
  out << "sentences_total=" << sentences_total << '\n'
      << "sentences_accepted=" << sentences_accepted << '\n'
      << "records_total=" << records_total << '\n'
      << "names_total=" << names_total << '\n'
      << "mismatch_count=" << mismatch_count << '\n'
      << "records_with_count=" << records_with_count << '\n'
      << "records_without_code=" << records_without_code << '\n';
  if (auto a = agreement()) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", *a);
    out << "count_agreement=" << buf << '\n';
  } else {
    out << "count_agreement=n/a\n";
  }
  for (const auto& [id, n] : per_pattern_yields) {
    out << "yield." << id << '=' << n << '\n';
  }
  for (const auto& [reason, n] : rejected_candidates_by_reason) {
    out << "rejected." << reason << '=' << n << '\n';
  }
  return out.str();
}

RunStats ComputeStats(const std::vector<FilterDecision>& decisions,
                      const std::vector<KinshipRecord>& records) {
  RunStats s;
  s.sentences_total = decisions.size();
  s.sentences_accepted = static_cast<size_t>(
      std::count_if(decisions.begin(), decisions.end(),
                    [](const FilterDecision& d) { return d.accepted; }));
  s.records_total = records.size();
  for (const KinshipRecord& r : records) {
    s.names_total += r.names.size();
    if (r.count_mismatch) ++s.mismatch_count;
    if (r.declared_count) ++s.records_with_count;
    if (!r.kinship_code) ++s.records_without_code;
    ++s.per_pattern_yields[r.pattern_id];
    for (const NameCandidate& c : r.rejected) {
      ++s.rejected_candidates_by_reason[std::string(
          RejectReasonName(*c.rejection))];
    }
  }
  return s;
}

}  // namespace epitag
