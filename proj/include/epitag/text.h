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

#ifndef EPITAG_TEXT_H_
#define EPITAG_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace epitag {

// Half-open range [start, end) of Unicode scalar values.
struct Span {
  size_t start = 0;
  size_t end = 0;

  size_t length() const { return end - start; }
  bool empty() const { return start == end; }
  bool Contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  bool operator==(const Span&) const = default;
};

// Decodes UTF-8 into scalar values. Throws EncodingError on malformed input,
// overlong forms, surrogates and values above U+10FFFF.
std::u32string DecodeUtf8(std::string_view text);

std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t ch);

bool IsWhitespace(char32_t ch);

// Removes every whitespace scalar (ASCII and ideographic space included).
std::u32string StripWhitespace(std::u32string_view text);

// Splits on a single-character delimiter; empty fields are kept.
std::vector<std::string> SplitFields(std::string_view line, char delim);

}  // namespace epitag

#endif  // EPITAG_TEXT_H_
