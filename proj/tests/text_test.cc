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

#include "epitag/text.h"

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "epitag/errors.h"

namespace epitag {
namespace {

TEST(Utf8Test, DecodesMixedWidths) {
  const std::u32string s = DecodeUtf8("a\xC3\xA9孫\xF0\xA0\x80\x80");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0], U'a');
  EXPECT_EQ(s[1], U'é');
  EXPECT_EQ(s[2], U'孫');
  EXPECT_EQ(s[3], U'\U00020000');
}

TEST(Utf8Test, RejectsMalformedInput) {
  EXPECT_THROW(DecodeUtf8("\xFF"), EncodingError);
  EXPECT_THROW(DecodeUtf8("\xE5\xAD"), EncodingError);      // truncated
  EXPECT_THROW(DecodeUtf8("\xC0\xAF"), EncodingError);      // overlong
  EXPECT_THROW(DecodeUtf8("\xED\xA0\x80"), EncodingError);  // surrogate
  EXPECT_THROW(DecodeUtf8("\x80"), EncodingError);
}

TEST(Utf8Test, RoundTripsRandomScalars) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<uint32_t> dist(1, 0x10FFFF);
  std::u32string text;
  while (text.size() < 5000) {
    const char32_t c = dist(rng);
    if (c >= 0xD800 && c <= 0xDFFF) continue;
    text.push_back(c);
  }
  EXPECT_EQ(DecodeUtf8(EncodeUtf8(text)), text);
}

TEST(WhitespaceTest, StripsAsciiAndIdeographicSpace) {
  EXPECT_EQ(StripWhitespace(U" 孫　男\n二\t人\r"), U"孫男二人");
  EXPECT_TRUE(IsWhitespace(U'　'));
  EXPECT_TRUE(IsWhitespace(U'﻿'));
  EXPECT_FALSE(IsWhitespace(U'，'));
}

TEST(SpanTest, ContainsAndOverlaps) {
  const Span a{2, 6};
  EXPECT_TRUE(a.Contains({3, 5}));
  EXPECT_TRUE(a.Contains({2, 6}));
  EXPECT_FALSE(a.Contains({1, 3}));
  EXPECT_TRUE(a.Overlaps({5, 9}));
  EXPECT_FALSE(a.Overlaps({6, 9}));
  EXPECT_EQ(a.length(), 4u);
  EXPECT_TRUE((Span{4, 4}).empty());
}

TEST(SplitFieldsTest, KeepsEmptyFields) {
  const auto f = SplitFields("a,,b,", ',');
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[1], "");
  EXPECT_EQ(f[3], "");
}

}  // namespace
}  // namespace epitag
