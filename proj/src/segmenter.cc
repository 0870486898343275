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

#include "epitag/segmenter.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "epitag/errors.h"

namespace epitag {

PunctClass PunctConfig::Classify(char32_t ch) const {
  if (terminators.find(ch) != std::u32string::npos) {
    return PunctClass::kSentenceEnd;
  }
  if (head_marks.find(ch) != std::u32string::npos) {
    return PunctClass::kHeadMark;
  }
  if (separators.find(ch) != std::u32string::npos) {
    return PunctClass::kSeparator;
  }
  return PunctClass::kOther;
}

const PunctConfig& PunctConfig::Default() {
  static const PunctConfig kDefault;
  return kDefault;
}

PunctClass ClassifyPunct(char32_t ch) {
  return PunctConfig::Default().Classify(ch);
}

Document MakeDocument(std::string id, std::string_view utf8_text,
                      std::string source_ref) {
  Document doc;
  doc.id = std::move(id);
  doc.source_ref = std::move(source_ref);
  doc.text = StripWhitespace(DecodeUtf8(utf8_text));
  return doc;
}

std::vector<Sentence> SplitSentences(const Document& doc,
                                     const PunctConfig& punct) {
  std::vector<Sentence> sentences;
  const std::u32string& text = doc.text;
  size_t start = 0;
  auto emit = [&](size_t end) {
    if (end > start) {
      Sentence s;
      s.doc_id = doc.id;
      s.index = static_cast<int>(sentences.size());
      s.raw_text = text.substr(start, end - start);
      s.span = {start, end};
      sentences.push_back(std::move(s));
    }
  };
  for (size_t i = 0; i < text.size(); ++i) {
    if (punct.Classify(text[i]) == PunctClass::kSentenceEnd) {
      emit(i);
      start = i + 1;
    }
  }
  emit(text.size());
  return sentences;
}

namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return buf.str();
}

}  // namespace

std::vector<Document> LoadCorpusDir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("corpus directory not found: " + dir);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Document> docs;
  std::set<std::string> seen;
  for (const auto& file : files) {
    std::string id = file.stem().string();
    if (!seen.insert(id).second) {
      throw IoError("duplicate document id: " + id);
    }
    Document doc = MakeDocument(id, ReadFile(file), file.filename().string());
    if (!doc.text.empty()) docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> LoadCorpusTsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus " + path);
  std::vector<Document> docs;
  std::set<std::string> seen;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw IoError(path + ": row " + std::to_string(row) +
                    ": expected id<TAB>text");
    }
    std::string id = line.substr(0, tab);
    if (!seen.insert(id).second) {
      throw IoError(path + ": duplicate document id: " + id);
    }
    Document doc = MakeDocument(id, std::string_view(line).substr(tab + 1),
                                path + ":" + std::to_string(row));
    if (!doc.text.empty()) docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace epitag
