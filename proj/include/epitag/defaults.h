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

#ifndef EPITAG_DEFAULTS_H_
#define EPITAG_DEFAULTS_H_

#include <string_view>

#include "epitag/lexicon.h"

namespace epitag::defaults {

// Built-in data files, in the same formats the loaders accept. `epitag
// defaults --out DIR` writes them to disk for editing.
std::string_view DictionaryText(DictKind kind);
std::string_view FilterRulesText();
std::string_view RegistryText();

// File name used when writing the built-in data to disk.
std::string_view DictionaryFileName(DictKind kind);
inline constexpr std::string_view kRulesFileName = "filter_rules.tsv";
inline constexpr std::string_view kRegistryFileName = "registry.tsv";

}  // namespace epitag::defaults

#endif  // EPITAG_DEFAULTS_H_
