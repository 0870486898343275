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

#ifndef EPITAG_ERRORS_H_
#define EPITAG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace epitag {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text is not valid UTF-8.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// Dictionary could not be loaded, or failed validation in strict mode.
class DictionaryError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A registry expression failed to compile. Raised at registry load time.
class PatternCompileError : public Error {
 public:
  using Error::Error;
};

class UnparsableNumeral : public Error {
 public:
  using Error::Error;
};

}  // namespace epitag

#endif  // EPITAG_ERRORS_H_
