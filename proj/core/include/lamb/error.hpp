// Copyright 2026 The lamb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lamb {

/// A problem found in an input file. `line` is 1-based; 0 means "no line".
struct Diagnostic {
  int line = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string to_string(const Diagnostic& d);

/// Thrown by the spec and grammar readers. Carries every diagnostic that
/// was collected before giving up; what() reports the first one.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(std::vector<Diagnostic> diagnostics);
  SpecError(int line, const std::string& message);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  int line() const { return diagnostics_.front().line; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Thrown when a pattern fails to compile. `position` is a 0-based
/// character offset into the pattern source.
class PatternError : public std::runtime_error {
 public:
  PatternError(std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Malformed UTF-8 in an input file.
class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lamb
