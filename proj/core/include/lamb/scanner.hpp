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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lamb/spec_io.hpp"
#include "lamb/unicode.hpp"

namespace lamb {

/// A recognized terminal occurrence. `start` and `end` are inclusive
/// character offsets, so text has end - start + 1 characters.
struct Token {
  int id = 0;
  std::string type_name;
  std::string text;  // UTF-8
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct ScanResult {
  /// Ordered by start offset, then by matcher order; ids are 0..n-1.
  std::vector<Token> tokens;
  std::size_t input_length = 0;
  /// Offsets covered by no token and no ignore match.
  std::vector<std::size_t> unmatched;

  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

/// Finds every admissible token in `input`.
///
/// Matchers (token and ignore definitions) are visited in (priority,
/// ordinal) order at each offset. A matcher is skipped while its watermark
/// is at or past the offset. The first match fixes the priority tier for the
/// offset: only matchers of the same priority are tried after it, and an
/// ignore match stops the offset outright. Every match advances the
/// matcher's watermark, and those of all lower-priority matchers, to the
/// match end clipped down to the nearest watermark already inside the match.
ScanResult scan(const LexSpec& spec, TextView input);
ScanResult scan(const LexSpec& spec, std::string_view utf8_input);

/// Same contract as scan(), computed by a naive separate implementation
/// that uses Pattern::reference_match_lengths instead of the automaton.
/// Intended for differential checks only.
ScanResult scan_oracle(const LexSpec& spec, TextView input);

/// One line per token: `<id>\t<TYPE>\t<start>-<end>\t<text>`.
std::string format_tokens(const ScanResult& result);

}  // namespace lamb
