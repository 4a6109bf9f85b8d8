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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lamb/unicode.hpp"

namespace lamb {

namespace pattern_detail {
struct Node;
struct Program;
}  // namespace pattern_detail

// A compiled regular expression from the lamb subset:
//
//   literals, escapes  \. \/ \\ \+ \- \* \? \( \) \[ \] \| \& \n \t
//   classes            [a-z_] [^0-9]
//   grouping           ( ... )
//   alternation        a|b
//   repetition         * + ?
//   any                .        (everything except '\n')
//
// There are no anchors, no counted repetition and no backreferences.
// Patterns are immutable and cheap to copy.
class Pattern {
 public:
  /// A default-constructed pattern matches nothing.
  Pattern() = default;

  /// Throws PatternError on an empty or malformed source.
  static Pattern compile(std::string_view source);

  const std::string& source() const { return source_; }

  /// Length of the longest non-empty match anchored at `pos`, if any.
  /// Runs a Thompson-style state-set simulation: linear in the number of
  /// characters consumed.
  std::optional<std::size_t> match_longest_at(TextView input,
                                              std::size_t pos) const;

  /// Every length L >= 0 such that input[pos, pos+L) is in the pattern's
  /// language, ascending. Evaluated directly over the syntax tree with no
  /// automaton; the scan oracle relies on it staying independent of
  /// match_longest_at.
  std::vector<std::size_t> reference_match_lengths(TextView input,
                                                   std::size_t pos) const;

 private:
  std::string source_;
  std::shared_ptr<const pattern_detail::Node> tree_;
  std::shared_ptr<const pattern_detail::Program> program_;
};

}  // namespace lamb
