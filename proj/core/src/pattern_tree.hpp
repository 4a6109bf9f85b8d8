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

// Internal syntax tree shared by the automaton compiler and the reference
// evaluator. Not installed.

#include <memory>
#include <utility>
#include <vector>

#include "lamb/unicode.hpp"

namespace lamb::pattern_detail {

struct CharRange {
  char32_t lo;
  char32_t hi;
};

struct CharSet {
  std::vector<CharRange> ranges;
  bool negated = false;

  bool contains(char32_t c) const {
    bool hit = false;
    for (const auto& r : ranges) {
      if (c >= r.lo && c <= r.hi) {
        hit = true;
        break;
      }
    }
    return hit != negated;
  }
};

enum class NodeKind { kEmpty, kChars, kConcat, kAlternate, kStar, kPlus, kOptional };

struct Node {
  NodeKind kind = NodeKind::kEmpty;
  CharSet chars;                                   // kChars
  std::vector<std::shared_ptr<const Node>> items;  // kConcat, kAlternate, repetition (1 item)
};

using NodePtr = std::shared_ptr<const Node>;

/// Parses a pattern source into a tree. Throws PatternError.
NodePtr parse_pattern(TextView source);

}  // namespace lamb::pattern_detail
