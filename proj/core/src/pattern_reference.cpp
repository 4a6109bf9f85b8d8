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

// Direct evaluation of a pattern's syntax tree as a relation from start
// offsets to end offsets. Slow and obviously correct; shares nothing with
// the automaton in pattern.cpp beyond the tree itself.

#include <set>

#include "lamb/pattern.hpp"
#include "pattern_tree.hpp"

namespace lamb {
namespace {

using pattern_detail::Node;
using pattern_detail::NodeKind;
using Offsets = std::set<std::size_t>;

Offsets ends_of(const Node& n, const Offsets& starts, TextView input) {
  switch (n.kind) {
    case NodeKind::kEmpty:
      return starts;
    case NodeKind::kChars: {
      Offsets out;
      for (std::size_t s : starts) {
        if (s < input.size() && n.chars.contains(input[s])) out.insert(s + 1);
      }
      return out;
    }
    case NodeKind::kConcat: {
      Offsets cur = starts;
      for (const auto& item : n.items) cur = ends_of(*item, cur, input);
      return cur;
    }
    case NodeKind::kAlternate: {
      Offsets out;
      for (const auto& item : n.items) out.merge(ends_of(*item, starts, input));
      return out;
    }
    case NodeKind::kOptional: {
      Offsets out = starts;
      out.merge(ends_of(*n.items.front(), starts, input));
      return out;
    }
    case NodeKind::kStar:
    case NodeKind::kPlus: {
      Offsets reached = n.kind == NodeKind::kStar ? starts : Offsets{};
      Offsets frontier = starts;
      while (!frontier.empty()) {
        Offsets fresh;
        for (std::size_t e : ends_of(*n.items.front(), frontier, input)) {
          if (reached.insert(e).second) fresh.insert(e);
        }
        frontier = std::move(fresh);
      }
      return reached;
    }
  }
  return {};
}

}  // namespace

std::vector<std::size_t> Pattern::reference_match_lengths(TextView input, std::size_t pos) const {
  if (!tree_ || pos > input.size()) return {};
  std::vector<std::size_t> lengths;
  for (std::size_t e : ends_of(*tree_, Offsets{pos}, input)) lengths.push_back(e - pos);
  return lengths;
}

}  // namespace lamb
