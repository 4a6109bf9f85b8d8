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

// Naive restatement of the scanning rules, kept deliberately separate from
// scanner.cpp: no sorting, tiers walked explicitly, brute-force matching
// over the pattern tree, coverage recomputed from a bitmap.

#include <algorithm>
#include <map>
#include <set>

#include "lamb/scanner.hpp"

namespace lamb {
namespace {

struct Def {
  int priority;  // 0 for ignore
  int ordinal;
  const std::string* name;
  const Pattern* pattern;
};

long longest_match(const Pattern& p, TextView input, std::size_t at) {
  const auto lengths = p.reference_match_lengths(input, at);
  long best = 0;
  for (std::size_t len : lengths) best = std::max(best, static_cast<long>(len));
  return best;  // 0 = no usable match
}

}  // namespace

ScanResult scan_oracle(const LexSpec& spec, TextView input) {
  std::vector<Def> defs;
  for (const auto& d : spec.token_defs) defs.push_back({d.priority, d.ordinal, &d.name, &d.pattern});
  for (const auto& d : spec.ignore_defs) defs.push_back({0, d.ordinal, nullptr, &d.pattern});

  std::set<int> levels;
  for (const auto& d : defs) levels.insert(d.priority);

  // Members of each level in ordinal order.
  std::map<int, std::vector<std::size_t>> by_level;
  for (int level : levels) {
    std::map<int, std::size_t> ordered;
    for (std::size_t k = 0; k < defs.size(); ++k) {
      if (defs[k].priority == level) ordered.emplace(defs[k].ordinal, k);
    }
    for (const auto& [_, k] : ordered) by_level[level].push_back(k);
  }

  std::vector<long> next(defs.size(), -1);
  std::vector<bool> covered(input.size(), false);
  ScanResult out;
  out.input_length = input.size();

  for (long i = 0; i < static_cast<long>(input.size()); ++i) {
    bool level_matched = false;
    for (int level : levels) {
      for (std::size_t k : by_level[level]) {
        if (next[k] >= i) continue;
        const long len = longest_match(*defs[k].pattern, input, static_cast<std::size_t>(i));
        if (len == 0) continue;
        level_matched = true;
        const long last = i + len - 1;
        for (long c = i; c <= last; ++c) covered[static_cast<std::size_t>(c)] = true;
        if (defs[k].name != nullptr) {
          Token t;
          t.id = static_cast<int>(out.tokens.size());
          t.type_name = *defs[k].name;
          t.text = encode_utf8(input.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(len)));
          t.start = static_cast<std::size_t>(i);
          t.end = static_cast<std::size_t>(last);
          out.tokens.push_back(std::move(t));
        }
        long lowest = last;
        for (long w : next) {
          if (w >= i && w < lowest) lowest = w;
        }
        next[k] = lowest;
        for (std::size_t n = 0; n < defs.size(); ++n) {
          if (defs[n].priority > level) next[n] = lowest;
        }
        if (level == 0) break;  // one ignore match ends the offset
      }
      if (level_matched) break;
    }
  }
  for (std::size_t c = 0; c < covered.size(); ++c) {
    if (!covered[c]) out.unmatched.push_back(c);
  }
  return out;
}

}  // namespace lamb
