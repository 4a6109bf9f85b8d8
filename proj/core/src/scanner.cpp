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

#include "lamb/scanner.hpp"

#include <algorithm>
#include <cstdint>

namespace lamb {
namespace {

struct Matcher {
  const Pattern* pattern;
  const std::string* type_name;  // null for ignore patterns
  int priority;
  int ordinal;
  std::int64_t watermark = -1;
};

std::vector<Matcher> sorted_matchers(const LexSpec& spec) {
  std::vector<Matcher> ms;
  ms.reserve(spec.token_defs.size() + spec.ignore_defs.size());
  for (const auto& d : spec.ignore_defs) ms.push_back({&d.pattern, nullptr, 0, d.ordinal});
  for (const auto& d : spec.token_defs) ms.push_back({&d.pattern, &d.name, d.priority, d.ordinal});
  std::stable_sort(ms.begin(), ms.end(), [](const Matcher& a, const Matcher& b) {
    return a.priority != b.priority ? a.priority < b.priority : a.ordinal < b.ordinal;
  });
  return ms;
}

}  // namespace

ScanResult scan(const LexSpec& spec, TextView input) {
  ScanResult result;
  result.input_length = input.size();
  auto matchers = sorted_matchers(spec);

  // One past the furthest offset consumed by any match so far.
  std::size_t covered_until = 0;

  for (std::size_t i = 0; i < input.size(); ++i) {
    const auto pos = static_cast<std::int64_t>(i);
    int tier = -1;  // priority of the first match at i; -1 while none

    for (auto& m : matchers) {
      if (m.watermark >= pos) continue;
      if (tier == 0) break;
      if (tier != -1 && m.priority > tier) break;

      const auto length = m.pattern->match_longest_at(input, i);
      if (!length) continue;

      tier = m.priority;
      const auto end = pos + static_cast<std::int64_t>(*length) - 1;
      if (m.type_name != nullptr) {
        result.tokens.push_back({static_cast<int>(result.tokens.size()), *m.type_name,
                                 encode_utf8(input.substr(i, *length)), i,
                                 static_cast<std::size_t>(end)});
      }
      covered_until = std::max(covered_until, static_cast<std::size_t>(end) + 1);

      std::int64_t clipped = end;
      for (const auto& n : matchers) {
        if (n.watermark >= pos && n.watermark <= clipped) clipped = n.watermark;
      }
      m.watermark = clipped;
      for (auto& n : matchers) {
        if (n.priority > m.priority) n.watermark = clipped;
      }
    }
    if (tier == -1 && i >= covered_until) result.unmatched.push_back(i);
  }
  return result;
}

ScanResult scan(const LexSpec& spec, std::string_view utf8_input) {
  return scan(spec, decode_utf8(utf8_input));
}

std::string format_tokens(const ScanResult& result) {
  std::string out;
  for (const auto& t : result.tokens) {
    out += std::to_string(t.id) + "\t" + t.type_name + "\t" + std::to_string(t.start) + "-" +
           std::to_string(t.end) + "\t" + t.text + "\n";
  }
  return out;
}

}  // namespace lamb
