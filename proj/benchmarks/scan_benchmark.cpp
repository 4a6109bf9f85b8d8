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

#include <benchmark/benchmark.h>

#include "lamb/scanner.hpp"

namespace {

const lamb::LexSpec& numbers_spec() {
  static const lamb::LexSpec spec = lamb::parse_lex_spec(
      "token Integer 1 /(-|\\+)?[0-9]+/\n"
      "token Real 1 /(-|\\+)?[0-9]+\\.[0-9]+/\n"
      "token Point 1 /\\./\n"
      "token Slash 1 /\\//\n"
      "token Ampersand 1 /\\&/\n"
      "ignore / +/\n");
  return spec;
}

lamb::Text repeat(std::u32string_view unit, std::size_t n) {
  lamb::Text t;
  while (t.size() < n) t += unit;
  t.resize(n);
  return t;
}

void BM_ScanNumbers(benchmark::State& state) {
  const auto input = repeat(U"&5.2& /25.20/ ", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lamb::scan(numbers_spec(), input));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScanNumbers)->RangeMultiplier(2)->Range(1 << 10, 1 << 15)->Complexity();

// One long identifier: the watermark keeps the identifier pattern from being
// re-run inside the word it already covers.
void BM_ScanSharedPriorityWord(benchmark::State& state) {
  static const lamb::LexSpec spec = lamb::parse_lex_spec(
      "token IF 1 /if/\ntoken IDENTIFIER 1 /[a-z]+/\ntoken B 1 /b/\n");
  const auto input = repeat(U"ab", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lamb::scan(spec, input));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScanSharedPriorityWord)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity();

void BM_ScanOracle(benchmark::State& state) {
  const auto input = repeat(U"&5.2& /25.20/ ", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lamb::scan_oracle(numbers_spec(), input));
}
BENCHMARK(BM_ScanOracle)->Arg(1 << 8)->Arg(1 << 10);

}  // namespace
