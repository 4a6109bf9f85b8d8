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

#include "lamb/lexgraph.hpp"
#include "lamb/parser.hpp"

namespace {

lamb::ScanResult scanned(std::size_t tokens) {
  static const lamb::LexSpec spec = lamb::parse_lex_spec(
      "token Integer 1 /[0-9]+/\n"
      "token Real 1 /[0-9]+\\.[0-9]+/\n"
      "token Point 1 /\\./\n"
      "token Slash 1 /\\//\n"
      "token Ampersand 1 /\\&/\n");
  lamb::Text input;
  lamb::ScanResult r;
  while (r.tokens.size() < tokens) {
    input += U"&5.2&/25.20/";
    r = lamb::scan(spec, input);
  }
  r.tokens.resize(tokens);
  return r;
}

void BM_BuildGraph(benchmark::State& state) {
  const auto tokens = scanned(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lamb::build_graph(tokens));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraph)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity(benchmark::oNSquared);

void BM_BuildGraphOracle(benchmark::State& state) {
  const auto tokens = scanned(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lamb::build_graph_oracle(tokens));
}
BENCHMARK(BM_BuildGraphOracle)->Arg(64)->Arg(256);

void BM_ParseWorkedExample(benchmark::State& state) {
  const auto spec = lamb::parse_lex_spec(
      "token Integer 1 /(-|\\+)?[0-9]+/\n"
      "token Real 1 /(-|\\+)?[0-9]+\\.[0-9]+/\n"
      "token Point 1 /\\./\n"
      "token Slash 1 /\\//\n"
      "token Ampersand 1 /\\&/\n"
      "ignore / +/\n");
  const auto grammar = lamb::parse_grammar(
      "E ::= A B\nA ::= Ampersand Real Ampersand\nB ::= Slash Integer Point Integer Slash\n", spec);
  const auto graph = lamb::build_graph(lamb::scan(spec, std::string_view("&5.2& /25.20/")));
  for (auto _ : state) benchmark::DoNotOptimize(lamb::parse(graph, grammar));
}
BENCHMARK(BM_ParseWorkedExample);

}  // namespace
