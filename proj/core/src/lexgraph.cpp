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

#include "lamb/lexgraph.hpp"

#include <algorithm>
#include <numeric>

namespace lamb {
namespace {

LexGraph empty_graph_for(const ScanResult& scan) {
  LexGraph g;
  g.tokens = scan.tokens;
  g.input_length = scan.input_length;
  g.following.resize(scan.tokens.size());
  g.preceding.resize(scan.tokens.size());
  return g;
}

void finish(LexGraph& g) {
  for (auto& v : g.following) std::sort(v.begin(), v.end());
  for (auto& v : g.preceding) std::sort(v.begin(), v.end());
  g.start_set.clear();
  for (std::size_t id = 0; id < g.tokens.size(); ++id) {
    if (g.preceding[id].empty()) g.start_set.push_back(static_cast<int>(id));
  }
}

}  // namespace

std::size_t LexGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& v : following) n += v.size();
  return n;
}

LexGraph build_graph(const ScanResult& scan) {
  LexGraph g = empty_graph_for(scan);
  const auto& toks = g.tokens;
  const std::size_t count = toks.size();

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return toks[a].start < toks[b].start; });

  // prevstart[x] == toks[x].start means "no predecessor linked yet";
  // otherwise it is the start of the nearest (latest-starting) predecessor.
  // A candidate predecessor t is blocked exactly when that nearest one
  // starts after t ends.
  std::vector<std::size_t> prevstart(count);
  for (std::size_t x = 0; x < count; ++x) prevstart[x] = toks[x].start;

  for (std::size_t i = count; i-- > 0;) {
    const Token& t = toks[order[i]];
    for (std::size_t j = i + 1; j < count; ++j) {
      const std::size_t c = order[j];
      const Token& tc = toks[c];
      if (tc.start <= t.end) continue;
      const bool unlinked = prevstart[c] == tc.start;
      if (!unlinked && prevstart[c] > t.end) continue;
      g.following[static_cast<std::size_t>(t.id)].push_back(tc.id);
      g.preceding[c].push_back(t.id);
      // Outer order is by descending start, so the first link is nearest.
      if (unlinked) prevstart[c] = t.start;
    }
  }
  finish(g);
  return g;
}

LexGraph build_graph_oracle(const ScanResult& scan) {
  LexGraph g = empty_graph_for(scan);
  const auto& toks = g.tokens;
  for (const auto& a : toks) {
    for (const auto& b : toks) {
      if (!(a.end < b.start)) continue;
      const bool blocked = std::any_of(toks.begin(), toks.end(), [&](const Token& c) {
        return c.start > a.end && c.end < b.start;
      });
      if (blocked) continue;
      g.following[static_cast<std::size_t>(a.id)].push_back(b.id);
      g.preceding[static_cast<std::size_t>(b.id)].push_back(a.id);
    }
  }
  finish(g);
  return g;
}

SequenceList enumerate_sequences(const LexGraph& g, std::size_t limit) {
  SequenceList out;
  if (limit == 0) return out;
  // Explicit DFS stack of (token, next successor index to try).
  std::vector<std::pair<int, std::size_t>> stack;
  for (int root : g.start_set) {
    stack.assign(1, {root, 0});
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& succ = g.following[static_cast<std::size_t>(node)];
      if (succ.empty()) {
        if (out.paths.size() == limit) {
          out.truncated = true;
          return out;
        }
        std::vector<int> path;
        path.reserve(stack.size());
        for (const auto& frame : stack) path.push_back(frame.first);
        out.paths.push_back(std::move(path));
        stack.pop_back();
        continue;
      }
      if (next == succ.size()) {
        stack.pop_back();
        continue;
      }
      const int child = succ[next++];
      stack.emplace_back(child, 0);
    }
  }
  return out;
}

}  // namespace lamb
