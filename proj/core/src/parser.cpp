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

#include "lamb/parser.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <utility>

namespace lamb {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Answers extended_follows in O(1) from a table of, for every offset p, the
// smallest end among terminals starting after p.
class Adjacency {
 public:
  explicit Adjacency(const LexGraph& g) {
    std::size_t limit = 0;
    for (const auto& t : g.tokens) limit = std::max(limit, t.end + 1);
    min_end_after_.assign(limit + 1, kNone);
    for (const auto& t : g.tokens) {
      if (t.start == 0) continue;
      auto& slot = min_end_after_[t.start - 1];
      slot = std::min(slot, t.end);
    }
    for (std::size_t p = limit; p-- > 0;) {
      min_end_after_[p] = std::min(min_end_after_[p], min_end_after_[p + 1]);
    }
  }

  bool follows(const SymbolInstance& a, const SymbolInstance& b) const {
    if (b.start <= a.end) return false;
    if (a.end >= min_end_after_.size()) return true;
    return min_end_after_[a.end] == kNone || min_end_after_[a.end] >= b.start;
  }

 private:
  std::vector<std::size_t> min_end_after_;
};

class RuleMatcher {
 public:
  RuleMatcher(const Adjacency& adj, std::span<const SymbolInstance> store,
              const std::map<std::string, std::vector<int>, std::less<>>& by_type)
      : adj_(adj), store_(store), by_type_(by_type) {}

  std::vector<std::vector<int>> from(const GrammarRule& rule, const SymbolInstance& first) {
    std::vector<std::vector<int>> out;
    if (rule.rhs.empty() || rule.rhs.front() != first.type_name) return out;
    std::vector<int> tuple{first.id};
    extend(rule, tuple, out);
    return out;
  }

 private:
  void extend(const GrammarRule& rule, std::vector<int>& tuple, std::vector<std::vector<int>>& out) {
    if (tuple.size() == rule.rhs.size()) {
      out.push_back(tuple);
      return;
    }
    const auto it = by_type_.find(rule.rhs[tuple.size()]);
    if (it == by_type_.end()) return;
    const SymbolInstance& prev = store_[static_cast<std::size_t>(tuple.back())];
    for (int cand : it->second) {
      if (!adj_.follows(prev, store_[static_cast<std::size_t>(cand)])) continue;
      tuple.push_back(cand);
      extend(rule, tuple, out);
      tuple.pop_back();
    }
  }

  const Adjacency& adj_;
  std::span<const SymbolInstance> store_;
  const std::map<std::string, std::vector<int>, std::less<>>& by_type_;
};

}  // namespace

std::vector<SymbolInstance> terminal_instances(const LexGraph& g) {
  std::vector<SymbolInstance> out;
  out.reserve(g.tokens.size());
  for (const auto& t : g.tokens) out.push_back({t.id, t.type_name, t.start, t.end, {}, -1, t.text});
  return out;
}

bool extended_follows(const SymbolInstance& a, const SymbolInstance& b, const LexGraph& g) {
  if (b.start <= a.end) return false;
  return std::none_of(g.tokens.begin(), g.tokens.end(),
                      [&](const Token& c) { return c.start > a.end && c.end < b.start; });
}

std::vector<std::vector<int>> match_rule_from(const GrammarRule& rule, const SymbolInstance& first,
                                              std::span<const SymbolInstance> store,
                                              const LexGraph& g) {
  std::map<std::string, std::vector<int>, std::less<>> by_type;
  for (const auto& inst : store) by_type[inst.type_name].push_back(inst.id);
  for (auto& [_, ids] : by_type) std::sort(ids.begin(), ids.end());
  const Adjacency adj(g);
  return RuleMatcher(adj, store, by_type).from(rule, first);
}

ParseForest parse(const LexGraph& g, const Grammar& grammar) {
  ParseForest forest;
  forest.rules = grammar.rules;
  forest.instances = terminal_instances(g);

  std::map<std::string, std::vector<int>, std::less<>> by_type;
  for (const auto& inst : forest.instances) by_type[inst.type_name].push_back(inst.id);

  const Adjacency adj(g);
  std::set<std::pair<std::string, std::vector<int>>> seen;

  bool changed = true;
  while (changed) {
    changed = false;
    ++forest.passes;
    for (std::size_t r = 0; r < grammar.rules.size(); ++r) {
      const GrammarRule& rule = grammar.rules[r];
      const std::size_t existing = forest.instances.size();
      for (std::size_t idx = 0; idx < existing; ++idx) {
        if (forest.instances[idx].type_name != rule.rhs.front()) continue;
        // The matcher borrows the store, so collect first and append after.
        const auto tuples = RuleMatcher(adj, forest.instances, by_type).from(rule, forest.instances[idx]);
        for (const auto& children : tuples) {
          if (!seen.emplace(rule.lhs, children).second) continue;
          SymbolInstance inst;
          inst.id = static_cast<int>(forest.instances.size());
          inst.type_name = rule.lhs;
          inst.start = forest.instances[static_cast<std::size_t>(children.front())].start;
          inst.end = forest.instances[static_cast<std::size_t>(children.back())].end;
          inst.children = children;
          inst.rule = static_cast<int>(r);
          by_type[inst.type_name].push_back(inst.id);
          forest.instances.push_back(std::move(inst));
          changed = true;
        }
      }
    }
  }

  if (g.tokens.empty()) return forest;
  std::size_t first_end = kNone;
  std::size_t last_start = 0;
  for (const auto& t : g.tokens) {
    first_end = std::min(first_end, t.end);
    last_start = std::max(last_start, t.start);
  }
  for (const auto& inst : forest.instances) {
    if (inst.is_terminal() || inst.type_name != grammar.start_symbol) continue;
    if (first_end >= inst.start && last_start <= inst.end) forest.accepted.push_back(inst.id);
  }
  return forest;
}

std::size_t tree_size(const ParseForest& forest, int root) {
  std::size_t n = 1;
  for (int c : forest.instances[static_cast<std::size_t>(root)].children) n += tree_size(forest, c);
  return n;
}

std::vector<int> tree_leaves(const ParseForest& forest, int root) {
  const auto& inst = forest.instances[static_cast<std::size_t>(root)];
  if (inst.is_terminal()) return {inst.id};
  std::vector<int> out;
  for (int c : inst.children) {
    auto sub = tree_leaves(forest, c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

}  // namespace lamb
