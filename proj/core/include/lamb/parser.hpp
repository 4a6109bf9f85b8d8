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
#include <span>
#include <string>
#include <vector>

#include "lamb/lexgraph.hpp"
#include "lamb/spec_io.hpp"

namespace lamb {

/// A terminal (one per token, same id) or a nonterminal built from
/// adjacent children. Nonterminal ids continue after the last token id.
struct SymbolInstance {
  int id = 0;
  std::string type_name;
  std::size_t start = 0;  // inclusive
  std::size_t end = 0;    // inclusive
  std::vector<int> children;
  int rule = -1;     // index into ParseForest::rules; -1 for terminals
  std::string text;  // terminals only

  bool is_terminal() const { return rule < 0; }

  friend bool operator==(const SymbolInstance&, const SymbolInstance&) = default;
};

struct ParseForest {
  std::vector<SymbolInstance> instances;  // indexed by id
  std::vector<int> accepted;              // start-symbol instances spanning the input
  std::vector<GrammarRule> rules;
  std::size_t passes = 0;
};

/// Terminal instances for every token of `g`, in id order.
std::vector<SymbolInstance> terminal_instances(const LexGraph& g);

/// True when b starts after a ends and no terminal token of `g` fits
/// strictly between them. On two terminals this is graph adjacency.
bool extended_follows(const SymbolInstance& a, const SymbolInstance& b, const LexGraph& g);

/// Every children tuple for `rule` whose first element is `first`, each
/// element adjacent to the next, drawn from `store` (indexed by id).
std::vector<std::vector<int>> match_rule_from(const GrammarRule& rule, const SymbolInstance& first,
                                              std::span<const SymbolInstance> store,
                                              const LexGraph& g);

/// Applies every rule from every instance until a whole pass adds nothing.
/// The grammar must be validated: no empty right sides, no unit cycles.
ParseForest parse(const LexGraph& g, const Grammar& grammar);

/// Accepted trees as indented text, one block per tree, ordered by id.
std::string render_trees(const ParseForest& forest);
std::string forest_to_json(const ParseForest& forest);
std::string forest_to_dot(const ParseForest& forest);

/// Number of nodes (internal and leaf) in the tree rooted at `root`.
std::size_t tree_size(const ParseForest& forest, int root);

/// Leaf token ids of the tree rooted at `root`, left to right.
std::vector<int> tree_leaves(const ParseForest& forest, int root);

}  // namespace lamb
