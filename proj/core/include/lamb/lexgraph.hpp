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
#include <string>
#include <string_view>
#include <vector>

#include "lamb/scanner.hpp"

namespace lamb {

/// Tokens linked to their immediate successors: b follows a when b starts
/// after a ends and no token lies entirely between them. Adjacency lists
/// are indexed by token id and sorted by id.
struct LexGraph {
  std::vector<Token> tokens;
  std::size_t input_length = 0;
  std::vector<std::vector<int>> following;
  std::vector<std::vector<int>> preceding;
  std::vector<int> start_set;  // tokens with no predecessor

  std::size_t edge_count() const;

  friend bool operator==(const LexGraph&, const LexGraph&) = default;
};

/// Reverse sweep over the tokens that remembers, per token, the start of
/// its nearest linked predecessor. O(t^2). Token ids must be 0..t-1.
LexGraph build_graph(const ScanResult& scan);

/// The adjacency definition evaluated literally, O(t^3). Test use.
LexGraph build_graph_oracle(const ScanResult& scan);

struct SequenceList {
  std::vector<std::vector<int>> paths;  // token ids
  bool truncated = false;
};

/// Every maximal path from a start token to a token with no successor, in
/// lexicographic id order, stopping after `limit` paths.
SequenceList enumerate_sequences(const LexGraph& g, std::size_t limit);

std::string to_dot(const LexGraph& g);
std::string to_json(const LexGraph& g);

/// Inverse of to_json(). Throws std::invalid_argument on malformed input.
LexGraph graph_from_json(std::string_view json);

}  // namespace lamb
