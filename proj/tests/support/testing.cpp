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

#include "testing.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace lamb::testing {
namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string hex_escape(char c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02X", static_cast<unsigned char>(c));
  return buf;
}

constexpr std::string_view kPlain = "abc12";
constexpr std::string_view kEscapable = ".+-*?()[]|&/\\";

// One literal, escaped or plain, rendered both ways.
GeneratedPattern literal(Rng& rng) {
  if (pick(rng, 0, 3) == 0) {
    const char c = kEscapable[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(kEscapable.size()) - 1))];
    return {std::string("\\") + c, hex_escape(c)};
  }
  if (pick(rng, 0, 9) == 0) return {" ", " "};
  const char c = kPlain[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(kPlain.size()) - 1))];
  return {std::string(1, c), std::string(1, c)};
}

GeneratedPattern char_class(Rng& rng) {
  GeneratedPattern g{"[", "["};
  if (pick(rng, 0, 3) == 0) {
    g.lamb += '^';
    g.ecma += '^';
  }
  const int members = pick(rng, 1, 3);
  for (int k = 0; k < members; ++k) {
    switch (pick(rng, 0, 2)) {
      case 0:
        g.lamb += "a-c";
        g.ecma += "a-c";
        break;
      case 1:
        g.lamb += "0-9";
        g.ecma += "0-9";
        break;
      default: {
        const auto lit = literal(rng);
        g.lamb += lit.lamb;
        g.ecma += lit.ecma;
      }
    }
  }
  g.lamb += ']';
  g.ecma += ']';
  return g;
}

}  // namespace

GeneratedPattern random_pattern(Rng& rng, int depth) {
  const int kind = depth <= 0 ? pick(rng, 0, 2) : pick(rng, 0, 6);
  GeneratedPattern g;
  switch (kind) {
    case 0:
      g = literal(rng);
      break;
    case 1:
      g = char_class(rng);
      break;
    case 2:
      g = pick(rng, 0, 2) == 0 ? GeneratedPattern{".", "."} : literal(rng);
      break;
    case 3: {  // concatenation
      const int parts = pick(rng, 2, 3);
      for (int k = 0; k < parts; ++k) {
        const auto p = random_pattern(rng, depth - 1);
        g.lamb += p.lamb;
        g.ecma += p.ecma;
      }
      break;
    }
    case 4: {  // alternation, sometimes with an empty branch
      const auto a = random_pattern(rng, depth - 1);
      const auto b = pick(rng, 0, 5) == 0 ? GeneratedPattern{} : random_pattern(rng, depth - 1);
      g = {"(" + a.lamb + "|" + b.lamb + ")", "(?:" + a.ecma + "|" + b.ecma + ")"};
      break;
    }
    default: {  // repetition over a group
      const auto a = random_pattern(rng, depth - 1);
      const char op = "*+?"[pick(rng, 0, 2)];
      g = {"(" + a.lamb + ")" + op, "(?:" + a.ecma + ")" + op};
      break;
    }
  }
  return g;
}

std::string random_input(Rng& rng, std::size_t max_len) {
  static constexpr std::string_view kAlphabet = "abc12.+-&/ ()ab12\n";
  const auto len = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(max_len)));
  std::string s;
  for (std::size_t k = 0; k < len; ++k) {
    s += kAlphabet[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(kAlphabet.size()) - 1))];
  }
  return s;
}

std::string random_spec_text(Rng& rng) {
  const int defs = pick(rng, 1, 6);
  std::string text;
  bool has_token = false;
  for (int k = 0; k < defs; ++k) {
    const auto p = random_pattern(rng, pick(rng, 0, 3));
    const bool ignore = pick(rng, 0, 4) == 0 && (has_token || k + 1 < defs);
    if (ignore) {
      text += "ignore /" + p.lamb + "/\n";
    } else {
      has_token = true;
      text += "token T" + std::to_string(k) + " " + std::to_string(pick(rng, 1, 3)) + " /" + p.lamb + "/\n";
    }
  }
  if (!has_token) text += "token Tz 1 /a/\n";
  return text;
}

std::vector<std::size_t> regex_match_lengths(const std::regex& re, std::string_view input,
                                             std::size_t pos) {
  std::vector<std::size_t> out;
  for (std::size_t len = 0; pos + len <= input.size(); ++len) {
    const std::string piece(input.substr(pos, len));
    if (std::regex_match(piece, re)) out.push_back(len);
  }
  return out;
}

std::optional<std::size_t> regex_longest_at(const std::regex& re, std::string_view input,
                                            std::size_t pos) {
  for (std::size_t len = input.size() - pos; len >= 1; --len) {
    const std::string piece(input.substr(pos, len));
    if (std::regex_match(piece, re)) return len;
  }
  return std::nullopt;
}

ScanResult random_intervals(Rng& rng, std::size_t max_tokens, std::size_t span,
                            const std::vector<std::string>& types) {
  ScanResult r;
  const auto count = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(max_tokens)));
  for (std::size_t k = 0; k < count; ++k) {
    Token t;
    t.start = static_cast<std::size_t>(pick(rng, 0, static_cast<int>(span) - 1));
    t.end = t.start + static_cast<std::size_t>(pick(rng, 0, 4));
    t.type_name = types[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(types.size()) - 1))];
    t.text = std::string(t.end - t.start + 1, 'x');
    r.tokens.push_back(std::move(t));
    // Occasionally an exact duplicate span, or a nested one.
    if (pick(rng, 0, 7) == 0 && r.tokens.size() < max_tokens) r.tokens.push_back(r.tokens.back());
  }
  std::stable_sort(r.tokens.begin(), r.tokens.end(),
                   [](const Token& a, const Token& b) { return a.start < b.start; });
  for (std::size_t k = 0; k < r.tokens.size(); ++k) r.tokens[k].id = static_cast<int>(k);
  for (const auto& t : r.tokens) r.input_length = std::max(r.input_length, t.end + 1);
  return r;
}

LexSpec names_only_spec(const std::vector<std::string>& types) {
  LexSpec spec;
  int ordinal = 0;
  for (const auto& name : types) {
    spec.token_defs.push_back({name, 1, "x", ordinal, ordinal + 1, Pattern::compile("x")});
    ++ordinal;
  }
  return spec;
}

Grammar random_grammar(Rng& rng, const LexSpec& spec, const std::vector<std::string>& terminals,
                       std::size_t max_rules) {
  static const std::vector<std::string> kNonterminals{"S", "X", "Y"};
  while (true) {
    Grammar g;
    g.start_symbol = "S";
    const int rules = pick(rng, 1, static_cast<int>(max_rules));
    for (int r = 0; r < rules; ++r) {
      GrammarRule rule;
      rule.lhs = r == 0 ? "S" : kNonterminals[static_cast<std::size_t>(pick(rng, 0, 2))];
      rule.line = r + 1;
      const int len = pick(rng, 1, 3);
      for (int k = 0; k < len; ++k) {
        // Lean towards terminals so derivations bottom out.
        if (pick(rng, 0, 2) == 0) {
          rule.rhs.push_back(kNonterminals[static_cast<std::size_t>(pick(rng, 0, 2))]);
        } else {
          rule.rhs.push_back(terminals[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(terminals.size()) - 1))]);
        }
      }
      g.rules.push_back(std::move(rule));
    }
    if (validate(spec, &g).empty()) return g;
  }
}

std::string canonical_tree(const ParseForest& forest, int root) {
  const auto& inst = forest.instances[static_cast<std::size_t>(root)];
  if (inst.is_terminal()) return "#" + std::to_string(inst.id);
  std::string out = "(" + inst.type_name;
  for (int c : inst.children) out += " " + canonical_tree(forest, c);
  return out + ")";
}

std::set<std::string> brute_force_trees(const LexGraph& g, const Grammar& grammar) {
  std::set<std::string> accepted;
  const auto paths = enumerate_sequences(g, static_cast<std::size_t>(-1));

  for (const auto& path : paths.paths) {
    const std::size_t n = path.size();
    // trees(symbol, i, j): every derivation of `symbol` over leaves [i, j).
    std::map<std::tuple<std::string, std::size_t, std::size_t>, std::set<std::string>> memo;
    std::function<const std::set<std::string>&(const std::string&, std::size_t, std::size_t)> trees;
    trees = [&](const std::string& sym, std::size_t i, std::size_t j) -> const std::set<std::string>& {
      const auto key = std::make_tuple(sym, i, j);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      std::set<std::string> out;
      const Token& leaf = g.tokens[static_cast<std::size_t>(path[i])];
      if (j == i + 1 && leaf.type_name == sym) out.insert("#" + std::to_string(leaf.id));
      for (const auto& rule : grammar.rules) {
        if (rule.lhs != sym || rule.rhs.size() > j - i) continue;
        // Split [i, j) into rule.rhs.size() non-empty consecutive parts.
        std::function<void(std::size_t, std::size_t, std::string)> split =
            [&](std::size_t k, std::size_t from, std::string acc) {
              if (k == rule.rhs.size()) {
                if (from == j) out.insert("(" + sym + acc + ")");
                return;
              }
              const std::size_t remaining = rule.rhs.size() - k - 1;
              for (std::size_t to = from + 1; to + remaining <= j; ++to) {
                for (const auto& sub : trees(rule.rhs[k], from, to)) split(k + 1, to, acc + " " + sub);
              }
            };
        split(0, i, "");
      }
      return memo.emplace(key, std::move(out)).first->second;
    };
    if (n == 0) continue;
    for (const auto& t : trees(grammar.start_symbol, 0, n)) {
      if (t.front() == '(') accepted.insert(t);
    }
  }
  return accepted;
}

std::string read_data_file(std::string_view name) {
  const std::string path = std::string(LAMB_TEST_DATA_DIR) + "/" + std::string(name);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test data file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace lamb::testing
