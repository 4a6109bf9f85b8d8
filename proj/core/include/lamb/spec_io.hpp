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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamb/error.hpp"
#include "lamb/pattern.hpp"

namespace lamb {

/// A named terminal. Lower priority values win; priority 0 is reserved
/// for ignore patterns.
struct TokenDef {
  std::string name;
  int priority = 1;
  std::string pattern_source;
  int ordinal = 0;  // position among all definitions in the file
  int line = 0;
  Pattern pattern;
};

/// Text that is consumed but never becomes a token (whitespace, comments).
struct IgnoreDef {
  std::string pattern_source;
  int ordinal = 0;
  int line = 0;
  Pattern pattern;
};

struct LexSpec {
  std::vector<TokenDef> token_defs;
  std::vector<IgnoreDef> ignore_defs;

  const TokenDef* find(std::string_view name) const;
};

struct GrammarRule {
  std::string lhs;
  std::vector<std::string> rhs;
  int line = 0;
};

struct Grammar {
  std::vector<GrammarRule> rules;
  std::string start_symbol;
  int start_line = 0;  // line of the `start` directive, 0 when defaulted

  bool is_nonterminal(std::string_view name) const;
};

/// Reads the line-based spec format:
///
///   token <NAME> <PRIORITY> /<REGEX>/
///   ignore /<REGEX>/
///   # comment
///
/// Throws SpecError carrying line numbers.
LexSpec parse_lex_spec(std::string_view text);

/// Reads `start <NAME>` and `<LHS> ::= <SYM>... | <SYM>...` lines and
/// validates the result against `spec`. Throws SpecError with every
/// diagnostic found.
Grammar parse_grammar(std::string_view text, const LexSpec& spec);

/// All invariant violations at once; empty means valid. `grammar` may be
/// absent for spec-only checks.
std::vector<Diagnostic> validate(const LexSpec& spec, const Grammar* grammar = nullptr);

/// Canonical spec text; parse_lex_spec(render_lex_spec(s)) reproduces s.
std::string render_lex_spec(const LexSpec& spec);

/// Structural equality over names, priorities, sources and ordinals.
bool same_model(const LexSpec& a, const LexSpec& b);

}  // namespace lamb
