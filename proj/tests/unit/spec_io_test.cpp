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

#include <gtest/gtest.h>

#include "lamb/spec_io.hpp"
#include "testing.hpp"

namespace lamb {
namespace {

std::vector<Diagnostic> spec_errors(std::string_view text) {
  try {
    parse_lex_spec(text);
  } catch (const SpecError& e) {
    return e.diagnostics();
  }
  ADD_FAILURE() << "spec unexpectedly parsed";
  return {};
}

std::vector<Diagnostic> grammar_errors(std::string_view text, const LexSpec& spec) {
  try {
    parse_grammar(text, spec);
  } catch (const SpecError& e) {
    return e.diagnostics();
  }
  ADD_FAILURE() << "grammar unexpectedly parsed";
  return {};
}

bool mentions(const std::vector<Diagnostic>& diags, std::string_view needle) {
  for (const auto& d : diags) {
    if (d.message.find(needle) != std::string::npos) return true;
  }
  return false;
}

class NumbersSpec : public ::testing::Test {
 protected:
  LexSpec spec = parse_lex_spec(testing::read_data_file("numbers.lamb"));
};

TEST_F(NumbersSpec, ReadsTheFiveTokenDefinitions) {
  ASSERT_EQ(spec.token_defs.size(), 5u);
  const std::vector<std::string> names{"Integer", "Real", "Point", "Slash", "Ampersand"};
  for (std::size_t k = 0; k < names.size(); ++k) {
    EXPECT_EQ(spec.token_defs[k].name, names[k]);
    EXPECT_EQ(spec.token_defs[k].priority, 1);
    EXPECT_EQ(spec.token_defs[k].ordinal, static_cast<int>(k));
  }
  EXPECT_EQ(spec.token_defs[0].pattern_source, R"((-|\+)?[0-9]+)");
  EXPECT_EQ(spec.token_defs[1].pattern_source, R"((-|\+)?[0-9]+\.[0-9]+)");
  EXPECT_EQ(spec.token_defs[3].pattern_source, R"(\/)");
  ASSERT_EQ(spec.ignore_defs.size(), 1u);
  EXPECT_EQ(spec.ignore_defs[0].pattern_source, " +");
  EXPECT_EQ(spec.ignore_defs[0].ordinal, 5);
  EXPECT_EQ(spec.token_defs[0].line, 2);  // line 1 is a comment
}

TEST_F(NumbersSpec, ReadsTheContextGrammar) {
  const Grammar g = parse_grammar(testing::read_data_file("numbers.g"), spec);
  ASSERT_EQ(g.rules.size(), 3u);
  EXPECT_EQ(g.start_symbol, "E");
  EXPECT_EQ(g.rules[0].lhs, "E");
  EXPECT_EQ(g.rules[0].rhs, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(g.rules[1].rhs, (std::vector<std::string>{"Ampersand", "Real", "Ampersand"}));
  EXPECT_EQ(g.rules[2].rhs,
            (std::vector<std::string>{"Slash", "Integer", "Point", "Integer", "Slash"}));
  EXPECT_TRUE(validate(spec, &g).empty());
}

TEST_F(NumbersSpec, StartDefaultsToFirstLeftSide) {
  const Grammar g = parse_grammar("A ::= Ampersand Real Ampersand\nE ::= A\n", spec);
  EXPECT_EQ(g.start_symbol, "A");
  EXPECT_EQ(g.start_line, 0);
}

TEST_F(NumbersSpec, AlternativesExpandInOrder) {
  const Grammar g = parse_grammar("N ::= Integer | Real|Integer Point Integer\n", spec);
  ASSERT_EQ(g.rules.size(), 3u);
  EXPECT_EQ(g.rules[0].rhs, std::vector<std::string>{"Integer"});
  EXPECT_EQ(g.rules[1].rhs, std::vector<std::string>{"Real"});
  EXPECT_EQ(g.rules[2].rhs, (std::vector<std::string>{"Integer", "Point", "Integer"}));
  for (const auto& r : g.rules) EXPECT_EQ(r.line, 1);
}

TEST_F(NumbersSpec, RejectsUnitCycles) {
  const auto diags = grammar_errors("A ::= B\nB ::= A\n", spec);
  EXPECT_TRUE(mentions(diags, "unit-production cycle"));
  EXPECT_TRUE(mentions(grammar_errors("S ::= S\n", spec), "unit-production cycle"));
  // A non-unit self reference is fine.
  EXPECT_NO_THROW(parse_grammar("S ::= S Integer | Integer\n", spec));
}

TEST_F(NumbersSpec, RejectsUndefinedSymbols) {
  const auto diags = grammar_errors("E ::= Foo\n", spec);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].line, 1);
  EXPECT_TRUE(mentions(diags, "undefined symbol 'Foo'"));
}

TEST_F(NumbersSpec, RejectsEmptyAlternatives) {
  EXPECT_TRUE(mentions(grammar_errors("E ::=\n", spec), "empty right-hand side"));
  EXPECT_TRUE(mentions(grammar_errors("E ::= Real |\n", spec), "empty right-hand side"));
}

TEST_F(NumbersSpec, RejectsTokenNameAsNonterminal) {
  EXPECT_TRUE(mentions(grammar_errors("Real ::= Integer Point Integer\n", spec),
                       "collides with a token name"));
}

TEST_F(NumbersSpec, RejectsBadDirectives) {
  EXPECT_TRUE(mentions(grammar_errors("start E\nstart E\nE ::= Real\n", spec), "duplicate 'start'"));
  EXPECT_TRUE(mentions(grammar_errors("E Real\n", spec), "expected '<LHS> ::="));
  EXPECT_TRUE(mentions(grammar_errors("", spec), "no rules"));
}

TEST_F(NumbersSpec, StartSymbolMustBeALeftSide) {
  const auto diags = grammar_errors("# header\nstart Q\nE ::= Real\n", spec);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].line, 2);
  EXPECT_TRUE(mentions(diags, "start symbol 'Q'"));
}

TEST_F(NumbersSpec, ValidateReportsEveryProblemAtOnce) {
  Grammar g;
  g.start_symbol = "Q";
  g.rules.push_back({"E", {"Foo"}, 3});
  g.rules.push_back({"Real", {"Integer"}, 4});
  g.rules.push_back({"A", {}, 5});
  const auto diags = validate(spec, &g);
  EXPECT_EQ(diags.size(), 4u);
  for (const auto& d : diags) EXPECT_GE(d.line, 1);
  EXPECT_TRUE(validate(spec).empty());
}

TEST(LexSpecParse, EmptyTextHasNoTokenDefinitions) {
  const auto diags = spec_errors("");
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].message, "no token definitions");
  EXPECT_EQ(diags[0].line, 1);
  EXPECT_TRUE(mentions(spec_errors("# nothing\n\nignore / +/\n"), "no token definitions"));
}

TEST(LexSpecParse, DuplicateNames) {
  const auto diags = spec_errors("token Integer 1 /[0-9]+/\ntoken Integer 2 /[0-9]/\n");
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].line, 2);
  EXPECT_TRUE(mentions(diags, "duplicate token name 'Integer'"));
}

TEST(LexSpecParse, LineErrors) {
  EXPECT_TRUE(mentions(spec_errors("token A 0 /a/\n"), "must be >= 1"));
  EXPECT_TRUE(mentions(spec_errors("token A -3 /a/\n"), "must be >= 1"));
  EXPECT_TRUE(mentions(spec_errors("token A one /a/\n"), "decimal priority"));
  EXPECT_TRUE(mentions(spec_errors("token 9A 1 /a/\n"), "invalid token name"));
  EXPECT_TRUE(mentions(spec_errors("token A 1 a\n"), "expected '/'"));
  EXPECT_TRUE(mentions(spec_errors("token A 1 /a\n"), "unterminated pattern"));
  EXPECT_TRUE(mentions(spec_errors("token A 1 /a/ b\n"), "unexpected text"));
  EXPECT_TRUE(mentions(spec_errors("token A 1 /(a/\n"), "bad pattern"));
  EXPECT_TRUE(mentions(spec_errors("tokn A 1 /a/\n"), "expected 'token' or 'ignore'"));
}

TEST(LexSpecParse, CollectsEveryBadLine) {
  const auto diags = spec_errors("token A 1 /(/\n\ntoken B 0 /b/\nbogus\n");
  ASSERT_EQ(diags.size(), 3u);
  EXPECT_EQ(diags[0].line, 1);
  EXPECT_EQ(diags[1].line, 3);
  EXPECT_EQ(diags[2].line, 4);
}

TEST(LexSpecParse, CommentsAndDelimiters) {
  const auto spec = parse_lex_spec(
      "  # leading comment\n"
      "token Hash 2 /#[a-z]*/   # trailing comment\n"
      "token Path 1 /a\\/b/\n"
      "ignore /[ \\t]+/\n");
  ASSERT_EQ(spec.token_defs.size(), 2u);
  EXPECT_EQ(spec.token_defs[0].pattern_source, "#[a-z]*");
  EXPECT_EQ(spec.token_defs[1].pattern_source, "a\\/b");
  EXPECT_EQ(spec.token_defs[1].pattern.match_longest_at(U"a/b", 0), 3u);
  EXPECT_EQ(spec.token_defs[1].line, 3);
}

TEST(LexSpecProperty, RenderThenParseIsIdentity) {
  testing::Rng rng(7);
  for (int round = 0; round < 300; ++round) {
    const std::string text = testing::random_spec_text(rng);
    const LexSpec first = parse_lex_spec(text);
    const LexSpec again = parse_lex_spec(render_lex_spec(first));
    ASSERT_TRUE(same_model(first, again)) << text;
    // Deterministic: parsing the same text twice gives the same model.
    ASSERT_TRUE(same_model(first, parse_lex_spec(text)));
  }
}

}  // namespace
}  // namespace lamb
