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

#include "lamb/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace lamb {
namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t nl = text.find('\n', begin);
    if (nl == std::string_view::npos) {
      if (begin < text.size()) lines.push_back(text.substr(begin));
      break;
    }
    lines.push_back(text.substr(begin, nl - begin));
    begin = nl + 1;
  }
  return lines;
}

// Cursor over one line of the spec file.
class LineReader {
 public:
  explicit LineReader(std::string_view line) : line_(line) {}

  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }
  bool done_or_comment() {
    skip_space();
    return pos_ >= line_.size() || line_[pos_] == '#';
  }
  std::string_view word() {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < line_.size() && !is_space(line_[pos_]) && line_[pos_] != '#') ++pos_;
    return line_.substr(begin, pos_ - begin);
  }
  // Reads /.../ and returns the body verbatim (escapes kept).
  std::optional<std::string_view> delimited_regex(std::string& error) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != '/') {
      error = "expected '/' to open a pattern";
      return std::nullopt;
    }
    const std::size_t begin = ++pos_;
    while (pos_ < line_.size()) {
      if (line_[pos_] == '\\') {
        pos_ += 2;
        continue;
      }
      if (line_[pos_] == '/') {
        const auto body = line_.substr(begin, pos_ - begin);
        ++pos_;
        return body;
      }
      ++pos_;
    }
    error = "unterminated pattern: missing closing '/'";
    return std::nullopt;
  }

 private:
  std::string_view line_;
  std::size_t pos_ = 0;
};

std::optional<Pattern> compile_at(std::string_view source, int line,
                                  std::vector<Diagnostic>& diags) {
  try {
    return Pattern::compile(source);
  } catch (const PatternError& e) {
    diags.push_back({line, "bad pattern /" + std::string(source) + "/: " + e.what()});
    return std::nullopt;
  }
}

void check_unit_cycles(const Grammar& g, std::vector<Diagnostic>& diags) {
  std::map<std::string, std::vector<const GrammarRule*>> unit_edges;
  for (const auto& r : g.rules) {
    if (r.rhs.size() == 1 && g.is_nonterminal(r.rhs.front())) unit_edges[r.lhs].push_back(&r);
  }
  enum class Mark { kFresh, kOpen, kDone };
  std::map<std::string, Mark> marks;
  std::set<std::string> reported;

  // Iterative DFS so deep chains cannot blow the stack.
  for (const auto& [root, _] : unit_edges) {
    if (marks[root] != Mark::kFresh) continue;
    std::vector<std::pair<std::string, std::size_t>> stack{{root, 0}};
    marks[root] = Mark::kOpen;
    while (!stack.empty()) {
      auto& [node, next_edge] = stack.back();
      const auto& edges = unit_edges[node];
      if (next_edge == edges.size()) {
        marks[node] = Mark::kDone;
        stack.pop_back();
        continue;
      }
      const GrammarRule* r = edges[next_edge++];
      const std::string& target = r->rhs.front();
      const Mark m = marks[target];
      if (m == Mark::kOpen) {
        if (reported.insert(target).second) {
          diags.push_back({r->line, "unit-production cycle through '" + target + "'"});
        }
      } else if (m == Mark::kFresh) {
        marks[target] = Mark::kOpen;
        stack.emplace_back(target, 0);
      }
    }
  }
}

}  // namespace

const TokenDef* LexSpec::find(std::string_view name) const {
  for (const auto& d : token_defs) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

bool Grammar::is_nonterminal(std::string_view name) const {
  return std::any_of(rules.begin(), rules.end(), [&](const GrammarRule& r) { return r.lhs == name; });
}

LexSpec parse_lex_spec(std::string_view text) {
  LexSpec spec;
  std::vector<Diagnostic> diags;
  int ordinal = 0;
  const auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const int line_no = static_cast<int>(idx) + 1;
    LineReader in(lines[idx]);
    if (in.done_or_comment()) continue;

    const auto keyword = in.word();
    std::string error;
    if (keyword == "token") {
      const auto name = in.word();
      const auto priority_text = in.word();
      if (!is_identifier(name)) {
        diags.push_back({line_no, "invalid token name '" + std::string(name) + "'"});
        continue;
      }
      int priority = 0;
      const auto [end, ec] = std::from_chars(priority_text.data(),
                                             priority_text.data() + priority_text.size(), priority);
      if (priority_text.empty() || ec != std::errc() ||
          end != priority_text.data() + priority_text.size()) {
        diags.push_back({line_no, "expected a decimal priority after '" + std::string(name) + "'"});
        continue;
      }
      if (priority < 1) {
        diags.push_back({line_no, "priority of '" + std::string(name) + "' must be >= 1"});
        continue;
      }
      const auto source = in.delimited_regex(error);
      if (!source) {
        diags.push_back({line_no, error});
        continue;
      }
      if (!in.done_or_comment()) {
        diags.push_back({line_no, "unexpected text after pattern"});
        continue;
      }
      auto pattern = compile_at(*source, line_no, diags);
      if (!pattern) continue;
      spec.token_defs.push_back(
          {std::string(name), priority, std::string(*source), ordinal++, line_no, *pattern});
    } else if (keyword == "ignore") {
      const auto source = in.delimited_regex(error);
      if (!source) {
        diags.push_back({line_no, error});
        continue;
      }
      if (!in.done_or_comment()) {
        diags.push_back({line_no, "unexpected text after pattern"});
        continue;
      }
      auto pattern = compile_at(*source, line_no, diags);
      if (!pattern) continue;
      spec.ignore_defs.push_back({std::string(*source), ordinal++, line_no, *pattern});
    } else {
      diags.push_back({line_no, "expected 'token' or 'ignore', got '" + std::string(keyword) + "'"});
    }
  }

  // Structural checks are only meaningful once every line parsed.
  if (diags.empty()) diags = validate(spec);
  if (!diags.empty()) throw SpecError(std::move(diags));
  return spec;
}

Grammar parse_grammar(std::string_view text, const LexSpec& spec) {
  Grammar g;
  std::vector<Diagnostic> diags;
  const auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const int line_no = static_cast<int>(idx) + 1;
    std::string_view line = lines[idx];
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    // '|' separates alternatives whether or not it is surrounded by spaces.
    std::string spaced;
    for (char c : line) {
      if (c == '|') {
        spaced += " | ";
      } else {
        spaced += c;
      }
    }
    std::istringstream words(spaced);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;

    if (w[0] == "start" && (w.size() < 2 || w[1] != "::=")) {
      if (w.size() != 2 || !is_identifier(w[1])) {
        diags.push_back({line_no, "expected 'start <NAME>'"});
      } else if (g.start_line != 0) {
        diags.push_back({line_no, "duplicate 'start' directive"});
      } else {
        g.start_symbol = w[1];
        g.start_line = line_no;
      }
      continue;
    }
    if (w.size() < 2 || w[1] != "::=") {
      diags.push_back({line_no, "expected '<LHS> ::= <SYM>...'"});
      continue;
    }
    if (!is_identifier(w[0])) {
      diags.push_back({line_no, "invalid nonterminal name '" + w[0] + "'"});
      continue;
    }
    std::vector<std::string> alternative;
    const auto flush = [&] {
      // Empty alternatives are kept so validate() reports them.
      g.rules.push_back({w[0], std::move(alternative), line_no});
      alternative.clear();
    };
    bool ok = true;
    for (std::size_t k = 2; k < w.size(); ++k) {
      if (w[k] == "|") {
        flush();
      } else if (!is_identifier(w[k])) {
        diags.push_back({line_no, "invalid symbol name '" + w[k] + "'"});
        ok = false;
        break;
      } else {
        alternative.push_back(w[k]);
      }
    }
    if (ok) flush();
  }

  if (g.start_symbol.empty() && !g.rules.empty()) g.start_symbol = g.rules.front().lhs;
  if (diags.empty()) diags = validate(spec, &g);
  if (!diags.empty()) throw SpecError(std::move(diags));
  return g;
}

std::vector<Diagnostic> validate(const LexSpec& spec, const Grammar* grammar) {
  std::vector<Diagnostic> diags;
  if (spec.token_defs.empty()) diags.push_back({1, "no token definitions"});

  std::map<std::string, int> first_seen;
  for (const auto& d : spec.token_defs) {
    if (!is_identifier(d.name)) {
      diags.push_back({std::max(d.line, 1), "invalid token name '" + d.name + "'"});
    }
    if (d.priority < 1) {
      diags.push_back({std::max(d.line, 1), "priority of '" + d.name + "' must be >= 1"});
    }
    const auto [it, inserted] = first_seen.emplace(d.name, d.line);
    if (!inserted) {
      diags.push_back({std::max(d.line, 1), "duplicate token name '" + d.name +
                                                "' (first defined on line " +
                                                std::to_string(it->second) + ")"});
    }
  }

  if (grammar == nullptr) return diags;
  const Grammar& g = *grammar;
  if (g.rules.empty()) {
    diags.push_back({1, "grammar has no rules"});
    return diags;
  }
  if (!g.is_nonterminal(g.start_symbol)) {
    diags.push_back({std::max(g.start_line, 1),
                     "start symbol '" + g.start_symbol + "' is not the left side of any rule"});
  }
  std::set<std::string> collided;
  for (const auto& r : g.rules) {
    const int line = std::max(r.line, 1);
    if (spec.find(r.lhs) != nullptr && collided.insert(r.lhs).second) {
      diags.push_back({line, "nonterminal '" + r.lhs + "' collides with a token name"});
    }
    if (r.rhs.empty()) {
      diags.push_back({line, "empty right-hand side for '" + r.lhs + "'"});
    }
    for (const auto& sym : r.rhs) {
      if (spec.find(sym) == nullptr && !g.is_nonterminal(sym)) {
        diags.push_back({line, "undefined symbol '" + sym + "'"});
      }
    }
  }
  check_unit_cycles(g, diags);
  return diags;
}

std::string render_lex_spec(const LexSpec& spec) {
  struct Entry {
    int ordinal;
    std::string text;
  };
  const auto delimit = [](const std::string& source) {
    std::string out = "/";
    for (std::size_t i = 0; i < source.size(); ++i) {
      if (source[i] == '\\' && i + 1 < source.size()) {
        out += source[i];
        out += source[++i];
      } else if (source[i] == '/') {
        out += "\\/";
      } else {
        out += source[i];
      }
    }
    return out + "/";
  };
  std::vector<Entry> entries;
  for (const auto& d : spec.token_defs) {
    entries.push_back({d.ordinal, "token " + d.name + " " + std::to_string(d.priority) + " " +
                                      delimit(d.pattern_source)});
  }
  for (const auto& d : spec.ignore_defs) entries.push_back({d.ordinal, "ignore " + delimit(d.pattern_source)});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.ordinal < b.ordinal; });
  std::string out;
  for (const auto& e : entries) out += e.text + "\n";
  return out;
}

bool same_model(const LexSpec& a, const LexSpec& b) {
  const auto token_key = [](const TokenDef& d) {
    return std::tie(d.name, d.priority, d.pattern_source, d.ordinal);
  };
  const auto ignore_key = [](const IgnoreDef& d) { return std::tie(d.pattern_source, d.ordinal); };
  return std::equal(a.token_defs.begin(), a.token_defs.end(), b.token_defs.begin(),
                    b.token_defs.end(),
                    [&](const auto& x, const auto& y) { return token_key(x) == token_key(y); }) &&
         std::equal(a.ignore_defs.begin(), a.ignore_defs.end(), b.ignore_defs.begin(),
                    b.ignore_defs.end(),
                    [&](const auto& x, const auto& y) { return ignore_key(x) == ignore_key(y); });
}

}  // namespace lamb
