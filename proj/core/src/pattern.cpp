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

#include "lamb/pattern.hpp"

#include <cstdint>

#include "lamb/error.hpp"
#include "pattern_tree.hpp"

namespace lamb {
namespace pattern_detail {
namespace {

class TreeParser {
 public:
  explicit TreeParser(TextView src) : src_(src) {}

  NodePtr parse() {
    if (src_.empty()) throw PatternError(0, "empty pattern");
    auto root = alternation();
    if (pos_ < src_.size()) {
      // Only an unmatched ')' stops alternation() early.
      throw PatternError(pos_, "unbalanced ')'");
    }
    return root;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char32_t peek() const { return src_[pos_]; }

  NodePtr alternation() {
    std::vector<NodePtr> branches{concatenation()};
    while (!at_end() && peek() == U'|') {
      ++pos_;
      branches.push_back(concatenation());
    }
    if (branches.size() == 1) return branches.front();
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::kAlternate;
    n->items = std::move(branches);
    return n;
  }

  NodePtr concatenation() {
    std::vector<NodePtr> parts;
    while (!at_end() && peek() != U'|' && peek() != U')') parts.push_back(repetition());
    if (parts.empty()) return std::make_shared<Node>();
    if (parts.size() == 1) return parts.front();
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::kConcat;
    n->items = std::move(parts);
    return n;
  }

  NodePtr repetition() {
    auto atom_node = atom();
    while (!at_end()) {
      NodeKind kind;
      switch (peek()) {
        case U'*': kind = NodeKind::kStar; break;
        case U'+': kind = NodeKind::kPlus; break;
        case U'?': kind = NodeKind::kOptional; break;
        default: return atom_node;
      }
      ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = kind;
      n->items.push_back(std::move(atom_node));
      atom_node = std::move(n);
    }
    return atom_node;
  }

  static NodePtr chars(CharSet set) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::kChars;
    n->chars = std::move(set);
    return n;
  }

  static NodePtr literal(char32_t c) { return chars(CharSet{{{c, c}}, false}); }

  NodePtr atom() {
    const std::size_t start = pos_;
    const char32_t c = src_[pos_++];
    switch (c) {
      case U'(': {
        auto inner = alternation();
        if (at_end() || peek() != U')') throw PatternError(start, "unbalanced group: missing ')'");
        ++pos_;
        return inner;
      }
      case U'[':
        return char_class(start);
      case U'.':
        return chars(CharSet{{{U'\n', U'\n'}}, true});
      case U'\\':
        return literal(escape(start));
      case U'*':
      case U'+':
      case U'?':
        throw PatternError(start, "nothing to repeat");
      default:
        return literal(c);
    }
  }

  // Called with pos_ just past the backslash.
  char32_t escape(std::size_t backslash_at) {
    if (at_end()) throw PatternError(backslash_at, "trailing backslash");
    const char32_t c = src_[pos_++];
    switch (c) {
      case U'n': return U'\n';
      case U't': return U'\t';
      case U'.': case U'/': case U'\\': case U'+': case U'-': case U'*':
      case U'?': case U'(': case U')': case U'[': case U']': case U'|':
      case U'&':
        return c;
      default:
        throw PatternError(backslash_at, "unsupported escape '\\" + encode_utf8(c) + "'");
    }
  }

  NodePtr char_class(std::size_t open_at) {
    CharSet set;
    if (!at_end() && peek() == U'^') {
      set.negated = true;
      ++pos_;
    }
    const auto member = [&]() -> char32_t {
      const std::size_t at = pos_;
      const char32_t c = src_[pos_++];
      return c == U'\\' ? escape(at) : c;
    };
    bool first = true;
    while (true) {
      if (at_end()) throw PatternError(open_at, "unterminated character class");
      if (peek() == U']') {
        if (first) throw PatternError(pos_, "empty character class");
        ++pos_;
        break;
      }
      first = false;
      const std::size_t lo_at = pos_;
      const char32_t lo = member();
      // A '-' forms a range unless it is the last member.
      if (pos_ + 1 < src_.size() && peek() == U'-' && src_[pos_ + 1] != U']') {
        ++pos_;
        const char32_t hi = member();
        if (hi < lo) throw PatternError(lo_at, "reversed range in character class");
        set.ranges.push_back({lo, hi});
      } else {
        set.ranges.push_back({lo, lo});
      }
    }
    return chars(std::move(set));
  }

  TextView src_;
  std::size_t pos_ = 0;
};

}  // namespace

NodePtr parse_pattern(TextView source) { return TreeParser(source).parse(); }

// Thompson automaton. State 0 is never used so that 0 can mean "no edge".
struct State {
  enum Kind : std::uint8_t { kSplit, kChars, kAccept } kind;
  std::uint32_t out1 = 0;
  std::uint32_t out2 = 0;
  CharSet chars;

  static State accept() { return {kAccept, 0, 0, {}}; }
  static State split(std::uint32_t a, std::uint32_t b) { return {kSplit, a, b, {}}; }
};

struct Program {
  std::vector<State> states;
  std::uint32_t start = 0;
};

namespace {

class Compiler {
 public:
  Program compile(const Node& root) {
    prog_.states.push_back(State::accept());  // placeholder slot 0
    const std::uint32_t accept = add(State::accept());
    prog_.start = emit(root, accept);
    return std::move(prog_);
  }

 private:
  std::uint32_t add(State s) {
    prog_.states.push_back(std::move(s));
    return static_cast<std::uint32_t>(prog_.states.size() - 1);
  }

  // Emits states for `n` whose exit leads to `next`; returns the entry.
  std::uint32_t emit(const Node& n, std::uint32_t next) {
    switch (n.kind) {
      case NodeKind::kEmpty:
        return next;
      case NodeKind::kChars: {
        State s{State::kChars, next, 0, n.chars};
        return add(std::move(s));
      }
      case NodeKind::kConcat: {
        std::uint32_t entry = next;
        for (auto it = n.items.rbegin(); it != n.items.rend(); ++it) entry = emit(**it, entry);
        return entry;
      }
      case NodeKind::kAlternate: {
        std::uint32_t entry = emit(*n.items.back(), next);
        for (auto it = n.items.rbegin() + 1; it != n.items.rend(); ++it) {
          const std::uint32_t branch = emit(**it, next);
          entry = add(State::split(branch, entry));
        }
        return entry;
      }
      case NodeKind::kOptional: {
        const std::uint32_t body = emit(*n.items.front(), next);
        return add(State::split(body, next));
      }
      case NodeKind::kStar: {
        const std::uint32_t loop = add(State::split(0, next));
        prog_.states[loop].out1 = emit(*n.items.front(), loop);
        return loop;
      }
      case NodeKind::kPlus: {
        const std::uint32_t loop = add(State::split(0, next));
        const std::uint32_t body = emit(*n.items.front(), loop);
        prog_.states[loop].out1 = body;
        return body;
      }
    }
    return next;
  }

  Program prog_;
};

// Sparse state set with O(1) clear.
class StateSet {
 public:
  explicit StateSet(std::size_t n) : mark_(n, 0) {}

  void clear() {
    ++gen_;
    members_.clear();
  }
  bool insert(std::uint32_t s) {
    if (mark_[s] == gen_) return false;
    mark_[s] = gen_;
    members_.push_back(s);
    return true;
  }
  const std::vector<std::uint32_t>& members() const { return members_; }

 private:
  std::vector<std::uint32_t> mark_;
  std::uint32_t gen_ = 1;
  std::vector<std::uint32_t> members_;
};

// Adds `s` and everything epsilon-reachable from it; reports acceptance.
bool close_over(const Program& prog, std::uint32_t s, StateSet& set,
                std::vector<std::uint32_t>& stack) {
  bool accepting = false;
  stack.push_back(s);
  while (!stack.empty()) {
    const std::uint32_t cur = stack.back();
    stack.pop_back();
    if (!set.insert(cur)) continue;
    const State& st = prog.states[cur];
    if (st.kind == State::kAccept) {
      accepting = true;
    } else if (st.kind == State::kSplit) {
      stack.push_back(st.out2);
      stack.push_back(st.out1);
    }
  }
  return accepting;
}

}  // namespace
}  // namespace pattern_detail

Pattern Pattern::compile(std::string_view source) {
  Text decoded;
  try {
    decoded = decode_utf8(source);
  } catch (const EncodingError& e) {
    throw PatternError(0, e.what());
  }
  Pattern p;
  p.source_ = std::string(source);
  p.tree_ = pattern_detail::parse_pattern(decoded);
  p.program_ = std::make_shared<const pattern_detail::Program>(
      pattern_detail::Compiler().compile(*p.tree_));
  return p;
}

std::optional<std::size_t> Pattern::match_longest_at(TextView input, std::size_t pos) const {
  using namespace pattern_detail;
  if (!program_ || pos > input.size()) return std::nullopt;
  const Program& prog = *program_;

  StateSet current(prog.states.size());
  StateSet next(prog.states.size());
  std::vector<std::uint32_t> stack;
  current.clear();
  close_over(prog, prog.start, current, stack);

  std::optional<std::size_t> best;
  for (std::size_t i = pos; i < input.size() && !current.members().empty(); ++i) {
    const char32_t c = input[i];
    next.clear();
    bool accepting = false;
    for (std::uint32_t s : current.members()) {
      const State& st = prog.states[s];
      if (st.kind == State::kChars && st.chars.contains(c)) {
        accepting |= close_over(prog, st.out1, next, stack);
      }
    }
    if (accepting) best = i + 1 - pos;
    std::swap(current, next);
  }
  return best;
}

}  // namespace lamb
