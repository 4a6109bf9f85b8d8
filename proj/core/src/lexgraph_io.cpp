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

#include <stdexcept>

#include "json.hpp"
#include "lamb/lexgraph.hpp"

namespace lamb {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\\\n"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_dot(const LexGraph& g) {
  std::string out = "digraph lexgraph {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  std::vector<bool> is_start(g.tokens.size(), false);
  for (int id : g.start_set) is_start[static_cast<std::size_t>(id)] = true;
  for (const auto& t : g.tokens) {
    out += "  t" + std::to_string(t.id) + " [label=\"" + dot_escape(t.type_name) + "\\n\\\"" +
           dot_escape(t.text) + "\\\"@" + std::to_string(t.start) + "-" + std::to_string(t.end) +
           "\"";
    if (is_start[static_cast<std::size_t>(t.id)]) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (const auto& t : g.tokens) {
    for (int f : g.following[static_cast<std::size_t>(t.id)]) {
      out += "  t" + std::to_string(t.id) + " -> t" + std::to_string(f) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string to_json(const LexGraph& g) {
  ordered_json doc;
  doc["input_length"] = g.input_length;
  doc["tokens"] = ordered_json::array();
  for (const auto& t : g.tokens) {
    ordered_json rec;
    rec["id"] = t.id;
    rec["type"] = t.type_name;
    rec["text"] = t.text;
    rec["start"] = t.start;
    rec["end"] = t.end;
    rec["preceding"] = g.preceding[static_cast<std::size_t>(t.id)];
    rec["following"] = g.following[static_cast<std::size_t>(t.id)];
    doc["tokens"].push_back(std::move(rec));
  }
  doc["start"] = g.start_set;
  return doc.dump(2) + "\n";
}

LexGraph graph_from_json(std::string_view json) {
  LexGraph g;
  try {
    const auto doc = nlohmann::json::parse(json);
    g.input_length = doc.value("input_length", std::size_t{0});
    const auto& tokens = doc.at("tokens");
    g.following.resize(tokens.size());
    g.preceding.resize(tokens.size());
    for (const auto& rec : tokens) {
      Token t;
      t.id = rec.at("id").get<int>();
      t.type_name = rec.at("type").get<std::string>();
      t.text = rec.at("text").get<std::string>();
      t.start = rec.at("start").get<std::size_t>();
      t.end = rec.at("end").get<std::size_t>();
      if (t.id < 0 || static_cast<std::size_t>(t.id) != g.tokens.size()) {
        throw std::invalid_argument("token ids must be 0..n-1 in order");
      }
      g.preceding.at(static_cast<std::size_t>(t.id)) = rec.value("preceding", std::vector<int>{});
      g.following.at(static_cast<std::size_t>(t.id)) = rec.value("following", std::vector<int>{});
      g.tokens.push_back(std::move(t));
    }
    g.start_set = doc.at("start").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
  return g;
}

}  // namespace lamb
