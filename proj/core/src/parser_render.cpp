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

#include "json.hpp"
#include "lamb/parser.hpp"

namespace lamb {
namespace {

void render_node(const ParseForest& forest, int id, int depth, std::string& out) {
  const auto& inst = forest.instances[static_cast<std::size_t>(id)];
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += inst.type_name;
  if (inst.is_terminal()) out += " \"" + inst.text + "\"";
  out += " @" + std::to_string(inst.start) + "-" + std::to_string(inst.end) + "\n";
  for (int c : inst.children) render_node(forest, c, depth + 1, out);
}

std::string dot_quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_trees(const ParseForest& forest) {
  std::string out;
  for (std::size_t k = 0; k < forest.accepted.size(); ++k) {
    if (k > 0) out += "\n";
    render_node(forest, forest.accepted[k], 0, out);
  }
  return out;
}

std::string forest_to_json(const ParseForest& forest) {
  nlohmann::ordered_json doc;
  doc["instances"] = nlohmann::ordered_json::array();
  for (const auto& inst : forest.instances) {
    nlohmann::ordered_json rec;
    rec["id"] = inst.id;
    rec["type"] = inst.type_name;
    rec["start"] = inst.start;
    rec["end"] = inst.end;
    rec["children"] = inst.children;
    if (inst.is_terminal()) {
      rec["rule"] = nullptr;
      rec["text"] = inst.text;
    } else {
      rec["rule"] = inst.rule;
    }
    doc["instances"].push_back(std::move(rec));
  }
  doc["accepted"] = forest.accepted;
  return doc.dump(2) + "\n";
}

// Accepted trees only; shared subtrees appear once.
std::string forest_to_dot(const ParseForest& forest) {
  std::string out = "digraph forest {\n  node [shape=box];\n";
  std::vector<bool> emitted(forest.instances.size(), false);
  std::vector<int> stack(forest.accepted.rbegin(), forest.accepted.rend());
  std::string edges;
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (emitted[static_cast<std::size_t>(id)]) continue;
    emitted[static_cast<std::size_t>(id)] = true;
    const auto& inst = forest.instances[static_cast<std::size_t>(id)];
    std::string label = inst.type_name;
    if (inst.is_terminal()) label += " " + dot_quoted(inst.text);
    out += "  n" + std::to_string(id) + " [label=" + dot_quoted(label) + "];\n";
    for (auto it = inst.children.rbegin(); it != inst.children.rend(); ++it) stack.push_back(*it);
    for (int c : inst.children) edges += "  n" + std::to_string(id) + " -> n" + std::to_string(c) + ";\n";
  }
  return out + edges + "}\n";
}

}  // namespace lamb
