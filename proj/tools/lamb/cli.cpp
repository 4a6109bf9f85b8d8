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

#include "lamb/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lamb/lexgraph.hpp"
#include "lamb/parser.hpp"
#include "lamb/scanner.hpp"
#include "lamb/spec_io.hpp"

namespace lamb::cli {
namespace {

std::optional<std::string> slurp(const std::string& path, std::istream& in, std::ostream& err) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "lamb: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void report(const std::string& path, const SpecError& e, std::ostream& err) {
  for (const auto& d : e.diagnostics()) err << path << ":" << d.line << ": " << d.message << "\n";
}

// Fills `config` from argv; returns an exit code when the run should stop.
std::optional<int> parse_args(const std::vector<std::string>& args, RunConfig& config,
                              std::ostream& out, std::ostream& err) {
  CLI::App app{"Ambiguity-aware lexical analyzer: scans all overlapping tokens into a graph"};
  app.name(args.empty() ? "lamb" : args.front());
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"text", Format::kText}, {"json", Format::kJson}, {"dot", Format::kDot}};

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--spec", config.spec_path, "Lexical spec file")->required();
    sub->add_option("--input", config.input_path, "Input file, or - for standard input")
        ->required();
    sub->add_option("--format", config.format, "Output format: text, json or dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->option_text("text|json|dot");
    sub->add_flag("--oracle-check", config.oracle_check,
                  "Re-run scan and graph construction with the reference implementations");
  };

  auto* scan_cmd = app.add_subcommand("scan", "Print every token found");
  common(scan_cmd);
  auto* seq_cmd = app.add_subcommand("sequences", "Enumerate every token sequence");
  common(seq_cmd);
  seq_cmd->add_option("--limit", config.limit, "Maximum number of sequences")
      ->check(CLI::PositiveNumber);
  auto* parse_cmd = app.add_subcommand("parse", "Parse the token graph with a grammar");
  common(parse_cmd);
  parse_cmd->add_option("--grammar", config.grammar_path, "Grammar file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  if (scan_cmd->parsed()) config.subcommand = Subcommand::kScan;
  if (seq_cmd->parsed()) config.subcommand = Subcommand::kSequences;
  if (parse_cmd->parsed()) config.subcommand = Subcommand::kParse;

  if (config.subcommand == Subcommand::kSequences && config.format == Format::kDot) {
    err << "lamb: --format dot is not available for sequences\n";
    return kFailure;
  }
  return std::nullopt;
}

std::string format_sequences(const LexGraph& g, const SequenceList& seqs, Format format) {
  if (format == Format::kJson) {
    nlohmann::ordered_json doc;
    doc["sequences"] = nlohmann::ordered_json::array();
    for (const auto& path : seqs.paths) {
      nlohmann::ordered_json rec;
      rec["ids"] = path;
      rec["types"] = nlohmann::ordered_json::array();
      for (int id : path) rec["types"].push_back(g.tokens[static_cast<std::size_t>(id)].type_name);
      doc["sequences"].push_back(std::move(rec));
    }
    doc["truncated"] = seqs.truncated;
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (const auto& path : seqs.paths) {
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (k > 0) out += ' ';
      out += g.tokens[static_cast<std::size_t>(path[k])].type_name;
    }
    out += '\n';
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  if (const auto stop = parse_args(args, config, out, err)) return *stop;

  const auto spec_text = slurp(config.spec_path, in, err);
  if (!spec_text) return kFailure;
  LexSpec spec;
  try {
    spec = parse_lex_spec(*spec_text);
  } catch (const SpecError& e) {
    report(config.spec_path, e, err);
    return kFailure;
  }

  Grammar grammar;
  if (config.subcommand == Subcommand::kParse) {
    const auto grammar_text = slurp(config.grammar_path, in, err);
    if (!grammar_text) return kFailure;
    try {
      grammar = parse_grammar(*grammar_text, spec);
    } catch (const SpecError& e) {
      report(config.grammar_path, e, err);
      return kFailure;
    }
  }

  const auto input_bytes = slurp(config.input_path, in, err);
  if (!input_bytes) return kFailure;
  Text input;
  try {
    input = decode_utf8(*input_bytes);
  } catch (const EncodingError& e) {
    err << config.input_path << ": " << e.what() << "\n";
    return kFailure;
  }

  const ScanResult scanned = scan(spec, input);
  if (!scanned.unmatched.empty()) {
    err << "lamb: warning: " << scanned.unmatched.size()
        << " character(s) matched no pattern, first at offset " << scanned.unmatched.front()
        << "\n";
  }
  const LexGraph graph = build_graph(scanned);

  bool diverged = false;
  if (config.oracle_check) {
    if (scan_oracle(spec, input) != scanned) {
      err << "lamb: oracle divergence: scan differs from the reference scanner\n";
      diverged = true;
    }
    if (build_graph_oracle(scanned) != graph) {
      err << "lamb: oracle divergence: graph differs from the reference construction\n";
      diverged = true;
    }
  }

  int code = kOk;
  switch (config.subcommand) {
    case Subcommand::kScan:
      if (config.format == Format::kJson) {
        out << to_json(graph);
      } else if (config.format == Format::kDot) {
        out << to_dot(graph);
      } else {
        out << format_tokens(scanned);
      }
      break;
    case Subcommand::kSequences: {
      const auto seqs = enumerate_sequences(graph, config.limit);
      out << format_sequences(graph, seqs, config.format);
      if (seqs.truncated) err << "lamb: warning: output truncated at " << config.limit << " sequences\n";
      break;
    }
    case Subcommand::kParse: {
      const ParseForest forest = parse(graph, grammar);
      if (config.format == Format::kJson) {
        out << forest_to_json(forest);
      } else if (config.format == Format::kDot) {
        out << forest_to_dot(forest);
      } else {
        out << render_trees(forest);
      }
      if (forest.accepted.empty()) {
        err << "lamb: no valid sentence\n";
        code = kNoSentence;
      }
      break;
    }
  }
  return diverged ? kFailure : code;
}

}  // namespace lamb::cli
