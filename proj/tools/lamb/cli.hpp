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
#include <iosfwd>
#include <string>
#include <vector>

namespace lamb::cli {

enum class Subcommand { kScan, kSequences, kParse };
enum class Format { kText, kJson, kDot };

struct RunConfig {
  Subcommand subcommand = Subcommand::kScan;
  std::string spec_path;
  std::string grammar_path;  // parse only
  std::string input_path;    // "-" reads standard input
  Format format = Format::kText;
  std::size_t limit = 1000;
  bool oracle_check = false;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;      // bad spec, grammar, input or flags
inline constexpr int kNoSentence = 2;   // parse found no accepted tree

/// Runs one invocation. `args` includes the program name. Payload goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lamb::cli
