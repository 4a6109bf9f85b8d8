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

#include <string>
#include <string_view>

namespace lamb {

// All offsets in lamb count Unicode scalar values, never bytes.
using Text = std::u32string;
using TextView = std::u32string_view;

/// Decodes UTF-8; throws EncodingError on malformed input.
Text decode_utf8(std::string_view bytes);

std::string encode_utf8(TextView text);
std::string encode_utf8(char32_t c);

}  // namespace lamb
