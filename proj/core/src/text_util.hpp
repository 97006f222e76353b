// Copyright 2026 The lexnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Internal text helpers shared by the serialization code. Not installed.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lexnet::detail {

/// Collapses every run of ASCII whitespace to a single space and trims the
/// ends. Used as the content-duplicate key.
std::string normalize_whitespace(std::string_view text);

/// RFC-4180-style quoting: fields containing comma, quote, CR or LF are
/// wrapped in quotes with inner quotes doubled.
std::string csv_quote(std::string_view field);

/// Splits one CSV line (no embedded newlines). Throws Error on an unbalanced
/// quote.
std::vector<std::string> csv_split(std::string_view line);

/// Fixed presentation formatting: "%.3f".
std::string format_fixed3(double value);

/// Shortest round-trip decimal representation (std::to_chars).
std::string format_roundtrip(double value);

}  // namespace lexnet::detail
