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

#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace lexnet {

/// Calendar date in the proleptic Gregorian calendar. Parsed strictly from
/// ISO-8601 "YYYY-MM-DD"; an invalid date is a hard error, never a silent
/// filter.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  static Date parse(std::string_view iso);  // throws Error on malformed input
  static bool is_valid(int year, int month, int day);

  std::string to_string() const;

  friend auto operator<=>(const Date&, const Date&) = default;
};

}  // namespace lexnet
