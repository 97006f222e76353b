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
#include <set>
#include <string>
#include <string_view>

namespace lexnet {

enum class ProvisionStatus { in_force, invalidated, unknown };

std::string_view to_string(ProvisionStatus status);
ProvisionStatus provision_status_from_string(std::string_view text);  // throws Error

/// Canonical identifier for one legal provision (statute + article).
///
/// Identity is the (statute, article) pair only: status and display label
/// never participate in equality, ordering, or hashing. Two mentions of the
/// same article therefore collapse to one provision even when their metadata
/// differs.
struct ProvisionId {
  std::string statute;
  std::string article;
  ProvisionStatus status = ProvisionStatus::unknown;
  std::string label;  // optional display label, assigned per network; "" = unset

  /// Stable textual key: "statute::article", or just the statute when the
  /// article designator is empty. Used by every CSV/graph export.
  std::string key() const;

  friend bool operator==(const ProvisionId& a, const ProvisionId& b) {
    return a.statute == b.statute && a.article == b.article;
  }
  friend std::strong_ordering operator<=>(const ProvisionId& a, const ProvisionId& b) {
    if (auto c = a.statute <=> b.statute; c != 0) return c;
    return a.article <=> b.article;
  }
};

/// Citation sets are ordered by provision identity so that every traversal of
/// a document's citations is deterministic.
using ProvisionSet = std::set<ProvisionId>;

}  // namespace lexnet
