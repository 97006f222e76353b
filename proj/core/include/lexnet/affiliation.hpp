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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexnet/judgment.hpp"
#include "lexnet/provision.hpp"

namespace lexnet {

/// Binary provision-by-judgment incidence matrix (the 2-mode network).
///
/// Rows are provisions in first-appearance order, columns are judgments in
/// corpus order. Every row has at least one 1 (a provision nobody cites is
/// not a row); all-zero columns are allowed so the judgment sample stays
/// intact. Immutable after construction.
class AffiliationMatrix {
 public:
  AffiliationMatrix() = default;  // 0 x 0

  /// cells is row-major, provisions.size() * judgments.size() entries of 0/1.
  /// Throws Error when any invariant fails.
  AffiliationMatrix(std::vector<ProvisionId> provisions,
                    std::vector<std::string> judgments,
                    std::vector<std::uint8_t> cells);

  std::size_t provision_count() const { return provisions_.size(); }
  std::size_t judgment_count() const { return judgments_.size(); }

  bool cites(std::size_t provision, std::size_t judgment) const {
    return cells_[provision * judgments_.size() + judgment] != 0;
  }

  const std::vector<ProvisionId>& provisions() const { return provisions_; }
  const std::vector<std::string>& judgments() const { return judgments_; }

  std::optional<std::size_t> provision_index(const ProvisionId& p) const;
  std::optional<std::size_t> judgment_index(std::string_view doc_id) const;

  /// CSV export: header row of judgment ids, one row per provision key,
  /// cells 0/1.
  std::string to_csv() const;

 private:
  std::vector<ProvisionId> provisions_;
  std::vector<std::string> judgments_;
  std::vector<std::uint8_t> cells_;
};

/// Builds the incidence matrix from a corpus. Row order is the order in
/// which provisions first appear (scanning docs in input order, citations in
/// canonical order); column order is doc order. Duplicate doc ids are an
/// error.
AffiliationMatrix build_affiliation(std::span<const JudgmentDoc> docs);

}  // namespace lexnet
