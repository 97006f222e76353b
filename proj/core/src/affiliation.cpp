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

#include "lexnet/affiliation.hpp"

#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "lexnet/error.hpp"
#include "text_util.hpp"

namespace lexnet {

AffiliationMatrix::AffiliationMatrix(std::vector<ProvisionId> provisions,
                                     std::vector<std::string> judgments,
                                     std::vector<std::uint8_t> cells)
    : provisions_(std::move(provisions)),
      judgments_(std::move(judgments)),
      cells_(std::move(cells)) {
  if (cells_.size() != provisions_.size() * judgments_.size())
    throw Error("affiliation matrix: cell count does not match dimensions");

  std::set<ProvisionId> prov_seen;
  for (const ProvisionId& p : provisions_)
    if (!prov_seen.insert(p).second)
      throw Error("affiliation matrix: duplicate provision row " + p.key());

  std::unordered_set<std::string> doc_seen;
  for (const std::string& id : judgments_)
    if (!doc_seen.insert(id).second)
      throw Error("affiliation matrix: duplicate judgment column \"" + id + "\"");

  for (std::size_t i = 0; i < provisions_.size(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < judgments_.size(); ++j) {
      std::uint8_t cell = cells_[i * judgments_.size() + j];
      if (cell > 1) throw Error("affiliation matrix: entries must be 0 or 1");
      any = any || cell != 0;
    }
    if (!any)
      throw Error("affiliation matrix: provision " + provisions_[i].key() +
                  " has an all-zero row");
  }
}

std::optional<std::size_t> AffiliationMatrix::provision_index(const ProvisionId& p) const {
  for (std::size_t i = 0; i < provisions_.size(); ++i)
    if (provisions_[i] == p) return i;
  return std::nullopt;
}

std::optional<std::size_t> AffiliationMatrix::judgment_index(std::string_view doc_id) const {
  for (std::size_t j = 0; j < judgments_.size(); ++j)
    if (judgments_[j] == doc_id) return j;
  return std::nullopt;
}

std::string AffiliationMatrix::to_csv() const {
  std::ostringstream out;
  out << "provision";
  for (const std::string& id : judgments_) out << ',' << detail::csv_quote(id);
  out << '\n';
  for (std::size_t i = 0; i < provisions_.size(); ++i) {
    out << detail::csv_quote(provisions_[i].key());
    for (std::size_t j = 0; j < judgments_.size(); ++j)
      out << ',' << (cites(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

AffiliationMatrix build_affiliation(std::span<const JudgmentDoc> docs) {
  std::vector<ProvisionId> provisions;
  std::map<ProvisionId, std::size_t> row_of;
  std::vector<std::string> judgments;
  std::unordered_set<std::string> seen_ids;

  for (const JudgmentDoc& doc : docs) {
    if (doc.doc_id.empty()) throw Error("build_affiliation: empty doc_id");
    if (!seen_ids.insert(doc.doc_id).second)
      throw Error("build_affiliation: duplicate doc_id \"" + doc.doc_id + "\"");
    judgments.push_back(doc.doc_id);
    for (const ProvisionId& p : doc.citations) {
      if (row_of.emplace(p, provisions.size()).second) provisions.push_back(p);
    }
  }

  std::vector<std::uint8_t> cells(provisions.size() * judgments.size(), 0);
  for (std::size_t j = 0; j < docs.size(); ++j)
    for (const ProvisionId& p : docs[j].citations)
      cells[row_of.at(p) * judgments.size() + j] = 1;

  return AffiliationMatrix(std::move(provisions), std::move(judgments), std::move(cells));
}

}  // namespace lexnet
