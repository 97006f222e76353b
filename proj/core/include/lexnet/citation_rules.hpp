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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexnet/judgment.hpp"
#include "lexnet/provision.hpp"

namespace lexnet {

/// One extraction rule. `pattern` locates a statute mention plus its article
/// run; `article_capture` is applied inside the first capture group of
/// `pattern` (or the full match when it has no group) and must itself capture
/// the article designator. Patterns are ECMAScript regexes evaluated over
/// UTF-8 bytes.
struct CitationRule {
  std::string pattern;
  std::string statute;
  std::string article_capture;
  ProvisionStatus status = ProvisionStatus::unknown;
};

/// Ordered rule list plus a statute-alias table. Rule order is significant:
/// when two rules match overlapping text, the earlier rule claims the span.
class CitationRuleSet {
 public:
  CitationRuleSet() = default;
  CitationRuleSet(std::vector<CitationRule> rules,
                  std::map<std::string, std::string> aliases);

  static CitationRuleSet load(const std::filesystem::path& path);
  static CitationRuleSet parse(std::istream& in, std::string_view origin = "<stream>");

  /// Resolves a statute name through the alias table to its canonical form.
  /// Chains are followed to a fixpoint; cycles are rejected at construction.
  std::string canonical_statute(const std::string& name) const;

  const std::vector<CitationRule>& rules() const { return rules_; }
  const std::map<std::string, std::string>& aliases() const { return aliases_; }
  bool empty() const { return rules_.empty(); }

 private:
  struct Compiled;
  std::vector<CitationRule> rules_;
  std::map<std::string, std::string> aliases_;
  std::shared_ptr<const std::vector<Compiled>> compiled_;

  friend JudgmentDoc extract_citations(const JudgmentDoc&, const CitationRuleSet&);
};

/// Returns a copy of `doc` with `citations` populated from `doc.raw_text`.
/// Repeated mentions of one provision collapse; no match at all is not an
/// error (the returned set is simply empty).
JudgmentDoc extract_citations(const JudgmentDoc& doc, const CitationRuleSet& rules);

/// Parses an article designator that may be written with Chinese numerals
/// (一/十/百/千/万, 零/〇), ASCII digits, or full-width digits. Returns
/// nullopt when the text is not a recognizable number.
std::optional<long long> parse_article_number(std::string_view utf8);

}  // namespace lexnet
