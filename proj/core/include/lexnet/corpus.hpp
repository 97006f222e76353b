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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lexnet/date.hpp"
#include "lexnet/judgment.hpp"

namespace lexnet {

/// Corpus input flavors. Both are newline-delimited UTF-8 JSON records:
/// `records` may carry pre-extracted citations, which are kept as-is;
/// `raw_text` requires a raw_text field and rejects a citations field, so
/// citations always come from rule-based extraction.
enum class CorpusFormat { records, raw_text };

std::vector<JudgmentDoc> parse_corpus(std::istream& in, CorpusFormat format);
std::vector<JudgmentDoc> parse_corpus_file(const std::filesystem::path& path,
                                           CorpusFormat format);

/// Serializes docs back to the newline-delimited record format (one JSON
/// object per line, keys sorted, citations in canonical order).
void write_corpus(std::ostream& out, std::span<const JudgmentDoc> docs);

struct DeduplicateResult {
  std::vector<JudgmentDoc> docs;        // first occurrences, input order
  std::vector<std::string> removed_ids; // later duplicates, input order
};

/// Removes content duplicates. Duplicate key: whitespace-normalized raw_text
/// when present, otherwise the (court, decision_date, sorted citations)
/// triple. Idempotent.
DeduplicateResult deduplicate(std::vector<JudgmentDoc> docs);

/// Sample screening parameters. Absent bounds are unbounded, so a
/// default-constructed config is all-permissive.
struct ScreeningConfig {
  std::optional<Date> date_from;
  std::optional<Date> date_to;
  std::set<std::string> required_keywords;
  std::optional<std::string> jurisdiction;  // substring match on court
  std::set<std::string> exclusion_ids;      // manual outlier exclusions

  static ScreeningConfig load(const std::filesystem::path& path);
  void validate() const;  // throws Error when date_from > date_to
};

struct RemovedDoc {
  std::string doc_id;
  std::string reason;
};

/// Stage counts for the screening procedure. Jurisdiction mismatches count
/// under keyword_filtered (both are relevance checks against text/metadata);
/// the removed list keeps the distinct reason.
struct ScreeningReport {
  long initial_count = 0;
  long duplicates_removed = 0;
  long keyword_filtered = 0;
  long date_filtered = 0;
  long manually_excluded = 0;
  long final_count = 0;
  std::vector<RemovedDoc> removed;

  /// initial - duplicates - keyword - date - manual == final
  bool balanced() const;
  std::string to_json() const;
};

struct ScreeningResult {
  std::vector<JudgmentDoc> docs;
  ScreeningReport report;
};

/// Applies the filters in fixed order: date window, required keywords,
/// jurisdiction, manual exclusions. Assumes docs are already deduplicated
/// (duplicates_removed stays 0 here).
ScreeningResult screen(std::vector<JudgmentDoc> docs, const ScreeningConfig& config);

/// Full sampling procedure: deduplicate, then screen, with one merged report
/// whose initial_count is the pre-deduplication size.
ScreeningResult screen_corpus(std::vector<JudgmentDoc> docs, const ScreeningConfig& config);

}  // namespace lexnet
