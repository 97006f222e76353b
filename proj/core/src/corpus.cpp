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

#include "lexnet/corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "lexnet/error.hpp"
#include "text_util.hpp"

namespace lexnet {

namespace {

using json = nlohmann::json;

JudgmentDoc doc_from_json(const json& rec, CorpusFormat format, std::size_t line_no) {
  auto fail = [line_no](const std::string& what) -> Error {
    return Error("corpus line " + std::to_string(line_no) + ": " + what);
  };
  if (!rec.is_object()) throw fail("record is not an object");

  JudgmentDoc doc;
  if (!rec.contains("doc_id") || !rec["doc_id"].is_string() ||
      rec["doc_id"].get<std::string>().empty())
    throw fail("missing required field 'doc_id'");
  doc.doc_id = rec["doc_id"].get<std::string>();

  if (!rec.contains("decision_date") || !rec["decision_date"].is_string())
    throw fail("missing required field 'decision_date'");
  try {
    doc.decision_date = Date::parse(rec["decision_date"].get<std::string>());
  } catch (const Error& e) {
    throw fail(e.what());
  }

  try {
    doc.court = rec.value("court", std::string{});
    doc.cause_of_action = rec.value("cause_of_action", std::string{});
    if (rec.contains("raw_text")) doc.raw_text = rec["raw_text"].get<std::string>();
    if (rec.contains("tags"))
      for (const auto& t : rec["tags"]) doc.tags.insert(t.get<std::string>());

    if (rec.contains("citations")) {
      if (format == CorpusFormat::raw_text)
        throw fail("citations are not allowed in raw_text format; "
                   "they come from rule-based extraction");
      for (const auto& c : rec["citations"]) {
        ProvisionId p;
        p.statute = c.at("statute").get<std::string>();
        p.article = c.value("article", std::string{});
        p.status = provision_status_from_string(c.value("status", "unknown"));
        doc.citations.insert(std::move(p));
      }
    }
  } catch (const Error&) {
    throw;
  } catch (const json::exception& e) {
    throw fail(e.what());
  }

  if (format == CorpusFormat::raw_text && !doc.raw_text)
    throw fail("raw_text format requires a raw_text field");
  return doc;
}

json doc_to_json(const JudgmentDoc& doc) {
  json rec;
  rec["doc_id"] = doc.doc_id;
  rec["court"] = doc.court;
  rec["decision_date"] = doc.decision_date.to_string();
  rec["cause_of_action"] = doc.cause_of_action;
  json cites = json::array();
  for (const ProvisionId& p : doc.citations) {
    cites.push_back({{"statute", p.statute},
                     {"article", p.article},
                     {"status", std::string(to_string(p.status))}});
  }
  rec["citations"] = std::move(cites);
  if (doc.raw_text) rec["raw_text"] = *doc.raw_text;
  rec["tags"] = doc.tags;
  return rec;
}

bool doc_mentions(const JudgmentDoc& doc, const std::string& keyword) {
  if (doc.raw_text && doc.raw_text->find(keyword) != std::string::npos) return true;
  if (doc.court.find(keyword) != std::string::npos) return true;
  if (doc.cause_of_action.find(keyword) != std::string::npos) return true;
  for (const std::string& tag : doc.tags)
    if (tag.find(keyword) != std::string::npos) return true;
  return false;
}

}  // namespace

std::vector<JudgmentDoc> parse_corpus(std::istream& in, CorpusFormat format) {
  std::vector<JudgmentDoc> docs;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw Error("corpus line " + std::to_string(line_no) + ": malformed record: " +
                  e.what());
    }
    JudgmentDoc doc = doc_from_json(rec, format, line_no);
    if (!seen_ids.insert(doc.doc_id).second)
      throw Error("corpus line " + std::to_string(line_no) + ": duplicate doc_id \"" +
                  doc.doc_id + "\"");
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<JudgmentDoc> parse_corpus_file(const std::filesystem::path& path,
                                           CorpusFormat format) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path.string());
  return parse_corpus(in, format);
}

void write_corpus(std::ostream& out, std::span<const JudgmentDoc> docs) {
  for (const JudgmentDoc& doc : docs) out << doc_to_json(doc).dump() << '\n';
}

DeduplicateResult deduplicate(std::vector<JudgmentDoc> docs) {
  DeduplicateResult result;
  std::unordered_set<std::string> seen;
  for (JudgmentDoc& doc : docs) {
    std::string key;
    if (doc.raw_text) {
      key = "text:" + detail::normalize_whitespace(*doc.raw_text);
    } else {
      key = "meta:" + doc.court + "\x1f" + doc.decision_date.to_string();
      for (const ProvisionId& p : doc.citations) key += "\x1f" + p.key();
    }
    if (seen.insert(std::move(key)).second)
      result.docs.push_back(std::move(doc));
    else
      result.removed_ids.push_back(doc.doc_id);
  }
  return result;
}

ScreeningConfig ScreeningConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open screening config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("screening config " + path.string() + ": " + e.what());
  }
  ScreeningConfig config;
  try {
    if (doc.contains("date_from")) config.date_from = Date::parse(doc["date_from"].get<std::string>());
    if (doc.contains("date_to")) config.date_to = Date::parse(doc["date_to"].get<std::string>());
    if (doc.contains("required_keywords"))
      for (const auto& k : doc["required_keywords"]) config.required_keywords.insert(k.get<std::string>());
    if (doc.contains("jurisdiction")) config.jurisdiction = doc["jurisdiction"].get<std::string>();
    if (doc.contains("exclusion_ids"))
      for (const auto& id : doc["exclusion_ids"]) config.exclusion_ids.insert(id.get<std::string>());
  } catch (const json::exception& e) {
    throw Error("screening config " + path.string() + ": " + e.what());
  }
  config.validate();
  return config;
}

void ScreeningConfig::validate() const {
  if (date_from && date_to && *date_from > *date_to)
    throw Error("screening config: date_from " + date_from->to_string() +
                " is after date_to " + date_to->to_string());
}

bool ScreeningReport::balanced() const {
  return initial_count - duplicates_removed - keyword_filtered - date_filtered -
             manually_excluded ==
         final_count;
}

std::string ScreeningReport::to_json() const {
  json rec;
  rec["initial_count"] = initial_count;
  rec["duplicates_removed"] = duplicates_removed;
  rec["date_filtered"] = date_filtered;
  rec["keyword_filtered"] = keyword_filtered;
  rec["manually_excluded"] = manually_excluded;
  rec["final_count"] = final_count;
  json removed_list = json::array();
  for (const RemovedDoc& r : removed)
    removed_list.push_back({{"doc_id", r.doc_id}, {"reason", r.reason}});
  rec["removed"] = std::move(removed_list);
  return rec.dump(2);
}

ScreeningResult screen(std::vector<JudgmentDoc> docs, const ScreeningConfig& config) {
  config.validate();
  ScreeningResult result;
  result.report.initial_count = static_cast<long>(docs.size());

  for (JudgmentDoc& doc : docs) {
    // Stage 1: date window (inclusive bounds).
    if ((config.date_from && doc.decision_date < *config.date_from) ||
        (config.date_to && doc.decision_date > *config.date_to)) {
      ++result.report.date_filtered;
      result.report.removed.push_back({doc.doc_id, "date out of window"});
      continue;
    }
    // Stage 2: every required keyword must appear in raw_text or metadata.
    const std::string* missing = nullptr;
    for (const std::string& keyword : config.required_keywords) {
      if (!doc_mentions(doc, keyword)) {
        missing = &keyword;
        break;
      }
    }
    if (missing) {
      ++result.report.keyword_filtered;
      result.report.removed.push_back({doc.doc_id, "missing keyword \"" + *missing + "\""});
      continue;
    }
    // Stage 3: jurisdiction, a metadata relevance check counted with stage 2.
    if (config.jurisdiction && doc.court.find(*config.jurisdiction) == std::string::npos) {
      ++result.report.keyword_filtered;
      result.report.removed.push_back({doc.doc_id, "jurisdiction mismatch"});
      continue;
    }
    // Stage 4: manual exclusions.
    if (config.exclusion_ids.contains(doc.doc_id)) {
      ++result.report.manually_excluded;
      result.report.removed.push_back({doc.doc_id, "manual exclusion"});
      continue;
    }
    result.docs.push_back(std::move(doc));
  }
  result.report.final_count = static_cast<long>(result.docs.size());
  return result;
}

ScreeningResult screen_corpus(std::vector<JudgmentDoc> docs, const ScreeningConfig& config) {
  long initial = static_cast<long>(docs.size());
  DeduplicateResult deduped = deduplicate(std::move(docs));

  ScreeningResult result = screen(std::move(deduped.docs), config);
  result.report.initial_count = initial;
  result.report.duplicates_removed = static_cast<long>(deduped.removed_ids.size());

  std::vector<RemovedDoc> removed;
  removed.reserve(deduped.removed_ids.size() + result.report.removed.size());
  for (std::string& id : deduped.removed_ids)
    removed.push_back({std::move(id), "duplicate"});
  for (RemovedDoc& r : result.report.removed) removed.push_back(std::move(r));
  result.report.removed = std::move(removed);
  return result;
}

}  // namespace lexnet
