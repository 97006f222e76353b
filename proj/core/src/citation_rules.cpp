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

#include "lexnet/citation_rules.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "lexnet/error.hpp"

namespace lexnet {

namespace {

using json = nlohmann::json;

// Decodes one UTF-8 code point starting at `i`; advances `i` past it.
// Returns 0xFFFD on malformed input (the byte is consumed).
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  unsigned char c0 = s[i++];
  if (c0 < 0x80) return c0;
  int extra = 0;
  char32_t cp = 0;
  if ((c0 & 0xE0) == 0xC0) { cp = c0 & 0x1F; extra = 1; }
  else if ((c0 & 0xF0) == 0xE0) { cp = c0 & 0x0F; extra = 2; }
  else if ((c0 & 0xF8) == 0xF0) { cp = c0 & 0x07; extra = 3; }
  else return 0xFFFD;
  for (int k = 0; k < extra; ++k) {
    if (i >= s.size() || (s[i] & 0xC0) != 0x80) return 0xFFFD;
    cp = (cp << 6) | (s[i++] & 0x3F);
  }
  return cp;
}

int cn_digit(char32_t cp) {
  switch (cp) {
    case U'零': case U'〇': return 0;
    case U'一': return 1;
    case U'二': case U'两': return 2;
    case U'三': return 3;
    case U'四': return 4;
    case U'五': return 5;
    case U'六': return 6;
    case U'七': return 7;
    case U'八': return 8;
    case U'九': return 9;
    default: return -1;
  }
}

long long cn_unit(char32_t cp) {
  switch (cp) {
    case U'十': return 10;
    case U'百': return 100;
    case U'千': return 1000;
    case U'万': return 10000;
    default: return 0;
  }
}

}  // namespace

std::optional<long long> parse_article_number(std::string_view utf8) {
  if (utf8.empty()) return std::nullopt;
  long long result = 0;   // completed 万-sections
  long long section = 0;  // completed units below 万
  long long current = 0;  // digits not yet bound to a unit
  bool any = false;
  std::size_t i = 0;
  while (i < utf8.size()) {
    char32_t cp = decode_utf8(utf8, i);
    if (cp >= U'0' && cp <= U'9') {  // ASCII digits pass through
      current = current * 10 + (cp - U'0');
      any = true;
    } else if (cp >= U'０' && cp <= U'９') {  // full-width digits
      current = current * 10 + static_cast<long long>(cp - U'０');
      any = true;
    } else if (int d = cn_digit(cp); d >= 0) {
      // 零/〇 are positional placeholders; they contribute no digit.
      if (d > 0) current = current * 10 + d;
      any = true;
    } else if (long long u = cn_unit(cp); u > 0) {
      if (u == 10000) {
        long long sec = section + current;
        result += (sec == 0 ? 1 : sec) * u;
        section = 0;
      } else {
        if (current == 0) current = 1;  // bare 十 as in 十八
        section += current * u;
      }
      current = 0;
      any = true;
    } else {
      return std::nullopt;
    }
    if (result + section + current > 1000000000LL) return std::nullopt;
  }
  if (!any) return std::nullopt;
  return result + section + current;
}

struct CitationRuleSet::Compiled {
  std::regex pattern;
  std::regex article;
};

CitationRuleSet::CitationRuleSet(std::vector<CitationRule> rules,
                                 std::map<std::string, std::string> aliases)
    : rules_(std::move(rules)), aliases_(std::move(aliases)) {
  auto compiled = std::make_shared<std::vector<Compiled>>();
  compiled->reserve(rules_.size());
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const CitationRule& rule = rules_[i];
    if (rule.statute.empty())
      throw Error("rule " + std::to_string(i + 1) + ": statute must not be empty");
    try {
      Compiled c;
      c.pattern = std::regex(rule.pattern, std::regex::ECMAScript);
      c.article = std::regex(
          rule.article_capture.empty() ? rule.pattern : rule.article_capture,
          std::regex::ECMAScript);
      compiled->push_back(std::move(c));
    } catch (const std::regex_error& e) {
      throw Error("rule " + std::to_string(i + 1) + ": pattern does not compile: " +
                  e.what());
    }
  }
  compiled_ = std::move(compiled);

  // Reject alias cycles; chains are fine.
  for (const auto& [from, _] : aliases_) {
    std::string cur = from;
    std::size_t hops = 0;
    while (true) {
      auto it = aliases_.find(cur);
      if (it == aliases_.end() || it->second == cur) break;
      cur = it->second;
      if (++hops > aliases_.size())
        throw Error("alias cycle involving \"" + from + "\"");
    }
  }
  for (const auto& [from, to] : aliases_) {
    if (from.find("::") != std::string::npos || to.find("::") != std::string::npos)
      throw Error("statute names must not contain \"::\" (reserved key separator)");
  }
}

std::string CitationRuleSet::canonical_statute(const std::string& name) const {
  std::string cur = name;
  while (true) {
    auto it = aliases_.find(cur);
    if (it == aliases_.end() || it->second == cur) return cur;
    cur = it->second;
  }
}

CitationRuleSet CitationRuleSet::parse(std::istream& in, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("ruleset " + std::string(origin) + ": " + e.what());
  }
  std::vector<CitationRule> rules;
  std::map<std::string, std::string> aliases;
  try {
    for (const auto& r : doc.at("rules")) {
      CitationRule rule;
      rule.pattern = r.at("pattern").get<std::string>();
      rule.statute = r.at("statute").get<std::string>();
      rule.article_capture = r.value("article_capture", std::string{});
      rule.status = provision_status_from_string(r.value("status", "unknown"));
      rules.push_back(std::move(rule));
    }
    if (doc.contains("aliases"))
      for (const auto& [from, to] : doc.at("aliases").items())
        aliases.emplace(from, to.get<std::string>());
  } catch (const json::exception& e) {
    throw Error("ruleset " + std::string(origin) + ": " + e.what());
  }
  return CitationRuleSet(std::move(rules), std::move(aliases));
}

CitationRuleSet CitationRuleSet::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ruleset file " + path.string());
  return parse(in, path.string());
}

namespace {

struct Span {
  std::size_t begin, end;
};

bool overlaps(const Span& s, const std::vector<Span>& claimed) {
  return std::any_of(claimed.begin(), claimed.end(), [&](const Span& c) {
    return s.begin < c.end && c.begin < s.end;
  });
}

}  // namespace

JudgmentDoc extract_citations(const JudgmentDoc& doc, const CitationRuleSet& rules) {
  if (!doc.raw_text)
    throw Error("doc " + doc.doc_id + ": raw_text missing, cannot extract citations");

  JudgmentDoc out = doc;
  out.citations.clear();

  const std::string& text = *doc.raw_text;
  std::vector<Span> claimed;
  const auto& compiled = *rules.compiled_;

  for (std::size_t ri = 0; ri < rules.rules_.size(); ++ri) {
    const CitationRule& rule = rules.rules_[ri];
    std::string statute = rules.canonical_statute(rule.statute);

    auto begin = std::sregex_iterator(text.begin(), text.end(), compiled[ri].pattern);
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
      const std::smatch& m = *it;
      Span span{static_cast<std::size_t>(m.position(0)),
                static_cast<std::size_t>(m.position(0) + m.length(0))};
      if (overlaps(span, claimed)) continue;  // an earlier rule owns this text
      claimed.push_back(span);

      // Article designators live in the first capture group when present.
      std::string region = m.size() > 1 && m[1].matched ? m[1].str() : m[0].str();
      auto abeg = std::sregex_iterator(region.begin(), region.end(), compiled[ri].article);
      for (auto ait = abeg; ait != std::sregex_iterator(); ++ait) {
        const std::smatch& am = *ait;
        std::string designator = am.size() > 1 && am[1].matched ? am[1].str() : am[0].str();
        if (auto n = parse_article_number(designator))
          designator = std::to_string(*n);
        out.citations.insert(ProvisionId{statute, designator, rule.status, ""});
      }
    }
  }
  return out;
}

}  // namespace lexnet
