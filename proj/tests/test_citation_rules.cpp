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

#include <doctest.h>

#include "lexnet/citation_rules.hpp"
#include "lexnet/error.hpp"
#include "test_support.hpp"

using namespace lexnet;
using support::prov;

namespace {

constexpr const char* kArticleRun =
    "(第[〇零一二三四五六七八九十百千万0-9]+条(?:、第[〇零一二三四五六七八九十百千万0-9]+条)*)";
constexpr const char* kArticleCapture = "第([〇零一二三四五六七八九十百千万0-9]+)条";

CitationRuleSet demo_rules() {
  std::vector<CitationRule> rules;
  rules.push_back({std::string("《民法典》") + kArticleRun, "民法典", kArticleCapture,
                   ProvisionStatus::in_force});
  rules.push_back({std::string("《合同法》") + kArticleRun, "合同法", kArticleCapture,
                   ProvisionStatus::invalidated});
  return CitationRuleSet(std::move(rules),
                         {{"民法典", "Civil Code"}, {"合同法", "Contract Law"}});
}

JudgmentDoc text_doc(std::string text) {
  auto d = support::doc("T1");
  d.raw_text = std::move(text);
  return d;
}

}  // namespace

TEST_CASE("chinese numerals convert to article numbers") {
  CHECK(parse_article_number("六") == 6);
  CHECK(parse_article_number("六十") == 60);
  CHECK(parse_article_number("一百零七") == 107);
  CHECK(parse_article_number("一千零三十二") == 1032);
  CHECK(parse_article_number("四百九十六") == 496);
  CHECK(parse_article_number("十八") == 18);
  CHECK(parse_article_number("二十") == 20);
  CHECK(parse_article_number("九十五") == 95);
  CHECK(parse_article_number("一百四十七") == 147);
  CHECK(parse_article_number("一万零一") == 10001);
  CHECK(parse_article_number("60") == 60);
  CHECK(parse_article_number("６０") == 60);  // full-width
  CHECK_FALSE(parse_article_number("abc").has_value());
  CHECK_FALSE(parse_article_number("").has_value());
  CHECK_FALSE(parse_article_number("第六条").has_value());  // designator syntax stripped upstream
}

TEST_CASE("extract_citations captures an article run for one statute") {
  auto out = extract_citations(
      text_doc("本院认为，依据《民法典》第六条、第一千零三十二条之规定，判决如下。"),
      demo_rules());
  REQUIRE(out.citations.size() == 2);
  CHECK(out.citations.contains(prov("Civil Code", "6")));
  CHECK(out.citations.contains(prov("Civil Code", "1032")));
}

TEST_CASE("repeated mentions collapse to one set element") {
  auto out = extract_citations(
      text_doc("《民法典》第六条……再依《民法典》第六条……又见《民法典》第六条。"),
      demo_rules());
  CHECK(out.citations.size() == 1);
  CHECK(out.citations.contains(prov("Civil Code", "6")));
}

TEST_CASE("aliases canonicalize the statute and rules carry status") {
  auto out = extract_citations(text_doc("依照《合同法》第六十条之规定。"), demo_rules());
  REQUIRE(out.citations.size() == 1);
  const ProvisionId& p = *out.citations.begin();
  CHECK(p.statute == "Contract Law");
  CHECK(p.article == "60");
  CHECK(p.status == ProvisionStatus::invalidated);
}

TEST_CASE("multiple statutes in one sentence are all captured") {
  auto out = extract_citations(
      text_doc("依据《合同法》第六十条、第一百零七条、《民法典》第六条之规定。"),
      demo_rules());
  CHECK(out.citations.size() == 3);
  CHECK(out.citations.contains(prov("Contract Law", "60")));
  CHECK(out.citations.contains(prov("Contract Law", "107")));
  CHECK(out.citations.contains(prov("Civil Code", "6")));
}

TEST_CASE("no matching rule leaves the citation set empty without error") {
  auto out = extract_citations(text_doc("本案不涉及任何法条引用。"), demo_rules());
  CHECK(out.citations.empty());
  CHECK(out.doc_id == "T1");
}

TEST_CASE("extraction requires raw_text") {
  CHECK_THROWS_AS(extract_citations(support::doc("T1"), demo_rules()), Error);
}

TEST_CASE("earlier rules claim overlapping spans") {
  // Both rules can match "Special Act Article 9"; the first one wins.
  std::vector<CitationRule> rules;
  rules.push_back({"Special Act Article ([0-9]+)", "special", "([0-9]+)",
                   ProvisionStatus::in_force});
  rules.push_back({"Act Article ([0-9]+)", "generic", "([0-9]+)",
                   ProvisionStatus::unknown});
  CitationRuleSet set(std::move(rules), {});

  auto out = extract_citations(text_doc("See Special Act Article 9 for details."), set);
  REQUIRE(out.citations.size() == 1);
  CHECK(out.citations.begin()->statute == "special");

  // Reversed order: the generic rule claims the span first.
  std::vector<CitationRule> reversed;
  reversed.push_back({"Act Article ([0-9]+)", "generic", "([0-9]+)",
                      ProvisionStatus::unknown});
  reversed.push_back({"Special Act Article ([0-9]+)", "special", "([0-9]+)",
                      ProvisionStatus::in_force});
  CitationRuleSet reversed_set(std::move(reversed), {});
  auto out2 = extract_citations(text_doc("See Special Act Article 9 for details."),
                                reversed_set);
  REQUIRE(out2.citations.size() == 1);
  CHECK(out2.citations.begin()->statute == "generic");
}

TEST_CASE("extraction is deterministic") {
  auto text = text_doc("《合同法》第六十条、第一百零七条、《民法典》第六条。");
  auto a = extract_citations(text, demo_rules());
  auto b = extract_citations(text, demo_rules());
  CHECK(a.citations == b.citations);
}

TEST_CASE("ruleset construction validates patterns and aliases") {
  SUBCASE("pattern must compile") {
    std::vector<CitationRule> rules{{"([unclosed", "s", "", ProvisionStatus::unknown}};
    CHECK_THROWS_WITH_AS(CitationRuleSet(std::move(rules), {}),
                         doctest::Contains("does not compile"), Error);
  }
  SUBCASE("alias chains resolve, cycles are rejected") {
    CitationRuleSet chained({}, {{"a", "b"}, {"b", "c"}});
    CHECK(chained.canonical_statute("a") == "c");
    CHECK(chained.canonical_statute("unmapped") == "unmapped");
    CHECK_THROWS_WITH_AS(CitationRuleSet({}, {{"a", "b"}, {"b", "a"}}),
                         doctest::Contains("cycle"), Error);
  }
  SUBCASE("reserved key separator is rejected in statute names") {
    CHECK_THROWS_AS(CitationRuleSet({}, {{"a", "x::y"}}), Error);
  }
}

TEST_CASE("the bundled ruleset loads and drives extraction on fixture text") {
  auto rules = CitationRuleSet::load(support::fixture_dir() / "citation_rules.json");
  auto out = extract_citations(
      text_doc("依据《民法典时间效力规定》第一条、《合同法》第六十条、第一百零七条、"
               "《民法典》第六条、《银行卡规定》第二条之规定"),
      rules);
  CHECK(out.citations.size() == 5);
  CHECK(out.citations.contains(prov("Interpretation on Retroactivity of Civil Code", "1")));
  CHECK(out.citations.contains(prov("Contract Law", "60")));
  CHECK(out.citations.contains(prov("Contract Law", "107")));
  CHECK(out.citations.contains(prov("Civil Code", "6")));
  CHECK(out.citations.contains(prov("Provisions on Civil Disputes over Bank Cards", "2")));
}
