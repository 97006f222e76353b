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

// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "lexnet/citation_rules.hpp"
#include "lexnet/corpus.hpp"
#include "lexnet/graph_io.hpp"
#include "lexnet/metrics.hpp"
#include "lexnet/pipeline.hpp"
#include "lexnet/typology.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace lexnet;
using Clock = std::chrono::steady_clock;

namespace {

struct Checker {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// The reference fixture, run through the ingestion chain once.
struct Fixture {
  std::vector<JudgmentDoc> raw_docs;      // 49 records
  std::vector<JudgmentDoc> screened;      // 48 survivors
  ScreeningReport report;
  AffiliationMatrix matrix;
  CoCitationNetwork network;              // weighted projection
};

Fixture load_fixture() {
  Fixture f;
  auto rules = CitationRuleSet::load(support::fixture_dir() / "citation_rules.json");
  auto config = ScreeningConfig::load(support::fixture_dir() / "screening.json");
  f.raw_docs = parse_corpus_file(support::fixture_dir() / "fixture_corpus.jsonl",
                                 CorpusFormat::records);
  for (JudgmentDoc& doc : f.raw_docs)
    if (doc.citations.empty() && doc.raw_text) doc = extract_citations(doc, rules);
  auto result = screen_corpus(f.raw_docs, config);
  f.screened = std::move(result.docs);
  f.report = std::move(result.report);
  f.matrix = build_affiliation(f.screened);
  f.network = project(f.matrix);
  return f;
}

const std::vector<std::pair<ProvisionId, int>>& expected_degrees() {
  static const std::vector<std::pair<ProvisionId, int>> table = {
      {support::prov("Interpretation on Retroactivity of Civil Code", "1"), 11},
      {support::prov("Contract Law", "60"), 10},
      {support::prov("Contract Law", "107"), 10},
      {support::prov("Civil Code", "6"), 7},
      {support::prov("Provisions on Civil Disputes over Bank Cards", "2"), 7},
      {support::prov("Civil Procedure Law", "147"), 6},
      {support::prov("Civil Procedure Law", "95"), 6},
      {support::prov("Contract Law", "8"), 5},
      {support::prov("Civil Code", "1032"), 3},
      {support::prov("Civil Code", "496"), 3},
      {support::prov("Civil Code", "1034"), 3},
      {support::prov("Civil Code", "497"), 3},
      {support::prov("Civil Code", "1035"), 3},
      {support::prov("Guarantee Law", "18"), 3},
      {support::prov("Measures for the Administration of Bank Card Business", "6"), 3},
      {support::prov("Civil Procedure Law", "144"), 3},
      {support::prov("Interpretation on Retroactivity of Civil Code", "20"), 3},
      {support::prov("Measures for Supervision of Credit Card Business", "39"), 3},
  };
  return table;
}

std::set<ProvisionId> qmdh_set() {
  return {support::prov("Measures for Supervision of Credit Card Business", "39"),
          support::prov("Measures for the Administration of Bank Card Business", "6"),
          support::prov("Civil Code", "496"), support::prov("Civil Code", "497")};
}

// --- criterion 1 -------------------------------------------------------

void criterion1_table2(Checker& c) {
  auto start = Clock::now();

  std::vector<long long> sequence{11, 10, 10, 7, 7, 6, 6, 5, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3};
  c.require(oracle::erdos_gallai(sequence), "degree sequence fails Erdos-Gallai");

  Fixture f = load_fixture();
  c.require(f.matrix.provision_count() == 18 && f.matrix.judgment_count() == 48,
            "fixture must build an 18x48 affiliation matrix");
  c.require(f.network.node_count() == 18, "fixture network must have 18 nodes");

  auto degrees = degree_centrality(f.network);
  std::vector<long long> observed(degrees.begin(), degrees.end());
  std::sort(observed.begin(), observed.end(), std::greater<>());
  c.require(observed == sequence, "sorted degree sequence mismatch");

  long long degree_sum = 0;
  for (long long d : observed) degree_sum += d;
  c.require(degree_sum == 92, "degree sum must be 92");
  c.require(f.network.edge_count() == 46, "distinct edge count must be 46");

  for (const auto& [provision, degree] : expected_degrees()) {
    auto idx = f.network.node_index(provision);
    c.require(idx.has_value(), "missing provision " + provision.key());
    if (idx) c.require(degrees[*idx] == degree, provision.key() + " degree mismatch");
  }

  auto report = summarize(f.network);
  c.require(std::abs(report.network.density - 0.3007) <= 0.0005,
            "density must be 0.3007 +/- 0.0005");
  c.require(network_metrics_csv(report).find("density,0.301\n") != std::string::npos,
            "density must present as 0.301");
  c.require(report.classification == "dense", "classification must be dense");

  c.require(seconds_since(start) < 1.0, "criterion 1 must run in under 1 s");
}

// --- criterion 2 -------------------------------------------------------

void criterion2_betweenness_oracle(Checker& c) {
  auto start = Clock::now();
  std::mt19937 rng(20240930);
  int graphs = 0;
  for (int round = 0; round < 210; ++round) {
    std::size_t n = 3 + static_cast<std::size_t>(round % 8);  // 3..10
    double p = 0.2 + 0.6 * (static_cast<double>(round % 25) / 24.0);  // 0.2..0.8
    auto net = support::random_graph(n, p, rng);
    auto fast = betweenness_centrality(net);
    auto slow = oracle::betweenness(net);
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(fast[i] - slow[i]) > 1e-9) {
        c.require(false, "oracle mismatch at n=" + std::to_string(n) + " node " +
                             std::to_string(i));
        return;
      }
    }
    ++graphs;
  }
  c.require(graphs >= 200, "need at least 200 graphs");
  c.require(seconds_since(start) < 30.0, "criterion 2 must run in under 30 s");
}

// --- criterion 3 -------------------------------------------------------

void criterion3_analytic(Checker& c) {
  auto star = betweenness_centrality(
      support::graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  c.require(std::abs(star[0] - 6.0) <= 1e-12, "S5 center must be 6");
  for (int i = 1; i < 5; ++i)
    c.require(star[static_cast<std::size_t>(i)] == 0.0, "S5 leaves must be 0");

  auto path = betweenness_centrality(support::graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  c.require(std::abs(path[1] - 2.0) <= 1e-12 && std::abs(path[2] - 2.0) <= 1e-12,
            "P4 interior must be 2");
  c.require(path[0] == 0.0 && path[3] == 0.0, "P4 endpoints must be 0");

  for (std::size_t n : {3u, 4u, 6u, 8u}) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    for (double cb : betweenness_centrality(support::graph(n, edges)))
      c.require(cb == 0.0, "complete graph betweenness must be 0");
  }

  auto cycle = support::graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto fast = betweenness_centrality(cycle);
  auto slow = oracle::betweenness(cycle);
  for (std::size_t i = 0; i < 5; ++i) {
    c.require(std::abs(fast[i] - 1.0) <= 1e-12, "5-cycle betweenness must be 1");
    c.require(std::abs(fast[i] - slow[i]) <= 1e-9, "5-cycle must match the oracle");
  }
}

// --- criterion 4 -------------------------------------------------------

void criterion4_projection_oracle(Checker& c) {
  std::mt19937 rng(42421);
  std::bernoulli_distribution coin(0.35);
  int matrices = 0;
  for (int round = 0; round < 110; ++round) {
    std::size_t rows = 2 + static_cast<std::size_t>(rng() % 19);  // <= 20
    std::size_t cols = 1 + static_cast<std::size_t>(rng() % 30);  // <= 30
    std::vector<JudgmentDoc> docs;
    for (std::size_t j = 0; j < cols; ++j) {
      auto d = support::doc("J" + std::to_string(j));
      for (std::size_t i = 0; i < rows; ++i)
        if (coin(rng)) d.citations.insert(support::prov("P" + std::to_string(i)));
      docs.push_back(std::move(d));
    }
    auto matrix = build_affiliation(docs);
    auto net = project(matrix);
    auto expected = oracle::projection_counts(matrix);

    if (net.edge_count() != expected.size()) {
      c.require(false, "projection edge count mismatch");
      return;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
      auto [u, v, w] = expected[i];
      if (!(net.edges()[i] == CoCitationEdge{u, v, w})) {
        c.require(false, "projection weight mismatch");
        return;
      }
    }

    long long degree_sum = 0;
    for (int d : degree_centrality(net)) degree_sum += d;
    c.require(degree_sum == 2 * static_cast<long long>(net.edge_count()),
              "handshake lemma violated");
    ++matrices;
  }
  c.require(matrices >= 100, "need at least 100 matrices");
}

// --- criterion 5 -------------------------------------------------------

void criterion5_screening(Checker& c) {
  auto rules = CitationRuleSet::load(support::fixture_dir() / "citation_rules.json");
  auto docs = parse_corpus_file(support::fixture_dir() / "fixture_corpus.jsonl",
                                CorpusFormat::records);
  c.require(docs.size() == 49, "fixture corpus must hold 49 records");
  for (JudgmentDoc& doc : docs)
    if (doc.citations.empty() && doc.raw_text) doc = extract_citations(doc, rules);

  auto config = ScreeningConfig::load(support::fixture_dir() / "screening.json");
  auto result = screen_corpus(docs, config);
  c.require(result.report.initial_count == 49, "initial count must be 49");
  c.require(result.report.duplicates_removed == 1, "exactly one duplicate");
  c.require(result.report.final_count == 48, "final count must be 48");
  c.require(result.report.balanced(), "report arithmetic must balance");

  // Every stage prefix balances too: dedup alone, then the full screen.
  auto dedup_only = screen_corpus(docs, ScreeningConfig{});
  c.require(dedup_only.report.balanced() && dedup_only.report.final_count == 48,
            "dedup-only stage must balance at 48");

  // Manually excluding the atypical judgment removes it, reason recorded.
  config.exclusion_ids.insert("J048");
  auto excluded = screen_corpus(docs, config);
  c.require(excluded.report.manually_excluded == 1, "one manual exclusion");
  c.require(excluded.report.final_count == 47, "final count drops to 47");
  c.require(excluded.report.balanced(), "exclusion report must balance");
  bool reason_found = false;
  for (const RemovedDoc& r : excluded.report.removed)
    reason_found = reason_found || (r.doc_id == "J048" && r.reason == "manual exclusion");
  c.require(reason_found, "manual-exclusion reason must be recorded for J048");
}

// --- criterion 6 -------------------------------------------------------

void criterion6_outlier_component(Checker& c) {
  Fixture f = load_fixture();
  auto report = connected_components(f.network, f.screened);
  c.require(report.components.size() == 2, "fixture must split into 2 components");
  c.require(report.outliers == std::vector<std::size_t>{1},
            "the non-largest component is the outlier");

  std::set<ProvisionId> detached;
  for (std::size_t idx : report.components[1]) detached.insert(f.network.nodes()[idx]);
  c.require(detached == qmdh_set(), "outlier component must be the QMDH clique");
  c.require(report.components[1].size() == 4, "outlier is a quadrilateral");

  auto degrees = degree_centrality(f.network);
  auto betweenness = betweenness_centrality(f.network);
  for (std::size_t idx : report.components[1]) {
    c.require(degrees[idx] == 3, "detached clique degree must be 3");
    c.require(betweenness[idx] == 0.0, "detached clique betweenness must be 0");
  }

  auto contributing = report.contributing_judgments.find(1);
  c.require(contributing != report.contributing_judgments.end() &&
                contributing->second == std::set<std::string>{"J048"},
            "only J048 contributes to the outlier component");

  auto reduced = exclude_component(f.matrix, detached);
  c.require(reduced.provision_count() == 14, "exclusion leaves 14 provisions");
  c.require(reduced.judgment_count() == 47, "exclusion removes exactly one judgment");
  c.require(!reduced.judgment_index("J048").has_value(), "J048 column removed");
  for (const ProvisionId& p : detached)
    c.require(!reduced.provision_index(p).has_value(), "QMDH rows removed");
}

// --- criterion 7 -------------------------------------------------------

void criterion7_typology(Checker& c) {
  using support::doc;
  using support::prov;

  // Jaccard identity and symmetry.
  std::mt19937 rng(7171);
  std::bernoulli_distribution coin(0.5);
  for (int round = 0; round < 100; ++round) {
    JudgmentDoc x = doc("x"), y = doc("y");
    for (int i = 0; i < 6; ++i) {
      if (coin(rng)) x.citations.insert(prov("P" + std::to_string(i)));
      if (coin(rng)) y.citations.insert(prov("P" + std::to_string(i)));
    }
    double s = case_similarity(x, y);
    c.require(s == case_similarity(y, x), "similarity must be symmetric");
    c.require(std::abs(s - oracle::jaccard(x.citations, y.citations)) <= 1e-12,
              "similarity must equal the Jaccard oracle");
    if (!x.citations.empty() && x.citations == y.citations)
      c.require(s == 1.0, "equal nonempty sets must score 1");
  }

  // Clustering vs brute force, plus threshold-monotone refinement, on >= 50
  // random corpora.
  std::uniform_int_distribution<int> size(0, 4);
  int corpora = 0;
  for (int round = 0; round < 55; ++round) {
    std::vector<JudgmentDoc> docs;
    int n = 2 + round % 14;  // <= 15 docs
    for (int i = 0; i < n; ++i) {
      auto d = doc("J" + std::to_string(i));
      int k = size(rng);
      for (int p = 0; p < k; ++p)
        d.citations.insert(prov("P" + std::to_string(rng() % 8)));
      docs.push_back(std::move(d));
    }
    double lo = 0.3, hi = 0.7;
    auto coarse = cluster_cases(docs, lo);
    auto fine = cluster_cases(docs, hi);

    std::set<std::set<std::string>> coarse_partition, fine_partition;
    for (const auto& cl : coarse) coarse_partition.insert(cl.members);
    for (const auto& cl : fine) fine_partition.insert(cl.members);
    c.require(coarse_partition == oracle::cluster_partition(docs, lo),
              "clustering must match brute force (low threshold)");
    c.require(fine_partition == oracle::cluster_partition(docs, hi),
              "clustering must match brute force (high threshold)");

    for (const auto& f : fine_partition) {
      bool contained = false;
      for (const auto& g : coarse_partition)
        if (std::includes(g.begin(), g.end(), f.begin(), f.end())) contained = true;
      c.require(contained, "higher threshold must refine the clustering");
    }
    ++corpora;
  }
  c.require(corpora >= 50, "need at least 50 corpora");

  // Retrieval tie-break determinism.
  std::vector<JudgmentDoc> corpus{
      doc("J9", {prov("A"), prov("X")}),
      doc("J2", {prov("A"), prov("Y")}),
      doc("J5", {prov("A"), prov("Z")}),
  };
  auto query = doc("Q", {prov("A"), prov("B")});
  auto first = retrieve_similar(query, corpus, 3);
  auto second = retrieve_similar(query, corpus, 3);
  c.require(first == second, "retrieval must be deterministic");
  c.require(first[0].first == "J2" && first[1].first == "J5" && first[2].first == "J9",
            "ties must break by ascending doc_id");
}

// --- criterion 8 -------------------------------------------------------

std::map<std::string, std::string> read_tree(const fs::path& dir) {
  std::map<std::string, std::string> tree;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream content;
    content << in.rdbuf();
    tree[fs::relative(entry.path(), dir).string()] = content.str();
  }
  return tree;
}

void criterion8_determinism(Checker& c) {
  fs::path base = fs::temp_directory_path() / "lexnet_acceptance_runs";
  fs::remove_all(base);
  fs::path out1 = base / "run1", out2 = base / "run2";

  std::string command_base =
      std::string(LEXNET_CLI_PATH) + " run --corpus " +
      (support::fixture_dir() / "fixture_corpus.jsonl").string() + " --rules " +
      (support::fixture_dir() / "citation_rules.json").string() + " --screen " +
      (support::fixture_dir() / "screening.json").string() +
      " --format edge_csv --format graphml --format dot --out ";
  int s1 = std::system((command_base + out1.string() + " >/dev/null").c_str());
  int s2 = std::system((command_base + out2.string() + " >/dev/null").c_str());
  c.require(s1 == 0 && s2 == 0, "pipeline runs must succeed");

  auto tree1 = read_tree(out1), tree2 = read_tree(out2);
  c.require(!tree1.empty(), "run must produce artifacts");
  c.require(tree1 == tree2, "two runs must be byte-identical");

  // edge_csv round-trips through import_graph.
  Fixture f = load_fixture();
  std::istringstream stream(export_graph(f.network, GraphFormat::edge_csv));
  auto back = import_graph(stream, GraphFormat::edge_csv);
  c.require(support::graphs_equal(f.network, back),
            "edge_csv must round-trip through import_graph");

  fs::remove_all(base);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"criterion 1: Table-2 consistency on the reference fixture", criterion1_table2},
      {"criterion 2: betweenness matches the enumeration oracle (>=200 graphs)",
       criterion2_betweenness_oracle},
      {"criterion 3: analytic centrality checks (star, path, complete, cycle)",
       criterion3_analytic},
      {"criterion 4: projection matches brute-force pair counts (>=100 matrices)",
       criterion4_projection_oracle},
      {"criterion 5: screening pipeline 49 -> 48 with balanced reports",
       criterion5_screening},
      {"criterion 6: detached QMDH clique detection and exclusion",
       criterion6_outlier_component},
      {"criterion 7: typology properties (Jaccard, refinement, retrieval)",
       criterion7_typology},
      {"criterion 8: end-to-end determinism and edge_csv round-trip",
       criterion8_determinism},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Checker checker;
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.failures.push_back(std::string("exception: ") + e.what());
    }
    if (checker.failures.empty()) {
      std::cout << "[PASS] " << criterion.name << '\n';
    } else {
      ++failed;
      std::cout << "[FAIL] " << criterion.name << '\n';
      for (const std::string& failure : checker.failures)
        std::cout << "       - " << failure << '\n';
    }
  }
  return failed;
}
