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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "lexnet/affiliation.hpp"
#include "lexnet/citation_rules.hpp"
#include "lexnet/cocitation.hpp"
#include "lexnet/metrics.hpp"
#include "lexnet/typology.hpp"

namespace {

using namespace lexnet;

std::vector<JudgmentDoc> synthetic_corpus(std::size_t docs, std::size_t provisions,
                                          std::size_t cites_per_doc, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<JudgmentDoc> out;
  out.reserve(docs);
  for (std::size_t j = 0; j < docs; ++j) {
    JudgmentDoc d;
    d.doc_id = "J" + std::to_string(j);
    d.decision_date = Date{2022, 1, 1};
    for (std::size_t k = 0; k < cites_per_doc; ++k)
      d.citations.insert(
          ProvisionId{"Statute " + std::to_string(rng() % provisions), "1",
                      ProvisionStatus::unknown, ""});
    out.push_back(std::move(d));
  }
  return out;
}

CoCitationNetwork random_network(std::size_t n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<ProvisionId> nodes;
  for (std::size_t i = 0; i < n; ++i)
    nodes.push_back({"P" + std::to_string(i), "", ProvisionStatus::unknown, ""});
  std::vector<CoCitationEdge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v, 1});
  return CoCitationNetwork(std::move(nodes), std::move(edges));
}

void BM_BuildAndProject(benchmark::State& state) {
  auto docs = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 60, 6, 1);
  for (auto _ : state) {
    auto net = project(build_affiliation(docs));
    benchmark::DoNotOptimize(net.edge_count());
  }
}
BENCHMARK(BM_BuildAndProject)->Arg(48)->Arg(200)->Arg(1000);

void BM_Betweenness(benchmark::State& state) {
  auto net = random_network(static_cast<std::size_t>(state.range(0)), 0.1, 2);
  for (auto _ : state) {
    auto cb = betweenness_centrality(net);
    benchmark::DoNotOptimize(cb.data());
  }
}
BENCHMARK(BM_Betweenness)->Arg(32)->Arg(128)->Arg(256);

void BM_ClusterCases(benchmark::State& state) {
  auto docs = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 40, 5, 3);
  for (auto _ : state) {
    auto clusters = cluster_cases(docs, 0.5);
    benchmark::DoNotOptimize(clusters.size());
  }
}
BENCHMARK(BM_ClusterCases)->Arg(48)->Arg(200);

void BM_ExtractCitations(benchmark::State& state) {
  std::vector<CitationRule> rules;
  rules.push_back(
      {"《民法典》(第[〇零一二三四五六七八九十百千万0-9]+条(?:、第[〇零一二三四五六七八九十百千万0-9]+条)*)",
       "民法典", "第([〇零一二三四五六七八九十百千万0-9]+)条", ProvisionStatus::in_force});
  CitationRuleSet set(std::move(rules), {{"民法典", "Civil Code"}});

  JudgmentDoc doc;
  doc.doc_id = "J1";
  doc.decision_date = Date{2022, 1, 1};
  std::string text = "本院认为，";
  for (int i = 0; i < 20; ++i)
    text += "依据《民法典》第六条、第一千零三十二条之规定，";
  doc.raw_text = text;

  for (auto _ : state) {
    auto out = extract_citations(doc, set);
    benchmark::DoNotOptimize(out.citations.size());
  }
}
BENCHMARK(BM_ExtractCitations);

}  // namespace

BENCHMARK_MAIN();
