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
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lexnet/cocitation.hpp"
#include "lexnet/judgment.hpp"

namespace support {

inline std::filesystem::path fixture_dir() {
  return std::filesystem::path(LEXNET_FIXTURE_DIR);
}

inline lexnet::ProvisionId prov(std::string statute, std::string article = "",
                                lexnet::ProvisionStatus status =
                                    lexnet::ProvisionStatus::unknown) {
  return {std::move(statute), std::move(article), status, ""};
}

inline lexnet::JudgmentDoc doc(std::string id,
                               std::initializer_list<lexnet::ProvisionId> citations = {},
                               std::string date = "2022-06-01") {
  lexnet::JudgmentDoc d;
  d.doc_id = std::move(id);
  d.decision_date = lexnet::Date::parse(date);
  d.court = "Test Court";
  d.cause_of_action = "test";
  for (const auto& p : citations) d.citations.insert(p);
  return d;
}

/// Graph with nodes named P0..P{n-1} and unit-weight edges (or explicit
/// weights via the 3-tuple overload).
inline lexnet::CoCitationNetwork graph(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<lexnet::ProvisionId> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(prov("P" + std::to_string(i)));
  std::vector<lexnet::CoCitationEdge> es;
  for (auto [u, v] : edges) es.push_back({u, v, 1});
  return lexnet::CoCitationNetwork(std::move(nodes), std::move(es));
}

inline lexnet::CoCitationNetwork weighted_graph(
    std::size_t n,
    const std::vector<std::tuple<std::size_t, std::size_t, long long>>& edges) {
  std::vector<lexnet::ProvisionId> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(prov("P" + std::to_string(i)));
  std::vector<lexnet::CoCitationEdge> es;
  for (auto [u, v, w] : edges) es.push_back({u, v, w});
  return lexnet::CoCitationNetwork(std::move(nodes), std::move(es));
}

inline lexnet::CoCitationNetwork random_graph(std::size_t n, double edge_prob,
                                              std::mt19937& rng) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return graph(n, edges);
}

/// Structural equality on labeled graphs: same node identity set, same
/// weighted edge set (node order irrelevant).
inline bool graphs_equal(const lexnet::CoCitationNetwork& a,
                         const lexnet::CoCitationNetwork& b) {
  std::set<std::string> na, nb;
  for (const auto& p : a.nodes()) na.insert(p.key());
  for (const auto& p : b.nodes()) nb.insert(p.key());
  if (na != nb) return false;

  auto edge_set = [](const lexnet::CoCitationNetwork& g) {
    std::set<std::tuple<std::string, std::string, long long>> out;
    for (const auto& e : g.edges()) {
      std::string u = g.nodes()[e.u].key(), v = g.nodes()[e.v].key();
      if (v < u) std::swap(u, v);
      out.emplace(u, v, e.weight);
    }
    return out;
  };
  return edge_set(a) == edge_set(b);
}

}  // namespace support
