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

#include <cstddef>
#include <string>
#include <vector>

#include "lexnet/cocitation.hpp"

namespace lexnet {

/// Networks with density above this band are no longer "sparse".
inline constexpr double kSparseDensityThreshold = 0.25;

struct NodeMetrics {
  ProvisionId provision;
  int degree = 0;          // distinct neighbors, weights ignored
  double betweenness = 0;  // non-normalized C_B
};

struct NetworkMetrics {
  std::size_t size_g = 0;         // node count
  std::size_t edges_l = 0;        // distinct undirected edges L
  std::size_t edge_endpoints = 0; // 2L, the degree sum
  double density = 0;             // 2L / (g(g-1)), 0 for g < 2
};

struct MetricsReport {
  std::vector<NodeMetrics> nodes;  // in network node order
  NetworkMetrics network;
  std::string classification;     // "sparse" (density <= 0.25) or "dense"
};

/// Degree per node index: the number of distinct neighbors.
std::vector<int> degree_centrality(const CoCitationNetwork& net);

/// Non-normalized betweenness per node index, computed on unweighted
/// geodesics: C_B(i) = sum over unordered pairs j<k of g_jk(i) / g_jk, with
/// endpoints excluded and disconnected pairs contributing 0. Single-source
/// accumulation in canonical node order, so results are reproducible
/// bit-for-bit.
std::vector<double> betweenness_centrality(const CoCitationNetwork& net);

/// 2L / (g(g-1)) for g >= 2, otherwise 0. Weights are ignored.
double density(const CoCitationNetwork& net);

MetricsReport summarize(const CoCitationNetwork& net);

/// Per-node table, columns provision,label,degree,betweenness. Reals are
/// rounded to 3 decimals unless precise is set.
std::string node_metrics_csv(const MetricsReport& report, bool precise = false);

/// Overall table, columns metric,value: nodes, distinct_edges,
/// edge_endpoints, density, classification.
std::string network_metrics_csv(const MetricsReport& report, bool precise = false);

}  // namespace lexnet
