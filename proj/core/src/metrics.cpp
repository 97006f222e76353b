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

#include "lexnet/metrics.hpp"

#include <limits>
#include <queue>
#include <sstream>
#include <stack>

#include "text_util.hpp"

namespace lexnet {

std::vector<int> degree_centrality(const CoCitationNetwork& net) {
  std::vector<int> degree(net.node_count(), 0);
  for (const CoCitationEdge& e : net.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return degree;
}

// Single-source shortest-path counting (Brandes' accumulation). Sources are
// processed in canonical node order and each unordered pair is seen from both
// endpoints, so the per-node dependency sums are halved at the end.
std::vector<double> betweenness_centrality(const CoCitationNetwork& net) {
  const std::size_t n = net.node_count();
  std::vector<double> centrality(n, 0.0);
  if (n < 3) return centrality;

  const auto adj = net.adjacency();
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> dist(n), sigma(n);
  std::vector<double> delta(n);
  std::vector<std::vector<std::size_t>> pred(n);

  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(sigma.begin(), sigma.end(), 0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : pred) p.clear();

    dist[s] = 0;
    sigma[s] = 1;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    std::stack<std::size_t> order;

    while (!frontier.empty()) {
      std::size_t v = frontier.front();
      frontier.pop();
      order.push(v);
      for (std::size_t w : adj[v]) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          pred[w].push_back(v);
        }
      }
    }

    while (!order.empty()) {
      std::size_t w = order.top();
      order.pop();
      for (std::size_t v : pred[w])
        delta[v] += static_cast<double>(sigma[v]) / static_cast<double>(sigma[w]) *
                    (1.0 + delta[w]);
      if (w != s) centrality[w] += delta[w];
    }
  }

  for (double& c : centrality) c /= 2.0;
  return centrality;
}

double density(const CoCitationNetwork& net) {
  const double g = static_cast<double>(net.node_count());
  if (net.node_count() < 2) return 0.0;
  return 2.0 * static_cast<double>(net.edge_count()) / (g * (g - 1.0));
}

MetricsReport summarize(const CoCitationNetwork& net) {
  MetricsReport report;
  const auto degrees = degree_centrality(net);
  const auto betweenness = betweenness_centrality(net);
  report.nodes.reserve(net.node_count());
  for (std::size_t i = 0; i < net.node_count(); ++i)
    report.nodes.push_back({net.nodes()[i], degrees[i], betweenness[i]});

  report.network.size_g = net.node_count();
  report.network.edges_l = net.edge_count();
  report.network.edge_endpoints = 2 * net.edge_count();
  report.network.density = density(net);
  report.classification =
      report.network.density <= kSparseDensityThreshold ? "sparse" : "dense";
  return report;
}

std::string node_metrics_csv(const MetricsReport& report, bool precise) {
  std::ostringstream out;
  out << "provision,label,degree,betweenness\n";
  for (const NodeMetrics& nm : report.nodes) {
    out << detail::csv_quote(nm.provision.key()) << ',' << detail::csv_quote(nm.provision.label)
        << ',' << nm.degree << ','
        << (precise ? detail::format_roundtrip(nm.betweenness)
                    : detail::format_fixed3(nm.betweenness))
        << '\n';
  }
  return out.str();
}

std::string network_metrics_csv(const MetricsReport& report, bool precise) {
  std::ostringstream out;
  out << "metric,value\n";
  out << "nodes," << report.network.size_g << '\n';
  out << "distinct_edges," << report.network.edges_l << '\n';
  out << "edge_endpoints," << report.network.edge_endpoints << '\n';
  out << "density,"
      << (precise ? detail::format_roundtrip(report.network.density)
                  : detail::format_fixed3(report.network.density))
      << '\n';
  out << "classification," << report.classification << '\n';
  return out.str();
}

}  // namespace lexnet
