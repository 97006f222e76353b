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

#include "lexnet/cocitation.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lexnet/error.hpp"

namespace lexnet {

CoCitationNetwork::CoCitationNetwork(std::vector<ProvisionId> nodes,
                                     std::vector<CoCitationEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::set<ProvisionId> seen;
  for (const ProvisionId& n : nodes_)
    if (!seen.insert(n).second)
      throw Error("co-citation network: duplicate node " + n.key());

  for (CoCitationEdge& e : edges_) {
    if (e.u >= nodes_.size() || e.v >= nodes_.size())
      throw Error("co-citation network: edge endpoint out of range");
    if (e.u == e.v)
      throw Error("co-citation network: self-loop at " + nodes_[e.u].key());
    if (e.weight < 1)
      throw Error("co-citation network: edge weight must be >= 1");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw Error("co-citation network: duplicate edge " + nodes_[edges_[i].u].key() +
                  " -- " + nodes_[edges_[i].v].key());
}

std::optional<std::size_t> CoCitationNetwork::node_index(const ProvisionId& p) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i] == p) return i;
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> CoCitationNetwork::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(nodes_.size());
  for (const CoCitationEdge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& neighbors : adj) std::sort(neighbors.begin(), neighbors.end());
  return adj;
}

CoCitationNetwork project(const AffiliationMatrix& matrix) {
  const std::size_t rows = matrix.provision_count();
  const std::size_t cols = matrix.judgment_count();

  // Count co-occurrences column by column; the merged counts are independent
  // of column order.
  std::map<std::pair<std::size_t, std::size_t>, long long> counts;
  std::vector<std::size_t> cited;
  for (std::size_t j = 0; j < cols; ++j) {
    cited.clear();
    for (std::size_t i = 0; i < rows; ++i)
      if (matrix.cites(i, j)) cited.push_back(i);
    for (std::size_t a = 0; a < cited.size(); ++a)
      for (std::size_t b = a + 1; b < cited.size(); ++b)
        ++counts[{cited[a], cited[b]}];
  }

  std::vector<CoCitationEdge> edges;
  edges.reserve(counts.size());
  for (const auto& [pair, weight] : counts)
    edges.push_back({pair.first, pair.second, weight});
  return CoCitationNetwork(matrix.provisions(), std::move(edges));
}

CoCitationNetwork dichotomize(const CoCitationNetwork& net, long long min_weight) {
  if (min_weight < 1) throw Error("dichotomize: min_weight must be >= 1");
  std::vector<CoCitationEdge> kept;
  for (const CoCitationEdge& e : net.edges())
    if (e.weight >= min_weight) kept.push_back({e.u, e.v, 1});
  return CoCitationNetwork(net.nodes(), std::move(kept));
}

CoCitationNetwork with_alphabetic_labels(const CoCitationNetwork& net) {
  std::vector<ProvisionId> nodes = net.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    nodes[i].label = i < 26 ? std::string(1, static_cast<char>('A' + i)) : std::string{};
  return CoCitationNetwork(std::move(nodes), net.edges());
}

}  // namespace lexnet
