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
#include <optional>
#include <vector>

#include "lexnet/affiliation.hpp"
#include "lexnet/provision.hpp"

namespace lexnet {

/// One undirected tie. Endpoints are node indices with u < v; weight is the
/// co-occurrence count (always >= 1).
struct CoCitationEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  long long weight = 0;

  friend bool operator==(const CoCitationEdge&, const CoCitationEdge&) = default;
};

/// Weighted undirected 1-mode graph over provisions. Edges are stored once
/// per unordered pair, sorted by (u, v); self-loops are rejected; isolated
/// nodes are permitted. Immutable after construction.
class CoCitationNetwork {
 public:
  CoCitationNetwork() = default;

  /// Throws Error when an edge violates an invariant (self-loop, duplicate
  /// pair, weight < 1, endpoint out of range). Edges may arrive in any order
  /// and with either endpoint orientation; storage is canonicalized.
  CoCitationNetwork(std::vector<ProvisionId> nodes, std::vector<CoCitationEdge> edges);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<ProvisionId>& nodes() const { return nodes_; }
  const std::vector<CoCitationEdge>& edges() const { return edges_; }

  std::optional<std::size_t> node_index(const ProvisionId& p) const;

  /// Neighbor lists by node index, each sorted ascending.
  std::vector<std::vector<std::size_t>> adjacency() const;

 private:
  std::vector<ProvisionId> nodes_;
  std::vector<CoCitationEdge> edges_;
};

/// One-mode projection: weight(u, v) = number of judgments citing both u and
/// v (the off-diagonal of X * X^T). Pairs never co-cited produce no edge.
CoCitationNetwork project(const AffiliationMatrix& matrix);

/// Keeps edges with weight >= min_weight and resets kept weights to 1. The
/// node set is unchanged, so thresholding can create isolates.
CoCitationNetwork dichotomize(const CoCitationNetwork& net, long long min_weight);

/// Returns a copy with display labels A, B, C, ... assigned in node order
/// (nodes beyond the 26th stay unlabeled).
CoCitationNetwork with_alphabetic_labels(const CoCitationNetwork& net);

}  // namespace lexnet
