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

#include "lexnet/typology.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>

#include "lexnet/error.hpp"

namespace lexnet {

namespace {

// Union of per-node BFS trees, emitted with deterministic ordering.
std::vector<std::vector<std::size_t>> components_of(const CoCitationNetwork& net) {
  const std::size_t n = net.node_count();
  const auto adj = net.adjacency();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<std::size_t>> components;

  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> members;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    visited[start] = true;
    while (!frontier.empty()) {
      std::size_t v = frontier.front();
      frontier.pop();
      members.push_back(v);
      for (std::size_t w : adj[v]) {
        if (!visited[w]) {
          visited[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }

  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return components;
}

}  // namespace

ComponentReport connected_components(const CoCitationNetwork& net) {
  ComponentReport report;
  report.components = components_of(net);
  if (report.components.size() > 1)
    for (std::size_t i = 1; i < report.components.size(); ++i)
      report.outliers.push_back(i);
  return report;
}

ComponentReport connected_components(const CoCitationNetwork& net,
                                     std::span<const JudgmentDoc> docs) {
  ComponentReport report = connected_components(net);

  std::vector<std::set<ProvisionId>> member_sets;
  member_sets.reserve(report.components.size());
  for (const auto& comp : report.components) {
    std::set<ProvisionId> s;
    for (std::size_t idx : comp) s.insert(net.nodes()[idx]);
    member_sets.push_back(std::move(s));
  }

  for (const JudgmentDoc& doc : docs) {
    if (doc.citations.empty()) continue;
    for (std::size_t c = 0; c < member_sets.size(); ++c) {
      if (std::includes(member_sets[c].begin(), member_sets[c].end(),
                        doc.citations.begin(), doc.citations.end())) {
        report.contributing_judgments[c].insert(doc.doc_id);
        break;
      }
    }
  }
  return report;
}

AffiliationMatrix exclude_component(const AffiliationMatrix& matrix,
                                    const std::set<ProvisionId>& component) {
  if (component.empty()) throw Error("exclude_component: component set is empty");
  for (const ProvisionId& p : component)
    if (!matrix.provision_index(p))
      throw Error("exclude_component: unknown provision " + p.key());

  const std::size_t rows = matrix.provision_count();
  const std::size_t cols = matrix.judgment_count();
  std::vector<bool> in_component(rows, false);
  for (const ProvisionId& p : component) in_component[*matrix.provision_index(p)] = true;

  // Drop judgments whose (nonempty) citations lie entirely in the component.
  std::vector<std::size_t> kept_cols;
  for (std::size_t j = 0; j < cols; ++j) {
    bool cites_any = false, cites_outside = false;
    for (std::size_t i = 0; i < rows; ++i) {
      if (!matrix.cites(i, j)) continue;
      cites_any = true;
      if (!in_component[i]) cites_outside = true;
    }
    if (!cites_any || cites_outside) kept_cols.push_back(j);
  }

  // Drop rows left without a single citation (only component rows can be).
  std::vector<std::size_t> kept_rows;
  for (std::size_t i = 0; i < rows; ++i) {
    bool any = false;
    for (std::size_t j : kept_cols) any = any || matrix.cites(i, j);
    if (any) kept_rows.push_back(i);
  }

  std::vector<ProvisionId> provisions;
  provisions.reserve(kept_rows.size());
  for (std::size_t i : kept_rows) provisions.push_back(matrix.provisions()[i]);
  std::vector<std::string> judgments;
  judgments.reserve(kept_cols.size());
  for (std::size_t j : kept_cols) judgments.push_back(matrix.judgments()[j]);

  std::vector<std::uint8_t> cells(kept_rows.size() * kept_cols.size(), 0);
  for (std::size_t a = 0; a < kept_rows.size(); ++a)
    for (std::size_t b = 0; b < kept_cols.size(); ++b)
      cells[a * kept_cols.size() + b] = matrix.cites(kept_rows[a], kept_cols[b]) ? 1 : 0;

  return AffiliationMatrix(std::move(provisions), std::move(judgments), std::move(cells));
}

double case_similarity(const JudgmentDoc& a, const JudgmentDoc& b) {
  if (a.citations.empty() && b.citations.empty()) return 1.0;
  if (a.citations.empty() || b.citations.empty()) return 0.0;
  std::size_t intersection = 0;
  for (const ProvisionId& p : a.citations) intersection += b.citations.contains(p);
  std::size_t unions = a.citations.size() + b.citations.size() - intersection;
  return static_cast<double>(intersection) / static_cast<double>(unions);
}

std::string_view to_string(CaseCluster::Kind kind) {
  return kind == CaseCluster::Kind::batch ? "batch" : "complex";
}

std::vector<CaseCluster> cluster_cases(std::span<const JudgmentDoc> docs,
                                       double threshold, int batch_min) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw Error("cluster_cases: threshold must lie in (0, 1]");
  if (batch_min < 2)
    throw Error("cluster_cases: batch_min must be >= 2");

  const std::size_t n = docs.size();
  // Components of the thresholded similarity graph via union-find.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (case_similarity(docs[i], docs[j]) >= threshold) parent[find(i)] = find(j);

  std::vector<std::vector<std::size_t>> groups;
  std::vector<long long> group_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<long long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of[root])].push_back(i);
  }

  std::vector<CaseCluster> clusters;
  clusters.reserve(groups.size());
  for (const auto& group : groups) {
    CaseCluster cluster;
    std::map<ProvisionId, std::size_t> counts;
    for (std::size_t idx : group) {
      cluster.members.insert(docs[idx].doc_id);
      for (const ProvisionId& p : docs[idx].citations) ++counts[p];
    }
    // Representative profile: provisions cited by at least `threshold` of
    // the members.
    for (const auto& [p, count] : counts)
      if (static_cast<double>(count) >=
          threshold * static_cast<double>(group.size()))
        cluster.representative_citations.insert(p);
    cluster.kind = group.size() >= static_cast<std::size_t>(batch_min)
                       ? CaseCluster::Kind::batch
                       : CaseCluster::Kind::complex_case;
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

std::vector<std::pair<std::string, double>> retrieve_similar(
    const JudgmentDoc& query, std::span<const JudgmentDoc> corpus, std::size_t k) {
  if (k == 0) throw Error("retrieve_similar: k must be >= 1");
  if (query.citations.empty())
    throw Error("retrieve_similar: query has no citations");

  std::vector<std::pair<std::string, double>> scored;
  scored.reserve(corpus.size());
  for (const JudgmentDoc& doc : corpus) {
    if (doc.doc_id == query.doc_id) continue;
    scored.emplace_back(doc.doc_id, case_similarity(query, doc));
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (scored.size() > k) scored.resize(k);
  return scored;
}

CorePathCriterion CorePathCriterion::parse(std::string_view text) {
  auto eq = text.find('=');
  if (eq != std::string_view::npos) {
    std::string_view name = text.substr(0, eq);
    std::string_view value = text.substr(eq + 1);
    long long parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec == std::errc{} && ptr == value.data() + value.size() && parsed >= 1) {
      if (name == "min-weight") return {Kind::min_weight, parsed};
      if (name == "top-k") return {Kind::top_k, parsed};
    }
  }
  throw Error("invalid core-path criterion \"" + std::string(text) +
              "\": expected min-weight=N or top-k=K");
}

std::string CorePathCriterion::to_string() const {
  return (kind == Kind::min_weight ? "min-weight=" : "top-k=") + std::to_string(value);
}

CorePath core_path(const CoCitationNetwork& net, CorePathCriterion criterion) {
  if (criterion.value < 1)
    throw Error("core_path: criterion value must be >= 1");

  std::vector<CoCitationEdge> selected;
  if (criterion.kind == CorePathCriterion::Kind::min_weight) {
    for (const CoCitationEdge& e : net.edges())
      if (e.weight >= criterion.value) selected.push_back(e);
  } else {
    selected.assign(net.edges().begin(), net.edges().end());
    std::sort(selected.begin(), selected.end(), [](const auto& a, const auto& b) {
      if (a.weight != b.weight) return a.weight > b.weight;
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    if (selected.size() > static_cast<std::size_t>(criterion.value))
      selected.resize(static_cast<std::size_t>(criterion.value));
    std::sort(selected.begin(), selected.end(), [](const auto& a, const auto& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
  }

  CorePath path;
  path.criterion = criterion;
  path.edges.reserve(selected.size());
  for (const CoCitationEdge& e : selected)
    path.edges.push_back({net.nodes()[e.u], net.nodes()[e.v], e.weight});
  return path;
}

std::vector<DeviationAlert> deviation_alerts(std::span<const JudgmentDoc> docs,
                                             std::span<const CaseCluster> clusters,
                                             const CorePath& core) {
  if (core.edges.empty())
    throw Error("deviation_alerts: core path is empty");

  std::map<std::string, const JudgmentDoc*> by_id;
  for (const JudgmentDoc& doc : docs) by_id[doc.doc_id] = &doc;

  std::vector<DeviationAlert> alerts;
  for (const CaseCluster& cluster : clusters) {
    if (cluster.kind != CaseCluster::Kind::batch) continue;

    std::vector<std::pair<ProvisionId, ProvisionId>> expected;
    for (const CorePathEdge& e : core.edges)
      if (cluster.representative_citations.contains(e.a) &&
          cluster.representative_citations.contains(e.b))
        expected.emplace_back(e.a, e.b);
    if (expected.empty()) continue;

    for (const std::string& doc_id : cluster.members) {
      auto it = by_id.find(doc_id);
      if (it == by_id.end()) continue;
      const JudgmentDoc& doc = *it->second;

      DeviationAlert alert;
      alert.doc_id = doc_id;
      for (const auto& [a, b] : expected)
        if (!doc.citations.contains(a) || !doc.citations.contains(b))
          alert.missing_core_pairs.emplace_back(a, b);
      if (alert.missing_core_pairs.empty()) continue;
      alert.severity = static_cast<double>(alert.missing_core_pairs.size()) /
                       static_cast<double>(expected.size());
      alerts.push_back(std::move(alert));
    }
  }
  std::sort(alerts.begin(), alerts.end(),
            [](const auto& a, const auto& b) { return a.doc_id < b.doc_id; });
  return alerts;
}

}  // namespace lexnet
