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
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexnet/affiliation.hpp"
#include "lexnet/cocitation.hpp"
#include "lexnet/judgment.hpp"

namespace lexnet {

/// Connected components of the co-citation graph. Components are sorted by
/// size descending (ties: smallest node index first); every component other
/// than the first is flagged as a structural outlier.
struct ComponentReport {
  std::vector<std::vector<std::size_t>> components;  // sorted node indices
  std::vector<std::size_t> outliers;                 // component indices
  // component index -> judgments whose (nonempty) citations lie entirely
  // inside that component; filled only when a corpus is supplied.
  std::map<std::size_t, std::set<std::string>> contributing_judgments;
};

ComponentReport connected_components(const CoCitationNetwork& net);
ComponentReport connected_components(const CoCitationNetwork& net,
                                     std::span<const JudgmentDoc> docs);

/// Removes an outlier component from the incidence matrix: drops every
/// judgment column whose (nonempty) citations fall entirely inside
/// `component`, then drops rows left with no 1s. Rows of the component that
/// are still cited by surviving judgments are kept.
/// Throws Error when component is empty or names an unknown provision.
AffiliationMatrix exclude_component(const AffiliationMatrix& matrix,
                                    const std::set<ProvisionId>& component);

/// Jaccard index of the two citation sets; 1.0 when both are empty, 0.0 when
/// exactly one is.
double case_similarity(const JudgmentDoc& a, const JudgmentDoc& b);

struct CaseCluster {
  enum class Kind { batch, complex_case };

  std::set<std::string> members;          // doc ids
  ProvisionSet representative_citations;  // cited by >= threshold of members
  Kind kind = Kind::complex_case;
};

std::string_view to_string(CaseCluster::Kind kind);

/// Clusters docs via the thresholded similarity graph: edges where Jaccard
/// similarity >= threshold, clusters = connected components. Clusters of
/// size >= batch_min are batch cases, the rest complex. threshold must lie
/// in (0, 1]; batch_min must be >= 2 so singletons stay complex.
std::vector<CaseCluster> cluster_cases(std::span<const JudgmentDoc> docs,
                                       double threshold, int batch_min = 3);

/// Top-k most similar corpus docs, ties broken by ascending doc_id; the
/// query itself (by doc_id) is excluded. k must be >= 1 and the query must
/// cite something.
std::vector<std::pair<std::string, double>> retrieve_similar(
    const JudgmentDoc& query, std::span<const JudgmentDoc> corpus, std::size_t k);

/// Edge-selection criterion for the core path: either every edge with
/// weight >= value, or the value highest-weight edges (ties broken by
/// canonical node order).
struct CorePathCriterion {
  enum class Kind { min_weight, top_k };

  Kind kind = Kind::min_weight;
  long long value = 1;

  /// Parses "min-weight=N" or "top-k=K".
  static CorePathCriterion parse(std::string_view text);
  std::string to_string() const;
};

struct CorePathEdge {
  ProvisionId a;
  ProvisionId b;
  long long weight = 0;
};

/// The normative baseline of strongest co-citation linkages.
struct CorePath {
  std::vector<CorePathEdge> edges;  // canonical (node-order) order
  CorePathCriterion criterion;
};

CorePath core_path(const CoCitationNetwork& net, CorePathCriterion criterion);

struct DeviationAlert {
  std::string doc_id;
  std::vector<std::pair<ProvisionId, ProvisionId>> missing_core_pairs;
  double severity = 0;  // |missing| / |expected|
};

/// Flags batch-cluster docs that miss expected core linkages. Expected pairs
/// for a cluster are the core edges whose endpoints both appear in the
/// cluster's representative citations; a pair is missing when the doc cites
/// at most one endpoint. Complex-cluster docs are never alerted. Alerts are
/// returned sorted by doc_id.
std::vector<DeviationAlert> deviation_alerts(std::span<const JudgmentDoc> docs,
                                             std::span<const CaseCluster> clusters,
                                             const CorePath& core);

}  // namespace lexnet
