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

#include <iosfwd>
#include <string>
#include <string_view>

#include "lexnet/cocitation.hpp"

namespace lexnet {

/// edge_csv is the canonical interchange format and the only one that can be
/// read back; graphml and dot are write-only renderings.
enum class GraphFormat { edge_csv, graphml, dot };

GraphFormat graph_format_from_string(std::string_view text);  // throws Error
std::string_view to_string(GraphFormat format);

/// Serializes the network. edge_csv: header `source,target,weight`, one row
/// per edge in canonical order, nodes rendered with ProvisionId::key().
/// graphml: nodes carry statute/article/label attributes, edges carry
/// weight. dot: undirected graph with the weight as edge label. All three
/// are byte-deterministic.
std::string export_graph(const CoCitationNetwork& net, GraphFormat format);

/// Reads an edge_csv stream back into a network. Node identity is recovered
/// from the key ("statute::article"); node order is first appearance.
/// Malformed rows, non-positive weights, self-loops, and duplicate unordered
/// pairs are errors naming the line.
CoCitationNetwork import_graph(std::istream& in, GraphFormat format);

/// Inverse of ProvisionId::key().
ProvisionId provision_from_key(std::string_view key);

}  // namespace lexnet
