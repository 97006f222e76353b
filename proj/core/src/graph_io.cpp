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

#include "lexnet/graph_io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <sstream>

#include "lexnet/error.hpp"
#include "text_util.hpp"

namespace lexnet {

namespace {

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string export_edge_csv(const CoCitationNetwork& net) {
  std::ostringstream out;
  out << "source,target,weight\n";
  for (const CoCitationEdge& e : net.edges())
    out << detail::csv_quote(net.nodes()[e.u].key()) << ','
        << detail::csv_quote(net.nodes()[e.v].key()) << ',' << e.weight << '\n';
  return out.str();
}

std::string export_graphml(const CoCitationNetwork& net) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"d0\" for=\"node\" attr.name=\"statute\" attr.type=\"string\"/>\n"
      << "  <key id=\"d1\" for=\"node\" attr.name=\"article\" attr.type=\"string\"/>\n"
      << "  <key id=\"d2\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"d3\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
      << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    const ProvisionId& p = net.nodes()[i];
    out << "    <node id=\"n" << i << "\">\n"
        << "      <data key=\"d0\">" << xml_escape(p.statute) << "</data>\n"
        << "      <data key=\"d1\">" << xml_escape(p.article) << "</data>\n"
        << "      <data key=\"d2\">" << xml_escape(p.label) << "</data>\n"
        << "    </node>\n";
  }
  for (std::size_t k = 0; k < net.edge_count(); ++k) {
    const CoCitationEdge& e = net.edges()[k];
    out << "    <edge id=\"e" << k << "\" source=\"n" << e.u << "\" target=\"n" << e.v
        << "\">\n"
        << "      <data key=\"d3\">" << e.weight << "</data>\n"
        << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string export_dot(const CoCitationNetwork& net) {
  std::ostringstream out;
  out << "graph cocitation {\n";
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    const ProvisionId& p = net.nodes()[i];
    out << "  n" << i << " [label=" << dot_quote(p.label.empty() ? p.key() : p.label)
        << "];\n";
  }
  for (const CoCitationEdge& e : net.edges())
    out << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.weight << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace

GraphFormat graph_format_from_string(std::string_view text) {
  if (text == "edge_csv") return GraphFormat::edge_csv;
  if (text == "graphml") return GraphFormat::graphml;
  if (text == "dot") return GraphFormat::dot;
  throw Error("unknown graph format \"" + std::string(text) +
              "\": expected edge_csv, graphml, or dot");
}

std::string_view to_string(GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_csv: return "edge_csv";
    case GraphFormat::graphml: return "graphml";
    case GraphFormat::dot: return "dot";
  }
  return "edge_csv";
}

std::string export_graph(const CoCitationNetwork& net, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_csv: return export_edge_csv(net);
    case GraphFormat::graphml: return export_graphml(net);
    case GraphFormat::dot: return export_dot(net);
  }
  throw Error("unknown graph format");
}

ProvisionId provision_from_key(std::string_view key) {
  ProvisionId p;
  auto sep = key.rfind("::");
  if (sep == std::string_view::npos) {
    p.statute = std::string(key);
  } else {
    p.statute = std::string(key.substr(0, sep));
    p.article = std::string(key.substr(sep + 2));
  }
  return p;
}

CoCitationNetwork import_graph(std::istream& in, GraphFormat format) {
  if (format != GraphFormat::edge_csv)
    throw Error("import_graph: only edge_csv can be re-imported");

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || line != "source,target,weight")
    throw Error("edge_csv line 1: expected header \"source,target,weight\"");
  ++line_no;

  std::vector<ProvisionId> nodes;
  std::map<std::string, std::size_t> index_of;
  auto intern = [&](const std::string& key) {
    auto [it, inserted] = index_of.emplace(key, nodes.size());
    if (inserted) nodes.push_back(provision_from_key(key));
    return it->second;
  };

  std::vector<CoCitationEdge> edges;
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fail = [line_no](const std::string& what) -> Error {
      return Error("edge_csv line " + std::to_string(line_no) + ": " + what);
    };

    std::vector<std::string> fields;
    try {
      fields = detail::csv_split(line);
    } catch (const Error& e) {
      throw fail(e.what());
    }
    if (fields.size() != 3) throw fail("expected 3 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty() || fields[1].empty()) throw fail("empty node identifier");

    long long weight = 0;
    const std::string& w = fields[2];
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
    if (ec != std::errc{} || ptr != w.data() + w.size())
      throw fail("weight \"" + w + "\" is not an integer");
    if (weight < 1) throw fail("weight must be >= 1");

    std::size_t u = intern(fields[0]);
    std::size_t v = intern(fields[1]);
    if (u == v) throw fail("self-loop at \"" + fields[0] + "\"");
    auto pair = std::minmax(u, v);
    if (!seen.emplace(std::pair(pair.first, pair.second), true).second)
      throw fail("duplicate undirected pair \"" + fields[0] + "\" -- \"" + fields[1] + "\"");
    edges.push_back({u, v, weight});
  }
  return CoCitationNetwork(std::move(nodes), std::move(edges));
}

}  // namespace lexnet
