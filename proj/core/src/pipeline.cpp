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

#include "lexnet/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lexnet/affiliation.hpp"
#include "lexnet/citation_rules.hpp"
#include "lexnet/cocitation.hpp"
#include "lexnet/metrics.hpp"
#include "text_util.hpp"

namespace lexnet {

namespace {

using json = nlohmann::json;

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

std::string components_jsonl(const ComponentReport& report, const CoCitationNetwork& net) {
  std::ostringstream out;
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    json rec;
    rec["component"] = c;
    rec["size"] = report.components[c].size();
    json nodes = json::array();
    for (std::size_t idx : report.components[c]) nodes.push_back(net.nodes()[idx].key());
    rec["nodes"] = std::move(nodes);
    rec["outlier"] = std::find(report.outliers.begin(), report.outliers.end(), c) !=
                     report.outliers.end();
    auto it = report.contributing_judgments.find(c);
    rec["judgments"] = it == report.contributing_judgments.end()
                           ? json::array()
                           : json(it->second);
    out << rec.dump() << '\n';
  }
  return out.str();
}

std::string clusters_jsonl(std::span<const CaseCluster> clusters) {
  std::ostringstream out;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    json rec;
    rec["cluster"] = c;
    rec["kind"] = std::string(to_string(clusters[c].kind));
    rec["members"] = clusters[c].members;
    json rep = json::array();
    for (const ProvisionId& p : clusters[c].representative_citations) rep.push_back(p.key());
    rec["representative_citations"] = std::move(rep);
    out << rec.dump() << '\n';
  }
  return out.str();
}

std::string alerts_jsonl(std::span<const DeviationAlert> alerts) {
  std::ostringstream out;
  for (const DeviationAlert& alert : alerts) {
    json rec;
    rec["doc_id"] = alert.doc_id;
    json missing = json::array();
    for (const auto& [a, b] : alert.missing_core_pairs)
      missing.push_back({a.key(), b.key()});
    rec["missing_core_pairs"] = std::move(missing);
    rec["severity"] = alert.severity;
    out << rec.dump() << '\n';
  }
  return out.str();
}

std::string core_path_csv(const CorePath& core) {
  std::ostringstream out;
  out << "source,target,weight\n";
  for (const CorePathEdge& e : core.edges)
    out << detail::csv_quote(e.a.key()) << ',' << detail::csv_quote(e.b.key()) << ','
        << e.weight << '\n';
  return out.str();
}

std::string summary_text(const ScreeningReport& screening, const MetricsReport* metrics,
                         const ComponentReport* components, const CoCitationNetwork* net,
                         std::span<const CaseCluster> clusters,
                         std::span<const DeviationAlert> alerts, const CorePath* core) {
  std::ostringstream out;
  out << "== screening ==\n"
      << "initial " << screening.initial_count << ", duplicates removed "
      << screening.duplicates_removed << ", date filtered " << screening.date_filtered
      << ", keyword/jurisdiction filtered " << screening.keyword_filtered
      << ", manually excluded " << screening.manually_excluded << ", final "
      << screening.final_count << "\n";
  if (!metrics) {
    out << "\nno documents survived screening; nothing further to report\n";
    return out.str();
  }
  out << "\n== network ==\n"
      << "nodes " << metrics->network.size_g << ", distinct edges "
      << metrics->network.edges_l << ", edge endpoints " << metrics->network.edge_endpoints
      << ", density " << detail::format_fixed3(metrics->network.density) << " ("
      << metrics->classification << ")\n";

  out << "\n== components ==\n";
  for (std::size_t c = 0; c < components->components.size(); ++c) {
    out << "component " << c << " (" << components->components[c].size() << " nodes)";
    bool outlier = std::find(components->outliers.begin(), components->outliers.end(), c) !=
                   components->outliers.end();
    if (outlier) out << " [structural outlier]";
    out << ":";
    for (std::size_t idx : components->components[c]) {
      const ProvisionId& p = net->nodes()[idx];
      out << ' ' << (p.label.empty() ? p.key() : p.label);
    }
    out << '\n';
  }

  out << "\n== case clusters ==\n";
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    out << "cluster " << c << " [" << to_string(clusters[c].kind) << "] "
        << clusters[c].members.size() << " docs:";
    std::size_t shown = 0;
    for (const std::string& id : clusters[c].members) {
      if (shown == 6) {
        out << " ...";
        break;
      }
      out << ' ' << id;
      ++shown;
    }
    out << '\n';
  }

  out << "\n== core path (" << core->criterion.to_string() << ") ==\n"
      << core->edges.size() << " edges\n";

  out << "\n== deviation alerts ==\n";
  if (alerts.empty()) out << "none\n";
  for (const DeviationAlert& alert : alerts) {
    out << alert.doc_id << " severity " << detail::format_fixed3(alert.severity)
        << ", missing:";
    for (const auto& [a, b] : alert.missing_core_pairs)
      out << ' ' << a.key() << "--" << b.key();
    out << '\n';
  }
  return out.str();
}

}  // namespace

// Config problems throw plain Error (CLI exit 1), with the stage named in
// the message; failures while a stage runs throw StageError (exit 2).
void PipelineConfig::validate() const {
  namespace fs = std::filesystem;
  if (corpus_path.empty() || !fs::exists(corpus_path))
    throw Error("ingest: corpus path does not exist: " + corpus_path.string());
  if (rules_path && !fs::exists(*rules_path))
    throw Error("rules: ruleset path does not exist: " + rules_path->string());
  if (screening_path && !fs::exists(*screening_path))
    throw Error("screen: screening config path does not exist: " +
                screening_path->string());
  if (min_weight < 1) throw Error("project: min-weight must be >= 1");
  if (!(cluster_threshold > 0.0 && cluster_threshold <= 1.0))
    throw Error("cluster: threshold must lie in (0, 1]");
  if (batch_min < 2) throw Error("cluster: batch-min must be >= 2");
  if (core_criterion.value < 1)
    throw Error("core: core criterion value must be >= 1");
  if (out_dir.empty()) throw Error("export: output directory not set");
}

std::vector<std::filesystem::path> run_pipeline(const PipelineConfig& config) {
  namespace fs = std::filesystem;
  config.validate();

  CitationRuleSet rules;
  if (config.rules_path)
    rules = stage("rules", [&] { return CitationRuleSet::load(*config.rules_path); });

  ScreeningConfig screening_config;
  if (config.screening_path)
    screening_config =
        stage("screen", [&] { return ScreeningConfig::load(*config.screening_path); });

  std::vector<JudgmentDoc> docs = stage(
      "ingest", [&] { return parse_corpus_file(config.corpus_path, config.corpus_format); });

  if (config.rules_path) {
    docs = stage("extract", [&] {
      std::vector<JudgmentDoc> out;
      out.reserve(docs.size());
      for (const JudgmentDoc& doc : docs) {
        // Pre-extracted citations are kept; extraction fills the rest.
        if (doc.citations.empty() && doc.raw_text)
          out.push_back(extract_citations(doc, rules));
        else
          out.push_back(doc);
      }
      return out;
    });
  }

  ScreeningResult screened = stage(
      "screen", [&] { return screen_corpus(std::move(docs), screening_config); });

  // Staged in memory; nothing touches the filesystem until every stage is done.
  std::map<std::string, std::string> artifacts;
  artifacts["screening_report.json"] = screened.report.to_json() + "\n";
  {
    std::ostringstream out;
    write_corpus(out, screened.docs);
    artifacts["screened_corpus.jsonl"] = out.str();
  }

  if (screened.docs.empty()) {
    artifacts["summary.txt"] =
        summary_text(screened.report, nullptr, nullptr, nullptr, {}, {}, nullptr);
  } else {
    AffiliationMatrix matrix =
        stage("build", [&] { return build_affiliation(screened.docs); });
    CoCitationNetwork weighted = stage("project", [&] {
      return with_alphabetic_labels(project(matrix));
    });
    CoCitationNetwork analysis = stage("project", [&] {
      return config.min_weight > 1 ? dichotomize(weighted, config.min_weight) : weighted;
    });

    MetricsReport metrics = stage("metrics", [&] { return summarize(analysis); });
    ComponentReport components = stage(
        "components", [&] { return connected_components(analysis, screened.docs); });
    std::vector<CaseCluster> clusters = stage("cluster", [&] {
      return cluster_cases(screened.docs, config.cluster_threshold, config.batch_min);
    });
    CorePath core =
        stage("core", [&] { return core_path(weighted, config.core_criterion); });
    std::vector<DeviationAlert> alerts = stage("alerts", [&] {
      return core.edges.empty() ? std::vector<DeviationAlert>{}
                                : deviation_alerts(screened.docs, clusters, core);
    });

    artifacts["affiliation_matrix.csv"] = matrix.to_csv();
    for (GraphFormat format : config.graph_formats) {
      std::string content =
          stage("export", [&] { return export_graph(weighted, format); });
      switch (format) {
        case GraphFormat::edge_csv: artifacts["network_edges.csv"] = std::move(content); break;
        case GraphFormat::graphml: artifacts["network.graphml"] = std::move(content); break;
        case GraphFormat::dot: artifacts["network.dot"] = std::move(content); break;
      }
    }
    artifacts["node_metrics.csv"] = node_metrics_csv(metrics, config.precise);
    artifacts["network_metrics.csv"] = network_metrics_csv(metrics, config.precise);
    artifacts["components.jsonl"] = components_jsonl(components, analysis);
    artifacts["clusters.jsonl"] = clusters_jsonl(clusters);
    artifacts["alerts.jsonl"] = alerts_jsonl(alerts);
    artifacts["core_path.csv"] = core_path_csv(core);
    artifacts["summary.txt"] = summary_text(screened.report, &metrics, &components,
                                            &analysis, clusters, alerts, &core);
  }

  std::vector<fs::path> written;
  try {
    fs::create_directories(config.out_dir);
    for (const auto& [name, content] : artifacts) {
      fs::path path = config.out_dir / name;
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) throw StageError("export", "cannot write " + path.string());
      out << content;
      if (!out) throw StageError("export", "write failed for " + path.string());
      written.push_back(path);
    }
  } catch (...) {
    // Leave no partial output tree behind.
    for (const fs::path& path : written) {
      std::error_code ec;
      fs::remove(path, ec);
    }
    throw;
  }
  return written;
}

}  // namespace lexnet
