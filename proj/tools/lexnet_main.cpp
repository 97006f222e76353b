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

// lexnet command line: drives the citation-network pipeline stage by stage
// (ingest, screen, build, metrics, components, cluster, retrieve, alerts,
// export) or end-to-end (run). Exit codes: 0 success, 1 input/config error,
// 2 pipeline-stage failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexnet/affiliation.hpp"
#include "lexnet/citation_rules.hpp"
#include "lexnet/cocitation.hpp"
#include "lexnet/corpus.hpp"
#include "lexnet/error.hpp"
#include "lexnet/graph_io.hpp"
#include "lexnet/metrics.hpp"
#include "lexnet/pipeline.hpp"
#include "lexnet/typology.hpp"

namespace {

namespace fs = std::filesystem;
using namespace lexnet;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitStage = 2;

// Options shared by the corpus-consuming subcommands.
struct CorpusOptions {
  std::string corpus;
  std::string rules;
  std::string screen;
  std::string format = "records";
};

void add_corpus_options(CLI::App* cmd, CorpusOptions& opt, bool with_screen = true) {
  cmd->add_option("--corpus", opt.corpus, "corpus file (newline-delimited records)")
      ->required();
  cmd->add_option("--rules", opt.rules, "citation ruleset file");
  if (with_screen)
    cmd->add_option("--screen", opt.screen, "screening config file");
  cmd->add_option("--corpus-format", opt.format, "corpus format: records or raw_text")
      ->check(CLI::IsMember({"records", "raw_text"}));
}

CorpusFormat parse_format(const std::string& text) {
  return text == "raw_text" ? CorpusFormat::raw_text : CorpusFormat::records;
}

std::vector<JudgmentDoc> load_docs(const CorpusOptions& opt) {
  auto docs = parse_corpus_file(opt.corpus, parse_format(opt.format));
  if (!opt.rules.empty()) {
    CitationRuleSet rules = CitationRuleSet::load(opt.rules);
    for (JudgmentDoc& doc : docs)
      if (doc.citations.empty() && doc.raw_text) doc = extract_citations(doc, rules);
  }
  return docs;
}

// Parse + extract + (optionally) screen.
std::vector<JudgmentDoc> load_screened_docs(const CorpusOptions& opt) {
  auto docs = load_docs(opt);
  ScreeningConfig config;
  if (!opt.screen.empty()) config = ScreeningConfig::load(opt.screen);
  return screen_corpus(std::move(docs), config).docs;
}

CoCitationNetwork load_network(const std::string& graph_path, const CorpusOptions& opt) {
  if (!graph_path.empty()) {
    std::ifstream in(graph_path);
    if (!in) throw Error("cannot open graph file " + graph_path);
    return import_graph(in, GraphFormat::edge_csv);
  }
  return with_alphabetic_labels(project(build_affiliation(load_screened_docs(opt))));
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  fs::create_directories(dir);
  fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("write failed for " + path.string());
  std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexnet: legal citation network toolkit"};
  app.require_subcommand(1);

  // --- ingest ---------------------------------------------------------
  CorpusOptions ingest_opt;
  std::string ingest_out = ".";
  auto* ingest = app.add_subcommand("ingest", "parse a corpus and extract citations");
  add_corpus_options(ingest, ingest_opt, /*with_screen=*/false);
  ingest->add_option("--out", ingest_out, "output directory");

  // --- screen ---------------------------------------------------------
  CorpusOptions screen_opt;
  std::string screen_out = ".";
  auto* screen_cmd =
      app.add_subcommand("screen", "deduplicate and screen the sample");
  add_corpus_options(screen_cmd, screen_opt);
  screen_cmd->add_option("--out", screen_out, "output directory");

  // --- build ----------------------------------------------------------
  CorpusOptions build_opt;
  std::string build_out = ".";
  auto* build = app.add_subcommand(
      "build", "build the affiliation matrix and project the co-citation network");
  add_corpus_options(build, build_opt);
  build->add_option("--out", build_out, "output directory");

  // --- metrics --------------------------------------------------------
  CorpusOptions metrics_opt;
  std::string metrics_graph, metrics_out = ".";
  long long metrics_min_weight = 1;
  bool metrics_precise = false;
  auto* metrics_cmd =
      app.add_subcommand("metrics", "degree/betweenness and network-level metrics");
  metrics_cmd->add_option("--graph", metrics_graph, "edge_csv network file (skips corpus)");
  metrics_cmd->add_option("--corpus", metrics_opt.corpus, "corpus file");
  metrics_cmd->add_option("--rules", metrics_opt.rules, "citation ruleset file");
  metrics_cmd->add_option("--screen", metrics_opt.screen, "screening config file");
  metrics_cmd->add_option("--corpus-format", metrics_opt.format, "corpus format")
      ->check(CLI::IsMember({"records", "raw_text"}));
  metrics_cmd->add_option("--min-weight", metrics_min_weight,
                          "dichotomization threshold before metrics");
  metrics_cmd->add_flag("--precise", metrics_precise, "full-precision reals");
  metrics_cmd->add_option("--out", metrics_out, "output directory");

  // --- components -----------------------------------------------------
  CorpusOptions comp_opt;
  std::string comp_graph, comp_out = ".";
  long long comp_min_weight = 1;
  auto* components_cmd =
      app.add_subcommand("components", "connected components and structural outliers");
  components_cmd->add_option("--graph", comp_graph, "edge_csv network file (skips corpus)");
  components_cmd->add_option("--corpus", comp_opt.corpus, "corpus file");
  components_cmd->add_option("--rules", comp_opt.rules, "citation ruleset file");
  components_cmd->add_option("--screen", comp_opt.screen, "screening config file");
  components_cmd->add_option("--corpus-format", comp_opt.format, "corpus format")
      ->check(CLI::IsMember({"records", "raw_text"}));
  components_cmd->add_option("--min-weight", comp_min_weight, "dichotomization threshold");
  components_cmd->add_option("--out", comp_out, "output directory");

  // --- cluster --------------------------------------------------------
  CorpusOptions cluster_opt;
  std::string cluster_out = ".";
  double cluster_threshold = 0.5;
  int cluster_batch_min = 3;
  auto* cluster_cmd = app.add_subcommand("cluster", "batch/complex case clustering");
  add_corpus_options(cluster_cmd, cluster_opt);
  cluster_cmd->add_option("--threshold", cluster_threshold, "Jaccard threshold in (0,1]");
  cluster_cmd->add_option("--batch-min", cluster_batch_min, "smallest batch-cluster size");
  cluster_cmd->add_option("--out", cluster_out, "output directory");

  // --- retrieve -------------------------------------------------------
  CorpusOptions retrieve_opt;
  std::string retrieve_query;
  std::size_t retrieve_k = 5;
  bool retrieve_precise = false;
  auto* retrieve_cmd =
      app.add_subcommand("retrieve", "top-k similar cases for a query judgment");
  add_corpus_options(retrieve_cmd, retrieve_opt, /*with_screen=*/false);
  retrieve_cmd->add_option("--query-id", retrieve_query, "doc_id of the query judgment")
      ->required();
  retrieve_cmd->add_option("-k,--top", retrieve_k, "number of results");
  retrieve_cmd->add_flag("--precise", retrieve_precise, "full-precision scores");

  // --- alerts ---------------------------------------------------------
  CorpusOptions alerts_opt;
  std::string alerts_out = ".", alerts_core = "min-weight=2";
  double alerts_threshold = 0.5;
  int alerts_batch_min = 3;
  auto* alerts_cmd =
      app.add_subcommand("alerts", "core-path deviation alerts for batch cases");
  add_corpus_options(alerts_cmd, alerts_opt);
  alerts_cmd->add_option("--threshold", alerts_threshold, "Jaccard threshold in (0,1]");
  alerts_cmd->add_option("--batch-min", alerts_batch_min, "smallest batch-cluster size");
  alerts_cmd->add_option("--core", alerts_core, "core criterion: min-weight=N or top-k=K");
  alerts_cmd->add_option("--out", alerts_out, "output directory");

  // --- export ---------------------------------------------------------
  CorpusOptions export_opt;
  std::string export_graph_path, export_format = "edge_csv", export_out = ".";
  auto* export_cmd = app.add_subcommand("export", "write the network in a graph format");
  export_cmd->add_option("--graph", export_graph_path, "edge_csv network file (skips corpus)");
  export_cmd->add_option("--corpus", export_opt.corpus, "corpus file");
  export_cmd->add_option("--rules", export_opt.rules, "citation ruleset file");
  export_cmd->add_option("--screen", export_opt.screen, "screening config file");
  export_cmd->add_option("--format", export_format, "edge_csv, graphml, or dot")
      ->check(CLI::IsMember({"edge_csv", "graphml", "dot"}));
  export_cmd->add_option("--out", export_out, "output directory");

  // --- run ------------------------------------------------------------
  CorpusOptions run_opt;
  std::string run_out, run_core = "min-weight=2";
  std::vector<std::string> run_formats{"edge_csv"};
  long long run_min_weight = 1;
  double run_threshold = 0.5;
  int run_batch_min = 3;
  bool run_precise = false;
  auto* run_cmd = app.add_subcommand("run", "full pipeline, all artifacts");
  add_corpus_options(run_cmd, run_opt);
  run_cmd->add_option("--min-weight", run_min_weight, "dichotomization threshold for metrics");
  run_cmd->add_option("--threshold", run_threshold, "clustering threshold in (0,1]");
  run_cmd->add_option("--batch-min", run_batch_min, "smallest batch-cluster size");
  run_cmd->add_option("--core", run_core, "core criterion: min-weight=N or top-k=K");
  run_cmd->add_option("--out", run_out, "output directory")->required();
  run_cmd->add_option("--format", run_formats,
                      "graph export formats (repeatable): edge_csv, graphml, dot");
  run_cmd->add_flag("--precise", run_precise, "full-precision reals in reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*ingest) {
      auto docs = load_docs(ingest_opt);
      std::ostringstream out;
      write_corpus(out, docs);
      write_file(ingest_out, "corpus_normalized.jsonl", out.str());
    } else if (*screen_cmd) {
      auto docs = load_docs(screen_opt);
      ScreeningConfig config;
      if (!screen_opt.screen.empty()) config = ScreeningConfig::load(screen_opt.screen);
      ScreeningResult result = screen_corpus(std::move(docs), config);
      std::ostringstream out;
      write_corpus(out, result.docs);
      write_file(screen_out, "screened_corpus.jsonl", out.str());
      write_file(screen_out, "screening_report.json", result.report.to_json() + "\n");
    } else if (*build) {
      auto docs = load_screened_docs(build_opt);
      AffiliationMatrix matrix = build_affiliation(docs);
      CoCitationNetwork net = with_alphabetic_labels(project(matrix));
      write_file(build_out, "affiliation_matrix.csv", matrix.to_csv());
      write_file(build_out, "network_edges.csv", export_graph(net, GraphFormat::edge_csv));
    } else if (*metrics_cmd) {
      if (metrics_graph.empty() && metrics_opt.corpus.empty())
        throw Error("metrics: provide --graph or --corpus");
      CoCitationNetwork net = load_network(metrics_graph, metrics_opt);
      if (metrics_min_weight > 1) net = dichotomize(net, metrics_min_weight);
      MetricsReport report = summarize(net);
      write_file(metrics_out, "node_metrics.csv", node_metrics_csv(report, metrics_precise));
      write_file(metrics_out, "network_metrics.csv",
                 network_metrics_csv(report, metrics_precise));
    } else if (*components_cmd) {
      if (comp_graph.empty() && comp_opt.corpus.empty())
        throw Error("components: provide --graph or --corpus");
      std::vector<JudgmentDoc> docs;
      CoCitationNetwork net = [&] {
        if (!comp_graph.empty()) return load_network(comp_graph, comp_opt);
        docs = load_screened_docs(comp_opt);
        return with_alphabetic_labels(project(build_affiliation(docs)));
      }();
      if (comp_min_weight > 1) net = dichotomize(net, comp_min_weight);
      ComponentReport report = connected_components(net, docs);
      std::ostringstream out;
      for (std::size_t c = 0; c < report.components.size(); ++c) {
        out << "component " << c << (c > 0 ? " [outlier]" : "") << ':';
        for (std::size_t idx : report.components[c])
          out << ' ' << net.nodes()[idx].key();
        out << '\n';
      }
      write_file(comp_out, "components.txt", out.str());
    } else if (*cluster_cmd) {
      auto docs = load_screened_docs(cluster_opt);
      auto clusters = cluster_cases(docs, cluster_threshold, cluster_batch_min);
      std::ostringstream out;
      for (std::size_t c = 0; c < clusters.size(); ++c) {
        out << "cluster " << c << " [" << to_string(clusters[c].kind) << "]:";
        for (const std::string& id : clusters[c].members) out << ' ' << id;
        out << '\n';
      }
      write_file(cluster_out, "clusters.txt", out.str());
    } else if (*retrieve_cmd) {
      auto docs = load_docs(retrieve_opt);
      const JudgmentDoc* query = nullptr;
      for (const JudgmentDoc& doc : docs)
        if (doc.doc_id == retrieve_query) query = &doc;
      if (!query) throw Error("retrieve: query doc_id \"" + retrieve_query +
                              "\" not found in corpus");
      auto ranked = retrieve_similar(*query, docs, retrieve_k);
      std::cout << "doc_id,score\n";
      for (const auto& [id, score] : ranked) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), retrieve_precise ? "%.17g" : "%.3f", score);
        std::cout << id << ',' << buf << '\n';
      }
    } else if (*alerts_cmd) {
      auto docs = load_screened_docs(alerts_opt);
      CoCitationNetwork net = with_alphabetic_labels(project(build_affiliation(docs)));
      CorePath core = core_path(net, CorePathCriterion::parse(alerts_core));
      auto clusters = cluster_cases(docs, alerts_threshold, alerts_batch_min);
      auto alerts = core.edges.empty() ? std::vector<DeviationAlert>{}
                                       : deviation_alerts(docs, clusters, core);
      std::ostringstream out;
      if (alerts.empty()) out << "no deviation alerts\n";
      for (const DeviationAlert& alert : alerts) {
        out << alert.doc_id << " severity ";
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3f", alert.severity);
        out << buf << ", missing:";
        for (const auto& [a, b] : alert.missing_core_pairs)
          out << ' ' << a.key() << "--" << b.key();
        out << '\n';
      }
      write_file(alerts_out, "alerts.txt", out.str());
    } else if (*export_cmd) {
      if (export_graph_path.empty() && export_opt.corpus.empty())
        throw Error("export: provide --graph or --corpus");
      CoCitationNetwork net = load_network(export_graph_path, export_opt);
      GraphFormat format = graph_format_from_string(export_format);
      const char* name = format == GraphFormat::edge_csv  ? "network_edges.csv"
                         : format == GraphFormat::graphml ? "network.graphml"
                                                          : "network.dot";
      write_file(export_out, name, export_graph(net, format));
    } else if (*run_cmd) {
      PipelineConfig config;
      config.corpus_path = run_opt.corpus;
      if (!run_opt.rules.empty()) config.rules_path = run_opt.rules;
      if (!run_opt.screen.empty()) config.screening_path = run_opt.screen;
      config.corpus_format = parse_format(run_opt.format);
      config.min_weight = run_min_weight;
      config.cluster_threshold = run_threshold;
      config.batch_min = run_batch_min;
      config.core_criterion = CorePathCriterion::parse(run_core);
      config.out_dir = run_out;
      config.precise = run_precise;
      config.graph_formats.clear();
      for (const std::string& f : run_formats)
        config.graph_formats.push_back(graph_format_from_string(f));
      auto written = run_pipeline(config);
      for (const fs::path& path : written) std::cout << "wrote " << path.string() << '\n';
    }
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitStage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitStage;
  }
  return kExitOk;
}
