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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lexnet/corpus.hpp"
#include "lexnet/error.hpp"
#include "lexnet/graph_io.hpp"
#include "lexnet/typology.hpp"

namespace lexnet {

/// Failure inside one pipeline stage; `stage` names it for the CLI message.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& message)
      : Error("stage " + stage + ": " + message), stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct PipelineConfig {
  std::filesystem::path corpus_path;
  std::optional<std::filesystem::path> rules_path;
  std::optional<std::filesystem::path> screening_path;
  CorpusFormat corpus_format = CorpusFormat::records;

  long long min_weight = 1;         // dichotomization threshold for metrics
  double cluster_threshold = 0.5;   // Jaccard threshold for case clusters
  int batch_min = 3;                // smallest batch-cluster size
  CorePathCriterion core_criterion{CorePathCriterion::Kind::min_weight, 2};

  std::filesystem::path out_dir;
  std::vector<GraphFormat> graph_formats{GraphFormat::edge_csv};
  bool precise = false;             // full-precision reals in reports

  /// Throws StageError when a referenced path is missing or a numeric
  /// parameter is out of range.
  void validate() const;
};

/// Runs ingest -> extract -> screen -> build -> project -> metrics ->
/// components -> clusters -> core path -> alerts and writes every artifact
/// into out_dir. All outputs are staged in memory and flushed only on
/// success, so a failing stage leaves no partial files. Identical inputs
/// produce byte-identical artifacts. Returns the written paths.
std::vector<std::filesystem::path> run_pipeline(const PipelineConfig& config);

}  // namespace lexnet
