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

#include <optional>
#include <set>
#include <string>

#include "lexnet/date.hpp"
#include "lexnet/provision.hpp"

namespace lexnet {

/// One judicial decision. doc_id is unique within a corpus; citations is a
/// set, so within-document citation multiplicity is deliberately dropped.
struct JudgmentDoc {
  std::string doc_id;
  std::string court;
  Date decision_date;
  std::string cause_of_action;
  ProvisionSet citations;
  std::optional<std::string> raw_text;
  std::set<std::string> tags;  // free metadata, e.g. relationship roles
};

}  // namespace lexnet
