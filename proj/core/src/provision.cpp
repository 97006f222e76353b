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

#include "lexnet/provision.hpp"

#include "lexnet/error.hpp"

namespace lexnet {

std::string_view to_string(ProvisionStatus status) {
  switch (status) {
    case ProvisionStatus::in_force: return "in_force";
    case ProvisionStatus::invalidated: return "invalidated";
    case ProvisionStatus::unknown: return "unknown";
  }
  return "unknown";
}

ProvisionStatus provision_status_from_string(std::string_view text) {
  if (text == "in_force") return ProvisionStatus::in_force;
  if (text == "invalidated") return ProvisionStatus::invalidated;
  if (text == "unknown") return ProvisionStatus::unknown;
  throw Error("unknown provision status \"" + std::string(text) + "\"");
}

std::string ProvisionId::key() const {
  if (article.empty()) return statute;
  return statute + "::" + article;
}

}  // namespace lexnet
