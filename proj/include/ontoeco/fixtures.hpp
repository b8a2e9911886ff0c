// Copyright 2026 The ontoeco Authors.
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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontoeco/model.hpp"

namespace ontoeco {

// Built-in corpora: "crm-core", "sdhss", "sdh-so", "pcp", "legacy-crm".
std::span<const std::string_view> fixture_names();

// The single namespace a fixture defines. Throws kUnknownFixture.
Namespace builtin_namespace(std::string_view name);

// The fixture plus its dependency closure, ready to resolve. "all" yields
// crm-core, sdhss and sdh-so. Throws kUnknownFixture.
std::vector<Namespace> load_builtin(std::string_view name);

enum class Provenance { kStated, kDesignDecision };

// Where a fixture superclass edge (declared or alignment) comes from.
struct EdgeNote {
  ClassRef sub;
  ClassRef super;
  Provenance provenance;
  std::string note;
};

// Notes for every superclass edge of the named fixture.
std::vector<EdgeNote> fixture_edge_notes(std::string_view name);

}  // namespace ontoeco
