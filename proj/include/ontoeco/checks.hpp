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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoeco/diagnostic.hpp"
#include "ontoeco/hierarchy.hpp"
#include "ontoeco/index.hpp"

namespace ontoeco {

inline constexpr std::string_view kCheckOntoClean = "ontoclean";
inline constexpr std::string_view kCheckTopCategory = "top-category";
inline constexpr std::string_view kCheckLayerDiscipline = "layer-discipline";
inline constexpr std::string_view kCheckPropertyRefinement = "property-refinement";
inline constexpr std::string_view kCheckParticipation = "participation-anchor";

std::span<const std::string_view> lint_check_ids();

struct CheckConfig {
  std::set<std::string> enabled;  // ids from lint_check_ids()
  std::map<std::string, Severity> severity_overrides;
  std::optional<PartitionRoots> partition_roots;  // replaces the declared roots

  // All lint checks enabled, no overrides.
  static CheckConfig defaults();
};

// Throws kSyntax / kSchema / kUnknownCheckId.
CheckConfig parse_check_config(std::string_view json_text);

// OC1..OC4 over direct superclass edges whose ends are tagged.
std::vector<Diagnostic> check_ontoclean(const ResolvedIndex& index);

// TC1 for classes reaching two or more roots, TC2 for classes reaching none.
std::vector<Diagnostic> check_top_category_partition(const ResolvedIndex& index, const PartitionRoots& roots);
std::vector<Diagnostic> check_top_category_partition(const ResolvedIndex& index);

// LD1 floating extension classes, LD2 upward generalization, LD3 unused
// dependency.
std::vector<Diagnostic> check_layer_discipline(const Ecosystem& ecosystem, const ResolvedIndex& index);

// PR1 domain / PR2 range not refining a superproperty.
std::vector<Diagnostic> check_property_refinement(const ResolvedIndex& index);

// PA1 participation not linking endurant and perdurant; EA1 essential
// property anchored on an anti-rigid class.
std::vector<Diagnostic> check_participation_and_anchor(const ResolvedIndex& index, const PartitionRoots& roots);
std::vector<Diagnostic> check_participation_and_anchor(const ResolvedIndex& index);

// Throws kUnknownCheckId for ids or codes outside the catalog.
std::vector<Diagnostic> run_all_checks(const Ecosystem& ecosystem, const ResolvedIndex& index,
                                       const CheckConfig& config);

}  // namespace ontoeco
