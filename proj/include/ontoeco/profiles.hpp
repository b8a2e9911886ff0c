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
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontoeco/diagnostic.hpp"
#include "ontoeco/index.hpp"

namespace ontoeco {

// A closed, project-specific selection of classes and properties.
struct Profile {
  std::string name;
  std::vector<Dependency> pins;  // sorted
  std::set<ClassRef> classes;
  std::set<PropertyRef> properties;
  std::map<PropertyRef, Quantifier> overrides;

  // Base quantifier unless overridden.
  Quantifier effective_quantifier(const PropertyDef& def) const;

  friend bool operator==(const Profile&, const Profile&) = default;
};

struct ProfileSeeds {
  std::set<ClassRef> classes;
  std::set<PropertyRef> properties;
};

// Classifies "prefix:ID" strings against the index. Throws kUnknownRef.
ProfileSeeds classify_seeds(const ResolvedIndex& index, std::span<const std::string> refs);

// Least set containing the seeds, closed under property -> domain and class
// range, class -> ancestors. Pins every namespace that contributes a member.
// Throws kUnknownRef.
Profile build_profile_closure(const ResolvedIndex& index, const ProfileSeeds& seeds, std::string name);

// PF1 closure violations and unresolvable members, PF2 illegal overrides,
// PF3 pin mismatches.
std::vector<Diagnostic> check_profile(const ResolvedIndex& index, const Profile& profile);

std::string serialize_profile(const Profile& profile);
// Throws kSyntax / kSchema. Refs are not checked against any index.
Profile parse_profile(std::string_view text);

}  // namespace ontoeco
