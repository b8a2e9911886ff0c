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
#include <variant>
#include <vector>

#include "ontoeco/diagnostic.hpp"
#include "ontoeco/index.hpp"
#include "ontoeco/profiles.hpp"

namespace ontoeco {

struct Literal {
  std::string value;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct Statement {
  std::string subject;
  PropertyRef property;
  std::variant<std::string, Literal> object;  // entity IRI or literal

  bool literal_object() const { return std::holds_alternative<Literal>(object); }
  const std::string& object_iri() const { return std::get<std::string>(object); }

  friend bool operator==(const Statement&, const Statement&) = default;
  friend auto operator<=>(const Statement&, const Statement&) = default;
};

struct InstanceGraph {
  std::map<std::string, std::set<ClassRef>> entities;
  std::set<Statement> statements;
  std::map<std::string, long long> years;

  friend bool operator==(const InstanceGraph&, const InstanceGraph&) = default;
};

// Line format:
//   entity <iri> a <prefix:Class>[, <prefix:Class>...]
//   stmt <iri> <prefix:Pn> <iri> | "literal"
//   year <iri> <integer>
// Blank lines and lines starting with '#' are ignored. Throws kSyntax
// ("line N: ...") and kUndeclaredEntity.
InstanceGraph parse_instance_graph(std::string_view text);

std::string serialize_instance_graph(const InstanceGraph& graph);

// Well-known refs the SDHSS shape rules look for.
inline const ClassRef kQualityRoot{"sdh", "C1"};
inline const ClassRef kIntentionRoot{"sdh", "C4"};
inline const ClassRef kSpatioTemporalRoot{"crm", "E4"};
inline const PropertyRef kEffectsProperty{"sdh", "P8"};
inline const PropertyRef kEndsProperty{"sdh", "P9"};
inline const PropertyRef kSettingProperty{"sdh", "P43"};

// IV1..IV8, sorted. Throws kProfileInvalid if check_profile reports errors.
std::vector<Diagnostic> validate_instances(const ResolvedIndex& index, const Profile& profile,
                                           const InstanceGraph& graph);

}  // namespace ontoeco
