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

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoeco/ref.hpp"

namespace ontoeco {

// Abstraction layers, lowest first.
enum class Level : std::uint8_t { kFoundational, kCore, kCoreExtension, kSubdomain, kProject };

enum class Rigidity : std::uint8_t { kUntagged, kRigid, kNonRigid, kAntiRigid };
enum class Identity : std::uint8_t { kUntagged, kCarriesIdentity, kNoIdentity };
enum class Unity : std::uint8_t { kUntagged, kUnity, kNoUnity, kAntiUnity };
enum class Dependence : std::uint8_t { kUntagged, kDependent, kIndependent };

enum class TopCategory : std::uint8_t { kUnassigned, kEndurant, kPerdurant, kQuality, kAbstractRegion };

std::string_view to_string(Level v);
std::string_view to_string(Rigidity v);
std::string_view to_string(Identity v);
std::string_view to_string(Unity v);
std::string_view to_string(Dependence v);
std::string_view to_string(TopCategory v);

std::optional<Level> parse_level(std::string_view s);
std::optional<Rigidity> parse_rigidity(std::string_view s);
std::optional<Identity> parse_identity(std::string_view s);
std::optional<Unity> parse_unity(std::string_view s);
std::optional<Dependence> parse_dependence(std::string_view s);
std::optional<TopCategory> parse_top_category(std::string_view s);

// An untagged field opts the class out of the checks that read it.
struct OntoCleanTags {
  Rigidity rigidity = Rigidity::kUntagged;
  Identity identity = Identity::kUntagged;
  Unity unity = Unity::kUntagged;
  Dependence dependence = Dependence::kUntagged;

  friend bool operator==(const OntoCleanTags&, const OntoCleanTags&) = default;
};

struct ClassDef {
  ClassRef ref;
  std::string label;
  std::string scope_note;
  std::vector<ClassRef> superclasses;
  OntoCleanTags meta;
  TopCategory declared_top = TopCategory::kUnassigned;  // set on partition roots only

  friend bool operator==(const ClassDef&, const ClassDef&) = default;
};

// Cardinality bounds. The domain side bounds how many subjects point at one
// object; the range side bounds how many objects one subject points at.
struct Quantifier {
  static constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t domain_min = 0;
  std::uint32_t domain_max = kUnbounded;
  std::uint32_t range_min = 0;
  std::uint32_t range_max = kUnbounded;

  bool valid() const { return domain_min <= domain_max && range_min <= range_max; }

  // True when this quantifier only narrows `base` on both sides.
  bool tightens(const Quantifier& base) const {
    return base.domain_min <= domain_min && domain_max <= base.domain_max &&
           base.range_min <= range_min && range_max <= base.range_max;
  }

  friend bool operator==(const Quantifier&, const Quantifier&) = default;
};

// "min..max:min..max" with "n" for unbounded.
std::string format_quantifier(const Quantifier& q);
// Throws Error(kSchema) on malformed text or min > max.
Quantifier parse_quantifier(std::string_view text);

struct PropertyFlags {
  bool participation = false;
  bool essential = false;

  friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

struct PropertyDef {
  PropertyRef ref;
  std::string label;
  std::string inverse_label;
  ClassRef domain;
  std::optional<ClassRef> range;  // nullopt: primitive value (literal)
  std::vector<PropertyRef> superproperties;
  Quantifier quantifier;
  PropertyFlags flags;

  bool primitive_range() const { return !range.has_value(); }

  friend bool operator==(const PropertyDef&, const PropertyDef&) = default;
};

struct Dependency {
  std::string prefix;
  std::string version;

  friend bool operator==(const Dependency&, const Dependency&) = default;
  friend auto operator<=>(const Dependency&, const Dependency&) = default;
};

// A foreign class placed under one of the declaring namespace's own classes,
// e.g. sdh groups crm:E53 under sdh:C5.
struct Alignment {
  ClassRef subclass;
  ClassRef superclass;

  friend bool operator==(const Alignment&, const Alignment&) = default;
  friend auto operator<=>(const Alignment&, const Alignment&) = default;
};

struct Namespace {
  std::string prefix;
  std::string base_iri;
  std::string version;
  Level level = Level::kCore;
  std::vector<Dependency> depends_on;
  std::vector<ClassDef> classes;
  std::vector<PropertyDef> properties;
  std::vector<Alignment> alignments;

  std::string iri_of(std::string_view local_id) const { return base_iri + "/" + std::string(local_id); }

  const ClassDef* find_class(const ClassRef& ref) const;
  const PropertyDef* find_property(const PropertyRef& ref) const;

  friend bool operator==(const Namespace&, const Namespace&) = default;
};

struct Ecosystem {
  std::vector<Namespace> namespaces;

  const Namespace* find(std::string_view prefix) const;

  friend bool operator==(const Ecosystem&, const Ecosystem&) = default;
};

// Dotted numeric versions ("7.1.2"); components compare as numbers.
bool valid_version(std::string_view v);
std::strong_ordering compare_versions(std::string_view a, std::string_view b);

// Sorts every list into canonical order (namespaces by prefix, definitions
// and reference lists by ref). Content is untouched.
void canonicalize(Namespace& ns);
void canonicalize(Ecosystem& eco);

// Combines namespaces sharing a prefix as the union of their descriptions.
// Output is canonical. Throws kDuplicatePrefix when same-prefix inputs
// disagree on base IRI, version or level and kDuplicateId when two
// descriptions of one definition conflict.
Ecosystem merge_namespaces(std::vector<Namespace> parts);

}  // namespace ontoeco
