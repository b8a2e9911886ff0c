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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ontoeco/model.hpp"

namespace ontoeco {

// Namespace header data kept by the index (definitions live in the tables).
struct NamespaceInfo {
  std::string prefix;
  std::string base_iri;
  std::string version;
  Level level = Level::kCore;
  std::vector<Dependency> depends_on;
  std::vector<Alignment> alignments;
  std::vector<ClassRef> classes;
  std::vector<PropertyRef> properties;

  std::string iri_of(std::string_view local_id) const { return base_iri + "/" + std::string(local_id); }

  friend bool operator==(const NamespaceInfo&, const NamespaceInfo&) = default;
};

// Immutable, fully resolved view of an Ecosystem. Every reference used by
// any definition resolves; ancestor closures are precomputed.
class ResolvedIndex {
 public:
  ResolvedIndex() = default;

  std::span<const ClassDef> classes() const { return classes_; }
  std::span<const PropertyDef> properties() const { return properties_; }
  std::span<const NamespaceInfo> namespaces() const { return namespaces_; }

  const ClassDef* find_class(const ClassRef& ref) const;
  const PropertyDef* find_property(const PropertyRef& ref) const;
  const NamespaceInfo* find_namespace(std::string_view prefix) const;

  // Throws kUnknownClass / kUnknownRef.
  const ClassDef& class_def(const ClassRef& ref) const;
  const PropertyDef& property_def(const PropertyRef& ref) const;
  const NamespaceInfo& namespace_of(const ClassRef& ref) const;

  // Declared superclasses plus alignment edges naming the class, sorted.
  const std::vector<ClassRef>& direct_superclasses(const ClassRef& ref) const;
  // Non-reflexive transitive closure, sorted.
  const std::vector<ClassRef>& ancestors(const ClassRef& ref) const;
  bool has_ancestor(const ClassRef& ref, const ClassRef& ancestor) const;

  // Classes with a declared top category, sorted by ref.
  const std::vector<ClassRef>& partition_roots() const { return partition_roots_; }

  friend bool operator==(const ResolvedIndex&, const ResolvedIndex&) = default;

 private:
  friend ResolvedIndex resolve_ecosystem(const Ecosystem& ecosystem);

  std::size_t class_slot(const ClassRef& ref) const;

  std::vector<NamespaceInfo> namespaces_;           // sorted by prefix
  std::vector<ClassDef> classes_;                   // sorted by ref
  std::vector<PropertyDef> properties_;             // sorted by ref
  std::vector<std::vector<ClassRef>> supers_;       // per class slot
  std::vector<std::vector<ClassRef>> ancestors_;    // per class slot
  std::vector<std::vector<std::uint64_t>> ancestor_bits_;  // per class slot
  std::vector<ClassRef> partition_roots_;
};

// Throws kDuplicatePrefix, kDuplicateId, kDanglingReference, kCycleDetected,
// kInvalidDependency. Never modifies the input.
ResolvedIndex resolve_ecosystem(const Ecosystem& ecosystem);

// Rebuilds an Ecosystem from an index; resolve(to_ecosystem(i)) == i.
Ecosystem to_ecosystem(const ResolvedIndex& index);

}  // namespace ontoeco
