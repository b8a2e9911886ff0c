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

#include <string>
#include <utility>
#include <vector>

#include "ontoeco/model.hpp"

namespace ontoeco {

template <class Ref>
struct Edge {
  Ref sub;
  Ref super;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using ClassEdge = Edge<ClassRef>;
using PropertyEdge = Edge<PropertyRef>;

// One changed text field, e.g. {"sdh:C1", "label", "Quality", "Entity Quality"}.
struct TextChange {
  std::string subject;
  std::string field;
  std::string before;
  std::string after;

  friend bool operator==(const TextChange&, const TextChange&) = default;
};

template <class Def>
struct Modified {
  Def before;
  Def after;

  friend bool operator==(const Modified&, const Modified&) = default;
};

// Differences between two versions of one namespace. Added definitions carry
// their full body so the change set can be applied as a patch.
struct ChangeSet {
  std::string prefix;
  std::string old_version;
  std::string new_version;

  std::vector<TextChange> header_changes;  // base_iri, version, level
  std::vector<Dependency> added_dependencies;
  std::vector<Dependency> removed_dependencies;

  std::vector<ClassDef> added_classes;
  std::vector<ClassRef> removed_classes;
  std::vector<Modified<ClassDef>> modified_classes;
  std::vector<PropertyDef> added_properties;
  std::vector<PropertyRef> removed_properties;
  std::vector<Modified<PropertyDef>> modified_properties;

  // Derived views. Superclass edges include the namespace's alignments.
  std::vector<ClassEdge> added_superclass_edges;
  std::vector<ClassEdge> removed_superclass_edges;
  std::vector<PropertyEdge> added_superproperty_edges;
  std::vector<PropertyEdge> removed_superproperty_edges;
  std::vector<TextChange> text_changes;  // labels, inverse labels, scope notes

  bool empty() const;

  friend bool operator==(const ChangeSet&, const ChangeSet&) = default;
};

// Throws kPrefixMismatch.
ChangeSet diff_namespaces(const Namespace& old_ns, const Namespace& new_ns);

// Applies `changes` to `base`; apply(old, diff(old, new)) diffs empty
// against new. The result is canonical.
Namespace apply_changeset(const Namespace& base, const ChangeSet& changes);

// One line per change: "+", "-" or "~", then the kind and subject.
std::string format_changeset_text(const ChangeSet& changes);
std::string format_changeset_json(const ChangeSet& changes);

}  // namespace ontoeco
