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
#include <span>
#include <string>
#include <vector>

#include "ontoeco/index.hpp"

namespace ontoeco {

std::vector<ClassRef> ancestors(const ResolvedIndex& index, const ClassRef& c);

// Reflexive subsumption.
bool is_subclass_of(const ResolvedIndex& index, const ClassRef& a, const ClassRef& b);

struct InheritedProperty {
  PropertyRef property;
  ClassRef origin;  // the domain class where the property is declared
  int depth = 0;    // superclass steps from the queried class to origin

  friend bool operator==(const InheritedProperty&, const InheritedProperty&) = default;
};

// Properties whose domain is c or one of its ancestors, sorted by
// (depth, property ref).
std::vector<InheritedProperty> inherited_properties(const ResolvedIndex& index, const ClassRef& c);

// Partition-root assignment; the index's declared tops unless overridden.
using PartitionRoots = std::map<ClassRef, TopCategory>;
PartitionRoots declared_partition_roots(const ResolvedIndex& index);

// Partition roots among c and its ancestors, sorted by ref.
std::vector<ClassRef> reachable_roots(const ResolvedIndex& index, const PartitionRoots& roots,
                                      const ClassRef& c);

// The category of the lowest reachable root by ref; kUnassigned if none.
TopCategory top_category_of(const ResolvedIndex& index, const ClassRef& c);
TopCategory top_category_of(const ResolvedIndex& index, const PartitionRoots& roots, const ClassRef& c);

struct TreeNode {
  ClassRef ref;
  std::string label;
  std::string prefix;
  bool repeated = false;  // secondary occurrence under another parent; subtree shown elsewhere
  std::vector<TreeNode> children;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct ClassTree {
  std::vector<TreeNode> roots;

  std::size_t node_count() const;
};

// Forest over the classes of the selected namespaces. A class with k parents
// in the selection appears k times; only the occurrence under the smallest
// parent carries children. Throws kUnknownPrefix.
ClassTree render_class_tree(const ResolvedIndex& index, std::span<const std::string> selection);

std::string tree_to_text(const ClassTree& tree);
std::string tree_to_json(const ClassTree& tree);

}  // namespace ontoeco
