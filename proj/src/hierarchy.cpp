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

#include "ontoeco/hierarchy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "json.hpp"
#include "ontoeco/error.hpp"

namespace ontoeco {

std::vector<ClassRef> ancestors(const ResolvedIndex& index, const ClassRef& c) { return index.ancestors(c); }

bool is_subclass_of(const ResolvedIndex& index, const ClassRef& a, const ClassRef& b) {
  index.class_def(b);
  return a == b || index.has_ancestor(a, b);
}

std::vector<InheritedProperty> inherited_properties(const ResolvedIndex& index, const ClassRef& c) {
  // Breadth-first over superclass edges gives the shortest distance to each
  // ancestor.
  std::map<ClassRef, int> depth{{c, 0}};
  std::deque<ClassRef> queue{c};
  index.class_def(c);
  while (!queue.empty()) {
    ClassRef cur = queue.front();
    queue.pop_front();
    for (const auto& s : index.direct_superclasses(cur)) {
      if (depth.emplace(s, depth[cur] + 1).second) queue.push_back(s);
    }
  }
  std::vector<InheritedProperty> out;
  for (const auto& p : index.properties()) {
    if (auto it = depth.find(p.domain); it != depth.end()) out.push_back({p.ref, p.domain, it->second});
  }
  std::sort(out.begin(), out.end(), [](const InheritedProperty& a, const InheritedProperty& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.property < b.property;
  });
  return out;
}

PartitionRoots declared_partition_roots(const ResolvedIndex& index) {
  PartitionRoots roots;
  for (const auto& r : index.partition_roots()) roots[r] = index.class_def(r).declared_top;
  return roots;
}

std::vector<ClassRef> reachable_roots(const ResolvedIndex& index, const PartitionRoots& roots, const ClassRef& c) {
  std::vector<ClassRef> out;
  if (roots.count(c)) out.push_back(c);
  for (const auto& a : index.ancestors(c)) {
    if (roots.count(a)) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TopCategory top_category_of(const ResolvedIndex& index, const PartitionRoots& roots, const ClassRef& c) {
  auto reached = reachable_roots(index, roots, c);
  return reached.empty() ? TopCategory::kUnassigned : roots.at(reached.front());
}

TopCategory top_category_of(const ResolvedIndex& index, const ClassRef& c) {
  return top_category_of(index, declared_partition_roots(index), c);
}

namespace {

std::size_t count_nodes(const std::vector<TreeNode>& nodes) {
  std::size_t n = nodes.size();
  for (const auto& node : nodes) n += count_nodes(node.children);
  return n;
}

void text_lines(const TreeNode& node, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += node.ref.str();
  if (!node.label.empty()) out += " " + node.label;
  if (node.repeated) out += " [repeated]";
  out += "\n";
  for (const auto& child : node.children) text_lines(child, depth + 1, out);
}

nlohmann::ordered_json node_json(const TreeNode& node) {
  nlohmann::ordered_json j;
  j["ref"] = node.ref.str();
  j["label"] = node.label;
  j["namespace"] = node.prefix;
  j["repeated"] = node.repeated;
  j["children"] = nlohmann::ordered_json::array();
  for (const auto& child : node.children) j["children"].push_back(node_json(child));
  return j;
}

}  // namespace

std::size_t ClassTree::node_count() const { return count_nodes(roots); }

ClassTree render_class_tree(const ResolvedIndex& index, std::span<const std::string> selection) {
  std::set<std::string> prefixes;
  for (const auto& p : selection) {
    if (index.find_namespace(p) == nullptr) throw Error(ErrorKind::kUnknownPrefix, "\"" + p + "\"");
    prefixes.insert(p);
  }
  auto selected = [&](const ClassRef& r) { return prefixes.count(r.prefix) > 0; };

  std::map<ClassRef, std::vector<ClassRef>> parents;   // in-selection parents, sorted
  std::map<ClassRef, std::vector<ClassRef>> children;  // sorted
  for (const auto& c : index.classes()) {
    if (!selected(c.ref)) continue;
    auto& ps = parents[c.ref];
    for (const auto& s : index.direct_superclasses(c.ref)) {
      if (selected(s)) {
        ps.push_back(s);
        children[s].push_back(c.ref);
      }
    }
  }

  auto build = [&](auto&& self, const ClassRef& ref, bool repeated) -> TreeNode {
    TreeNode node{ref, index.class_def(ref).label, ref.prefix, repeated, {}};
    if (repeated) return node;
    if (auto it = children.find(ref); it != children.end()) {
      for (const auto& child : it->second) {
        node.children.push_back(self(self, child, parents.at(child).front() != ref));
      }
    }
    return node;
  };

  ClassTree tree;
  for (const auto& [ref, ps] : parents) {
    if (ps.empty()) tree.roots.push_back(build(build, ref, false));
  }
  return tree;
}

std::string tree_to_text(const ClassTree& tree) {
  std::string out;
  for (const auto& root : tree.roots) text_lines(root, 0, out);
  return out;
}

std::string tree_to_json(const ClassTree& tree) {
  nlohmann::ordered_json forest = nlohmann::ordered_json::array();
  for (const auto& root : tree.roots) forest.push_back(node_json(root));
  return forest.dump(2) + "\n";
}

}  // namespace ontoeco
