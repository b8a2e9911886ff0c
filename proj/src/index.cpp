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

#include "ontoeco/index.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ontoeco/error.hpp"

namespace ontoeco {
namespace {

std::string node_text(const std::string& s) { return s; }
template <class Tag>
std::string node_text(const BasicRef<Tag>& r) { return r.str(); }

template <class Node>
std::string path_text(const std::vector<Node>& path) {
  std::string out;
  for (const auto& r : path) {
    if (!out.empty()) out += " -> ";
    out += node_text(r);
  }
  return out;
}

// Finds one cycle in a graph given as sorted adjacency lists. Returns the
// cycle as a closed path (first == last) or empty.
template <class Ref>
std::vector<Ref> find_cycle(const std::map<Ref, std::vector<Ref>>& graph) {
  enum class Mark { kNew, kActive, kDone };
  std::map<Ref, Mark> mark;
  std::vector<Ref> stack;
  std::vector<Ref> cycle;
  std::function<bool(const Ref&)> visit = [&](const Ref& node) {
    mark[node] = Mark::kActive;
    stack.push_back(node);
    if (auto it = graph.find(node); it != graph.end()) {
      for (const auto& next : it->second) {
        Mark m = mark.count(next) ? mark[next] : Mark::kNew;
        if (m == Mark::kActive) {
          auto from = std::find(stack.begin(), stack.end(), next);
          cycle.assign(from, stack.end());
          cycle.push_back(next);
          return true;
        }
        if (m == Mark::kNew && visit(next)) return true;
      }
    }
    stack.pop_back();
    mark[node] = Mark::kDone;
    return false;
  };
  for (const auto& [node, _] : graph) {
    if (!mark.count(node) && visit(node)) return cycle;
  }
  return {};
}

void check_local_id(const std::string& ref_text, const std::string& local_id) {
  if (local_id.empty() || local_id.find_first_of(" \t\r\n") != std::string::npos) {
    throw Error(ErrorKind::kSchema, "malformed reference \"" + ref_text + "\"");
  }
}

}  // namespace

const ClassDef* ResolvedIndex::find_class(const ClassRef& ref) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), ref,
                             [](const ClassDef& d, const ClassRef& r) { return d.ref < r; });
  return it != classes_.end() && it->ref == ref ? &*it : nullptr;
}

const PropertyDef* ResolvedIndex::find_property(const PropertyRef& ref) const {
  auto it = std::lower_bound(properties_.begin(), properties_.end(), ref,
                             [](const PropertyDef& d, const PropertyRef& r) { return d.ref < r; });
  return it != properties_.end() && it->ref == ref ? &*it : nullptr;
}

const NamespaceInfo* ResolvedIndex::find_namespace(std::string_view prefix) const {
  auto it = std::lower_bound(namespaces_.begin(), namespaces_.end(), prefix,
                             [](const NamespaceInfo& n, std::string_view p) { return n.prefix < p; });
  return it != namespaces_.end() && it->prefix == prefix ? &*it : nullptr;
}

const ClassDef& ResolvedIndex::class_def(const ClassRef& ref) const {
  if (const auto* c = find_class(ref)) return *c;
  throw Error(ErrorKind::kUnknownClass, ref.str());
}

const PropertyDef& ResolvedIndex::property_def(const PropertyRef& ref) const {
  if (const auto* p = find_property(ref)) return *p;
  throw Error(ErrorKind::kUnknownRef, ref.str());
}

const NamespaceInfo& ResolvedIndex::namespace_of(const ClassRef& ref) const {
  if (const auto* ns = find_namespace(ref.prefix)) return *ns;
  throw Error(ErrorKind::kUnknownClass, ref.str());
}

std::size_t ResolvedIndex::class_slot(const ClassRef& ref) const {
  const ClassDef& def = class_def(ref);
  return static_cast<std::size_t>(&def - classes_.data());
}

const std::vector<ClassRef>& ResolvedIndex::direct_superclasses(const ClassRef& ref) const {
  return supers_[class_slot(ref)];
}

const std::vector<ClassRef>& ResolvedIndex::ancestors(const ClassRef& ref) const {
  return ancestors_[class_slot(ref)];
}

bool ResolvedIndex::has_ancestor(const ClassRef& ref, const ClassRef& ancestor) const {
  std::size_t a = class_slot(ancestor);
  return (ancestor_bits_[class_slot(ref)][a / 64] >> (a % 64)) & 1U;
}

ResolvedIndex resolve_ecosystem(const Ecosystem& ecosystem) {
  ResolvedIndex index;

  std::set<std::string> prefixes, iris;
  for (const auto& ns : ecosystem.namespaces) {
    if (!prefixes.insert(ns.prefix).second) {
      throw Error(ErrorKind::kDuplicatePrefix, "prefix \"" + ns.prefix + "\" declared twice");
    }
    if (!iris.insert(ns.base_iri).second) {
      throw Error(ErrorKind::kDuplicatePrefix, "base IRI <" + ns.base_iri + "> declared twice");
    }
  }

  std::vector<const Namespace*> sorted;
  for (const auto& ns : ecosystem.namespaces) sorted.push_back(&ns);
  std::sort(sorted.begin(), sorted.end(), [](const Namespace* a, const Namespace* b) { return a->prefix < b->prefix; });

  // Definitions and duplicate ids.
  std::set<std::string> ids;
  for (const Namespace* ns : sorted) {
    NamespaceInfo info{ns->prefix, ns->base_iri, ns->version, ns->level, ns->depends_on, ns->alignments, {}, {}};
    std::sort(info.depends_on.begin(), info.depends_on.end());
    std::sort(info.alignments.begin(), info.alignments.end());
    for (const auto& c : ns->classes) {
      if (c.ref.prefix != ns->prefix) {
        throw Error(ErrorKind::kSchema, "class " + c.ref.str() + " defined in namespace \"" + ns->prefix + "\"");
      }
      check_local_id(c.ref.str(), c.ref.local_id);
      if (!ids.insert(c.ref.str()).second) throw Error(ErrorKind::kDuplicateId, c.ref.str() + " defined twice");
      index.classes_.push_back(c);
      info.classes.push_back(c.ref);
    }
    for (const auto& p : ns->properties) {
      if (p.ref.prefix != ns->prefix) {
        throw Error(ErrorKind::kSchema, "property " + p.ref.str() + " defined in namespace \"" + ns->prefix + "\"");
      }
      check_local_id(p.ref.str(), p.ref.local_id);
      if (!ids.insert(p.ref.str()).second) throw Error(ErrorKind::kDuplicateId, p.ref.str() + " defined twice");
      index.properties_.push_back(p);
      info.properties.push_back(p.ref);
    }
    std::sort(info.classes.begin(), info.classes.end());
    std::sort(info.properties.begin(), info.properties.end());
    index.namespaces_.push_back(std::move(info));
  }
  std::sort(index.classes_.begin(), index.classes_.end(),
            [](const ClassDef& a, const ClassDef& b) { return a.ref < b.ref; });
  std::sort(index.properties_.begin(), index.properties_.end(),
            [](const PropertyDef& a, const PropertyDef& b) { return a.ref < b.ref; });

  // Namespace dependencies.
  std::map<std::string, std::vector<std::string>> dep_graph;
  for (const auto& info : index.namespaces_) {
    auto& out = dep_graph[info.prefix];
    for (const auto& dep : info.depends_on) {
      const NamespaceInfo* target = index.find_namespace(dep.prefix);
      if (target == nullptr || target->version != dep.version) {
        throw Error(ErrorKind::kDanglingReference,
                    dep.prefix + "@" + dep.version + " (dependency of namespace \"" + info.prefix + "\")");
      }
      if (target->level > info.level) {
        throw Error(ErrorKind::kInvalidDependency, "namespace \"" + info.prefix + "\" (" +
                                                       std::string(to_string(info.level)) + ") depends on \"" +
                                                       dep.prefix + "\" (" + std::string(to_string(target->level)) +
                                                       ")");
      }
      out.push_back(dep.prefix);
    }
  }
  for (auto& [_, deps] : dep_graph) std::sort(deps.begin(), deps.end());
  if (auto cycle = find_cycle(dep_graph); !cycle.empty()) {
    throw Error(ErrorKind::kCycleDetected, "namespace dependencies " + path_text(cycle));
  }

  auto require_class = [&](const ClassRef& ref, const std::string& referrer) {
    if (index.find_class(ref) == nullptr) {
      throw Error(ErrorKind::kDanglingReference, ref.str() + " (referenced by " + referrer + ")");
    }
  };

  // Class references, alignments and effective superclass lists.
  index.supers_.resize(index.classes_.size());
  for (std::size_t i = 0; i < index.classes_.size(); ++i) {
    const ClassDef& c = index.classes_[i];
    std::set<ClassRef> seen;
    for (const auto& s : c.superclasses) {
      if (s == c.ref) throw Error(ErrorKind::kCycleDetected, c.ref.str() + " -> " + c.ref.str());
      if (!seen.insert(s).second) {
        throw Error(ErrorKind::kDuplicateId, "superclass " + s.str() + " listed twice on " + c.ref.str());
      }
      require_class(s, c.ref.str() + " as superclass");
    }
    index.supers_[i] = c.superclasses;
  }
  for (const auto& info : index.namespaces_) {
    for (const auto& a : info.alignments) {
      const std::string who = "alignment " + a.subclass.str() + " < " + a.superclass.str() + " in \"" + info.prefix + "\"";
      if (a.superclass.prefix != info.prefix || a.subclass.prefix == info.prefix) {
        throw Error(ErrorKind::kSchema, who + " must place a foreign class under an own class");
      }
      require_class(a.subclass, who);
      require_class(a.superclass, who);
      index.supers_[index.class_slot(a.subclass)].push_back(a.superclass);
    }
  }
  for (auto& s : index.supers_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Property references.
  for (const auto& p : index.properties_) {
    require_class(p.domain, p.ref.str() + " as domain");
    if (p.range) require_class(*p.range, p.ref.str() + " as range");
    std::set<PropertyRef> seen;
    for (const auto& s : p.superproperties) {
      if (s == p.ref) throw Error(ErrorKind::kCycleDetected, p.ref.str() + " -> " + p.ref.str());
      if (!seen.insert(s).second) {
        throw Error(ErrorKind::kDuplicateId, "superproperty " + s.str() + " listed twice on " + p.ref.str());
      }
      if (index.find_property(s) == nullptr) {
        throw Error(ErrorKind::kDanglingReference, s.str() + " (referenced by " + p.ref.str() + " as superproperty)");
      }
    }
    if (!p.quantifier.valid()) throw Error(ErrorKind::kSchema, "quantifier of " + p.ref.str() + " has min > max");
  }

  // Acyclicity.
  {
    std::map<ClassRef, std::vector<ClassRef>> g;
    for (std::size_t i = 0; i < index.classes_.size(); ++i) g[index.classes_[i].ref] = index.supers_[i];
    if (auto cycle = find_cycle(g); !cycle.empty()) throw Error(ErrorKind::kCycleDetected, path_text(cycle));
  }
  {
    std::map<PropertyRef, std::vector<PropertyRef>> g;
    for (const auto& p : index.properties_) {
      auto& out = g[p.ref];
      out = p.superproperties;
      std::sort(out.begin(), out.end());
    }
    if (auto cycle = find_cycle(g); !cycle.empty()) throw Error(ErrorKind::kCycleDetected, path_text(cycle));
  }

  // Ancestor closures, memoized in post-order.
  const std::size_t n = index.classes_.size();
  const std::size_t words = (n + 63) / 64;
  index.ancestor_bits_.assign(n, std::vector<std::uint64_t>(words, 0));
  std::vector<bool> done(n, false);
  std::function<void(std::size_t)> close = [&](std::size_t i) {
    if (done[i]) return;
    auto& bits = index.ancestor_bits_[i];
    for (const auto& s : index.supers_[i]) {
      std::size_t j = index.class_slot(s);
      close(j);
      bits[j / 64] |= std::uint64_t{1} << (j % 64);
      const auto& inherited = index.ancestor_bits_[j];
      for (std::size_t w = 0; w < words; ++w) bits[w] |= inherited[w];
    }
    done[i] = true;
  };
  index.ancestors_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    close(i);
    for (std::size_t j = 0; j < n; ++j) {
      if ((index.ancestor_bits_[i][j / 64] >> (j % 64)) & 1U) index.ancestors_[i].push_back(index.classes_[j].ref);
    }
  }

  for (const auto& c : index.classes_) {
    if (c.declared_top != TopCategory::kUnassigned) index.partition_roots_.push_back(c.ref);
  }
  return index;
}

Ecosystem to_ecosystem(const ResolvedIndex& index) {
  Ecosystem eco;
  for (const auto& info : index.namespaces()) {
    Namespace ns;
    ns.prefix = info.prefix;
    ns.base_iri = info.base_iri;
    ns.version = info.version;
    ns.level = info.level;
    ns.depends_on = info.depends_on;
    ns.alignments = info.alignments;
    for (const auto& ref : info.classes) ns.classes.push_back(index.class_def(ref));
    for (const auto& ref : info.properties) ns.properties.push_back(index.property_def(ref));
    eco.namespaces.push_back(std::move(ns));
  }
  canonicalize(eco);
  return eco;
}

}  // namespace ontoeco
