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

#include "ontoeco/diff.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include "json.hpp"
#include "ontoeco/error.hpp"

namespace ontoeco {
namespace {

template <class T>
std::vector<T> minus(const std::set<T>& a, const std::set<T>& b) {
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::set<ClassEdge> class_edges(const Namespace& ns) {
  std::set<ClassEdge> edges;
  for (const auto& c : ns.classes) {
    for (const auto& s : c.superclasses) edges.insert({c.ref, s});
  }
  for (const auto& a : ns.alignments) edges.insert({a.subclass, a.superclass});
  return edges;
}

std::set<PropertyEdge> property_edges(const Namespace& ns) {
  std::set<PropertyEdge> edges;
  for (const auto& p : ns.properties) {
    for (const auto& s : p.superproperties) edges.insert({p.ref, s});
  }
  return edges;
}

void text_change(std::vector<TextChange>& out, const std::string& subject, const char* field,
                 const std::string& before, const std::string& after) {
  if (before != after) out.push_back({subject, field, before, after});
}

// Compares definition tables keyed by ref, filling added/removed/modified.
template <class Def, class Ref>
void diff_defs(const std::vector<Def>& old_defs, const std::vector<Def>& new_defs, std::vector<Def>& added,
               std::vector<Ref>& removed, std::vector<Modified<Def>>& modified) {
  std::map<Ref, const Def*> before, after;
  for (const auto& d : old_defs) before[d.ref] = &d;
  for (const auto& d : new_defs) after[d.ref] = &d;
  for (const auto& [ref, def] : after) {
    auto it = before.find(ref);
    if (it == before.end()) {
      added.push_back(*def);
    } else if (!(*it->second == *def)) {
      modified.push_back({*it->second, *def});
    }
  }
  for (const auto& [ref, def] : before) {
    if (!after.count(ref)) removed.push_back(ref);
  }
}

}  // namespace

bool ChangeSet::empty() const {
  return header_changes.empty() && added_dependencies.empty() && removed_dependencies.empty() &&
         added_classes.empty() && removed_classes.empty() && modified_classes.empty() && added_properties.empty() &&
         removed_properties.empty() && modified_properties.empty() && added_superclass_edges.empty() &&
         removed_superclass_edges.empty() && added_superproperty_edges.empty() &&
         removed_superproperty_edges.empty() && text_changes.empty();
}

ChangeSet diff_namespaces(const Namespace& old_ns, const Namespace& new_ns) {
  if (old_ns.prefix != new_ns.prefix) {
    throw Error(ErrorKind::kPrefixMismatch, "\"" + old_ns.prefix + "\" vs \"" + new_ns.prefix + "\"");
  }
  ChangeSet cs;
  cs.prefix = old_ns.prefix;
  cs.old_version = old_ns.version;
  cs.new_version = new_ns.version;

  text_change(cs.header_changes, cs.prefix, "base_iri", old_ns.base_iri, new_ns.base_iri);
  text_change(cs.header_changes, cs.prefix, "version", old_ns.version, new_ns.version);
  text_change(cs.header_changes, cs.prefix, "level", std::string(to_string(old_ns.level)),
              std::string(to_string(new_ns.level)));

  std::set<Dependency> old_deps(old_ns.depends_on.begin(), old_ns.depends_on.end());
  std::set<Dependency> new_deps(new_ns.depends_on.begin(), new_ns.depends_on.end());
  cs.added_dependencies = minus(new_deps, old_deps);
  cs.removed_dependencies = minus(old_deps, new_deps);

  diff_defs(old_ns.classes, new_ns.classes, cs.added_classes, cs.removed_classes, cs.modified_classes);
  diff_defs(old_ns.properties, new_ns.properties, cs.added_properties, cs.removed_properties,
            cs.modified_properties);

  auto old_ce = class_edges(old_ns), new_ce = class_edges(new_ns);
  cs.added_superclass_edges = minus(new_ce, old_ce);
  cs.removed_superclass_edges = minus(old_ce, new_ce);
  auto old_pe = property_edges(old_ns), new_pe = property_edges(new_ns);
  cs.added_superproperty_edges = minus(new_pe, old_pe);
  cs.removed_superproperty_edges = minus(old_pe, new_pe);

  for (const auto& m : cs.modified_classes) {
    const std::string who = m.after.ref.str();
    text_change(cs.text_changes, who, "label", m.before.label, m.after.label);
    text_change(cs.text_changes, who, "scope_note", m.before.scope_note, m.after.scope_note);
  }
  for (const auto& m : cs.modified_properties) {
    const std::string who = m.after.ref.str();
    text_change(cs.text_changes, who, "label", m.before.label, m.after.label);
    text_change(cs.text_changes, who, "inverse_label", m.before.inverse_label, m.after.inverse_label);
  }
  return cs;
}

Namespace apply_changeset(const Namespace& base, const ChangeSet& changes) {
  if (base.prefix != changes.prefix) {
    throw Error(ErrorKind::kPrefixMismatch, "\"" + base.prefix + "\" vs \"" + changes.prefix + "\"");
  }
  Namespace ns = base;
  for (const auto& h : changes.header_changes) {
    if (h.field == "base_iri") ns.base_iri = h.after;
    if (h.field == "version") ns.version = h.after;
    if (h.field == "level") ns.level = parse_level(h.after).value_or(ns.level);
  }

  std::set<Dependency> deps(ns.depends_on.begin(), ns.depends_on.end());
  for (const auto& d : changes.removed_dependencies) deps.erase(d);
  deps.insert(changes.added_dependencies.begin(), changes.added_dependencies.end());
  ns.depends_on.assign(deps.begin(), deps.end());

  std::erase_if(ns.classes, [&](const ClassDef& c) {
    return std::find(changes.removed_classes.begin(), changes.removed_classes.end(), c.ref) !=
           changes.removed_classes.end();
  });
  for (const auto& m : changes.modified_classes) {
    for (auto& c : ns.classes) {
      if (c.ref == m.after.ref) c = m.after;
    }
  }
  ns.classes.insert(ns.classes.end(), changes.added_classes.begin(), changes.added_classes.end());

  std::erase_if(ns.properties, [&](const PropertyDef& p) {
    return std::find(changes.removed_properties.begin(), changes.removed_properties.end(), p.ref) !=
           changes.removed_properties.end();
  });
  for (const auto& m : changes.modified_properties) {
    for (auto& p : ns.properties) {
      if (p.ref == m.after.ref) p = m.after;
    }
  }
  ns.properties.insert(ns.properties.end(), changes.added_properties.begin(), changes.added_properties.end());

  // Edges whose subclass lives elsewhere are alignments; the rest already
  // travelled inside the modified class bodies.
  std::set<Alignment> alignments(ns.alignments.begin(), ns.alignments.end());
  for (const auto& e : changes.removed_superclass_edges) {
    if (e.sub.prefix != ns.prefix) alignments.erase({e.sub, e.super});
  }
  for (const auto& e : changes.added_superclass_edges) {
    if (e.sub.prefix != ns.prefix) alignments.insert({e.sub, e.super});
  }
  ns.alignments.assign(alignments.begin(), alignments.end());

  canonicalize(ns);
  return ns;
}

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::string format_changeset_text(const ChangeSet& c) {
  std::string out = "diff " + c.prefix + " " + c.old_version + " -> " + c.new_version + "\n";
  auto line = [&out](char mark, const std::string& text) { out += std::string(1, mark) + " " + text + "\n"; };
  for (const auto& h : c.header_changes) line('~', h.field + " " + quoted(h.before) + " -> " + quoted(h.after));
  for (const auto& d : c.added_dependencies) line('+', "dependency " + d.prefix + " " + d.version);
  for (const auto& d : c.removed_dependencies) line('-', "dependency " + d.prefix + " " + d.version);
  for (const auto& d : c.added_classes) line('+', "class " + d.ref.str() + " " + quoted(d.label));
  for (const auto& r : c.removed_classes) line('-', "class " + r.str());
  for (const auto& m : c.modified_classes) line('~', "class " + m.after.ref.str());
  for (const auto& d : c.added_properties) line('+', "property " + d.ref.str() + " " + quoted(d.label));
  for (const auto& r : c.removed_properties) line('-', "property " + r.str());
  for (const auto& m : c.modified_properties) line('~', "property " + m.after.ref.str());
  for (const auto& e : c.added_superclass_edges) line('+', "subclass " + e.sub.str() + " " + e.super.str());
  for (const auto& e : c.removed_superclass_edges) line('-', "subclass " + e.sub.str() + " " + e.super.str());
  for (const auto& e : c.added_superproperty_edges) line('+', "subproperty " + e.sub.str() + " " + e.super.str());
  for (const auto& e : c.removed_superproperty_edges) line('-', "subproperty " + e.sub.str() + " " + e.super.str());
  for (const auto& t : c.text_changes) {
    line('~', t.subject + " " + t.field + " " + quoted(t.before) + " -> " + quoted(t.after));
  }
  return out;
}

std::string format_changeset_json(const ChangeSet& c) {
  using nlohmann::ordered_json;
  auto refs = [](const auto& items) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : items) arr.push_back(r.str());
    return arr;
  };
  auto edges = [](const auto& items) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : items) arr.push_back({e.sub.str(), e.super.str()});
    return arr;
  };
  auto texts = [](const std::vector<TextChange>& items) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : items) {
      arr.push_back({{"subject", t.subject}, {"field", t.field}, {"before", t.before}, {"after", t.after}});
    }
    return arr;
  };
  auto deps = [](const std::vector<Dependency>& items) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : items) arr.push_back({{"prefix", d.prefix}, {"version", d.version}});
    return arr;
  };
  auto def_refs = [](const auto& items) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : items) arr.push_back(d.ref.str());
    return arr;
  };
  auto modified_refs = [](const auto& items) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : items) arr.push_back(m.after.ref.str());
    return arr;
  };
  ordered_json j;
  j["prefix"] = c.prefix;
  j["old_version"] = c.old_version;
  j["new_version"] = c.new_version;
  j["header_changes"] = texts(c.header_changes);
  j["added_dependencies"] = deps(c.added_dependencies);
  j["removed_dependencies"] = deps(c.removed_dependencies);
  j["added_classes"] = def_refs(c.added_classes);
  j["removed_classes"] = refs(c.removed_classes);
  j["modified_classes"] = modified_refs(c.modified_classes);
  j["added_properties"] = def_refs(c.added_properties);
  j["removed_properties"] = refs(c.removed_properties);
  j["modified_properties"] = modified_refs(c.modified_properties);
  j["added_superclass_edges"] = edges(c.added_superclass_edges);
  j["removed_superclass_edges"] = edges(c.removed_superclass_edges);
  j["added_superproperty_edges"] = edges(c.added_superproperty_edges);
  j["removed_superproperty_edges"] = edges(c.removed_superproperty_edges);
  j["text_changes"] = texts(c.text_changes);
  return j.dump(2) + "\n";
}

}  // namespace ontoeco
