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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "errors.hpp"
#include "generators.hpp"
#include "ontoeco/diff.hpp"
#include "ontoeco/fixtures.hpp"

namespace ontoeco {
namespace {

using testing::error_kind;
using Strings = std::set<std::string>;

Namespace sdh() { return builtin_namespace("sdhss"); }

template <class Def>
const Def* find_def(const std::vector<Def>& defs, const decltype(Def::ref)& ref) {
  for (const auto& d : defs) {
    if (d.ref == ref) return &d;
  }
  return nullptr;
}

// Everything a change set says, flattened to strings.
struct Flat {
  Strings header, deps_added, deps_removed;
  Strings classes_added, classes_removed, classes_modified;
  Strings props_added, props_removed, props_modified;
  Strings class_edges_added, class_edges_removed, prop_edges_added, prop_edges_removed;
  Strings text;

  friend bool operator==(const Flat&, const Flat&) = default;
};

std::ostream& operator<<(std::ostream& os, const Flat& f) {
  auto dump = [&](const char* name, const Strings& s) {
    os << name << ":";
    for (const auto& x : s) os << " [" << x << "]";
    os << "\n";
  };
  dump("header", f.header);
  dump("classes+", f.classes_added);
  dump("classes-", f.classes_removed);
  dump("classes~", f.classes_modified);
  dump("props+", f.props_added);
  dump("props-", f.props_removed);
  dump("props~", f.props_modified);
  dump("cedges+", f.class_edges_added);
  dump("cedges-", f.class_edges_removed);
  dump("pedges+", f.prop_edges_added);
  dump("pedges-", f.prop_edges_removed);
  dump("text", f.text);
  return os;
}

std::string text_key(const std::string& subject, const std::string& field, const std::string& before,
                     const std::string& after) {
  return subject + "|" + field + "|" + before + "|" + after;
}

Flat flatten(const ChangeSet& cs) {
  Flat f;
  for (const auto& h : cs.header_changes) f.header.insert(text_key(h.subject, h.field, h.before, h.after));
  for (const auto& d : cs.added_dependencies) f.deps_added.insert(d.prefix + " " + d.version);
  for (const auto& d : cs.removed_dependencies) f.deps_removed.insert(d.prefix + " " + d.version);
  for (const auto& c : cs.added_classes) f.classes_added.insert(c.ref.str());
  for (const auto& c : cs.removed_classes) f.classes_removed.insert(c.str());
  for (const auto& m : cs.modified_classes) f.classes_modified.insert(m.before.ref.str());
  for (const auto& p : cs.added_properties) f.props_added.insert(p.ref.str());
  for (const auto& p : cs.removed_properties) f.props_removed.insert(p.str());
  for (const auto& m : cs.modified_properties) f.props_modified.insert(m.before.ref.str());
  for (const auto& e : cs.added_superclass_edges) f.class_edges_added.insert(e.sub.str() + "<" + e.super.str());
  for (const auto& e : cs.removed_superclass_edges) f.class_edges_removed.insert(e.sub.str() + "<" + e.super.str());
  for (const auto& e : cs.added_superproperty_edges) f.prop_edges_added.insert(e.sub.str() + "<" + e.super.str());
  for (const auto& e : cs.removed_superproperty_edges) f.prop_edges_removed.insert(e.sub.str() + "<" + e.super.str());
  for (const auto& t : cs.text_changes) f.text.insert(text_key(t.subject, t.field, t.before, t.after));
  return f;
}

Strings class_edge_strings(const Namespace& ns) {
  Strings out;
  for (const auto& c : ns.classes) {
    for (const auto& s : c.superclasses) out.insert(c.ref.str() + "<" + s.str());
  }
  for (const auto& a : ns.alignments) out.insert(a.subclass.str() + "<" + a.superclass.str());
  return out;
}

Strings prop_edge_strings(const Namespace& ns) {
  Strings out;
  for (const auto& p : ns.properties) {
    for (const auto& s : p.superproperties) out.insert(p.ref.str() + "<" + s.str());
  }
  return out;
}

Strings minus(const Strings& a, const Strings& b) {
  Strings out;
  for (const auto& x : a) {
    if (!b.count(x)) out.insert(x);
  }
  return out;
}

// Field-by-field comparison of every definition in either namespace.
Flat oracle_diff(const Namespace& a, const Namespace& b) {
  Flat f;
  auto header = [&](const char* field, const std::string& x, const std::string& y) {
    if (x != y) f.header.insert(text_key(a.prefix, field, x, y));
  };
  header("base_iri", a.base_iri, b.base_iri);
  header("version", a.version, b.version);
  header("level", std::string(to_string(a.level)), std::string(to_string(b.level)));
  Strings da, db;
  for (const auto& d : a.depends_on) da.insert(d.prefix + " " + d.version);
  for (const auto& d : b.depends_on) db.insert(d.prefix + " " + d.version);
  f.deps_added = minus(db, da);
  f.deps_removed = minus(da, db);

  auto text = [&](const std::string& who, const char* field, const std::string& x, const std::string& y) {
    if (x != y) f.text.insert(text_key(who, field, x, y));
  };
  for (const auto& c : a.classes) {
    const ClassDef* other = find_def(b.classes, c.ref);
    if (other == nullptr) {
      f.classes_removed.insert(c.ref.str());
      continue;
    }
    std::set<ClassRef> s1(c.superclasses.begin(), c.superclasses.end());
    std::set<ClassRef> s2(other->superclasses.begin(), other->superclasses.end());
    bool same = c.label == other->label && c.scope_note == other->scope_note && s1 == s2 && c.meta == other->meta &&
                c.declared_top == other->declared_top;
    if (!same) f.classes_modified.insert(c.ref.str());
    text(c.ref.str(), "label", c.label, other->label);
    text(c.ref.str(), "scope_note", c.scope_note, other->scope_note);
  }
  for (const auto& c : b.classes) {
    if (find_def(a.classes, c.ref) == nullptr) f.classes_added.insert(c.ref.str());
  }
  for (const auto& p : a.properties) {
    const PropertyDef* other = find_def(b.properties, p.ref);
    if (other == nullptr) {
      f.props_removed.insert(p.ref.str());
      continue;
    }
    std::set<PropertyRef> s1(p.superproperties.begin(), p.superproperties.end());
    std::set<PropertyRef> s2(other->superproperties.begin(), other->superproperties.end());
    bool same = p.label == other->label && p.inverse_label == other->inverse_label && p.domain == other->domain &&
                p.range == other->range && s1 == s2 && p.quantifier == other->quantifier &&
                p.flags == other->flags;
    if (!same) f.props_modified.insert(p.ref.str());
    text(p.ref.str(), "label", p.label, other->label);
    text(p.ref.str(), "inverse_label", p.inverse_label, other->inverse_label);
  }
  for (const auto& p : b.properties) {
    if (find_def(a.properties, p.ref) == nullptr) f.props_added.insert(p.ref.str());
  }
  f.class_edges_added = minus(class_edge_strings(b), class_edge_strings(a));
  f.class_edges_removed = minus(class_edge_strings(a), class_edge_strings(b));
  f.prop_edges_added = minus(prop_edge_strings(b), prop_edge_strings(a));
  f.prop_edges_removed = minus(prop_edge_strings(a), prop_edge_strings(b));
  return f;
}

Flat swapped(const Flat& f) {
  Flat out = f;
  auto swap_text = [](const Strings& in) {
    Strings s;
    for (const auto& x : in) {
      auto p1 = x.find('|');
      auto p2 = x.find('|', p1 + 1);
      auto p3 = x.find('|', p2 + 1);
      s.insert(x.substr(0, p2 + 1) + x.substr(p3 + 1) + "|" + x.substr(p2 + 1, p3 - p2 - 1));
    }
    return s;
  };
  out.header = swap_text(f.header);
  out.text = swap_text(f.text);
  std::swap(out.deps_added, out.deps_removed);
  std::swap(out.classes_added, out.classes_removed);
  std::swap(out.props_added, out.props_removed);
  std::swap(out.class_edges_added, out.class_edges_removed);
  std::swap(out.prop_edges_added, out.prop_edges_removed);
  return out;
}

TEST(Diff, IdentityIsEmpty) {
  for (auto name : fixture_names()) {
    Namespace ns = builtin_namespace(name);
    ChangeSet cs = diff_namespaces(ns, ns);
    EXPECT_TRUE(cs.empty()) << name;
    EXPECT_EQ(format_changeset_text(cs), "diff " + ns.prefix + " " + ns.version + " -> " + ns.version + "\n");
  }
}

TEST(Diff, SingleInsertion) {
  Namespace a = sdh();
  Namespace b = a;
  b.classes.push_back(ClassDef{ClassRef{"sdh", "C99"}, "Extra", "", {}, {}, {}});
  ChangeSet cs = diff_namespaces(a, b);
  ASSERT_EQ(cs.added_classes.size(), 1u);
  EXPECT_EQ(cs.added_classes[0].ref.str(), "sdh:C99");
  ChangeSet rest = cs;
  rest.added_classes.clear();
  EXPECT_TRUE(rest.empty());
  EXPECT_NE(format_changeset_text(cs).find("+ class sdh:C99"), std::string::npos) << format_changeset_text(cs);
}

TEST(Diff, PrefixMismatch) {
  EXPECT_EQ(error_kind([] { diff_namespaces(sdh(), builtin_namespace("crm-core")); }), ErrorKind::kPrefixMismatch);
}

TEST(Diff, EditsShowInTheDerivedViews) {
  Namespace a = sdh();
  Namespace b = a;
  b.version = "2.1";
  b.classes[0].label += " revised";
  b.alignments.pop_back();
  ChangeSet cs = diff_namespaces(a, b);
  EXPECT_EQ(cs.header_changes.size(), 1u);
  EXPECT_EQ(cs.text_changes.size(), 1u);
  EXPECT_EQ(cs.removed_superclass_edges.size(), 1u);
  EXPECT_EQ(flatten(cs), oracle_diff(a, b));
}

TEST(Diff, MutationsMatchOracle) {
  std::mt19937 rng(61);
  for (int i = 0; i < 200; ++i) {
    auto names = fixture_names();
    Namespace base = builtin_namespace(names[rng() % names.size()]);
    Namespace a = testing::mutate(rng, base);
    Namespace b = testing::mutate(rng, base);
    if (i % 5 == 0) b.version += ".1";
    if (i % 7 == 0) b.depends_on.clear();
    ChangeSet ab = diff_namespaces(a, b);
    ChangeSet ba = diff_namespaces(b, a);
    ASSERT_EQ(flatten(ab), oracle_diff(a, b)) << "iteration " << i;
    ASSERT_EQ(flatten(ba), swapped(flatten(ab)));
    ASSERT_EQ(ab.empty(), a == b || flatten(ab) == Flat{});

    Namespace patched = apply_changeset(a, ab);
    ASSERT_TRUE(diff_namespaces(patched, b).empty()) << format_changeset_text(diff_namespaces(patched, b));
    ASSERT_EQ(format_changeset_json(ab), format_changeset_json(diff_namespaces(a, b)));
  }
}

TEST(Diff, RandomEcosystemPatches) {
  std::mt19937 rng(62);
  for (int i = 0; i < 50; ++i) {
    Ecosystem eco = testing::random_ecosystem(rng);
    for (const auto& ns : eco.namespaces) {
      Namespace b = testing::mutate(rng, ns);
      ASSERT_TRUE(diff_namespaces(apply_changeset(ns, diff_namespaces(ns, b)), b).empty());
    }
  }
}

}  // namespace
}  // namespace ontoeco
