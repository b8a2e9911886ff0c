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

#include "ontoeco/model.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <utility>

#include "ontoeco/error.hpp"

namespace ontoeco {
namespace {

template <class E, std::size_t N>
std::optional<E> lookup(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view s) {
  for (const auto& [value, name] : table) {
    if (name == s) return value;
  }
  return std::nullopt;
}

template <class E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E v) {
  for (const auto& [value, name] : table) {
    if (value == v) return name;
  }
  return "?";
}

constexpr std::array<std::pair<Level, std::string_view>, 5> kLevels{{
    {Level::kFoundational, "foundational"},
    {Level::kCore, "core"},
    {Level::kCoreExtension, "core-extension"},
    {Level::kSubdomain, "subdomain"},
    {Level::kProject, "project"},
}};
constexpr std::array<std::pair<Rigidity, std::string_view>, 4> kRigidity{{
    {Rigidity::kRigid, "rigid"},
    {Rigidity::kNonRigid, "non_rigid"},
    {Rigidity::kAntiRigid, "anti_rigid"},
    {Rigidity::kUntagged, "untagged"},
}};
constexpr std::array<std::pair<Identity, std::string_view>, 3> kIdentity{{
    {Identity::kCarriesIdentity, "carries_identity"},
    {Identity::kNoIdentity, "no_identity"},
    {Identity::kUntagged, "untagged"},
}};
constexpr std::array<std::pair<Unity, std::string_view>, 4> kUnity{{
    {Unity::kUnity, "unity"},
    {Unity::kNoUnity, "no_unity"},
    {Unity::kAntiUnity, "anti_unity"},
    {Unity::kUntagged, "untagged"},
}};
constexpr std::array<std::pair<Dependence, std::string_view>, 3> kDependence{{
    {Dependence::kDependent, "dependent"},
    {Dependence::kIndependent, "independent"},
    {Dependence::kUntagged, "untagged"},
}};
constexpr std::array<std::pair<TopCategory, std::string_view>, 5> kTop{{
    {TopCategory::kEndurant, "endurant"},
    {TopCategory::kPerdurant, "perdurant"},
    {TopCategory::kQuality, "quality"},
    {TopCategory::kAbstractRegion, "abstract_region"},
    {TopCategory::kUnassigned, "unassigned"},
}};

std::optional<std::uint32_t> parse_count(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == Quantifier::kUnbounded) return std::nullopt;
  return v;
}

std::string format_bound(std::uint32_t v) {
  return v == Quantifier::kUnbounded ? std::string("n") : std::to_string(v);
}

// Parses one "min..max" side.
std::optional<std::pair<std::uint32_t, std::uint32_t>> parse_side(std::string_view s) {
  auto dots = s.find("..");
  if (dots == std::string_view::npos) return std::nullopt;
  auto lo = parse_count(s.substr(0, dots));
  std::string_view hi_text = s.substr(dots + 2);
  std::optional<std::uint32_t> hi = hi_text == "n" ? std::optional<std::uint32_t>(Quantifier::kUnbounded)
                                                   : parse_count(hi_text);
  if (!lo || !hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Union-merge of one text field; empty yields to non-empty.
void merge_text(std::string& into, const std::string& from, const std::string& what) {
  if (from.empty() || into == from) return;
  if (into.empty()) {
    into = from;
    return;
  }
  throw Error(ErrorKind::kDuplicateId, "conflicting " + what + ": \"" + into + "\" vs \"" + from + "\"");
}

template <class E>
void merge_tag(E& into, E from, E untagged, const std::string& what) {
  if (from == untagged || into == from) return;
  if (into == untagged) {
    into = from;
    return;
  }
  throw Error(ErrorKind::kDuplicateId, "conflicting " + what);
}

void merge_class(ClassDef& into, const ClassDef& from) {
  const std::string who = into.ref.str();
  merge_text(into.label, from.label, "label of " + who);
  merge_text(into.scope_note, from.scope_note, "scope note of " + who);
  into.superclasses.insert(into.superclasses.end(), from.superclasses.begin(), from.superclasses.end());
  sort_unique(into.superclasses);
  merge_tag(into.meta.rigidity, from.meta.rigidity, Rigidity::kUntagged, "rigidity of " + who);
  merge_tag(into.meta.identity, from.meta.identity, Identity::kUntagged, "identity of " + who);
  merge_tag(into.meta.unity, from.meta.unity, Unity::kUntagged, "unity of " + who);
  merge_tag(into.meta.dependence, from.meta.dependence, Dependence::kUntagged, "dependence of " + who);
  merge_tag(into.declared_top, from.declared_top, TopCategory::kUnassigned, "top category of " + who);
}

void merge_property(PropertyDef& into, const PropertyDef& from) {
  const std::string who = into.ref.str();
  merge_text(into.label, from.label, "label of " + who);
  merge_text(into.inverse_label, from.inverse_label, "inverse label of " + who);
  if (into.domain != from.domain) throw Error(ErrorKind::kDuplicateId, "conflicting domain of " + who);
  if (into.range != from.range) throw Error(ErrorKind::kDuplicateId, "conflicting range of " + who);
  if (into.quantifier != from.quantifier) throw Error(ErrorKind::kDuplicateId, "conflicting quantifier of " + who);
  into.superproperties.insert(into.superproperties.end(), from.superproperties.begin(), from.superproperties.end());
  sort_unique(into.superproperties);
  into.flags.participation = into.flags.participation || from.flags.participation;
  into.flags.essential = into.flags.essential || from.flags.essential;
}

}  // namespace

std::string_view to_string(Level v) { return name_of(kLevels, v); }
std::string_view to_string(Rigidity v) { return name_of(kRigidity, v); }
std::string_view to_string(Identity v) { return name_of(kIdentity, v); }
std::string_view to_string(Unity v) { return name_of(kUnity, v); }
std::string_view to_string(Dependence v) { return name_of(kDependence, v); }
std::string_view to_string(TopCategory v) { return name_of(kTop, v); }

std::optional<Level> parse_level(std::string_view s) { return lookup(kLevels, s); }
std::optional<Rigidity> parse_rigidity(std::string_view s) { return lookup(kRigidity, s); }
std::optional<Identity> parse_identity(std::string_view s) { return lookup(kIdentity, s); }
std::optional<Unity> parse_unity(std::string_view s) { return lookup(kUnity, s); }
std::optional<Dependence> parse_dependence(std::string_view s) { return lookup(kDependence, s); }
std::optional<TopCategory> parse_top_category(std::string_view s) { return lookup(kTop, s); }

std::string format_quantifier(const Quantifier& q) {
  return std::to_string(q.domain_min) + ".." + format_bound(q.domain_max) + ":" + std::to_string(q.range_min) +
         ".." + format_bound(q.range_max);
}

Quantifier parse_quantifier(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos) {
    throw Error(ErrorKind::kSchema, "malformed quantifier \"" + std::string(text) + "\"");
  }
  auto domain = parse_side(text.substr(0, colon));
  auto range = parse_side(text.substr(colon + 1));
  if (!domain || !range) throw Error(ErrorKind::kSchema, "malformed quantifier \"" + std::string(text) + "\"");
  Quantifier q{domain->first, domain->second, range->first, range->second};
  if (!q.valid()) throw Error(ErrorKind::kSchema, "quantifier \"" + std::string(text) + "\" has min > max");
  return q;
}

const ClassDef* Namespace::find_class(const ClassRef& ref) const {
  auto it = std::find_if(classes.begin(), classes.end(), [&](const ClassDef& c) { return c.ref == ref; });
  return it == classes.end() ? nullptr : &*it;
}

const PropertyDef* Namespace::find_property(const PropertyRef& ref) const {
  auto it = std::find_if(properties.begin(), properties.end(), [&](const PropertyDef& p) { return p.ref == ref; });
  return it == properties.end() ? nullptr : &*it;
}

const Namespace* Ecosystem::find(std::string_view prefix) const {
  auto it = std::find_if(namespaces.begin(), namespaces.end(), [&](const Namespace& n) { return n.prefix == prefix; });
  return it == namespaces.end() ? nullptr : &*it;
}

bool valid_version(std::string_view v) {
  if (v.empty()) return false;
  bool need_digit = true;
  for (char c : v) {
    if (c == '.') {
      if (need_digit) return false;
      need_digit = true;
    } else if (c >= '0' && c <= '9') {
      need_digit = false;
    } else {
      return false;
    }
  }
  return !need_digit;
}

std::strong_ordering compare_versions(std::string_view a, std::string_view b) {
  // Component-wise numeric; a missing component counts as 0 ("1.0" == "1").
  auto next = [](std::string_view& s) -> unsigned long long {
    unsigned long long v = 0;
    std::size_t i = 0;
    while (i < s.size() && s[i] != '.') v = v * 10 + static_cast<unsigned>(s[i++] - '0');
    s.remove_prefix(i < s.size() ? i + 1 : i);
    return v;
  };
  while (!a.empty() || !b.empty()) {
    auto x = next(a);
    auto y = next(b);
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

void canonicalize(Namespace& ns) {
  sort_unique(ns.depends_on);
  sort_unique(ns.alignments);
  for (auto& c : ns.classes) sort_unique(c.superclasses);
  for (auto& p : ns.properties) sort_unique(p.superproperties);
  std::stable_sort(ns.classes.begin(), ns.classes.end(),
                   [](const ClassDef& a, const ClassDef& b) { return a.ref < b.ref; });
  std::stable_sort(ns.properties.begin(), ns.properties.end(),
                   [](const PropertyDef& a, const PropertyDef& b) { return a.ref < b.ref; });
}

void canonicalize(Ecosystem& eco) {
  for (auto& ns : eco.namespaces) canonicalize(ns);
  std::stable_sort(eco.namespaces.begin(), eco.namespaces.end(),
                   [](const Namespace& a, const Namespace& b) { return a.prefix < b.prefix; });
}

Ecosystem merge_namespaces(std::vector<Namespace> parts) {
  std::map<std::string, Namespace> merged;
  for (auto& part : parts) {
    auto [it, inserted] = merged.try_emplace(part.prefix, part);
    if (inserted) continue;
    Namespace& into = it->second;
    if (into.base_iri != part.base_iri || into.version != part.version || into.level != part.level) {
      throw Error(ErrorKind::kDuplicatePrefix,
                  "namespace \"" + part.prefix + "\" given twice with different base IRI, version or level");
    }
    into.depends_on.insert(into.depends_on.end(), part.depends_on.begin(), part.depends_on.end());
    into.alignments.insert(into.alignments.end(), part.alignments.begin(), part.alignments.end());
    for (const auto& c : part.classes) {
      auto existing = std::find_if(into.classes.begin(), into.classes.end(),
                                   [&](const ClassDef& d) { return d.ref == c.ref; });
      if (existing == into.classes.end()) {
        into.classes.push_back(c);
      } else {
        merge_class(*existing, c);
      }
    }
    for (const auto& p : part.properties) {
      auto existing = std::find_if(into.properties.begin(), into.properties.end(),
                                   [&](const PropertyDef& d) { return d.ref == p.ref; });
      if (existing == into.properties.end()) {
        into.properties.push_back(p);
      } else {
        merge_property(*existing, p);
      }
    }
  }
  Ecosystem eco;
  for (auto& [prefix, ns] : merged) eco.namespaces.push_back(std::move(ns));
  canonicalize(eco);
  return eco;
}

}  // namespace ontoeco
