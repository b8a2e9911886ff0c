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

#include "ontoeco/document.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <set>

#include "json.hpp"
#include "ontoeco/error.hpp"
#include "json_util.hpp"

namespace ontoeco {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kLiteralRange = "~literal";

bool absolute_iri(std::string_view iri) {
  auto colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = iri[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') return false;
  }
  return iri.find_first_of(" \t\r\n<>\"") == std::string_view::npos;
}

template <class E>
E enum_field(const json& obj, const char* key, std::optional<E> (*parse)(std::string_view), E fallback,
             const std::string& where) {
  if (!obj.contains(key)) return fallback;
  auto v = parse(json_util::string_field(obj, key, where));
  if (!v) throw Error(ErrorKind::kSchema, where + ": bad value for \"" + key + "\"");
  return *v;
}

template <class Ref>
std::vector<Ref> ref_list(const json& obj, const char* key, const std::string& where) {
  std::vector<Ref> out;
  for (const auto& text : json_util::string_list(obj, key, where)) {
    out.push_back(json_util::ref_value<Ref>(text, where));
  }
  std::set<Ref> seen(out.begin(), out.end());
  if (seen.size() != out.size()) throw Error(ErrorKind::kSchema, where + ": duplicate entry in \"" + key + "\"");
  return out;
}

ClassDef parse_class(const json& obj, const std::string& prefix) {
  json_util::require_object(obj, "class in namespace \"" + prefix + "\"");
  std::string where = "class in namespace \"" + prefix + "\"";
  json_util::check_keys(obj, {"id", "label", "scope_note", "superclasses", "meta", "top"}, where);
  ClassDef c;
  c.ref = json_util::ref_value<ClassRef>(json_util::string_field(obj, "id", where, true), where);
  where = "class " + c.ref.str();
  if (c.ref.prefix != prefix) throw Error(ErrorKind::kSchema, where + ": id prefix differs from namespace");
  c.label = json_util::string_field(obj, "label", where, true);
  c.scope_note = json_util::string_field(obj, "scope_note", where);
  c.superclasses = ref_list<ClassRef>(obj, "superclasses", where);
  if (obj.contains("meta")) {
    const json& meta = obj.at("meta");
    json_util::require_object(meta, where + " meta");
    json_util::check_keys(meta, {"rigidity", "identity", "unity", "dependence"}, where + " meta");
    c.meta.rigidity = enum_field(meta, "rigidity", &parse_rigidity, Rigidity::kUntagged, where);
    c.meta.identity = enum_field(meta, "identity", &parse_identity, Identity::kUntagged, where);
    c.meta.unity = enum_field(meta, "unity", &parse_unity, Unity::kUntagged, where);
    c.meta.dependence = enum_field(meta, "dependence", &parse_dependence, Dependence::kUntagged, where);
  }
  c.declared_top = enum_field(obj, "top", &parse_top_category, TopCategory::kUnassigned, where);
  return c;
}

PropertyDef parse_property(const json& obj, const std::string& prefix) {
  std::string where = "property in namespace \"" + prefix + "\"";
  json_util::require_object(obj, where);
  json_util::check_keys(obj, {"id", "label", "inverse_label", "domain", "range", "superproperties", "quantifier", "flags"},
                        where);
  PropertyDef p;
  p.ref = json_util::ref_value<PropertyRef>(json_util::string_field(obj, "id", where, true), where);
  where = "property " + p.ref.str();
  if (p.ref.prefix != prefix) throw Error(ErrorKind::kSchema, where + ": id prefix differs from namespace");
  p.label = json_util::string_field(obj, "label", where, true);
  p.inverse_label = json_util::string_field(obj, "inverse_label", where);
  p.domain = json_util::ref_value<ClassRef>(json_util::string_field(obj, "domain", where, true), where);
  std::string range = json_util::string_field(obj, "range", where, true);
  if (range != kLiteralRange) p.range = json_util::ref_value<ClassRef>(range, where);
  p.superproperties = ref_list<PropertyRef>(obj, "superproperties", where);
  if (obj.contains("quantifier")) {
    try {
      p.quantifier = parse_quantifier(json_util::string_field(obj, "quantifier", where));
    } catch (const Error& e) {
      throw Error(ErrorKind::kSchema, where + ": " + e.what());
    }
  }
  for (const auto& flag : json_util::string_list(obj, "flags", where)) {
    if (flag == "participation") {
      p.flags.participation = true;
    } else if (flag == "essential") {
      p.flags.essential = true;
    } else {
      throw Error(ErrorKind::kSchema, where + ": unknown flag \"" + flag + "\"");
    }
  }
  return p;
}

Namespace parse_namespace(const json& obj) {
  json_util::require_object(obj, "namespace");
  json_util::check_keys(
      obj, {"prefix", "base_iri", "version", "level", "depends_on", "classes", "properties", "alignments"}, "namespace");
  Namespace ns;
  ns.prefix = json_util::string_field(obj, "prefix", "namespace", true);
  const std::string where = "namespace \"" + ns.prefix + "\"";
  if (ns.prefix.empty() || ns.prefix.find_first_of(": \t\r\n") != std::string::npos) {
    throw Error(ErrorKind::kSchema, where + ": malformed prefix");
  }
  ns.base_iri = json_util::string_field(obj, "base_iri", where, true);
  if (!absolute_iri(ns.base_iri)) throw Error(ErrorKind::kSchema, where + ": base_iri is not an absolute IRI");
  ns.version = json_util::string_field(obj, "version", where, true);
  if (!valid_version(ns.version)) throw Error(ErrorKind::kSchema, where + ": malformed version");
  auto level = parse_level(json_util::string_field(obj, "level", where, true));
  if (!level) throw Error(ErrorKind::kSchema, where + ": bad value for \"level\"");
  ns.level = *level;
  for (const auto& dep : json_util::array_field(obj, "depends_on", where)) {
    json_util::require_object(dep, where + " dependency");
    json_util::check_keys(dep, {"prefix", "version"}, where + " dependency");
    Dependency d{json_util::string_field(dep, "prefix", where, true), json_util::string_field(dep, "version", where, true)};
    if (!valid_version(d.version)) throw Error(ErrorKind::kSchema, where + ": malformed dependency version");
    ns.depends_on.push_back(std::move(d));
  }
  for (const auto& c : json_util::array_field(obj, "classes", where)) ns.classes.push_back(parse_class(c, ns.prefix));
  for (const auto& p : json_util::array_field(obj, "properties", where)) {
    ns.properties.push_back(parse_property(p, ns.prefix));
  }
  for (const auto& a : json_util::array_field(obj, "alignments", where)) {
    json_util::require_object(a, where + " alignment");
    json_util::check_keys(a, {"class", "superclass"}, where + " alignment");
    Alignment al{json_util::ref_value<ClassRef>(json_util::string_field(a, "class", where, true), where),
                 json_util::ref_value<ClassRef>(json_util::string_field(a, "superclass", where, true), where)};
    if (al.superclass.prefix != ns.prefix || al.subclass.prefix == ns.prefix) {
      throw Error(ErrorKind::kSchema, where + ": an alignment places a foreign class under an own class");
    }
    ns.alignments.push_back(std::move(al));
  }
  return ns;
}

ordered_json dump_class(const ClassDef& c) {
  ordered_json supers = ordered_json::array();
  for (const auto& s : c.superclasses) supers.push_back(s.str());
  ordered_json meta;
  meta["rigidity"] = to_string(c.meta.rigidity);
  meta["identity"] = to_string(c.meta.identity);
  meta["unity"] = to_string(c.meta.unity);
  meta["dependence"] = to_string(c.meta.dependence);
  ordered_json out;
  out["id"] = c.ref.str();
  out["label"] = c.label;
  out["scope_note"] = c.scope_note;
  out["superclasses"] = std::move(supers);
  out["meta"] = std::move(meta);
  out["top"] = to_string(c.declared_top);
  return out;
}

ordered_json dump_property(const PropertyDef& p) {
  ordered_json supers = ordered_json::array();
  for (const auto& s : p.superproperties) supers.push_back(s.str());
  ordered_json flags = ordered_json::array();
  if (p.flags.participation) flags.push_back("participation");
  if (p.flags.essential) flags.push_back("essential");
  ordered_json out;
  out["id"] = p.ref.str();
  out["label"] = p.label;
  out["inverse_label"] = p.inverse_label;
  out["domain"] = p.domain.str();
  out["range"] = p.range ? p.range->str() : std::string(kLiteralRange);
  out["superproperties"] = std::move(supers);
  out["quantifier"] = format_quantifier(p.quantifier);
  out["flags"] = std::move(flags);
  return out;
}

}  // namespace

Ecosystem parse_ecosystem_document(std::string_view text) {
  json doc = json_util::parse_json(text);
  json_util::require_object(doc, "document");
  json_util::check_keys(doc, {"namespaces"}, "document");
  if (!doc.contains("namespaces")) throw Error(ErrorKind::kSchema, "document: missing key \"namespaces\"");
  Ecosystem eco;
  std::set<std::string> prefixes;
  for (const auto& ns : json_util::array_field(doc, "namespaces", "document")) {
    eco.namespaces.push_back(parse_namespace(ns));
    if (!prefixes.insert(eco.namespaces.back().prefix).second) {
      throw Error(ErrorKind::kDuplicatePrefix, "prefix \"" + eco.namespaces.back().prefix + "\" declared twice");
    }
  }
  canonicalize(eco);
  return eco;
}

std::string serialize_ecosystem_document(const Ecosystem& ecosystem) {
  Ecosystem eco = ecosystem;
  canonicalize(eco);
  ordered_json namespaces = ordered_json::array();
  for (const auto& ns : eco.namespaces) {
    ordered_json deps = ordered_json::array();
    for (const auto& d : ns.depends_on) {
      ordered_json dep;
      dep["prefix"] = d.prefix;
      dep["version"] = d.version;
      deps.push_back(std::move(dep));
    }
    ordered_json classes = ordered_json::array();
    for (const auto& c : ns.classes) classes.push_back(dump_class(c));
    ordered_json properties = ordered_json::array();
    for (const auto& p : ns.properties) properties.push_back(dump_property(p));
    ordered_json out;
    out["prefix"] = ns.prefix;
    out["base_iri"] = ns.base_iri;
    out["version"] = ns.version;
    out["level"] = to_string(ns.level);
    out["depends_on"] = std::move(deps);
    out["classes"] = std::move(classes);
    out["properties"] = std::move(properties);
    if (!ns.alignments.empty()) {
      ordered_json alignments = ordered_json::array();
      for (const auto& a : ns.alignments) {
        ordered_json al;
        al["class"] = a.subclass.str();
        al["superclass"] = a.superclass.str();
        alignments.push_back(std::move(al));
      }
      out["alignments"] = std::move(alignments);
    }
    namespaces.push_back(std::move(out));
  }
  ordered_json doc;
  doc["namespaces"] = std::move(namespaces);
  return doc.dump(2) + "\n";
}

}  // namespace ontoeco
