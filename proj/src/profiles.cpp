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

#include "ontoeco/profiles.hpp"

#include <algorithm>

#include "json_util.hpp"
#include "ontoeco/error.hpp"

namespace ontoeco {

Quantifier Profile::effective_quantifier(const PropertyDef& def) const {
  auto it = overrides.find(def.ref);
  return it == overrides.end() ? def.quantifier : it->second;
}

ProfileSeeds classify_seeds(const ResolvedIndex& index, std::span<const std::string> refs) {
  ProfileSeeds seeds;
  for (const auto& text : refs) {
    auto parts = split_ref(text);
    if (!parts) throw Error(ErrorKind::kUnknownRef, "\"" + text + "\"");
    ClassRef as_class{parts->first, parts->second};
    PropertyRef as_property{parts->first, parts->second};
    if (index.find_class(as_class) != nullptr) {
      seeds.classes.insert(as_class);
    } else if (index.find_property(as_property) != nullptr) {
      seeds.properties.insert(as_property);
    } else {
      throw Error(ErrorKind::kUnknownRef, text);
    }
  }
  return seeds;
}

Profile build_profile_closure(const ResolvedIndex& index, const ProfileSeeds& seeds, std::string name) {
  Profile profile;
  profile.name = std::move(name);
  profile.properties = seeds.properties;

  std::set<ClassRef> roots = seeds.classes;
  for (const auto& c : seeds.classes) {
    if (index.find_class(c) == nullptr) throw Error(ErrorKind::kUnknownRef, c.str());
  }
  for (const auto& p : seeds.properties) {
    const PropertyDef* def = index.find_property(p);
    if (def == nullptr) throw Error(ErrorKind::kUnknownRef, p.str());
    roots.insert(def->domain);
    if (def->range) roots.insert(*def->range);
  }
  // Ancestor sets are already transitive, so one pass reaches the fixed point.
  for (const auto& c : roots) {
    profile.classes.insert(c);
    const auto& anc = index.ancestors(c);
    profile.classes.insert(anc.begin(), anc.end());
  }

  std::set<std::string> prefixes;
  for (const auto& c : profile.classes) prefixes.insert(c.prefix);
  for (const auto& p : profile.properties) prefixes.insert(p.prefix);
  for (const auto& prefix : prefixes) profile.pins.push_back({prefix, index.find_namespace(prefix)->version});
  return profile;
}

std::vector<Diagnostic> check_profile(const ResolvedIndex& index, const Profile& profile) {
  std::vector<Diagnostic> out;
  for (const auto& c : profile.classes) {
    if (index.find_class(c) == nullptr) {
      out.push_back(make_diagnostic("PF1", {c.str()}, "class is not defined in the ecosystem"));
      continue;
    }
    for (const auto& a : index.ancestors(c)) {
      if (!profile.classes.count(a)) {
        out.push_back(make_diagnostic("PF1", {c.str(), a.str()}, "ancestor " + a.str() + " missing from profile"));
      }
    }
  }
  for (const auto& p : profile.properties) {
    const PropertyDef* def = index.find_property(p);
    if (def == nullptr) {
      out.push_back(make_diagnostic("PF1", {p.str()}, "property is not defined in the ecosystem"));
      continue;
    }
    if (!profile.classes.count(def->domain)) {
      out.push_back(make_diagnostic("PF1", {p.str(), def->domain.str()},
                                    "domain " + def->domain.str() + " missing from profile"));
    }
    if (def->range && !profile.classes.count(*def->range)) {
      out.push_back(make_diagnostic("PF1", {p.str(), def->range->str()},
                                    "range " + def->range->str() + " missing from profile"));
    }
  }
  for (const auto& [p, q] : profile.overrides) {
    if (!profile.properties.count(p)) {
      out.push_back(make_diagnostic("PF2", {p.str()}, "override on a property outside the profile"));
      continue;
    }
    const PropertyDef* def = index.find_property(p);
    if (def != nullptr && !q.tightens(def->quantifier)) {
      out.push_back(make_diagnostic("PF2", {p.str()},
                                    "override " + format_quantifier(q) + " loosens base " +
                                        format_quantifier(def->quantifier)));
    }
  }
  for (const auto& pin : profile.pins) {
    const NamespaceInfo* ns = index.find_namespace(pin.prefix);
    if (ns == nullptr) {
      out.push_back(make_diagnostic("PF3", {pin.prefix}, "pinned namespace " + pin.prefix + " is not loaded"));
    } else if (ns->version != pin.version) {
      out.push_back(make_diagnostic("PF3", {pin.prefix},
                                    "pinned " + pin.prefix + "@" + pin.version + " but loaded " + ns->version));
    }
  }
  sort_diagnostics(out);
  return out;
}

std::string serialize_profile(const Profile& profile) {
  nlohmann::ordered_json doc;
  doc["name"] = profile.name;
  auto pins = nlohmann::ordered_json::array();
  std::vector<Dependency> sorted_pins = profile.pins;
  std::sort(sorted_pins.begin(), sorted_pins.end());
  for (const auto& pin : sorted_pins) {
    nlohmann::ordered_json p;
    p["prefix"] = pin.prefix;
    p["version"] = pin.version;
    pins.push_back(std::move(p));
  }
  doc["pins"] = std::move(pins);
  doc["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : profile.classes) doc["classes"].push_back(c.str());
  doc["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : profile.properties) doc["properties"].push_back(p.str());
  doc["overrides"] = nlohmann::ordered_json::object();
  for (const auto& [p, q] : profile.overrides) doc["overrides"][p.str()] = format_quantifier(q);
  return doc.dump(2) + "\n";
}

Profile parse_profile(std::string_view text) {
  auto doc = json_util::parse_json(text);
  const std::string where = "profile";
  json_util::require_object(doc, where);
  json_util::check_keys(doc, {"name", "pins", "classes", "properties", "overrides"}, where);
  Profile profile;
  profile.name = json_util::string_field(doc, "name", where, true);
  for (const auto& pin : json_util::array_field(doc, "pins", where)) {
    json_util::require_object(pin, where + " pin");
    json_util::check_keys(pin, {"prefix", "version"}, where + " pin");
    profile.pins.push_back({json_util::string_field(pin, "prefix", where, true),
                            json_util::string_field(pin, "version", where, true)});
  }
  std::sort(profile.pins.begin(), profile.pins.end());
  profile.pins.erase(std::unique(profile.pins.begin(), profile.pins.end()), profile.pins.end());
  for (const auto& c : json_util::string_list(doc, "classes", where)) {
    profile.classes.insert(json_util::ref_value<ClassRef>(c, where));
  }
  for (const auto& p : json_util::string_list(doc, "properties", where)) {
    profile.properties.insert(json_util::ref_value<PropertyRef>(p, where));
  }
  if (doc.contains("overrides")) {
    const auto& overrides = doc.at("overrides");
    json_util::require_object(overrides, where + " overrides");
    for (const auto& [ref_text, value] : overrides.items()) {
      auto ref = json_util::ref_value<PropertyRef>(ref_text, where);
      if (!value.is_string()) throw Error(ErrorKind::kSchema, where + ": override for " + ref_text + " must be a string");
      profile.overrides[ref] = parse_quantifier(value.get<std::string>());
    }
  }
  return profile;
}

}  // namespace ontoeco
