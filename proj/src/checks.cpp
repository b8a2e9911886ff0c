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

#include "ontoeco/checks.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "json_util.hpp"
#include "ontoeco/error.hpp"

namespace ontoeco {
namespace {

constexpr std::array<std::string_view, 5> kLintChecks{kCheckOntoClean, kCheckTopCategory, kCheckLayerDiscipline,
                                                      kCheckPropertyRefinement, kCheckParticipation};

Level level_of(const ResolvedIndex& index, const ClassRef& r) { return index.namespace_of(r).level; }

bool subsumed(const ResolvedIndex& index, const ClassRef& a, const ClassRef& b) {
  return a == b || index.has_ancestor(a, b);
}

}  // namespace

std::span<const std::string_view> lint_check_ids() { return kLintChecks; }

CheckConfig CheckConfig::defaults() {
  CheckConfig config;
  for (auto id : kLintChecks) config.enabled.emplace(id);
  return config;
}

CheckConfig parse_check_config(std::string_view json_text) {
  auto doc = json_util::parse_json(json_text);
  json_util::require_object(doc, "check config");
  json_util::check_keys(doc, {"enabled", "severity", "partition_roots"}, "check config");
  CheckConfig config = CheckConfig::defaults();
  if (doc.contains("enabled")) {
    config.enabled.clear();
    for (const auto& id : json_util::string_list(doc, "enabled", "check config")) {
      if (std::find(kLintChecks.begin(), kLintChecks.end(), id) == kLintChecks.end()) {
        throw Error(ErrorKind::kUnknownCheckId, "\"" + id + "\"");
      }
      config.enabled.insert(id);
    }
  }
  if (doc.contains("severity")) {
    const auto& sev = doc.at("severity");
    json_util::require_object(sev, "check config severity");
    for (const auto& [code, value] : sev.items()) {
      if (find_code(code) == nullptr) throw Error(ErrorKind::kUnknownCheckId, "code \"" + code + "\"");
      std::string s = value.is_string() ? value.get<std::string>() : "";
      if (s == "error") {
        config.severity_overrides[code] = Severity::kError;
      } else if (s == "warning") {
        config.severity_overrides[code] = Severity::kWarning;
      } else if (s == "info") {
        config.severity_overrides[code] = Severity::kInfo;
      } else {
        throw Error(ErrorKind::kSchema, "check config: bad severity for \"" + code + "\"");
      }
    }
  }
  if (doc.contains("partition_roots")) {
    const auto& roots = doc.at("partition_roots");
    json_util::require_object(roots, "check config partition_roots");
    PartitionRoots parsed;
    for (const auto& [ref_text, value] : roots.items()) {
      auto ref = json_util::ref_value<ClassRef>(ref_text, "check config partition_roots");
      auto top = value.is_string() ? parse_top_category(value.get<std::string>()) : std::nullopt;
      if (!top || *top == TopCategory::kUnassigned) {
        throw Error(ErrorKind::kSchema, "check config: bad top category for " + ref_text);
      }
      parsed[ref] = *top;
    }
    config.partition_roots = std::move(parsed);
  }
  return config;
}

std::vector<Diagnostic> check_ontoclean(const ResolvedIndex& index) {
  std::vector<Diagnostic> out;
  for (const auto& sub : index.classes()) {
    const OntoCleanTags& p = sub.meta;
    for (const auto& super_ref : index.direct_superclasses(sub.ref)) {
      const OntoCleanTags& q = index.class_def(super_ref).meta;
      std::vector<std::string> subjects{sub.ref.str(), super_ref.str()};
      const std::string edge = sub.ref.str() + " < " + super_ref.str();
      if (q.rigidity == Rigidity::kAntiRigid && p.rigidity == Rigidity::kRigid) {
        out.push_back(make_diagnostic("OC1", subjects, "rigid class under anti-rigid superclass (" + edge + ")"));
      }
      if (q.identity == Identity::kCarriesIdentity && p.identity == Identity::kNoIdentity) {
        out.push_back(make_diagnostic("OC2", subjects, "superclass carries identity, subclass has none (" + edge + ")"));
      }
      if ((q.unity == Unity::kUnity && (p.unity == Unity::kNoUnity || p.unity == Unity::kAntiUnity)) ||
          (q.unity == Unity::kAntiUnity && p.unity == Unity::kUnity)) {
        out.push_back(make_diagnostic("OC3", subjects,
                                      "unity " + std::string(to_string(p.unity)) + " under " +
                                          std::string(to_string(q.unity)) + " (" + edge + ")"));
      }
      if (q.dependence == Dependence::kDependent && p.dependence == Dependence::kIndependent) {
        out.push_back(make_diagnostic("OC4", subjects, "independent class under dependent superclass (" + edge + ")"));
      }
    }
  }
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_top_category_partition(const ResolvedIndex& index, const PartitionRoots& roots) {
  std::vector<Diagnostic> out;
  for (const auto& c : index.classes()) {
    auto reached = reachable_roots(index, roots, c.ref);
    if (reached.size() >= 2) {
      std::string list;
      for (const auto& r : reached) {
        if (!list.empty()) list += ", ";
        list += r.str() + " (" + std::string(to_string(roots.at(r))) + ")";
      }
      out.push_back(make_diagnostic("TC1", {c.ref.str()}, "reaches partition roots " + list));
    } else if (reached.empty()) {
      out.push_back(make_diagnostic("TC2", {c.ref.str()}, "outside the top-category partition"));
    }
  }
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_top_category_partition(const ResolvedIndex& index) {
  return check_top_category_partition(index, declared_partition_roots(index));
}

std::vector<Diagnostic> check_layer_discipline(const Ecosystem& ecosystem, const ResolvedIndex& index) {
  std::vector<Diagnostic> out;
  for (const auto& c : index.classes()) {
    const Level own = level_of(index, c.ref);
    for (const auto& s : c.superclasses) {
      if (own < level_of(index, s)) {
        out.push_back(make_diagnostic("LD2", {c.ref.str(), s.str()},
                                      "superclass in higher layer " + std::string(to_string(level_of(index, s))) +
                                          " from " + std::string(to_string(own))));
      }
    }
    if (own <= Level::kCore) continue;
    const auto& supers = index.direct_superclasses(c.ref);
    bool only_own = std::all_of(supers.begin(), supers.end(),
                                [&](const ClassRef& s) { return s.prefix == c.ref.prefix; });
    const auto& anc = index.ancestors(c.ref);
    bool anchored = std::any_of(anc.begin(), anc.end(), [&](const ClassRef& a) { return level_of(index, a) < own; });
    if (only_own && !anchored) {
      out.push_back(make_diagnostic("LD1", {c.ref.str()}, "floating extension class: no path to a lower layer"));
    }
  }

  for (const auto& ns : ecosystem.namespaces) {
    std::set<std::string> used;
    for (const auto& c : ns.classes) {
      for (const auto& s : c.superclasses) used.insert(s.prefix);
    }
    for (const auto& p : ns.properties) {
      used.insert(p.domain.prefix);
      if (p.range) used.insert(p.range->prefix);
      for (const auto& s : p.superproperties) used.insert(s.prefix);
    }
    for (const auto& a : ns.alignments) used.insert(a.subclass.prefix);
    for (const auto& dep : ns.depends_on) {
      if (!used.count(dep.prefix)) {
        out.push_back(make_diagnostic("LD3", {ns.prefix, dep.prefix},
                                      "dependency " + dep.prefix + "@" + dep.version + " is never referenced"));
      }
    }
  }
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_property_refinement(const ResolvedIndex& index) {
  std::vector<Diagnostic> out;
  for (const auto& p : index.properties()) {
    for (const auto& s_ref : p.superproperties) {
      const PropertyDef& s = index.property_def(s_ref);
      std::vector<std::string> subjects{p.ref.str(), s_ref.str()};
      if (!subsumed(index, p.domain, s.domain)) {
        out.push_back(make_diagnostic("PR1", subjects,
                                      "domain " + p.domain.str() + " is not subsumed by " + s.domain.str()));
      }
      bool range_ok = p.range && s.range ? subsumed(index, *p.range, *s.range) : p.range == s.range;
      if (!range_ok) {
        auto text = [](const PropertyDef& d) { return d.range ? d.range->str() : std::string("literal"); };
        out.push_back(make_diagnostic("PR2", subjects, "range " + text(p) + " does not refine " + text(s)));
      }
    }
  }
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_participation_and_anchor(const ResolvedIndex& index, const PartitionRoots& roots) {
  std::vector<Diagnostic> out;
  for (const auto& p : index.properties()) {
    if (p.flags.participation) {
      TopCategory d = top_category_of(index, roots, p.domain);
      TopCategory r = p.range ? top_category_of(index, roots, *p.range) : TopCategory::kUnassigned;
      bool links = (d == TopCategory::kEndurant && r == TopCategory::kPerdurant) ||
                   (d == TopCategory::kPerdurant && r == TopCategory::kEndurant);
      if (!links) {
        out.push_back(make_diagnostic("PA1", {p.ref.str()},
                                      "participation between " + std::string(to_string(d)) + " and " +
                                          std::string(to_string(r))));
      }
    }
    if (p.flags.essential && index.class_def(p.domain).meta.rigidity == Rigidity::kAntiRigid) {
      out.push_back(make_diagnostic("EA1", {p.ref.str(), p.domain.str()},
                                    "essential property anchored on anti-rigid class " + p.domain.str()));
    }
  }
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_participation_and_anchor(const ResolvedIndex& index) {
  return check_participation_and_anchor(index, declared_partition_roots(index));
}

std::vector<Diagnostic> run_all_checks(const Ecosystem& ecosystem, const ResolvedIndex& index,
                                       const CheckConfig& config) {
  for (const auto& id : config.enabled) {
    if (std::find(kLintChecks.begin(), kLintChecks.end(), id) == kLintChecks.end()) {
      throw Error(ErrorKind::kUnknownCheckId, "\"" + id + "\"");
    }
  }
  for (const auto& [code, _] : config.severity_overrides) {
    if (find_code(code) == nullptr) throw Error(ErrorKind::kUnknownCheckId, "code \"" + code + "\"");
  }
  const PartitionRoots roots = config.partition_roots ? *config.partition_roots : declared_partition_roots(index);
  for (const auto& [ref, _] : roots) index.class_def(ref);

  std::vector<Diagnostic> all;
  auto add = [&](std::string_view id, auto&& run) {
    if (!config.enabled.count(std::string(id))) return;
    auto diags = run();
    all.insert(all.end(), std::make_move_iterator(diags.begin()), std::make_move_iterator(diags.end()));
  };
  add(kCheckOntoClean, [&] { return check_ontoclean(index); });
  add(kCheckTopCategory, [&] { return check_top_category_partition(index, roots); });
  add(kCheckLayerDiscipline, [&] { return check_layer_discipline(ecosystem, index); });
  add(kCheckPropertyRefinement, [&] { return check_property_refinement(index); });
  add(kCheckParticipation, [&] { return check_participation_and_anchor(index, roots); });

  for (auto& d : all) {
    if (auto it = config.severity_overrides.find(d.code); it != config.severity_overrides.end()) {
      d.severity = it->second;
    }
  }
  sort_diagnostics(all);
  return all;
}

}  // namespace ontoeco
