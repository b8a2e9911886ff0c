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

#include "ontoeco/fixtures.hpp"

#include <array>

#include "ontoeco/error.hpp"

namespace ontoeco {
namespace {

constexpr std::array<std::string_view, 5> kNames = {"crm-core", "sdhss", "sdh-so", "pcp", "legacy-crm"};

constexpr Provenance S = Provenance::kStated;
constexpr Provenance D = Provenance::kDesignDecision;

OntoCleanTags tags(Rigidity r, Identity i = Identity::kUntagged, Dependence d = Dependence::kUntagged) {
  return OntoCleanTags{r, i, Unity::kUntagged, d};
}

struct Builder {
  Namespace ns;
  std::vector<EdgeNote> notes;

  Builder(std::string prefix, std::string base_iri, std::string version, Level level) {
    ns.prefix = std::move(prefix);
    ns.base_iri = std::move(base_iri);
    ns.version = std::move(version);
    ns.level = level;
  }

  ClassRef ref(std::string_view text) const {
    if (text.find(':') != std::string_view::npos) return *parse_ref<ClassRef>(text);
    return ClassRef{ns.prefix, std::string(text)};
  }

  ClassDef& cls(std::string_view id, std::string label) {
    ClassDef c;
    c.ref = ref(id);
    c.label = std::move(label);
    ns.classes.push_back(std::move(c));
    return ns.classes.back();
  }

  // Adds a superclass edge to the last declared class.
  Builder& sub(std::string_view super, Provenance p, std::string note) {
    ClassDef& c = ns.classes.back();
    c.superclasses.push_back(ref(super));
    notes.push_back(EdgeNote{c.ref, ref(super), p, std::move(note)});
    return *this;
  }

  void align(std::string_view foreign, std::string_view own, Provenance p, std::string note) {
    ns.alignments.push_back(Alignment{ref(foreign), ref(own)});
    notes.push_back(EdgeNote{ref(foreign), ref(own), p, std::move(note)});
  }

  PropertyDef& prop(std::string_view id, std::string label, std::string_view domain,
                    std::optional<std::string_view> range) {
    PropertyDef p;
    p.ref = PropertyRef{ns.prefix, std::string(id)};
    p.label = std::move(label);
    p.domain = ref(domain);
    if (range) p.range = ref(*range);
    ns.properties.push_back(std::move(p));
    return ns.properties.back();
  }
};

Builder crm_core() {
  Builder b("crm", "http://www.cidoc-crm.org/cidoc-crm", "7.1.2", Level::kCore);
  b.cls("E1", "CRM Entity").scope_note = "Root of the class hierarchy.";
  b.cls("E2", "Temporal Entity");
  b.sub("E1", S, "one of the two main branches under the root");
  b.cls("E3", "Condition State");
  b.sub("E2", S, "listed among temporal entities");
  auto& e4 = b.cls("E4", "Period");
  e4.meta = tags(Rigidity::kRigid);
  e4.declared_top = TopCategory::kPerdurant;
  b.sub("E2", S, "listed among temporal entities");
  b.cls("E5", "Event").scope_note = "Change of state with participants.";
  b.sub("E4", S, "events are periods");
  for (auto [id, label] : {std::pair{"E16", "Measurement"}, std::pair{"E65", "Creation"},
                           std::pair{"E66", "Formation"}, std::pair{"E68", "Dissolution"},
                           std::pair{"E85", "Joining"}, std::pair{"E86", "Leaving"}}) {
    b.cls(id, label);
    b.sub("E5", D, "intermediate event classes are not encoded; attached straight to E5");
  }

  auto& e77 = b.cls("E77", "Persistent Item");
  e77.meta = tags(Rigidity::kRigid);
  e77.declared_top = TopCategory::kEndurant;
  e77.scope_note = "Items with a persistent identity over time.";
  b.sub("E1", S, "one of the two main branches under the root");
  b.cls("E70", "Thing").meta = tags(Rigidity::kRigid);
  b.sub("E77", S, "things persist");
  b.cls("E71", "Man-Made Thing").meta = tags(Rigidity::kRigid);
  b.sub("E70", S, "man-made things are things");
  b.cls("E18", "Physical Thing").meta = tags(Rigidity::kRigid, Identity::kCarriesIdentity);
  b.sub("E70", D, "E72 is left out of the default core, so E70 is the direct parent");
  b.cls("E20", "Biological Object").meta = tags(Rigidity::kRigid);
  b.sub("E18", S, "a kind of physical thing");
  b.cls("E24", "Physical Man-Made Thing").meta = tags(Rigidity::kRigid);
  b.sub("E71", D, "only the E71 parent is kept; the E72 parent lives in legacy-crm");
  b.cls("E26", "Physical Feature").meta = tags(Rigidity::kRigid);
  b.sub("E18", S, "a kind of physical thing");
  b.cls("E27", "Site").meta = tags(Rigidity::kRigid);
  b.sub("E26", S, "sites are physical features");
  // Numbered as in the source text; the published CRM numbers Actor E39.
  b.cls("E29", "Actor").meta = tags(Rigidity::kRigid, Identity::kCarriesIdentity);
  b.sub("E77", S, "actors persist; id follows the source text, the standard uses E39");
  b.cls("E89", "Propositional Object");
  b.sub("E71", D, "E28 Conceptual Object is not encoded");
  b.cls("E30", "Right");
  b.sub("E89", D, "rights are propositional content");
  b.cls("E73", "Information Object");
  b.sub("E89", D, "information objects carry propositions");

  for (auto [id, label] : {std::pair{"E52", "Time-Span"}, std::pair{"E53", "Place"}, std::pair{"E54", "Dimension"},
                           std::pair{"E92", "Spacetime Volume"}}) {
    b.cls(id, label);
    b.sub("E1", S, "root-level class");
  }
  b.cls("E59", "Primitive Value").scope_note = "Literal values such as strings and numbers.";

  b.prop("P4", "has time-span", "E2", "E52").quantifier = parse_quantifier("0..n:0..1");
  b.ns.properties.back().inverse_label = "is time-span of";
  b.prop("P8", "took place on or within", "E4", "E18").inverse_label = "witnessed";
  auto& p11 = b.prop("P11", "had participant", "E5", "E29");
  p11.inverse_label = "participated in";
  p11.superproperties = {PropertyRef{"crm", "P12"}};
  p11.flags.participation = true;
  auto& p12 = b.prop("P12", "occurred in the presence of", "E5", "E77");
  p12.inverse_label = "was present at";
  p12.flags.participation = true;
  b.prop("P40", "observed dimension", "E16", "E54").inverse_label = "was observed in";
  b.prop("P120", "occurs before", "E2", "E2").inverse_label = "occurs after";
  return b;
}

Builder sdhss() {
  Builder b("sdh", "https://ontome.net/ns/sdhss", "2.0", Level::kCoreExtension);
  b.ns.depends_on = {Dependency{"crm", "7.1.2"}};
  auto& c1 = b.cls("C1", "Entity Quality");
  c1.meta = tags(Rigidity::kUntagged, Identity::kUntagged, Dependence::kDependent);
  c1.declared_top = TopCategory::kQuality;
  c1.scope_note = "Time-indexed quality borne by some entity.";
  b.sub("crm:E2", S, "qualities are temporal entities");
  b.cls("C4", "Intention").meta = tags(Rigidity::kUntagged, Identity::kUntagged, Dependence::kDependent);
  b.sub("C1", S, "intentions are entity qualities");
  auto& c5 = b.cls("C5", "Abstract Region");
  c5.declared_top = TopCategory::kAbstractRegion;
  b.sub("crm:E1", D, "attached to the root so the class is not floating");
  b.cls("C7", "Intentional State");
  b.sub("C4", D, "static side of intention");
  b.cls("C9", "Intentional Entity");
  b.sub("crm:E77", D, "bearers of intentions persist; no parent is given in the source");
  b.cls("C10", "Intentional Event");
  b.sub("C4", D, "dynamic side of intention");
  b.cls("C13", "Geographical Place").meta = tags(Rigidity::kRigid);
  b.sub("crm:E26", S, "geographical places are physical features");
  b.cls("C30", "Connotation");
  b.sub("C7", D, "a classification held by someone; source prints the prefix as crm");
  b.cls("C46", "Intentional Expression");
  b.sub("C10", D, "speech acts are intentional events");
  for (auto id : {"crm:E52", "crm:E53", "crm:E54", "crm:E92"}) {
    b.align(id, "C5", S, "grouped under the abstract region class");
  }

  b.prop("P1", "classifies", "C30", "crm:E1").inverse_label = "is classified by";
  b.prop("P8", "effects", "crm:E5", "C1").inverse_label = "is effected by";
  b.prop("P9", "ends", "crm:E5", "C1").inverse_label = "is ended by";
  b.prop("P43", "has setting", "C4", "crm:E4").inverse_label = "is setting for";
  return b;
}

Builder sdh_so() {
  Builder b("sdh-so", "https://ontome.net/ns/sdh-so", "1.0", Level::kSubdomain);
  b.ns.depends_on = {Dependency{"crm", "7.1.2"}, Dependency{"sdh", "2.0"}};
  b.cls("C13", "Social Role Embodiment");
  b.sub("C27", S, "a kind of legal connotation");
  b.cls("C17", "Custom or Law");
  b.sub("crm:E89", D, "a body of rules is propositional content");
  b.cls("C27", "Legal Connotation");
  b.sub("sdh:C30", D, "a connotation with legal meaning");
  return b;
}

Builder pcp() {
  Builder b("pcp", "https://ontome.net/ns/pcp", "1.0", Level::kProject);
  // Declared but unused: the project model never links into the core.
  b.ns.depends_on = {Dependency{"crm", "7.1.2"}};
  b.cls("Person", "Person").meta = tags(Rigidity::kRigid, Identity::kCarriesIdentity);
  b.cls("Lecturer", "Lecturer").meta = tags(Rigidity::kAntiRigid);
  b.sub("Person", S, "a role of a person");
  b.cls("Student", "Student").meta = tags(Rigidity::kAntiRigid);
  b.sub("Person", S, "a role of a person");
  b.cls("StageOfLife", "Stage of Life");
  b.cls("AcademicOffice", "Academic Office");
  b.sub("StageOfLife", S, "offices are stages of a life");
  b.cls("Teaching", "Teaching");
  b.sub("AcademicOffice", S, "teaching is an academic office");
  b.cls("AcademicDocuments", "Academic Documents");

  b.prop("hasBirthDate", "has birth date", "Lecturer", std::nullopt).flags.essential = true;
  b.prop("hasDeathDate", "has death date", "Lecturer", std::nullopt).flags.essential = true;
  b.prop("hasStageOfLife", "has stage of life", "Lecturer", "StageOfLife");
  return b;
}

Builder legacy_crm() {
  Builder b = crm_core();
  b.ns.classes.push_back(ClassDef{ClassRef{"crm", "E72"}, "Legal Object", "", {}, tags(Rigidity::kAntiRigid), {}});
  b.sub("E70", S, "legal objects are things");
  for (auto& c : b.ns.classes) {
    if (c.ref.local_id == "E24") c.superclasses.push_back(ClassRef{"crm", "E72"});
  }
  b.notes.push_back(EdgeNote{ClassRef{"crm", "E24"}, ClassRef{"crm", "E72"}, S, "the anti-rigid parent under critique"});
  b.prop("P104", "is subject to", "E72", "E30").inverse_label = "applies to";
  b.prop("P105", "right held by", "E72", "E29").inverse_label = "has right on";
  return b;
}

Builder build(std::string_view name) {
  if (name == "crm-core") return crm_core();
  if (name == "sdhss") return sdhss();
  if (name == "sdh-so") return sdh_so();
  if (name == "pcp") return pcp();
  if (name == "legacy-crm") return legacy_crm();
  throw Error(ErrorKind::kUnknownFixture, "no built-in fixture \"" + std::string(name) + "\"");
}

}  // namespace

std::span<const std::string_view> fixture_names() { return kNames; }

Namespace builtin_namespace(std::string_view name) {
  Namespace ns = build(name).ns;
  canonicalize(ns);
  return ns;
}

std::vector<Namespace> load_builtin(std::string_view name) {
  if (name == "all") return {builtin_namespace("crm-core"), builtin_namespace("sdhss"), builtin_namespace("sdh-so")};
  if (name == "sdhss") return {builtin_namespace("crm-core"), builtin_namespace("sdhss")};
  if (name == "sdh-so") return {builtin_namespace("crm-core"), builtin_namespace("sdhss"), builtin_namespace("sdh-so")};
  if (name == "pcp") return {builtin_namespace("crm-core"), builtin_namespace("pcp")};
  return {builtin_namespace(name)};
}

std::vector<EdgeNote> fixture_edge_notes(std::string_view name) { return build(name).notes; }

}  // namespace ontoeco
