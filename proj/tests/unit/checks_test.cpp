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

#include "errors.hpp"
#include "generators.hpp"
#include "ontoeco/checks.hpp"
#include "ontoeco/fixtures.hpp"
#include "ontoeco/index.hpp"
#include "oracles.hpp"

namespace ontoeco {
namespace {

using testing::error_kind;
using testing::Key;
using testing::keys_of;

ClassRef C(std::string_view text) { return *parse_ref<ClassRef>(text); }

Ecosystem eco_of(std::initializer_list<std::string_view> names) {
  std::vector<Namespace> parts;
  for (auto n : names) {
    for (auto& ns : load_builtin(n)) parts.push_back(std::move(ns));
  }
  return merge_namespaces(std::move(parts));
}

std::vector<Key> with_code(const std::vector<Diagnostic>& diags, std::string_view code) {
  std::vector<Diagnostic> out;
  for (const auto& d : diags) {
    if (d.code == code) out.push_back(d);
  }
  return keys_of(out);
}

ClassDef& class_in(Ecosystem& eco, const ClassRef& ref) {
  for (auto& ns : eco.namespaces) {
    for (auto& c : ns.classes) {
      if (c.ref == ref) return c;
    }
  }
  throw std::logic_error(ref.str());
}

TEST(OntoClean, LegacyAntiRigidParentGivesOneOC1) {
  ResolvedIndex index = resolve_ecosystem(eco_of({"legacy-crm", "crm-core"}));
  auto diags = check_ontoclean(index);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].code, "OC1");
  EXPECT_EQ(diags[0].subjects, (std::vector<std::string>{"crm:E24", "crm:E72"}));
  EXPECT_EQ(diags[0].check_id, "ontoclean");
}

TEST(OntoClean, AntiRigidUnderRigidIsLegal) {
  ResolvedIndex index = resolve_ecosystem(eco_of({"pcp"}));
  EXPECT_TRUE(check_ontoclean(index).empty());
}

TEST(OntoClean, UntaggedEcosystemIsSilent) {
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    Ecosystem eco = testing::random_ecosystem(rng);
    for (auto& ns : eco.namespaces) {
      for (auto& c : ns.classes) c.meta = OntoCleanTags{};
    }
    EXPECT_TRUE(check_ontoclean(resolve_ecosystem(eco)).empty());
  }
}

TEST(OntoClean, EachRuleFires) {
  Ecosystem eco = eco_of({"crm-core"});
  class_in(eco, C("crm:E70")).meta = {Rigidity::kAntiRigid, Identity::kCarriesIdentity, Unity::kAntiUnity,
                                     Dependence::kDependent};
  class_in(eco, C("crm:E71")).meta = {Rigidity::kRigid, Identity::kNoIdentity, Unity::kUnity,
                                     Dependence::kIndependent};
  auto keys = keys_of(check_ontoclean(resolve_ecosystem(eco)));
  std::vector<Key> expected;
  for (const char* code : {"OC1", "OC2", "OC3", "OC4"}) {
    expected.push_back(testing::key(code, Severity::kError, {"crm:E71", "crm:E70"}));
  }
  // E18 (rigid, carries identity) also sits under E70.
  expected.push_back(testing::key("OC1", Severity::kError, {"crm:E18", "crm:E70"}));
  testing::sort_keys(expected);
  EXPECT_EQ(keys, expected) << testing::describe(keys);
}

TEST(TopCategory, PhysicalAndAbstractPlaceConflict) {
  Ecosystem eco = eco_of({"all"});
  ClassDef both{C("sdh:C99"), "Mixed place", "", {C("sdh:C13"), C("crm:E53")}, {}, {}};
  eco.namespaces[1].classes.push_back(both);
  ResolvedIndex index = resolve_ecosystem(eco);
  auto tc1 = with_code(check_top_category_partition(index), "TC1");
  EXPECT_EQ(tc1, (std::vector<Key>{testing::key("TC1", Severity::kError, {"sdh:C99"})}));
}

TEST(TopCategory, FixtureHasNoConflictsAndTheRootIsOutside) {
  Ecosystem eco = eco_of({"all"});
  ResolvedIndex index = resolve_ecosystem(eco);
  auto diags = check_top_category_partition(index);
  EXPECT_TRUE(with_code(diags, "TC1").empty());
  auto tc2 = with_code(diags, "TC2");
  EXPECT_NE(std::find(tc2.begin(), tc2.end(), testing::key("TC2", Severity::kInfo, {"crm:E1"})), tc2.end());
  testing::Closure cl(eco);
  EXPECT_EQ(keys_of(diags), testing::oracle_top_category_partition(cl, testing::oracle_declared_roots(eco)));
}

TEST(LayerDiscipline, CoreExtensionUnderCoreIsFine) {
  Ecosystem eco = eco_of({"all"});
  EXPECT_TRUE(check_layer_discipline(eco, resolve_ecosystem(eco)).empty());
}

TEST(LayerDiscipline, FloatingProjectRoots) {
  Ecosystem eco = eco_of({"pcp"});
  auto diags = check_layer_discipline(eco, resolve_ecosystem(eco));
  auto ld1 = with_code(diags, "LD1");
  EXPECT_NE(std::find(ld1.begin(), ld1.end(), testing::key("LD1", Severity::kError, {"pcp:StageOfLife"})), ld1.end());
  EXPECT_EQ(with_code(diags, "LD3"), (std::vector<Key>{testing::key("LD3", Severity::kWarning, {"pcp", "crm"})}));
}

TEST(LayerDiscipline, AnchoringOneClassClearsItsSubtree) {
  Ecosystem eco = eco_of({"pcp"});
  class_in(eco, C("pcp:StageOfLife")).superclasses = {C("crm:E2")};
  auto ld1 = with_code(check_layer_discipline(eco, resolve_ecosystem(eco)), "LD1");
  for (const char* id : {"pcp:StageOfLife", "pcp:AcademicOffice", "pcp:Teaching"}) {
    EXPECT_EQ(std::find(ld1.begin(), ld1.end(), testing::key("LD1", Severity::kError, {id})), ld1.end()) << id;
  }
  EXPECT_NE(std::find(ld1.begin(), ld1.end(), testing::key("LD1", Severity::kError, {"pcp:Person"})), ld1.end());
}

TEST(LayerDiscipline, CoreClassUnderExtensionIsUpward) {
  Ecosystem eco = eco_of({"all"});
  class_in(eco, C("crm:E59")).superclasses = {C("sdh:C5")};
  auto ld2 = with_code(check_layer_discipline(eco, resolve_ecosystem(eco)), "LD2");
  EXPECT_EQ(ld2, (std::vector<Key>{testing::key("LD2", Severity::kError, {"crm:E59", "sdh:C5"})}));
}

TEST(PropertyRefinement, NarrowerDomainRequired) {
  Ecosystem eco = eco_of({"all"});
  PropertyDef sub;
  sub.ref = PropertyRef{"sdh", "P80"};
  sub.label = "effects physically";
  sub.domain = C("crm:E18");
  sub.range = C("sdh:C1");
  sub.superproperties = {PropertyRef{"sdh", "P8"}};
  eco.namespaces[1].properties.push_back(sub);
  auto keys = keys_of(check_property_refinement(resolve_ecosystem(eco)));
  EXPECT_EQ(keys, (std::vector<Key>{testing::key("PR1", Severity::kError, {"sdh:P80", "sdh:P8"})}));
}

TEST(PropertyRefinement, PrimitiveRangesMustMatch) {
  Ecosystem eco = eco_of({"pcp"});
  for (auto& p : eco.namespaces[1].properties) {
    if (p.ref.local_id == "hasDeathDate") p.superproperties = {PropertyRef{"pcp", "hasStageOfLife"}};
    if (p.ref.local_id == "hasBirthDate") p.superproperties = {PropertyRef{"pcp", "hasDeathDate"}};
  }
  auto keys = keys_of(check_property_refinement(resolve_ecosystem(eco)));
  EXPECT_EQ(keys, (std::vector<Key>{testing::key("PR2", Severity::kError, {"pcp:hasDeathDate", "pcp:hasStageOfLife"})}));
}

TEST(PropertyRefinement, FixtureIsClean) {
  for (auto name : {"all", "legacy-crm", "pcp"}) {
    EXPECT_TRUE(check_property_refinement(resolve_ecosystem(eco_of({name}))).empty()) << name;
  }
}

TEST(Participation, EventActorLinkIsFine) {
  ResolvedIndex index = resolve_ecosystem(eco_of({"all"}));
  EXPECT_TRUE(check_participation_and_anchor(index).empty());
}

TEST(Participation, EndurantToEndurantIsFlagged) {
  Ecosystem eco = eco_of({"all"});
  for (auto& p : eco.namespaces[0].properties) {
    if (p.ref.local_id == "P12") p.domain = C("crm:E18");
  }
  ResolvedIndex index = resolve_ecosystem(eco);
  auto keys = keys_of(check_participation_and_anchor(index));
  EXPECT_EQ(keys, (std::vector<Key>{testing::key("PA1", Severity::kError, {"crm:P12"})}));
}

TEST(Participation, EssentialOnARoleIsFlagged) {
  ResolvedIndex index = resolve_ecosystem(eco_of({"pcp"}));
  auto keys = keys_of(check_participation_and_anchor(index));
  EXPECT_EQ(keys, (std::vector<Key>{testing::key("EA1", Severity::kWarning, {"pcp:hasBirthDate", "pcp:Lecturer"}),
                                    testing::key("EA1", Severity::kWarning, {"pcp:hasDeathDate", "pcp:Lecturer"})}));
}

TEST(CheckConfig, ParsesAndValidates) {
  CheckConfig c = parse_check_config(
      R"({"enabled": ["ontoclean", "top-category"], "severity": {"TC2": "warning"},
          "partition_roots": {"crm:E77": "endurant"}})");
  EXPECT_EQ(c.enabled, (std::set<std::string>{"ontoclean", "top-category"}));
  EXPECT_EQ(c.severity_overrides.at("TC2"), Severity::kWarning);
  ASSERT_TRUE(c.partition_roots);
  EXPECT_EQ(c.partition_roots->at(C("crm:E77")), TopCategory::kEndurant);
  EXPECT_EQ(parse_check_config("{}").enabled, CheckConfig::defaults().enabled);

  EXPECT_EQ(error_kind([] { parse_check_config(R"({"enabled": ["spelling"]})"); }), ErrorKind::kUnknownCheckId);
  EXPECT_EQ(error_kind([] { parse_check_config(R"({"severity": {"XX9": "error"}})"); }), ErrorKind::kUnknownCheckId);
  EXPECT_EQ(error_kind([] { parse_check_config(R"({"severity": {"TC2": "loud"}})"); }), ErrorKind::kSchema);
  EXPECT_EQ(error_kind([] { parse_check_config(R"({"colour": 1})"); }), ErrorKind::kSchema);
  EXPECT_EQ(error_kind([] { parse_check_config("{"); }), ErrorKind::kSyntax);
}

TEST(RunAllChecks, OverridesAndRoots) {
  Ecosystem eco = eco_of({"all"});
  ResolvedIndex index = resolve_ecosystem(eco);
  CheckConfig config = CheckConfig::defaults();
  config.severity_overrides["TC2"] = Severity::kError;
  auto diags = run_all_checks(eco, index, config);
  EXPECT_FALSE(diags.empty());
  for (const auto& d : diags) EXPECT_EQ(d.severity, Severity::kError);

  config = CheckConfig::defaults();
  config.partition_roots = PartitionRoots{{C("crm:E404"), TopCategory::kEndurant}};
  EXPECT_EQ(error_kind([&] { run_all_checks(eco, index, config); }), ErrorKind::kUnknownClass);

  config = CheckConfig::defaults();
  config.enabled.insert("spelling");
  EXPECT_EQ(error_kind([&] { run_all_checks(eco, index, config); }), ErrorKind::kUnknownCheckId);
}

TEST(RunAllChecks, OutputIsSortedAndDeterministic) {
  Ecosystem eco = eco_of({"pcp", "sdhss"});
  ResolvedIndex index = resolve_ecosystem(eco);
  auto a = run_all_checks(eco, index, CheckConfig::defaults());
  auto b = run_all_checks(eco, index, CheckConfig::defaults());
  EXPECT_EQ(a, b);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    EXPECT_LE(a[i].code, a[i + 1].code);
  }
  EXPECT_EQ(format_text(a), format_text(b));
}

// Every check against its brute-force restatement on random ecosystems.
TEST(ChecksOracle, RandomEcosystems) {
  std::mt19937 rng(4242);
  for (int i = 0; i < 200; ++i) {
    Ecosystem eco = testing::random_ecosystem(rng);
    ResolvedIndex index = resolve_ecosystem(eco);
    testing::Closure cl(eco);
    PartitionRoots roots = testing::oracle_declared_roots(eco);
    ASSERT_EQ(keys_of(check_ontoclean(index)), testing::oracle_ontoclean(eco, cl));
    ASSERT_EQ(keys_of(check_top_category_partition(index)), testing::oracle_top_category_partition(cl, roots));
    ASSERT_EQ(keys_of(check_layer_discipline(eco, index)), testing::oracle_layer_discipline(eco, cl));
    ASSERT_EQ(keys_of(check_property_refinement(index)), testing::oracle_property_refinement(eco, cl));
    ASSERT_EQ(keys_of(check_participation_and_anchor(index)), testing::oracle_participation(eco, cl, roots));

    CheckConfig config = testing::random_config(rng, index);
    PartitionRoots used = config.partition_roots ? *config.partition_roots : roots;
    std::vector<Key> expected;
    auto add = [&](std::string_view id, std::vector<Key> keys) {
      if (!config.enabled.count(std::string(id))) return;
      expected.insert(expected.end(), keys.begin(), keys.end());
    };
    add(kCheckOntoClean, testing::oracle_ontoclean(eco, cl));
    add(kCheckTopCategory, testing::oracle_top_category_partition(cl, used));
    add(kCheckLayerDiscipline, testing::oracle_layer_discipline(eco, cl));
    add(kCheckPropertyRefinement, testing::oracle_property_refinement(eco, cl));
    add(kCheckParticipation, testing::oracle_participation(eco, cl, used));
    for (auto& [code, severity, subjects] : expected) {
      if (auto it = config.severity_overrides.find(code); it != config.severity_overrides.end()) severity = it->second;
    }
    testing::sort_keys(expected);
    ASSERT_EQ(keys_of(run_all_checks(eco, index, config)), expected);
  }
}

}  // namespace
}  // namespace ontoeco
