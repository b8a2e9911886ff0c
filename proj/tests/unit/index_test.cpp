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

#include <algorithm>
#include <random>
#include <stdexcept>

#include "errors.hpp"
#include "generators.hpp"
#include "ontoeco/fixtures.hpp"
#include "ontoeco/index.hpp"
#include "oracles.hpp"

namespace ontoeco {
namespace {

using testing::error_kind;
using testing::error_message;

Ecosystem all() { return Ecosystem{load_builtin("all")}; }

ClassDef& class_in(Ecosystem& eco, const ClassRef& ref) {
  for (auto& ns : eco.namespaces) {
    for (auto& c : ns.classes) {
      if (c.ref == ref) return c;
    }
  }
  throw std::logic_error(ref.str());
}

TEST(Resolve, FixtureEdgesResolve) {
  ResolvedIndex index = resolve_ecosystem(all());
  const auto& supers = index.direct_superclasses(ClassRef{"sdh", "C1"});
  EXPECT_EQ(supers, (std::vector<ClassRef>{{"crm", "E2"}}));
  EXPECT_TRUE(index.has_ancestor(ClassRef{"crm", "E53"}, ClassRef{"sdh", "C5"}));
  EXPECT_EQ(index.namespace_of(ClassRef{"sdh-so", "C13"}).level, Level::kSubdomain);
}

TEST(Resolve, EmptyEcosystem) {
  ResolvedIndex index = resolve_ecosystem(Ecosystem{});
  EXPECT_TRUE(index.classes().empty());
  EXPECT_TRUE(index.properties().empty());
  EXPECT_TRUE(index.namespaces().empty());
}

TEST(Resolve, DanglingSuperclassIsNamed) {
  Ecosystem eco = all();
  class_in(eco, ClassRef{"sdh", "C1"}).superclasses = {ClassRef{"crm", "E999"}};
  auto f = [&] { resolve_ecosystem(eco); };
  EXPECT_EQ(error_kind(f), ErrorKind::kDanglingReference);
  std::string msg = error_message(f);
  EXPECT_NE(msg.find("crm:E999"), std::string::npos) << msg;
  EXPECT_NE(msg.find("sdh:C1"), std::string::npos) << msg;
}

TEST(Resolve, DanglingPropertyEnds) {
  Ecosystem eco = all();
  eco.namespaces[1].properties[0].domain = ClassRef{"sdh", "C404"};
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kDanglingReference);
  eco = all();
  eco.namespaces[1].properties[0].superproperties = {PropertyRef{"crm", "P404"}};
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kDanglingReference);
}

TEST(Resolve, DependencyMustExistWithThatVersion) {
  Ecosystem eco = all();
  eco.namespaces[1].depends_on = {Dependency{"crm", "6.0"}};
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kDanglingReference);
  eco.namespaces[1].depends_on = {Dependency{"xyz", "1.0"}};
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kDanglingReference);
}

TEST(Resolve, DependencyOnAHigherLayerIsRejected) {
  Ecosystem eco = all();
  eco.namespaces[0].depends_on = {Dependency{"sdh-so", "1.0"}};  // crm (core) on a subdomain
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kInvalidDependency);
}

TEST(Resolve, DependencyCycle) {
  Ecosystem eco;
  for (const char* p : {"a", "b"}) {
    Namespace ns;
    ns.prefix = p;
    ns.base_iri = std::string("https://example.org/") + p;
    ns.version = "1.0";
    ns.level = Level::kCore;
    eco.namespaces.push_back(ns);
  }
  eco.namespaces[0].depends_on = {{"b", "1.0"}};
  eco.namespaces[1].depends_on = {{"a", "1.0"}};
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kCycleDetected);
}

TEST(Resolve, ClassCycleIsReportedAsAPath) {
  Ecosystem eco = all();
  class_in(eco, ClassRef{"crm", "E1"}).superclasses = {ClassRef{"crm", "E5"}};
  auto f = [&] { resolve_ecosystem(eco); };
  EXPECT_EQ(error_kind(f), ErrorKind::kCycleDetected);
  EXPECT_NE(error_message(f).find(" -> "), std::string::npos);
}

TEST(Resolve, SelfSuperclassAndPropertyCycles) {
  Ecosystem eco = all();
  class_in(eco, ClassRef{"crm", "E5"}).superclasses.push_back(ClassRef{"crm", "E5"});
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kCycleDetected);

  eco = all();
  for (auto& p : eco.namespaces[0].properties) {
    if (p.ref.local_id == "P12") p.superproperties = {PropertyRef{"crm", "P11"}};
  }
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kCycleDetected);
}

TEST(Resolve, DuplicatesAreRejected) {
  Ecosystem eco = all();
  eco.namespaces[0].classes.push_back(eco.namespaces[0].classes[0]);
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kDuplicateId);

  eco = all();
  PropertyDef clash = eco.namespaces[0].properties[0];
  clash.ref = PropertyRef{"crm", "E1"};  // shares an id with a class
  eco.namespaces[0].properties.push_back(clash);
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kDuplicateId);

  eco = all();
  eco.namespaces.push_back(eco.namespaces[0]);
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kDuplicatePrefix);

  eco = all();
  eco.namespaces[2].base_iri = eco.namespaces[1].base_iri;
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kDuplicatePrefix);

  eco = all();
  auto& e5 = class_in(eco, ClassRef{"crm", "E5"});
  e5.superclasses.push_back(e5.superclasses.front());
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kDuplicateId);
}

TEST(Resolve, AlignmentsMustPlaceForeignUnderOwn) {
  Ecosystem eco = all();
  eco.namespaces[1].alignments.push_back({ClassRef{"sdh", "C7"}, ClassRef{"sdh", "C5"}});
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kSchema);
  eco = all();
  eco.namespaces[1].alignments.push_back({ClassRef{"crm", "E5"}, ClassRef{"crm", "E1"}});
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kSchema);
  eco = all();
  eco.namespaces[1].alignments.push_back({ClassRef{"crm", "E404"}, ClassRef{"sdh", "C5"}});
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kDanglingReference);
}

TEST(Resolve, InvalidQuantifierIsASchemaError) {
  Ecosystem eco = all();
  eco.namespaces[0].properties[0].quantifier.range_min = 5;
  eco.namespaces[0].properties[0].quantifier.range_max = 1;
  EXPECT_EQ(error_kind([&] { resolve_ecosystem(eco); }), ErrorKind::kSchema);
}

TEST(Resolve, LookupsOfUnknownRefsThrow) {
  ResolvedIndex index = resolve_ecosystem(all());
  EXPECT_EQ(error_kind([&] { index.class_def(ClassRef{"crm", "E404"}); }), ErrorKind::kUnknownClass);
  EXPECT_EQ(error_kind([&] { index.property_def(PropertyRef{"crm", "P404"}); }), ErrorKind::kUnknownRef);
  EXPECT_EQ(index.find_class(ClassRef{"crm", "E404"}), nullptr);
  EXPECT_EQ(index.find_namespace("xyz"), nullptr);
}

TEST(Resolve, IsIdempotent) {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    ResolvedIndex index = resolve_ecosystem(testing::random_ecosystem(rng));
    EXPECT_EQ(resolve_ecosystem(to_ecosystem(index)), index);
  }
  ResolvedIndex fixture = resolve_ecosystem(all());
  EXPECT_EQ(resolve_ecosystem(to_ecosystem(fixture)), fixture);
  EXPECT_EQ(to_ecosystem(fixture), all());
}

TEST(Resolve, TotalAndAcyclic) {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    Ecosystem eco = testing::random_ecosystem(rng);
    ResolvedIndex index = resolve_ecosystem(eco);
    for (const auto& c : index.classes()) {
      const auto& anc = index.ancestors(c.ref);
      EXPECT_EQ(std::count(anc.begin(), anc.end(), c.ref), 0);
      for (const auto& s : c.superclasses) EXPECT_NE(index.find_class(s), nullptr);
      EXPECT_NE(index.find_namespace(c.ref.prefix), nullptr);
    }
    for (const auto& p : index.properties()) {
      EXPECT_NE(index.find_class(p.domain), nullptr);
      if (p.range) EXPECT_NE(index.find_class(*p.range), nullptr);
      for (const auto& s : p.superproperties) EXPECT_NE(index.find_property(s), nullptr);
    }
  }
}

TEST(Resolve, AncestorClosuresMatchTheOracle) {
  std::mt19937 rng(123);
  for (int i = 0; i < 100; ++i) {
    Ecosystem eco = testing::random_ecosystem(rng);
    ResolvedIndex index = resolve_ecosystem(eco);
    testing::Closure oracle(eco);
    for (const auto& c : index.classes()) {
      EXPECT_EQ(index.ancestors(c.ref), oracle.ancestors(c.ref)) << c.ref.str();
      EXPECT_EQ(index.direct_superclasses(c.ref), oracle.direct_supers(c.ref)) << c.ref.str();
      for (const auto& d : index.classes()) {
        EXPECT_EQ(index.has_ancestor(c.ref, d.ref), c.ref != d.ref && oracle.subsumed(c.ref, d.ref));
      }
    }
  }
}

}  // namespace
}  // namespace ontoeco
