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

// Brute-force reference implementations used to cross-check the library.
// They read the raw Ecosystem and never consult a ResolvedIndex.

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ontoeco/diagnostic.hpp"
#include "ontoeco/hierarchy.hpp"
#include "ontoeco/instances.hpp"
#include "ontoeco/model.hpp"
#include "ontoeco/profiles.hpp"
#include "ontoeco/turtle.hpp"

namespace ontoeco::testing {

// Shortest superclass-path distances over declared and alignment edges,
// computed with Floyd-Warshall.
class Closure {
 public:
  explicit Closure(const Ecosystem& eco);

  bool known(const ClassRef& c) const { return index_.count(c) > 0; }
  // Reflexive subsumption.
  bool subsumed(const ClassRef& a, const ClassRef& b) const;
  // -1 when b is not reachable from a.
  int distance(const ClassRef& a, const ClassRef& b) const;
  std::vector<ClassRef> ancestors(const ClassRef& c) const;
  std::vector<ClassRef> direct_supers(const ClassRef& c) const;
  const std::vector<ClassRef>& classes() const { return refs_; }

 private:
  std::vector<ClassRef> refs_;
  std::map<ClassRef, int> index_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<ClassRef>> direct_;
};

using Key = std::tuple<std::string, Severity, std::vector<std::string>>;

std::vector<Key> keys_of(const std::vector<Diagnostic>& diags);
Key key(std::string code, Severity severity, std::vector<std::string> subjects);
void sort_keys(std::vector<Key>& keys);
std::string describe(const std::vector<Key>& keys);

std::vector<InheritedProperty> oracle_inherited_properties(const Ecosystem& eco, const Closure& cl,
                                                           const ClassRef& c);
PartitionRoots oracle_declared_roots(const Ecosystem& eco);
TopCategory oracle_top_category(const Closure& cl, const PartitionRoots& roots, const ClassRef& c);

std::vector<Key> oracle_ontoclean(const Ecosystem& eco, const Closure& cl);
std::vector<Key> oracle_top_category_partition(const Closure& cl, const PartitionRoots& roots);
std::vector<Key> oracle_layer_discipline(const Ecosystem& eco, const Closure& cl);
std::vector<Key> oracle_property_refinement(const Ecosystem& eco, const Closure& cl);
std::vector<Key> oracle_participation(const Ecosystem& eco, const Closure& cl, const PartitionRoots& roots);

// Naive fixed point of the two closure rules.
Profile oracle_profile_closure(const Ecosystem& eco, const std::set<ClassRef>& classes,
                               const std::set<PropertyRef>& properties, const std::string& name);

std::vector<Key> oracle_validate(const Ecosystem& eco, const Profile& profile, const InstanceGraph& graph);


// What a Turtle round trip is expected to keep of `ns`: everything but tags,
// partition roots and property flags. The RDFS dialect also drops the
// version, dependencies, inverse labels and quantifiers.
Namespace turtle_view(const Namespace& ns, TurtleDialect dialect);

}  // namespace ontoeco::testing
