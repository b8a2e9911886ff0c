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

// Seeded random inputs for property tests.

#pragma once

#include <random>

#include "ontoeco/checks.hpp"
#include "ontoeco/index.hpp"
#include "ontoeco/instances.hpp"
#include "ontoeco/model.hpp"
#include "ontoeco/profiles.hpp"

namespace ontoeco::testing {

using Rng = std::mt19937;

// Acyclic, resolvable ecosystem with 1-4 namespaces, random levels, tags,
// partition roots, alignments and properties.
Ecosystem random_ecosystem(Rng& rng, int max_classes = 50, int max_properties = 30);

// Random enabled set, severity overrides and (sometimes) explicit roots.
CheckConfig random_config(Rng& rng, const ResolvedIndex& index);

Quantifier random_quantifier(Rng& rng);
Quantifier random_tightening(Rng& rng, const Quantifier& base);

// Random subset of the index's class and property refs.
ProfileSeeds random_seeds(Rng& rng, const ResolvedIndex& index, int max_size = 6);

// Graph over at most `max_entities` entities that mostly, but not always,
// respects the profile.
InstanceGraph random_graph(Rng& rng, const ResolvedIndex& index, const Profile& profile, int max_entities = 30);

// Random edits to labels, classes, edges and properties of `ns`.
Namespace mutate(Rng& rng, const Namespace& ns);

}  // namespace ontoeco::testing
