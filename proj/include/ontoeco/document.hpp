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

#pragma once

#include <string>
#include <string_view>

#include "ontoeco/model.hpp"

namespace ontoeco {

// Reads the canonical `.onto.json` interchange document. The result is
// canonicalized. Throws kSyntax (with byte offset), kSchema (unknown key, bad
// enum, malformed ref or quantifier) and kDuplicatePrefix.
Ecosystem parse_ecosystem_document(std::string_view text);

// Deterministic output: namespaces by prefix, definitions by ref, fixed key
// order, two-space indentation, trailing newline.
std::string serialize_ecosystem_document(const Ecosystem& ecosystem);

}  // namespace ontoeco
