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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontoeco/index.hpp"

namespace ontoeco {

enum class TurtleDialect { kRdfs, kOwlDl };

// Annotation vocabulary used by the OWL-DL dialect.
inline constexpr std::string_view kVocabIri = "urn:ontoeco:vocab#";

// Writes the selected namespaces as Turtle; an empty selection yields only
// the prefix declarations. Throws kUnknownPrefix.
std::string export_turtle(const ResolvedIndex& index, TurtleDialect dialect,
                          std::span<const std::string> selection);

struct ImportResult {
  Namespace ns;
  std::vector<std::string> skipped;  // one line per ignored triple or subject
};

// Reads Turtle restricted to the export vocabulary back into a namespace.
// Throws kSyntax (line:column) and kUnsupportedStructure for contradictory
// input such as two domains on one property.
ImportResult import_turtle(std::string_view text, std::string_view prefix, Level level);

}  // namespace ontoeco
