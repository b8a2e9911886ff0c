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

#include "ontoeco/error.hpp"

namespace ontoeco {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax: return "SyntaxError";
    case ErrorKind::kSchema: return "SchemaError";
    case ErrorKind::kDuplicatePrefix: return "DuplicatePrefix";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kDanglingReference: return "DanglingReference";
    case ErrorKind::kCycleDetected: return "CycleDetected";
    case ErrorKind::kInvalidDependency: return "InvalidDependency";
    case ErrorKind::kPrefixMismatch: return "PrefixMismatch";
    case ErrorKind::kUnknownPrefix: return "UnknownPrefix";
    case ErrorKind::kUnknownClass: return "UnknownClass";
    case ErrorKind::kUnknownRef: return "UnknownRef";
    case ErrorKind::kUnknownCheckId: return "UnknownCheckId";
    case ErrorKind::kUnknownFixture: return "UnknownFixture";
    case ErrorKind::kUnsupportedStructure: return "UnsupportedStructure";
    case ErrorKind::kUndeclaredEntity: return "UndeclaredEntity";
    case ErrorKind::kProfileInvalid: return "ProfileInvalid";
    case ErrorKind::kIo: return "IoError";
  }
  return "Error";
}

}  // namespace ontoeco
