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

namespace ontoeco {

enum class Severity { kError, kWarning, kInfo };

std::string_view to_string(Severity s);

struct Diagnostic {
  std::string code;
  Severity severity = Severity::kError;
  std::vector<std::string> subjects;
  std::string message;
  std::string check_id;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct CodeInfo {
  std::string_view code;
  std::string_view check_id;
  Severity default_severity;
  std::string_view summary;
};

// Every code the engine can emit.
std::span<const CodeInfo> code_catalog();
const CodeInfo* find_code(std::string_view code);

// Builds a diagnostic with the catalog's check id and default severity.
Diagnostic make_diagnostic(std::string_view code, std::vector<std::string> subjects, std::string message);

// Sort by (code, subjects); message breaks remaining ties.
void sort_diagnostics(std::vector<Diagnostic>& diags);

struct DiagnosticCounts {
  int errors = 0;
  int warnings = 0;
  int infos = 0;
};
DiagnosticCounts count(const std::vector<Diagnostic>& diags);

// `CODE severity subject subject: message`, one per line.
std::string format_text(const std::vector<Diagnostic>& diags, bool color = false);
std::string format_json(const std::vector<Diagnostic>& diags);

}  // namespace ontoeco
