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

#include "ontoeco/diagnostic.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"
#include "ontoeco/ref.hpp"

namespace ontoeco {
namespace {

constexpr std::array<CodeInfo, 24> kCatalog{{
    {"EA1", "participation-anchor", Severity::kWarning, "essential property anchored on an anti-rigid class"},
    {"IV1", "instances", Severity::kError, "asserted class outside the profile"},
    {"IV2", "instances", Severity::kError, "statement property outside the profile"},
    {"IV3", "instances", Severity::kError, "subject is not an instance of the property domain"},
    {"IV4", "instances", Severity::kError, "object does not match the property range"},
    {"IV5", "instances", Severity::kError, "statement count outside the quantifier bounds"},
    {"IV6", "instances", Severity::kError, "quality effected or ended more than once"},
    {"IV7", "instances", Severity::kError, "quality ends before it is effected"},
    {"IV8", "instances", Severity::kError, "setting links a non-intention or a non-spatio-temporal object"},
    {"LD1", "layer-discipline", Severity::kError, "extension class not anchored in a lower layer"},
    {"LD2", "layer-discipline", Severity::kError, "superclass edge generalizes into a higher layer"},
    {"LD3", "layer-discipline", Severity::kWarning, "declared dependency never referenced"},
    {"OC1", "ontoclean", Severity::kError, "rigid class subsumed by an anti-rigid class"},
    {"OC2", "ontoclean", Severity::kError, "identity criterion not inherited"},
    {"OC3", "ontoclean", Severity::kError, "unity criterion contradicts the superclass"},
    {"OC4", "ontoclean", Severity::kError, "independent class under a dependent class"},
    {"PA1", "participation-anchor", Severity::kError, "participation does not link endurant and perdurant"},
    {"PF1", "profile", Severity::kError, "profile closure violation"},
    {"PF2", "profile", Severity::kError, "quantifier override does not tighten the base"},
    {"PF3", "profile", Severity::kError, "pinned namespace version mismatch"},
    {"PR1", "property-refinement", Severity::kError, "domain does not refine the superproperty domain"},
    {"PR2", "property-refinement", Severity::kError, "range does not refine the superproperty range"},
    {"TC1", "top-category", Severity::kError, "class reaches more than one partition root"},
    {"TC2", "top-category", Severity::kInfo, "class reaches no partition root"},
}};

const char* color_of(Severity s) {
  switch (s) {
    case Severity::kError: return "\x1b[31m";
    case Severity::kWarning: return "\x1b[33m";
    case Severity::kInfo: return "\x1b[36m";
  }
  return "";
}

}  // namespace

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::kError: return "error";
    case Severity::kWarning: return "warning";
    case Severity::kInfo: return "info";
  }
  return "?";
}

std::span<const CodeInfo> code_catalog() { return kCatalog; }

const CodeInfo* find_code(std::string_view code) {
  for (const auto& info : kCatalog) {
    if (info.code == code) return &info;
  }
  return nullptr;
}

Diagnostic make_diagnostic(std::string_view code, std::vector<std::string> subjects, std::string message) {
  const CodeInfo* info = find_code(code);
  return Diagnostic{std::string(code), info ? info->default_severity : Severity::kError, std::move(subjects),
                    std::move(message), info ? std::string(info->check_id) : std::string()};
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    if (a.code != b.code) return a.code < b.code;
    auto by_subjects = std::lexicographical_compare_three_way(
        a.subjects.begin(), a.subjects.end(), b.subjects.begin(), b.subjects.end(),
        [](const std::string& x, const std::string& y) { return subject_compare(x, y); });
    if (by_subjects != 0) return by_subjects < 0;
    return a.message < b.message;
  });
}

DiagnosticCounts count(const std::vector<Diagnostic>& diags) {
  DiagnosticCounts c;
  for (const auto& d : diags) {
    switch (d.severity) {
      case Severity::kError: ++c.errors; break;
      case Severity::kWarning: ++c.warnings; break;
      case Severity::kInfo: ++c.infos; break;
    }
  }
  return c;
}

std::string format_text(const std::vector<Diagnostic>& diags, bool color) {
  std::string out;
  for (const auto& d : diags) {
    out += d.code + " ";
    if (color) out += color_of(d.severity);
    out += to_string(d.severity);
    if (color) out += "\x1b[0m";
    for (const auto& s : d.subjects) out += " " + s;
    out += ": " + d.message + "\n";
  }
  return out;
}

std::string format_json(const std::vector<Diagnostic>& diags) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& d : diags) {
    nlohmann::ordered_json j;
    j["code"] = d.code;
    j["severity"] = to_string(d.severity);
    j["check"] = d.check_id;
    j["subjects"] = d.subjects;
    j["message"] = d.message;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace ontoeco
