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

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ontoeco {

// Orders strings so that embedded digit runs compare by value ("E2" < "E10").
// Falls back to plain byte order when two strings are numerically equal
// ("E02" vs "E2"), which keeps the order total.
std::strong_ordering natural_compare(std::string_view a, std::string_view b);

inline bool natural_less(std::string_view a, std::string_view b) {
  return natural_compare(a, b) < 0;
}

struct ClassTag {};
struct PropertyTag {};

// A (prefix, local id) reference such as crm:E2 or sdh:P43. Ordering is the
// project-wide tie-break: prefix bytewise, then local id numeric-aware.
template <class Tag>
struct BasicRef {
  std::string prefix;
  std::string local_id;

  std::string str() const { return prefix + ":" + local_id; }

  friend bool operator==(const BasicRef&, const BasicRef&) = default;
  friend std::strong_ordering operator<=>(const BasicRef& a, const BasicRef& b) {
    if (auto c = a.prefix.compare(b.prefix); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return natural_compare(a.local_id, b.local_id);
  }
};

using ClassRef = BasicRef<ClassTag>;
using PropertyRef = BasicRef<PropertyTag>;

// Splits "prefix:LOCAL"; nullopt when either part is empty or the local part
// contains whitespace.
std::optional<std::pair<std::string, std::string>> split_ref(std::string_view text);

template <class Ref>
std::optional<Ref> parse_ref(std::string_view text) {
  auto parts = split_ref(text);
  if (!parts) return std::nullopt;
  return Ref{std::move(parts->first), std::move(parts->second)};
}

// Diagnostic subjects are plain strings (refs or instance IRIs). They sort
// like refs: text before the first ':' bytewise, remainder numeric-aware.
std::strong_ordering subject_compare(std::string_view a, std::string_view b);

}  // namespace ontoeco
