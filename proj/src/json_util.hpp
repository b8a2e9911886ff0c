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

// Small helpers shared by the JSON readers (documents, profiles, configs).

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ontoeco/error.hpp"
#include "ontoeco/ref.hpp"

namespace ontoeco::json_util {

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::kSyntax, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                        " (byte " + std::to_string(e.byte) + "): " + e.what());
  }
}

inline void require_object(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorKind::kSchema, where + ": expected an object");
}

inline void check_keys(const nlohmann::json& obj, std::initializer_list<std::string_view> allowed,
                       const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || a == key;
    if (!known) throw Error(ErrorKind::kSchema, where + ": unknown key \"" + key + "\"");
  }
}

inline std::string string_field(const nlohmann::json& obj, const char* key, const std::string& where,
                                bool required = false) {
  if (!obj.contains(key)) {
    if (required) throw Error(ErrorKind::kSchema, where + ": missing key \"" + key + "\"");
    return {};
  }
  const auto& v = obj.at(key);
  if (!v.is_string()) throw Error(ErrorKind::kSchema, where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

inline const nlohmann::json& array_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  static const nlohmann::json kEmpty = nlohmann::json::array();
  if (!obj.contains(key)) return kEmpty;
  const auto& v = obj.at(key);
  if (!v.is_array()) throw Error(ErrorKind::kSchema, where + ": \"" + key + "\" must be an array");
  return v;
}

inline std::vector<std::string> string_list(const nlohmann::json& obj, const char* key, const std::string& where) {
  std::vector<std::string> out;
  for (const auto& v : array_field(obj, key, where)) {
    if (!v.is_string()) throw Error(ErrorKind::kSchema, where + ": \"" + key + "\" must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

template <class Ref>
Ref ref_value(std::string_view text, const std::string& where) {
  auto ref = parse_ref<Ref>(text);
  if (!ref) throw Error(ErrorKind::kSchema, where + ": malformed reference \"" + std::string(text) + "\"");
  return *ref;
}

}  // namespace ontoeco::json_util
