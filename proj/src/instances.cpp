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

#include "ontoeco/instances.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ontoeco/error.hpp"

namespace ontoeco {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kSyntax, "line " + std::to_string(line) + ": " + what);
}

// Pops one whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  rest = trim(rest);
  std::size_t end = 0;
  while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
  std::string_view tok = rest.substr(0, end);
  rest.remove_prefix(end);
  return tok;
}

std::string iri_token(std::string_view tok, std::size_t line) {
  if (tok.size() >= 2 && tok.front() == '<' && tok.back() == '>') tok = tok.substr(1, tok.size() - 2);
  if (tok.empty() || tok.front() == '"' || tok.find_first_of("<>") != std::string_view::npos) {
    syntax(line, "expected an IRI");
  }
  return std::string(tok);
}

Literal parse_literal(std::string_view rest, std::size_t line) {
  rest = trim(rest);
  if (rest.empty() || rest.front() != '"') syntax(line, "expected a quoted literal");
  std::string value;
  std::size_t i = 1;
  for (; i < rest.size(); ++i) {
    char c = rest[i];
    if (c == '"') break;
    if (c == '\\') {
      if (++i >= rest.size()) syntax(line, "unterminated escape");
      switch (rest[i]) {
        case 'n': value += '\n'; break;
        case 't': value += '\t'; break;
        case 'r': value += '\r'; break;
        case '"': value += '"'; break;
        case '\\': value += '\\'; break;
        default: syntax(line, "unknown escape in literal");
      }
      continue;
    }
    value += c;
  }
  if (i >= rest.size()) syntax(line, "unterminated literal");
  if (!trim(rest.substr(i + 1)).empty()) syntax(line, "trailing text after literal");
  return Literal{std::move(value)};
}

std::string quote_literal(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string object_text(const Statement& s) {
  return s.literal_object() ? quote_literal(std::get<Literal>(s.object).value) : s.object_iri();
}

}  // namespace

InstanceGraph parse_instance_graph(std::string_view text) {
  InstanceGraph graph;
  std::vector<std::pair<std::string, std::size_t>> mentions;  // IRIs that must be declared
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::string_view rest = line;
    std::string_view keyword = next_token(rest);
    if (keyword == "entity") {
      std::string iri = iri_token(next_token(rest), line_no);
      if (next_token(rest) != "a") syntax(line_no, "expected 'a' after entity IRI");
      auto& classes = graph.entities[iri];
      rest = trim(rest);
      if (rest.empty()) syntax(line_no, "entity without classes");
      while (true) {
        auto comma = rest.find(',');
        std::string_view item = trim(rest.substr(0, comma));
        auto ref = parse_ref<ClassRef>(item);
        if (!ref) syntax(line_no, "malformed class reference \"" + std::string(item) + "\"");
        classes.insert(*ref);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    } else if (keyword == "stmt") {
      Statement s;
      s.subject = iri_token(next_token(rest), line_no);
      std::string_view prop = next_token(rest);
      auto ref = parse_ref<PropertyRef>(prop);
      if (!ref) syntax(line_no, "malformed property reference \"" + std::string(prop) + "\"");
      s.property = *ref;
      rest = trim(rest);
      if (!rest.empty() && rest.front() == '"') {
        s.object = parse_literal(rest, line_no);
      } else {
        std::string obj = iri_token(next_token(rest), line_no);
        if (!trim(rest).empty()) syntax(line_no, "trailing text after object");
        mentions.emplace_back(obj, line_no);
        s.object = std::move(obj);
      }
      mentions.emplace_back(s.subject, line_no);
      graph.statements.insert(std::move(s));
    } else if (keyword == "year") {
      std::string iri = iri_token(next_token(rest), line_no);
      std::string_view num = next_token(rest);
      if (!trim(rest).empty()) syntax(line_no, "trailing text after year");
      long long year = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), year);
      if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size()) syntax(line_no, "malformed year");
      auto [it, inserted] = graph.years.emplace(iri, year);
      if (!inserted && it->second != year) syntax(line_no, "conflicting year for " + iri);
      mentions.emplace_back(iri, line_no);
    } else {
      syntax(line_no, "unknown keyword \"" + std::string(keyword) + "\"");
    }
  }
  for (const auto& [iri, line] : mentions) {
    if (!graph.entities.count(iri)) {
      throw Error(ErrorKind::kUndeclaredEntity, "line " + std::to_string(line) + ": " + iri);
    }
  }
  return graph;
}

std::string serialize_instance_graph(const InstanceGraph& graph) {
  std::string out;
  for (const auto& [iri, classes] : graph.entities) {
    out += "entity " + iri + " a";
    bool first = true;
    for (const auto& c : classes) {
      out += (first ? " " : ", ") + c.str();
      first = false;
    }
    out += "\n";
  }
  for (const auto& [iri, year] : graph.years) out += "year " + iri + " " + std::to_string(year) + "\n";
  for (const auto& s : graph.statements) {
    out += "stmt " + s.subject + " " + s.property.str() + " " + object_text(s) + "\n";
  }
  return out;
}

std::vector<Diagnostic> validate_instances(const ResolvedIndex& index, const Profile& profile,
                                           const InstanceGraph& graph) {
  for (const auto& d : check_profile(index, profile)) {
    if (d.severity == Severity::kError) {
      throw Error(ErrorKind::kProfileInvalid, "profile \"" + profile.name + "\": " + d.code + " " + d.message);
    }
  }

  auto instance_of = [&](const std::string& iri, const ClassRef& cls) {
    auto it = graph.entities.find(iri);
    if (it == graph.entities.end() || index.find_class(cls) == nullptr) return false;
    return std::any_of(it->second.begin(), it->second.end(), [&](const ClassRef& a) {
      return index.find_class(a) != nullptr && (a == cls || index.has_ancestor(a, cls));
    });
  };

  std::vector<Diagnostic> out;
  for (const auto& [iri, classes] : graph.entities) {
    for (const auto& c : classes) {
      if (!profile.classes.count(c)) {
        out.push_back(make_diagnostic("IV1", {iri, c.str()}, "class " + c.str() + " is not in the profile"));
      }
    }
  }

  for (const auto& s : graph.statements) {
    std::vector<std::string> subjects{s.subject, s.property.str(), object_text(s)};
    if (!profile.properties.count(s.property)) {
      out.push_back(make_diagnostic("IV2", subjects, "property " + s.property.str() + " is not in the profile"));
      continue;
    }
    const PropertyDef& def = index.property_def(s.property);
    if (!instance_of(s.subject, def.domain)) {
      out.push_back(make_diagnostic("IV3", subjects, "subject is not an instance of " + def.domain.str()));
    }
    if (s.literal_object() && def.range) {
      out.push_back(make_diagnostic("IV4", subjects, "literal object but range is " + def.range->str()));
    } else if (!s.literal_object() && !def.range) {
      out.push_back(make_diagnostic("IV4", subjects, "entity object but range is a primitive value"));
    } else if (!s.literal_object() && !instance_of(s.object_iri(), *def.range)) {
      out.push_back(make_diagnostic("IV4", subjects, "object is not an instance of " + def.range->str()));
    }
  }

  auto bound = [](std::uint32_t v) { return v == Quantifier::kUnbounded ? std::string("n") : std::to_string(v); };
  for (const auto& p : profile.properties) {
    const PropertyDef& def = index.property_def(p);
    const Quantifier q = profile.effective_quantifier(def);
    for (const auto& [iri, _] : graph.entities) {
      if (instance_of(iri, def.domain)) {
        auto n = static_cast<std::uint32_t>(std::count_if(graph.statements.begin(), graph.statements.end(),
                                                          [&](const Statement& s) {
                                                            return s.subject == iri && s.property == p;
                                                          }));
        if (n < q.range_min || n > q.range_max) {
          out.push_back(make_diagnostic("IV5", {iri, p.str()},
                                        std::to_string(n) + " outgoing, expected " + std::to_string(q.range_min) +
                                            ".." + bound(q.range_max)));
        }
      }
      if (def.range && instance_of(iri, *def.range)) {
        auto n = static_cast<std::uint32_t>(std::count_if(graph.statements.begin(), graph.statements.end(),
                                                          [&](const Statement& s) {
                                                            return !s.literal_object() && s.object_iri() == iri &&
                                                                   s.property == p;
                                                          }));
        if (n < q.domain_min || n > q.domain_max) {
          out.push_back(make_diagnostic("IV5", {iri, p.str()},
                                        std::to_string(n) + " incoming, expected " + std::to_string(q.domain_min) +
                                            ".." + bound(q.domain_max)));
        }
      }
    }
  }

  auto incoming = [&](const std::string& iri, const PropertyRef& p) {
    std::vector<std::string> subjects;
    for (const auto& s : graph.statements) {
      if (s.property == p && !s.literal_object() && s.object_iri() == iri) subjects.push_back(s.subject);
    }
    return subjects;
  };
  for (const auto& [iri, _] : graph.entities) {
    if (!instance_of(iri, kQualityRoot)) continue;
    auto effects = incoming(iri, kEffectsProperty);
    auto ends = incoming(iri, kEndsProperty);
    if (effects.size() > 1) {
      out.push_back(make_diagnostic("IV6", {iri, kEffectsProperty.str()},
                                    "quality effected by " + std::to_string(effects.size()) + " events"));
    }
    if (ends.size() > 1) {
      out.push_back(make_diagnostic("IV6", {iri, kEndsProperty.str()},
                                    "quality ended by " + std::to_string(ends.size()) + " events"));
    }
    for (const auto& e : effects) {
      auto ey = graph.years.find(e);
      if (ey == graph.years.end()) continue;
      auto late = std::find_if(ends.begin(), ends.end(), [&](const std::string& f) {
        auto fy = graph.years.find(f);
        return fy != graph.years.end() && ey->second > fy->second;
      });
      if (late != ends.end()) {
        out.push_back(make_diagnostic("IV7", {iri},
                                      "effected in " + std::to_string(ey->second) + " by " + e + " but ended in " +
                                          std::to_string(graph.years.at(*late)) + " by " + *late));
        break;
      }
    }
  }

  for (const auto& s : graph.statements) {
    if (s.property != kSettingProperty) continue;
    bool subject_ok = instance_of(s.subject, kIntentionRoot);
    bool object_ok = !s.literal_object() && instance_of(s.object_iri(), kSpatioTemporalRoot);
    if (!subject_ok || !object_ok) {
      out.push_back(make_diagnostic("IV8", {s.subject, s.property.str(), object_text(s)},
                                    !subject_ok ? "setting subject is not an intention"
                                                : "setting object is not a spatio-temporal phenomenon"));
    }
  }

  sort_diagnostics(out);
  return out;
}

}  // namespace ontoeco
