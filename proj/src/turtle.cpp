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

#include "ontoeco/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "ontoeco/error.hpp"

namespace ontoeco {
namespace {

constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

std::string ns_iri(const std::string& base_iri) { return base_iri + "/"; }

std::string escape_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

bool pname_safe(std::string_view local) {
  if (local.empty() || local.front() == '-') return false;
  return std::all_of(local.begin(), local.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

// ---------------------------------------------------------------- export

class Writer {
 public:
  explicit Writer(const ResolvedIndex& index) : index_(index) {}

  template <class Tag>
  std::string term(const BasicRef<Tag>& ref) {
    used_.insert(ref.prefix);
    if (pname_safe(ref.local_id)) return ref.prefix + ":" + ref.local_id;
    return "<" + ns_iri(index_.find_namespace(ref.prefix)->base_iri) + ref.local_id + ">";
  }

  const std::set<std::string>& used() const { return used_; }

 private:
  const ResolvedIndex& index_;
  std::set<std::string> used_;
};

struct Block {
  std::string subject;
  std::vector<std::pair<std::string, std::vector<std::string>>> predicates;

  void add(std::string predicate, std::string object) {
    for (auto& [p, objects] : predicates) {
      if (p == predicate) {
        objects.push_back(std::move(object));
        return;
      }
    }
    predicates.push_back({std::move(predicate), {std::move(object)}});
  }

  std::string render() const {
    std::string out = subject;
    for (std::size_t i = 0; i < predicates.size(); ++i) {
      out += (i == 0 ? " " : " ;\n    ") + predicates[i].first + " ";
      for (std::size_t j = 0; j < predicates[i].second.size(); ++j) {
        out += (j == 0 ? "" : ", ") + predicates[i].second[j];
      }
    }
    return out + " .\n";
  }
};

// ---------------------------------------------------------------- import

struct Term {
  enum Kind { kIri, kLiteral } kind = kIri;
  std::string value;
  std::string datatype;  // literals only; empty for plain or language-tagged
};

struct Triple {
  Term subject;
  std::string predicate;
  Term object;
  std::size_t line;
};

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view text) : text_(text) {}

  std::vector<Triple> parse() {
    while (true) {
      skip_ws();
      if (eof()) break;
      if (peek() == '@' || starts_with_keyword("PREFIX") || starts_with_keyword("BASE")) {
        directive();
      } else {
        triples();
      }
    }
    return std::move(triples_);
  }

  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kSyntax, std::to_string(line_) + ":" + std::to_string(col_) + ": " + what);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  bool starts_with_keyword(std::string_view kw) const {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
    }
    std::size_t after = pos_ + kw.size();
    return after == text_.size() || std::isspace(static_cast<unsigned char>(text_[after]));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  std::string name_chars() {
    std::string out;
    while (!eof()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
          static_cast<unsigned char>(c) >= 0x80) {
        out += get();
      } else {
        break;
      }
    }
    // A trailing '.' terminates the statement, not the name.
    while (!out.empty() && out.back() == '.') {
      out.pop_back();
      --pos_;
      --col_;
    }
    return out;
  }

  std::string iriref() {
    get();  // '<'
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated IRI");
      char c = get();
      if (c == '>') break;
      if (std::isspace(static_cast<unsigned char>(c))) fail("whitespace in IRI");
      out += c;
    }
    return out;
  }

  void directive() {
    bool sparql = peek() != '@';
    if (!sparql) get();
    std::string kw = name_chars();
    std::transform(kw.begin(), kw.end(), kw.begin(), [](unsigned char c) { return std::tolower(c); });
    if (kw != "prefix") fail("unsupported directive '" + kw + "'");
    skip_ws();
    std::string name = name_chars();
    if (peek() != ':') fail("expected ':' after prefix name");
    get();
    skip_ws();
    if (peek() != '<') fail("expected IRI in prefix declaration");
    prefixes_[name] = iriref();
    if (!sparql) expect('.');
  }

  std::string pname() {
    std::string prefix = name_chars();
    if (peek() != ':') fail("expected prefixed name");
    get();
    std::string local = name_chars();
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
    return it->second + local;
  }

  Term iri_term() {
    skip_ws();
    char c = peek();
    if (c == '<') return Term{Term::kIri, iriref(), {}};
    if (c == '[' || (c == '_' && pos_ + 1 < text_.size() && text_[pos_ + 1] == ':')) {
      fail("blank nodes are not supported");
    }
    if (c == '(') fail("collections are not supported");
    if (std::isalpha(static_cast<unsigned char>(c)) || c == ':' || c == '_') return Term{Term::kIri, pname(), {}};
    fail("expected an IRI");
  }

  // Short or long string in either quote style.
  std::string string_body() {
    const char quote = get();
    bool long_form = false;
    if (pos_ + 1 < text_.size() && text_[pos_] == quote && text_[pos_ + 1] == quote) {
      get();
      get();
      long_form = true;
    } else if (!eof() && peek() == quote) {
      get();
      return {};
    }
    std::string out;
    while (true) {
      if (eof() || (!long_form && peek() == '\n')) fail("unterminated string");
      char c = get();
      if (c == quote) {
        if (!long_form) break;
        if (pos_ + 1 < text_.size() && text_[pos_] == quote && text_[pos_ + 1] == quote) {
          get();
          get();
          break;
        }
      }
      if (c == '\\') {
        if (eof()) fail("unterminated escape");
        char e = get();
        switch (e) {
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\'': out += '\''; break;
          case '\\': out += '\\'; break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
        continue;
      }
      out += c;
    }
    return out;
  }

  Term object() {
    skip_ws();
    char c = peek();
    if (c == '"' || c == '\'') {
      Term t{Term::kLiteral, string_body(), {}};
      if (peek() == '@') {
        get();
        std::string lang = name_chars();
        if (lang.empty()) fail("empty language tag");
      } else if (peek() == '^') {
        get();
        if (peek() != '^') fail("expected '^^'");
        get();
        t.datatype = iri_term().value;
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      std::string num;
      while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-' || peek() == '+')) {
        num += get();
      }
      return Term{Term::kLiteral, num, std::string(kXsd) + "integer"};
    }
    if (starts_with_keyword("TRUE") || starts_with_keyword("FALSE")) {
      std::string b = name_chars();
      return Term{Term::kLiteral, b, std::string(kXsd) + "boolean"};
    }
    return iri_term();
  }

  std::string verb() {
    skip_ws();
    if (peek() == 'a' && pos_ + 1 < text_.size() &&
        (std::isspace(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '<')) {
      get();
      return std::string(kRdf) + "type";
    }
    return iri_term().value;
  }

  void triples() {
    Term subject = iri_term();
    while (true) {
      std::size_t line = line_;
      std::string predicate = verb();
      while (true) {
        Term obj = object();
        triples_.push_back(Triple{subject, predicate, std::move(obj), line});
        skip_ws();
        if (peek() != ',') break;
        get();
      }
      skip_ws();
      if (peek() == ';') {
        while (peek() == ';') {
          get();
          skip_ws();
        }
        if (peek() == '.') break;
        continue;
      }
      break;
    }
    expect('.');
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::map<std::string, std::string> prefixes_;
  std::vector<Triple> triples_;
};

std::string describe(const Triple& t) {
  std::string obj = t.object.kind == Term::kLiteral ? escape_string(t.object.value) : "<" + t.object.value + ">";
  return "line " + std::to_string(t.line) + ": <" + t.subject.value + "> <" + t.predicate + "> " + obj;
}

}  // namespace

std::string export_turtle(const ResolvedIndex& index, TurtleDialect dialect,
                          std::span<const std::string> selection) {
  std::vector<const NamespaceInfo*> selected;
  for (const auto& prefix : selection) {
    const NamespaceInfo* ns = index.find_namespace(prefix);
    if (ns == nullptr) throw Error(ErrorKind::kUnknownPrefix, "no namespace with prefix \"" + prefix + "\"");
    if (std::find(selected.begin(), selected.end(), ns) == selected.end()) selected.push_back(ns);
  }
  std::sort(selected.begin(), selected.end(),
            [](const NamespaceInfo* a, const NamespaceInfo* b) { return a->prefix < b->prefix; });
  const bool owl = dialect == TurtleDialect::kOwlDl;

  Writer w(index);
  std::vector<Block> headers;
  if (owl) {
    for (const NamespaceInfo* ns : selected) {
      Block b{"<" + ns->base_iri + ">", {}};
      b.add("a", "owl:Ontology");
      b.add("owl:versionInfo", escape_string(ns->version));
      for (const auto& dep : ns->depends_on) b.add("onto:dependency", escape_string(dep.prefix + " " + dep.version));
      headers.push_back(std::move(b));
    }
  }

  std::map<ClassRef, Block> class_blocks;
  std::map<PropertyRef, Block> property_blocks;
  for (const NamespaceInfo* ns : selected) {
    for (const auto& ref : ns->classes) {
      const ClassDef& c = index.class_def(ref);
      Block& b = class_blocks[ref];
      b.subject = w.term(ref);
      b.add("a", owl ? "owl:Class" : "rdfs:Class");
      b.add("rdfs:label", escape_string(c.label));
      if (!c.scope_note.empty()) b.add("rdfs:comment", escape_string(c.scope_note));
      for (const auto& s : c.superclasses) b.add("rdfs:subClassOf", w.term(s));
    }
    for (const auto& ref : ns->properties) {
      const PropertyDef& p = index.property_def(ref);
      Block& b = property_blocks[ref];
      b.subject = w.term(ref);
      b.add("a", !owl ? "rdf:Property" : p.range ? "owl:ObjectProperty" : "owl:DatatypeProperty");
      b.add("rdfs:label", escape_string(p.label));
      if (owl && !p.inverse_label.empty()) b.add("onto:inverseLabel", escape_string(p.inverse_label));
      if (owl) b.add("onto:quantifier", escape_string(format_quantifier(p.quantifier)));
      b.add("rdfs:domain", w.term(p.domain));
      b.add("rdfs:range", p.range ? w.term(*p.range) : std::string("rdfs:Literal"));
      for (const auto& s : p.superproperties) b.add("rdfs:subPropertyOf", w.term(s));
    }
  }
  // Alignment edges go into the foreign subject's block.
  for (const NamespaceInfo* ns : selected) {
    for (const auto& a : ns->alignments) {
      Block& b = class_blocks[a.subclass];
      if (b.subject.empty()) b.subject = w.term(a.subclass);
      b.add("rdfs:subClassOf", w.term(a.superclass));
    }
  }

  std::map<std::string, std::string> prefixes{{"rdf", std::string(kRdf)}, {"rdfs", std::string(kRdfs)}};
  if (owl) {
    prefixes["owl"] = std::string(kOwl);
    prefixes["onto"] = std::string(kVocabIri);
  }
  for (const auto& p : w.used()) prefixes[p] = ns_iri(index.find_namespace(p)->base_iri);
  for (const NamespaceInfo* ns : selected) prefixes[ns->prefix] = ns_iri(ns->base_iri);

  std::string out;
  for (const auto& [name, iri] : prefixes) out += "@prefix " + name + ": <" + iri + "> .\n";
  for (const auto& b : headers) out += "\n" + b.render();
  for (const auto& [_, b] : class_blocks) out += "\n" + b.render();
  for (const auto& [_, b] : property_blocks) out += "\n" + b.render();
  return out;
}

ImportResult import_turtle(std::string_view text, std::string_view prefix, Level level) {
  TurtleParser parser(text);
  std::vector<Triple> triples = parser.parse();

  ImportResult result;
  Namespace& ns = result.ns;
  ns.prefix = std::string(prefix);
  ns.level = level;
  ns.version = "1.0";
  ns.base_iri = "urn:" + ns.prefix;
  // Namespace IRIs by prefix; the own prefix decides the base IRI.
  std::map<std::string, std::string> ns_prefixes;
  for (const auto& [name, iri] : parser.prefixes()) {
    if (iri.size() > 1 && iri.back() == '/' && name != "rdf" && name != "rdfs" && name != "owl" && name != "onto") {
      ns_prefixes[name] = iri;
    }
  }
  if (auto it = ns_prefixes.find(ns.prefix); it != ns_prefixes.end()) {
    ns.base_iri = it->second.substr(0, it->second.size() - 1);
  }

  auto to_ref = [&](const std::string& iri) -> std::optional<std::pair<std::string, std::string>> {
    std::optional<std::pair<std::string, std::string>> best;
    std::size_t best_len = 0;
    for (const auto& [name, base] : ns_prefixes) {
      if (iri.size() > base.size() && iri.compare(0, base.size(), base) == 0 && base.size() > best_len) {
        std::string local = iri.substr(base.size());
        if (local.find_first_of("/#") != std::string::npos) continue;
        best = std::pair{name, local};
        best_len = base.size();
      }
    }
    return best;
  };
  auto is = [](const std::string& iri, std::string_view vocab, std::string_view local) {
    return iri.size() == vocab.size() + local.size() && iri.compare(0, vocab.size(), vocab) == 0 &&
           iri.compare(vocab.size(), std::string::npos, local) == 0;
  };

  // Group triples by subject in first-seen order.
  std::vector<std::string> order;
  std::map<std::string, std::vector<const Triple*>> by_subject;
  for (const auto& t : triples) {
    auto [it, inserted] = by_subject.try_emplace(t.subject.value);
    if (inserted) order.push_back(t.subject.value);
    it->second.push_back(&t);
  }

  auto single = [&](const std::string& subject, std::optional<std::string>& slot, const std::string& value,
                    const char* what) {
    if (slot && *slot != value) {
      auto ref = to_ref(subject);
      std::string name = ref ? ref->first + ":" + ref->second : "<" + subject + ">";
      throw Error(ErrorKind::kUnsupportedStructure, name + " has more than one " + what);
    }
    slot = value;
  };

  for (const auto& subject : order) {
    const auto& ts = by_subject[subject];
    auto ref = to_ref(subject);
    bool own = ref && ref->first == ns.prefix;

    if (subject == ns.base_iri) {
      for (const Triple* t : ts) {
        if (is(t->predicate, kOwl, "versionInfo") && t->object.kind == Term::kLiteral) {
          ns.version = t->object.value;
        } else if (is(t->predicate, kVocabIri, "dependency") && t->object.kind == Term::kLiteral) {
          auto space = t->object.value.find(' ');
          if (space == std::string::npos) {
            result.skipped.push_back(describe(*t));
            continue;
          }
          ns.depends_on.push_back(Dependency{t->object.value.substr(0, space), t->object.value.substr(space + 1)});
        } else if (!(is(t->predicate, kRdf, "type") && is(t->object.value, kOwl, "Ontology"))) {
          result.skipped.push_back(describe(*t));
        }
      }
      continue;
    }

    if (!own) {
      // Foreign subject: only subclass-of edges onto own classes survive, as alignments.
      for (const Triple* t : ts) {
        auto sup = t->object.kind == Term::kIri ? to_ref(t->object.value) : std::nullopt;
        if (ref && is(t->predicate, kRdfs, "subClassOf") && sup && sup->first == ns.prefix) {
          ns.alignments.push_back(Alignment{ClassRef{ref->first, ref->second}, ClassRef{sup->first, sup->second}});
        } else {
          result.skipped.push_back(describe(*t));
        }
      }
      continue;
    }

    bool is_class = false;
    bool is_property = false;
    for (const Triple* t : ts) {
      if (!is(t->predicate, kRdf, "type")) continue;
      const std::string& o = t->object.value;
      if (is(o, kRdfs, "Class") || is(o, kOwl, "Class")) is_class = true;
      if (is(o, kRdf, "Property") || is(o, kOwl, "ObjectProperty") || is(o, kOwl, "DatatypeProperty")) {
        is_property = true;
      }
    }
    if (is_class == is_property) {
      for (const Triple* t : ts) result.skipped.push_back(describe(*t));
      continue;
    }

    std::optional<std::string> label, comment, inverse, quantifier, domain, range;
    std::vector<std::string> supers;
    for (const Triple* t : ts) {
      const std::string& p = t->predicate;
      bool literal = t->object.kind == Term::kLiteral;
      if (is(p, kRdf, "type")) {
        const std::string& o = t->object.value;
        bool known = is(o, kRdfs, "Class") || is(o, kOwl, "Class") || is(o, kRdf, "Property") ||
                     is(o, kOwl, "ObjectProperty") || is(o, kOwl, "DatatypeProperty");
        if (!known) result.skipped.push_back(describe(*t));
      } else if (is(p, kRdfs, "label") && literal) {
        single(subject, label, t->object.value, "label");
      } else if (is(p, kRdfs, "comment") && literal && is_class) {
        single(subject, comment, t->object.value, "comment");
      } else if (is(p, kVocabIri, "inverseLabel") && literal && is_property) {
        single(subject, inverse, t->object.value, "inverse label");
      } else if (is(p, kVocabIri, "quantifier") && literal && is_property) {
        single(subject, quantifier, t->object.value, "quantifier");
      } else if (is(p, kRdfs, "subClassOf") && !literal && is_class && to_ref(t->object.value)) {
        supers.push_back(t->object.value);
      } else if (is(p, kRdfs, "subPropertyOf") && !literal && is_property && to_ref(t->object.value)) {
        supers.push_back(t->object.value);
      } else if (is(p, kRdfs, "domain") && !literal && is_property) {
        single(subject, domain, t->object.value, "domain");
      } else if (is(p, kRdfs, "range") && !literal && is_property) {
        single(subject, range, t->object.value, "range");
      } else {
        result.skipped.push_back(describe(*t));
      }
    }

    if (is_class) {
      ClassDef c;
      c.ref = ClassRef{ref->first, ref->second};
      c.label = label.value_or(ref->second);
      c.scope_note = comment.value_or("");
      for (const auto& s : supers) {
        auto r = to_ref(s);
        c.superclasses.push_back(ClassRef{r->first, r->second});
      }
      ns.classes.push_back(std::move(c));
      continue;
    }

    PropertyDef p;
    p.ref = PropertyRef{ref->first, ref->second};
    p.label = label.value_or(ref->second);
    p.inverse_label = inverse.value_or("");
    auto dom = domain ? to_ref(*domain) : std::nullopt;
    if (!dom) {
      result.skipped.push_back("<" + subject + ">: property without a usable domain");
      continue;
    }
    p.domain = ClassRef{dom->first, dom->second};
    if (range && !is(*range, kRdfs, "Literal") && range->compare(0, kXsd.size(), kXsd) != 0) {
      auto rng = to_ref(*range);
      if (!rng) {
        result.skipped.push_back("<" + subject + ">: property without a usable range");
        continue;
      }
      p.range = ClassRef{rng->first, rng->second};
    }
    if (quantifier) {
      try {
        p.quantifier = parse_quantifier(*quantifier);
      } catch (const Error&) {
        result.skipped.push_back("<" + subject + ">: malformed quantifier " + escape_string(*quantifier));
      }
    }
    for (const auto& s : supers) {
      auto r = to_ref(s);
      p.superproperties.push_back(PropertyRef{r->first, r->second});
    }
    ns.properties.push_back(std::move(p));
  }

  canonicalize(ns);
  return result;
}

}  // namespace ontoeco
