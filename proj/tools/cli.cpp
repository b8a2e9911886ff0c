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

#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ontoeco/checks.hpp"
#include "ontoeco/diff.hpp"
#include "ontoeco/document.hpp"
#include "ontoeco/error.hpp"
#include "ontoeco/fixtures.hpp"
#include "ontoeco/hierarchy.hpp"
#include "ontoeco/index.hpp"
#include "ontoeco/instances.hpp"
#include "ontoeco/profiles.hpp"
#include "ontoeco/turtle.hpp"

namespace ontoeco::cli {
namespace {

using nlohmann::ordered_json;

// Raised for command lines that parse but cannot be acted on.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "cannot read " + path);
  return buf.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::kIo, "cannot write " + path);
  file << text;
  if (!file.flush()) throw Error(ErrorKind::kIo, "cannot write " + path);
}

struct Inputs {
  std::vector<std::string> files;
  std::vector<std::string> builtins;

  void bind(CLI::App* cmd, const char* files_help = "Ecosystem documents (.onto.json)") {
    cmd->add_option("files", files, files_help);
    cmd->add_option("--builtin", builtins, "Built-in fixture to load (repeatable)")
        ->check(CLI::IsMember(builtin_choices()));
  }

  static std::vector<std::string> builtin_choices() {
    std::vector<std::string> names{"all"};
    for (auto n : fixture_names()) names.emplace_back(n);
    return names;
  }

  Ecosystem load() const {
    if (files.empty() && builtins.empty()) throw UsageError("no input files or --builtin given");
    std::vector<Namespace> parts;
    for (const auto& name : builtins) {
      for (auto& ns : load_builtin(name)) parts.push_back(std::move(ns));
    }
    for (const auto& path : files) {
      for (auto& ns : parse_ecosystem_document(read_file(path)).namespaces) parts.push_back(std::move(ns));
    }
    return merge_namespaces(std::move(parts));
  }
};

struct Session {
  std::ostream& out;
  std::ostream& err;
  bool color = false;
  std::string format = "text";
  bool strict = false;

  bool json() const { return format == "json"; }

  int report(std::string_view command, const std::vector<Diagnostic>& diags) {
    DiagnosticCounts c = count(diags);
    if (json()) {
      ordered_json doc;
      doc["command"] = command;
      doc["diagnostics"] = ordered_json::parse(format_json(diags));
      doc["summary"] = {{"errors", c.errors}, {"warnings", c.warnings}, {"infos", c.infos}};
      out << doc.dump(2) << "\n";
    } else {
      err << format_text(diags, color);
      out << command << ": " << c.errors << " errors, " << c.warnings << " warnings, " << c.infos << " infos\n";
    }
    bool failing = c.errors > 0 || (strict && c.warnings > 0);
    return failing ? kFindings : kOk;
  }

  int failure(const Error& e) {
    if (json()) {
      ordered_json doc;
      doc["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
      out << doc.dump(2) << "\n";
    } else {
      err << "onto: " << e.what() << "\n";
    }
    return kInputFailure;
  }
};

void add_format(CLI::App* cmd, Session& s) {
  cmd->add_option("--format", s.format, "Report format")->check(CLI::IsMember({"text", "json"}));
}

std::vector<std::string> level_names() {
  return {"foundational", "core", "core-extension", "subdomain", "project"};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  Session s{out, err, color};
  CLI::App app{"Checks, profiles and converts layered ontology ecosystems.", "onto"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "onto 1.0.0");

  Inputs inputs;
  std::string config_path, output, dialect = "rdfs", prefix, level, name, profile_path, graph_path, old_path,
                                   new_path, ttl_path;
  std::vector<std::string> namespaces, seeds;

  auto* lint = app.add_subcommand("lint", "Run the foundational-analysis checks");
  inputs.bind(lint);
  lint->add_option("--config", config_path, "Check configuration (JSON)");
  add_format(lint, s);
  lint->add_flag("--strict", s.strict, "Treat warnings as failures");

  auto* tree = app.add_subcommand("tree", "Print the class tree");
  inputs.bind(tree);
  tree->add_option("--ns", namespaces, "Prefixes to include")->delimiter(',');
  add_format(tree, s);

  auto* exp = app.add_subcommand("export", "Write Turtle");
  inputs.bind(exp);
  exp->add_option("--dialect", dialect, "Turtle vocabulary")->check(CLI::IsMember({"rdfs", "owl"}));
  exp->add_option("--ns", namespaces, "Prefixes to export (default: all)")->delimiter(',');
  exp->add_option("-o,--output", output, "Output file (default: standard output)");

  auto* imp = app.add_subcommand("import", "Read Turtle into an ecosystem document");
  imp->add_option("file", ttl_path, "Turtle file")->required();
  imp->add_option("--prefix", prefix, "Prefix of the imported namespace")->required();
  imp->add_option("--level", level, "Abstraction level")->required()->check(CLI::IsMember(level_names()));
  imp->add_option("-o,--output", output, "Output file (default: standard output)");

  auto* profile = app.add_subcommand("profile", "Build or check application profiles");
  profile->require_subcommand(1);
  auto* build = profile->add_subcommand("build", "Build a closed profile from seed refs");
  inputs.bind(build);
  build->add_option("--seed", seeds, "Seed class or property refs")->required()->delimiter(',');
  build->add_option("--name", name, "Profile name")->required();
  build->add_option("-o,--output", output, "Output file (default: standard output)");
  auto* check = profile->add_subcommand("check", "Check a profile against an ecosystem");
  check->add_option("profile", profile_path, "Profile document")->required();
  inputs.bind(check);
  add_format(check, s);
  check->add_flag("--strict", s.strict, "Treat warnings as failures");

  auto* validate = app.add_subcommand("validate", "Validate an instance graph against a profile");
  validate->add_option("graph", graph_path, "Instance graph")->required();
  validate->add_option("--profile", profile_path, "Profile document")->required();
  inputs.bind(validate);
  add_format(validate, s);
  validate->add_flag("--strict", s.strict, "Treat warnings as failures");

  auto* diff = app.add_subcommand("diff", "Compare two versions of a namespace");
  diff->add_option("old", old_path, "Older document")->required();
  diff->add_option("new", new_path, "Newer document")->required();
  diff->add_option("--ns", prefix, "Prefix to compare");
  add_format(diff, s);

  auto usage = [&](const std::string& message) {
    const CLI::App* cmd = &app;
    while (!cmd->get_subcommands().empty()) cmd = cmd->get_subcommands().front();
    err << "onto: " << message << "\n\n" << cmd->help();
    return kInputFailure;
  };

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return usage(e.what());
  }

  try {
    if (*lint) {
      Ecosystem eco = inputs.load();
      ResolvedIndex index = resolve_ecosystem(eco);
      CheckConfig config = config_path.empty() ? CheckConfig::defaults() : parse_check_config(read_file(config_path));
      return s.report("lint", run_all_checks(eco, index, config));
    }
    if (*tree) {
      ResolvedIndex index = resolve_ecosystem(inputs.load());
      ClassTree t = render_class_tree(index, namespaces);
      out << (s.json() ? tree_to_json(t) : tree_to_text(t));
      return kOk;
    }
    if (*exp) {
      ResolvedIndex index = resolve_ecosystem(inputs.load());
      if (namespaces.empty()) {
        for (const auto& ns : index.namespaces()) namespaces.push_back(ns.prefix);
      }
      emit(output, export_turtle(index, dialect == "owl" ? TurtleDialect::kOwlDl : TurtleDialect::kRdfs, namespaces),
           out);
      return kOk;
    }
    if (*imp) {
      ImportResult r = import_turtle(read_file(ttl_path), prefix, *parse_level(level));
      for (const auto& line : r.skipped) err << "skipped: " << line << "\n";
      Ecosystem eco;
      eco.namespaces.push_back(std::move(r.ns));
      emit(output, serialize_ecosystem_document(eco), out);
      return kOk;
    }
    if (*build) {
      ResolvedIndex index = resolve_ecosystem(inputs.load());
      Profile p = build_profile_closure(index, classify_seeds(index, seeds), name);
      emit(output, serialize_profile(p), out);
      return kOk;
    }
    if (*check) {
      Profile p = parse_profile(read_file(profile_path));
      ResolvedIndex index = resolve_ecosystem(inputs.load());
      return s.report("profile check", check_profile(index, p));
    }
    if (*validate) {
      InstanceGraph graph = parse_instance_graph(read_file(graph_path));
      Profile p = parse_profile(read_file(profile_path));
      ResolvedIndex index = resolve_ecosystem(inputs.load());
      return s.report("validate", validate_instances(index, p, graph));
    }
    if (*diff) {
      Ecosystem before = parse_ecosystem_document(read_file(old_path));
      Ecosystem after = parse_ecosystem_document(read_file(new_path));
      if (prefix.empty()) {
        if (before.namespaces.size() != 1 || after.namespaces.size() != 1) {
          throw UsageError("--ns is required when a document holds several namespaces");
        }
        prefix = before.namespaces.front().prefix;
      }
      const Namespace* a = before.find(prefix);
      const Namespace* b = after.find(prefix);
      if (a == nullptr || b == nullptr) {
        throw Error(ErrorKind::kUnknownPrefix,
                    "no namespace \"" + prefix + "\" in " + (a == nullptr ? old_path : new_path));
      }
      ChangeSet changes = diff_namespaces(*a, *b);
      out << (s.json() ? format_changeset_json(changes) : format_changeset_text(changes));
      return kOk;
    }
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const Error& e) {
    return s.failure(e);
  }
  return usage("no command given");
}

}  // namespace ontoeco::cli
