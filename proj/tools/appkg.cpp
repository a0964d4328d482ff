// Copyright 2026 The appkg Authors.
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

// appkg: snapshot corpus -> raw records -> normalized records -> RDF graph
// -> Turtle -> queries. Results go to stdout, diagnostics to stderr; exit
// codes: 0 success, 1 input or parse error, 2 validation or domain findings,
// 3 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "appkg/error.hpp"
#include "appkg/extract.hpp"
#include "appkg/kschema.hpp"
#include "appkg/locale.hpp"
#include "appkg/normalize.hpp"
#include "appkg/records_io.hpp"
#include "appkg/rdf.hpp"
#include "appkg/store.hpp"
#include "appkg/turtle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitFindings = 2;
constexpr int kExitUsage = 3;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw appkg::Error(appkg::ErrorCode::kRecordsFileInvalid, "cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw appkg::Error(appkg::ErrorCode::kSyntaxError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Predicates on the command line may use the fixed prefixes
// (asm:downloadCount) or be written in full.
std::string resolve_predicate(const std::string& text) {
  auto colon = text.find(':');
  if (colon != std::string::npos && text.find("://") == std::string::npos) {
    std::string prefix = text.substr(0, colon);
    std::string local = text.substr(colon + 1);
    const auto defaults = appkg::rdf::graph_with_default_prefixes().prefixes();
    auto it = defaults.find(prefix);
    if (it != defaults.end()) return it->second + local;
  }
  return text;
}

int cmd_extract(const std::string& manifest, const std::string& rules_path,
                const std::string& out_path) {
  auto rules = appkg::extract::load_rules(rules_path);
  auto corpus = appkg::extract::load_corpus(manifest);

  std::string out;
  bool all_ok = true;
  for (const auto& entry : corpus) {
    try {
      auto record = appkg::extract::apply_rules(*entry.doc, entry.page_text, rules,
                                                entry.source_url, entry.snapshot_id);
      record.developer_is_person = entry.developer_is_person;
      record.developer_url = entry.developer_url;
      out += appkg::extract::record_to_json_line(record);
      out += '\n';
    } catch (const appkg::Error& e) {
      std::cerr << "appkg: " << entry.snapshot_id << ": " << e.what() << "\n";
      all_ok = false;
    }
  }
  write_file(out_path, out);
  return all_ok ? kExitOk : kExitInputError;
}

int cmd_build(const std::string& records_path, const std::string& profile_id,
              const std::string& profiles_path, const std::string& base_iri,
              const std::string& out_path) {
  appkg::locale::ProfileRegistry registry;
  if (!profiles_path.empty()) registry.load_file(profiles_path);
  const auto& profile = registry.get(profile_id);

  auto records = appkg::extract::load_records_file(records_path);
  auto graph = appkg::rdf::graph_with_default_prefixes();
  graph.add_all(appkg::kschema::schema_header());

  appkg::kschema::BlankAllocator blanks;
  bool all_ok = true;
  for (const auto& raw : records) {
    auto result = appkg::normalize::normalize_record(raw, profile);
    if (!result.ok()) {
      all_ok = false;
      for (const auto& issue : result.issues) {
        std::cerr << "appkg: " << raw.snapshot_id << ": "
                  << appkg::extract::field_name(issue.field) << ": " << issue.detail << "\n";
      }
      continue;
    }
    graph.add_all(appkg::kschema::record_to_triples(*result.record, base_iri, blanks));
  }
  write_file(out_path, appkg::turtle::serialize(graph));
  return all_ok ? kExitOk : kExitFindings;
}

int cmd_validate(const std::string& ttl_path) {
  auto graph = appkg::turtle::parse(read_file(ttl_path));
  auto report = appkg::kschema::validate(graph, appkg::kschema::vocabulary());
  for (const auto& v : report.violations) {
    std::cout << appkg::kschema::violation_code_name(v.code) << "\t" << v.subject << "\t"
              << v.predicate << "\t" << v.detail << "\n";
  }
  return report.conforms() ? kExitOk : kExitFindings;
}

struct QueryOptions {
  std::string top_predicate;
  std::size_t k = 10;
  bool ascending = false;
  std::string peers_subject;
  std::string peers_predicate;
  std::string group_predicate;
};

int cmd_query(const std::string& ttl_path, const QueryOptions& options) {
  int selected = (!options.top_predicate.empty() ? 1 : 0) +
                 (!options.peers_subject.empty() ? 1 : 0) +
                 (!options.group_predicate.empty() ? 1 : 0);
  if (selected != 1) {
    std::cerr << "appkg: query wants exactly one of --top, --peers, --group\n";
    return kExitUsage;
  }

  auto graph = appkg::turtle::parse(read_file(ttl_path));
  auto store = appkg::store::TripleStore::build(graph);

  if (!options.top_predicate.empty()) {
    auto rows = store.top_k_by_numeric(resolve_predicate(options.top_predicate), options.k,
                                       options.ascending
                                           ? appkg::store::SortDirection::kAscending
                                           : appkg::store::SortDirection::kDescending);
    for (const auto& row : rows) {
      std::cout << row.subject << "\t" << row.value.value << "\n";
    }
  } else if (!options.peers_subject.empty()) {
    if (options.peers_predicate.empty()) {
      std::cerr << "appkg: --peers needs --by <predicate>\n";
      return kExitUsage;
    }
    auto peers = store.equal_value_peers(options.peers_subject,
                                         resolve_predicate(options.peers_predicate));
    for (const auto& peer : peers) {
      std::cout << peer << "\n";
    }
  } else {
    auto rows = store.group_shares(resolve_predicate(options.group_predicate));
    for (const auto& row : rows) {
      std::cout << row.value << "\t" << row.count << "\t" << row.share << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"App store knowledge graph pipeline"};
  app.require_subcommand(1);

  std::string manifest, rules_path, records_path, out_path, ttl_path;
  std::string profiles_path;
  std::string base_iri = std::string(appkg::kschema::kDefaultAppBase);
  const char* env_profile = std::getenv("APPKG_PROFILE");
  std::string profile_id = env_profile != nullptr ? env_profile : "us";
  QueryOptions query_options;

  auto* extract = app.add_subcommand("extract", "Extract raw records from a snapshot corpus");
  extract->add_option("--manifest", manifest, "Corpus manifest (TSV)")->required();
  extract->add_option("--rules", rules_path, "Extraction rule set")->required();
  extract->add_option("--out", out_path, "Output records file (JSON Lines)")->required();

  auto* build = app.add_subcommand("build", "Normalize records and write a Turtle graph");
  build->add_option("--records", records_path, "Records file from extract")->required();
  build->add_option("--profile", profile_id, "Locale profile id (default us)");
  build->add_option("--profiles", profiles_path, "Locale profile registry file");
  build->add_option("--base", base_iri, "App IRI base");
  build->add_option("--out", out_path, "Output Turtle file")->required();

  auto* validate = app.add_subcommand("validate", "Check a Turtle file against the schema");
  validate->add_option("ttl", ttl_path, "Turtle file")->required();

  auto* query = app.add_subcommand("query", "Query a Turtle file");
  query->add_option("ttl", ttl_path, "Turtle file")->required();
  query->add_option("--top", query_options.top_predicate, "Rank subjects by numeric predicate");
  query->add_option("--k", query_options.k, "Row limit for --top");
  query->add_flag("--asc", query_options.ascending, "Ascending order for --top");
  query->add_option("--peers", query_options.peers_subject, "Subject IRI for peer search");
  query->add_option("--by", query_options.peers_predicate, "Predicate for --peers");
  query->add_option("--group", query_options.group_predicate, "Group subjects by literal value");

  auto* stats = app.add_subcommand("stats", "Category share statistics");
  stats->add_option("ttl", ttl_path, "Turtle file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (extract->parsed()) return cmd_extract(manifest, rules_path, out_path);
    if (build->parsed())
      return cmd_build(records_path, profile_id, profiles_path, base_iri, out_path);
    if (validate->parsed()) return cmd_validate(ttl_path);
    if (query->parsed()) return cmd_query(ttl_path, query_options);
    if (stats->parsed()) {
      QueryOptions group;
      group.group_predicate = "schema:applicationCategory";
      return cmd_query(ttl_path, group);
    }
  } catch (const appkg::Error& e) {
    std::cerr << "appkg: " << e.what() << "\n";
    switch (e.code()) {
      case appkg::ErrorCode::kUnknownProfile:
        return kExitUsage;
      case appkg::ErrorCode::kValueNotFound:
      case appkg::ErrorCode::kNonNumericPredicate:
        return kExitFindings;
      default:
        return kExitInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "appkg: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitUsage;
}
