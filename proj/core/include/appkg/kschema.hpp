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

#ifndef APPKG_KSCHEMA_HPP_
#define APPKG_KSCHEMA_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "appkg/normalize.hpp"
#include "appkg/rdf.hpp"

namespace appkg::kschema {

inline constexpr std::string_view kDefaultAppBase = "urn:app:";

enum class Cardinality { kOne, kAtMostOne, kAny };

// One predicate of the app schema. `domains` lists the classes whose
// instances may carry it (schema:name serves both apps and persons); the
// range is either a datatype or a set of classes.
struct VocabEntry {
  std::string predicate;
  std::vector<std::string> domains;
  std::vector<std::string> range_classes;  // empty when range is a datatype
  std::string range_datatype;              // empty when range is a class set
  Cardinality cardinality = Cardinality::kAny;

  bool has_datatype_range() const { return !range_datatype.empty(); }
};

struct Vocabulary {
  std::vector<VocabEntry> entries;    // fixed order, drives serialization
  std::vector<std::string> classes;   // the six schema classes

  const VocabEntry* find(std::string_view predicate) const;
};

// The built-in schema vocabulary: 18 predicates (17 schema.org plus
// asm:downloadCount) over 6 classes.
const Vocabulary& vocabulary();

// Convenience IRIs for the app schema.
namespace terms {
std::string schema(std::string_view local);
std::string asm_ns(std::string_view local);
}  // namespace terms

// Meta-layer triples: MobileApplication under CreativeWork, and the type,
// domain and range of the custom downloadCount property.
std::vector<rdf::Triple> schema_header();

// Hands out graph-unique blank labels b0, b1, ...
class BlankAllocator {
 public:
  rdf::Term next() { return rdf::Term::blank("b" + std::to_string(counter_++)); }

 private:
  int counter_ = 0;
};

// Stable app IRI: base plus the percent-encoded package id from the install
// URL's `id` query parameter, or the whole URL when absent.
std::string mint_app_iri(const normalize::CanonicalAppRecord& record,
                         std::string_view base = kDefaultAppBase);

// Maps one record onto its subject block: 13 triples plus one per optional
// subcategory and developer url and five per offer.
std::vector<rdf::Triple> record_to_triples(const normalize::CanonicalAppRecord& record,
                                           std::string_view base, BlankAllocator& blanks);

// lowerCamelCase with no spaces.
bool check_predicate_name(std::string_view local);

enum class ViolationCode {
  kUnknownPredicate,
  kDomainViolation,
  kRangeViolation,
  kCardinalityViolation,
  kLiteralLexError,
};

std::string_view violation_code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string subject;
  std::string predicate;
  std::string detail;

  auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool conforms() const { return violations.empty(); }
};

// Checks a graph against the vocabulary: predicate membership, domain and
// range compatibility, cardinalities, and literal lexical forms. Nested
// blank nodes are typed through the range of the predicate that introduces
// them, since record blocks do not carry rdf:type on rating and author
// nodes.
ValidationReport validate(const rdf::Graph& graph, const Vocabulary& vocab);

// Serialization order of a predicate: rdf:type and the rdfs meta predicates
// first, then vocabulary order, then anything else lexicographically.
int predicate_rank(std::string_view predicate_iri);

}  // namespace appkg::kschema

#endif  // APPKG_KSCHEMA_HPP_
