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

#ifndef APPKG_RDF_HPP_
#define APPKG_RDF_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace appkg::rdf {

inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSchemaNs = "http://schema.org/";
inline constexpr std::string_view kAsmNs = "urn:appstore-model:";

namespace iris {
inline const std::string rdf_type = std::string(kRdfNs) + "type";
inline const std::string rdf_property = std::string(kRdfNs) + "Property";
inline const std::string rdfs_sub_class_of = std::string(kRdfsNs) + "subClassOf";
inline const std::string rdfs_domain = std::string(kRdfsNs) + "domain";
inline const std::string rdfs_range = std::string(kRdfsNs) + "range";
inline const std::string xsd_string = std::string(kXsdNs) + "string";
inline const std::string xsd_integer = std::string(kXsdNs) + "integer";
inline const std::string xsd_decimal = std::string(kXsdNs) + "decimal";
inline const std::string xsd_date = std::string(kXsdNs) + "date";
inline const std::string xsd_any_uri = std::string(kXsdNs) + "anyURI";
inline const std::string xsd_boolean = std::string(kXsdNs) + "boolean";
}  // namespace iris

// IRI, blank node, or typed literal. Literal datatypes are restricted to
// xsd:string, xsd:integer, xsd:decimal, xsd:date and xsd:anyURI.
struct Term {
  enum class Kind { kIri, kBlank, kLiteral };

  Kind kind = Kind::kIri;
  std::string value;     // IRI text, blank label, or literal lexical form
  std::string datatype;  // literals only
  std::string language;  // literals only, normally empty

  static Term iri(std::string text);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype_iri);
  static Term string_literal(std::string lexical);
  static Term integer_literal(long long value);

  bool is_iri() const { return kind == Kind::kIri; }
  bool is_blank() const { return kind == Kind::kBlank; }
  bool is_literal() const { return kind == Kind::kLiteral; }

  auto operator<=>(const Term&) const = default;
};

struct Triple {
  Term subject;    // IRI or blank
  Term predicate;  // always an IRI
  Term object;

  auto operator<=>(const Triple&) const = default;
};

Triple make_triple(Term subject, std::string predicate_iri, Term object);

// A set of triples plus presentation-level prefix bindings. Inserting a
// duplicate triple is a no-op.
class Graph {
 public:
  void add(Triple triple) { triples_.insert(std::move(triple)); }

  template <typename Range>
  void add_all(const Range& range) {
    for (const auto& t : range) triples_.insert(t);
  }

  void set_prefix(std::string name, std::string iri) {
    prefixes_[std::move(name)] = std::move(iri);
  }

  const std::set<Triple>& triples() const { return triples_; }
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  bool operator==(const Graph& other) const { return triples_ == other.triples_; }

 private:
  std::set<Triple> triples_;
  std::map<std::string, std::string> prefixes_;
};

// The artifact's fixed bindings: schema, asm, rdf, rdfs, xsd.
Graph graph_with_default_prefixes();

// RFC 3986 percent-encoding; unreserved characters pass through.
std::string percent_encode(std::string_view text);

// True for absolute IRIs (a scheme followed by ':').
bool is_absolute_iri(std::string_view text);

}  // namespace appkg::rdf

#endif  // APPKG_RDF_HPP_
