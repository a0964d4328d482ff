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

#include "appkg/rdf.hpp"

#include <cassert>
#include <cctype>

namespace appkg::rdf {

Term Term::iri(std::string text) {
  Term t;
  t.kind = Kind::kIri;
  t.value = std::move(text);
  return t;
}

Term Term::blank(std::string label) {
  Term t;
  t.kind = Kind::kBlank;
  t.value = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype_iri) {
  Term t;
  t.kind = Kind::kLiteral;
  t.value = std::move(lexical);
  t.datatype = std::move(datatype_iri);
  return t;
}

Term Term::string_literal(std::string lexical) {
  return literal(std::move(lexical), iris::xsd_string);
}

Term Term::integer_literal(long long value) {
  return literal(std::to_string(value), iris::xsd_integer);
}

Triple make_triple(Term subject, std::string predicate_iri, Term object) {
  assert(subject.is_iri() || subject.is_blank());
  return Triple{std::move(subject), Term::iri(std::move(predicate_iri)), std::move(object)};
}

Graph graph_with_default_prefixes() {
  Graph g;
  g.set_prefix("schema", std::string(kSchemaNs));
  g.set_prefix("asm", std::string(kAsmNs));
  g.set_prefix("rdf", std::string(kRdfNs));
  g.set_prefix("rdfs", std::string(kRdfsNs));
  g.set_prefix("xsd", std::string(kXsdNs));
  return g;
}

std::string percent_encode(std::string_view text) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    unsigned char b = static_cast<unsigned char>(c);
    bool unreserved = std::isalnum(b) || c == '-' || c == '.' || c == '_' || c == '~';
    if (unreserved) {
      out.push_back(c);
    } else {
      out.push_back('%');
      out.push_back(hex[b >> 4]);
      out.push_back(hex[b & 0xF]);
    }
  }
  return out;
}

bool is_absolute_iri(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  for (std::size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return false;
}

}  // namespace appkg::rdf
