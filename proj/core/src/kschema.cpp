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

#include "appkg/kschema.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace appkg::kschema {

namespace {

using normalize::CanonicalAppRecord;
using normalize::DeveloperKind;
using rdf::Term;
using rdf::Triple;

std::string schema_iri(std::string_view local) { return std::string(rdf::kSchemaNs) + std::string(local); }
std::string asm_iri(std::string_view local) { return std::string(rdf::kAsmNs) + std::string(local); }

Vocabulary build_vocabulary() {
  const std::string app = schema_iri("MobileApplication");
  const std::string person = schema_iri("Person");
  const std::string organization = schema_iri("Organization");
  const std::string aggregate_rating = schema_iri("AggregateRating");
  const std::string offer = schema_iri("Offer");
  const std::string creative_work = schema_iri("CreativeWork");

  Vocabulary v;
  v.classes = {app, creative_work, person, organization, aggregate_rating, offer};
  v.entries = {
      {schema_iri("name"), {app, person}, {}, rdf::iris::xsd_string, Cardinality::kOne},
      {schema_iri("legalName"), {organization}, {}, rdf::iris::xsd_string, Cardinality::kOne},
      {schema_iri("url"), {person, organization}, {}, rdf::iris::xsd_any_uri,
       Cardinality::kAtMostOne},
      {schema_iri("applicationCategory"), {app}, {}, rdf::iris::xsd_string, Cardinality::kOne},
      {schema_iri("applicationSubCategory"), {app}, {}, rdf::iris::xsd_string,
       Cardinality::kAtMostOne},
      {schema_iri("aggregateRating"), {app}, {aggregate_rating}, "", Cardinality::kOne},
      {schema_iri("reviewCount"), {aggregate_rating}, {}, rdf::iris::xsd_integer,
       Cardinality::kOne},
      {schema_iri("ratingValue"), {aggregate_rating}, {}, rdf::iris::xsd_decimal,
       Cardinality::kOne},
      {schema_iri("contentRating"), {app}, {}, rdf::iris::xsd_string, Cardinality::kOne},
      {schema_iri("operatingSystem"), {app}, {}, rdf::iris::xsd_string, Cardinality::kOne},
      {schema_iri("offers"), {app}, {offer}, "", Cardinality::kAtMostOne},
      {schema_iri("lowPrice"), {offer}, {}, rdf::iris::xsd_decimal, Cardinality::kOne},
      {schema_iri("highPrice"), {offer}, {}, rdf::iris::xsd_decimal, Cardinality::kOne},
      {schema_iri("priceCurrency"), {offer}, {}, rdf::iris::xsd_string, Cardinality::kOne},
      {schema_iri("dateModified"), {app}, {}, rdf::iris::xsd_date, Cardinality::kOne},
      {schema_iri("installUrl"), {app}, {}, rdf::iris::xsd_any_uri, Cardinality::kOne},
      {schema_iri("author"), {app}, {person, organization}, "", Cardinality::kOne},
      {asm_iri("downloadCount"), {app}, {}, rdf::iris::xsd_integer, Cardinality::kOne},
  };
  return v;
}

bool is_meta_predicate(std::string_view iri) {
  return iri == rdf::iris::rdf_type || iri == rdf::iris::rdfs_sub_class_of ||
         iri == rdf::iris::rdfs_domain || iri == rdf::iris::rdfs_range;
}

std::string term_text(const Term& term) {
  if (term.is_blank()) return "_:" + term.value;
  return term.value;
}

bool lexical_valid(const std::string& lexical, const std::string& datatype) {
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c);
    });
  };
  if (datatype == rdf::iris::xsd_integer) {
    std::string_view s = lexical;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    return all_digits(s);
  }
  if (datatype == rdf::iris::xsd_decimal) {
    std::string_view s = lexical;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return all_digits(s);
    return all_digits(s.substr(0, dot)) && all_digits(s.substr(dot + 1));
  }
  if (datatype == rdf::iris::xsd_date) {
    if (lexical.size() != 10 || lexical[4] != '-' || lexical[7] != '-') return false;
    auto digits = [&](int from, int len) {
      return all_digits(std::string_view(lexical).substr(from, len));
    };
    if (!digits(0, 4) || !digits(5, 2) || !digits(8, 2)) return false;
    int y = std::stoi(lexical.substr(0, 4));
    unsigned m = static_cast<unsigned>(std::stoi(lexical.substr(5, 2)));
    unsigned d = static_cast<unsigned>(std::stoi(lexical.substr(8, 2)));
    return std::chrono::year_month_day{std::chrono::year(y), std::chrono::month(m),
                                       std::chrono::day(d)}
        .ok();
  }
  if (datatype == rdf::iris::xsd_any_uri) {
    return lexical.find(':') != std::string::npos;
  }
  return true;  // xsd:string
}

}  // namespace

const VocabEntry* Vocabulary::find(std::string_view predicate) const {
  for (const auto& entry : entries) {
    if (entry.predicate == predicate) return &entry;
  }
  return nullptr;
}

const Vocabulary& vocabulary() {
  static const Vocabulary v = build_vocabulary();
  return v;
}

namespace terms {
std::string schema(std::string_view local) { return schema_iri(local); }
std::string asm_ns(std::string_view local) { return asm_iri(local); }
}  // namespace terms

std::vector<Triple> schema_header() {
  std::vector<Triple> triples;
  triples.push_back(rdf::make_triple(Term::iri(schema_iri("MobileApplication")),
                                     rdf::iris::rdfs_sub_class_of,
                                     Term::iri(schema_iri("CreativeWork"))));
  Term download = Term::iri(asm_iri("downloadCount"));
  triples.push_back(
      rdf::make_triple(download, rdf::iris::rdf_type, Term::iri(rdf::iris::rdf_property)));
  triples.push_back(rdf::make_triple(download, rdf::iris::rdfs_domain,
                                     Term::iri(schema_iri("MobileApplication"))));
  triples.push_back(
      rdf::make_triple(download, rdf::iris::rdfs_range, Term::iri(rdf::iris::xsd_integer)));
  return triples;
}

std::string mint_app_iri(const CanonicalAppRecord& record, std::string_view base) {
  return std::string(base) + rdf::percent_encode(normalize::derive_app_id(record.install_url));
}

std::vector<Triple> record_to_triples(const CanonicalAppRecord& record, std::string_view base,
                                      BlankAllocator& blanks) {
  std::vector<Triple> out;
  Term subject = Term::iri(mint_app_iri(record, base));
  auto emit = [&](std::string predicate, Term object) {
    out.push_back(rdf::make_triple(subject, std::move(predicate), std::move(object)));
  };

  emit(rdf::iris::rdf_type, Term::iri(schema_iri("MobileApplication")));
  emit(schema_iri("name"), Term::string_literal(record.name));
  emit(schema_iri("applicationCategory"), Term::string_literal(record.category));
  if (record.subcategory) {
    emit(schema_iri("applicationSubCategory"), Term::string_literal(*record.subcategory));
  }

  Term rating_node = blanks.next();
  emit(schema_iri("aggregateRating"), rating_node);
  out.push_back(rdf::make_triple(rating_node, schema_iri("reviewCount"),
                                 Term::integer_literal(record.review_count)));
  out.push_back(rdf::make_triple(
      rating_node, schema_iri("ratingValue"),
      Term::literal(record.rating_value.to_string(), rdf::iris::xsd_decimal)));

  emit(schema_iri("contentRating"), Term::string_literal(record.content_rating.original_label));
  emit(schema_iri("operatingSystem"), Term::string_literal(record.os_raw));

  if (record.price_range) {
    Term offer_node = blanks.next();
    emit(schema_iri("offers"), offer_node);
    out.push_back(rdf::make_triple(offer_node, rdf::iris::rdf_type, Term::iri(schema_iri("Offer"))));
    out.push_back(rdf::make_triple(
        offer_node, schema_iri("lowPrice"),
        Term::literal(record.price_range->low.to_string(), rdf::iris::xsd_decimal)));
    out.push_back(rdf::make_triple(
        offer_node, schema_iri("highPrice"),
        Term::literal(record.price_range->high.to_string(), rdf::iris::xsd_decimal)));
    out.push_back(rdf::make_triple(offer_node, schema_iri("priceCurrency"),
                                   Term::string_literal(record.price_range->currency)));
  }

  emit(asm_iri("downloadCount"), Term::integer_literal(record.download_count));
  emit(schema_iri("dateModified"),
       Term::literal(normalize::format_date(record.date_modified), rdf::iris::xsd_date));
  emit(schema_iri("installUrl"), Term::literal(record.install_url, rdf::iris::xsd_any_uri));

  Term author_node = blanks.next();
  emit(schema_iri("author"), author_node);
  if (record.developer_kind == DeveloperKind::kPerson) {
    out.push_back(rdf::make_triple(author_node, schema_iri("name"),
                                   Term::string_literal(record.developer_name)));
  } else {
    out.push_back(rdf::make_triple(author_node, schema_iri("legalName"),
                                   Term::string_literal(record.developer_name)));
  }
  if (record.developer_url) {
    out.push_back(rdf::make_triple(author_node, schema_iri("url"),
                                   Term::literal(*record.developer_url, rdf::iris::xsd_any_uri)));
  }
  return out;
}

bool check_predicate_name(std::string_view local) {
  if (local.empty() || local[0] < 'a' || local[0] > 'z') return false;
  return std::all_of(local.begin() + 1, local.end(), [](unsigned char c) {
    return std::isalnum(c);
  });
}

std::string_view violation_code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::kUnknownPredicate: return "UNKNOWN_PREDICATE";
    case ViolationCode::kDomainViolation: return "DOMAIN_VIOLATION";
    case ViolationCode::kRangeViolation: return "RANGE_VIOLATION";
    case ViolationCode::kCardinalityViolation: return "CARDINALITY_VIOLATION";
    case ViolationCode::kLiteralLexError: return "LITERAL_LEX_ERROR";
  }
  return "UNKNOWN";
}

ValidationReport validate(const rdf::Graph& graph, const Vocabulary& vocab) {
  ValidationReport report;
  auto add = [&](ViolationCode code, const Term& subject, const std::string& predicate,
                 std::string detail) {
    report.violations.push_back({code, term_text(subject), predicate, std::move(detail)});
  };

  // Subject typing: declared rdf:type plus types inferred from single-class
  // ranges (rating and offer nodes). Author objects get the ambiguous
  // person-or-organization marker instead.
  std::map<Term, std::set<std::string>> types;
  std::set<Term> developer_nodes;
  for (const auto& t : graph.triples()) {
    if (t.predicate.value == rdf::iris::rdf_type && t.object.is_iri()) {
      types[t.subject].insert(t.object.value);
    }
    const VocabEntry* entry = vocab.find(t.predicate.value);
    if (entry && !entry->range_classes.empty() && !t.object.is_literal()) {
      if (entry->range_classes.size() == 1) {
        types[t.object].insert(entry->range_classes.front());
      } else {
        developer_nodes.insert(t.object);
      }
    }
  }

  // Per-triple checks.
  for (const auto& t : graph.triples()) {
    const std::string& pred = t.predicate.value;
    if (t.object.is_literal() && !lexical_valid(t.object.value, t.object.datatype)) {
      add(ViolationCode::kLiteralLexError, t.subject, pred,
          "\"" + t.object.value + "\" is not a valid " + t.object.datatype);
    }
    if (is_meta_predicate(pred)) continue;
    const VocabEntry* entry = vocab.find(pred);
    if (!entry) {
      add(ViolationCode::kUnknownPredicate, t.subject, pred, "predicate not in vocabulary");
      continue;
    }
    auto subject_types = types.find(t.subject);
    if (subject_types != types.end()) {
      bool compatible = std::any_of(entry->domains.begin(), entry->domains.end(),
                                    [&](const std::string& d) {
                                      return subject_types->second.count(d) > 0;
                                    });
      if (!compatible) {
        add(ViolationCode::kDomainViolation, t.subject, pred,
            "subject type incompatible with domain");
      }
    }
    if (entry->has_datatype_range()) {
      if (!t.object.is_literal()) {
        add(ViolationCode::kRangeViolation, t.subject, pred, "expected a literal object");
      } else if (t.object.datatype != entry->range_datatype) {
        add(ViolationCode::kRangeViolation, t.subject, pred,
            "expected " + entry->range_datatype + ", found " + t.object.datatype);
      }
    } else {
      if (t.object.is_literal()) {
        add(ViolationCode::kRangeViolation, t.subject, pred, "expected a resource object");
      } else {
        auto object_types = types.find(t.object);
        if (object_types != types.end()) {
          bool compatible = std::any_of(
              entry->range_classes.begin(), entry->range_classes.end(),
              [&](const std::string& c) { return object_types->second.count(c) > 0; });
          if (!compatible) {
            add(ViolationCode::kRangeViolation, t.subject, pred,
                "object type incompatible with range");
          }
        }
      }
    }
  }

  // Cardinality per typed subject.
  std::map<Term, std::map<std::string, int>> predicate_counts;
  for (const auto& t : graph.triples()) {
    predicate_counts[t.subject][t.predicate.value] += 1;
  }
  for (const auto& [subject, subject_types] : types) {
    if (subject_types.count(rdf::iris::rdf_property) > 0) continue;  // TBox subject
    const auto& counts = predicate_counts[subject];
    for (const auto& entry : vocab.entries) {
      bool applies = std::any_of(entry.domains.begin(), entry.domains.end(),
                                 [&](const std::string& d) { return subject_types.count(d) > 0; });
      if (!applies) continue;
      auto it = counts.find(entry.predicate);
      int n = it == counts.end() ? 0 : it->second;
      if (entry.cardinality == Cardinality::kOne && n != 1) {
        add(ViolationCode::kCardinalityViolation, subject, entry.predicate,
            n == 0 ? "required once, missing" : "required once, found " + std::to_string(n));
      } else if (entry.cardinality == Cardinality::kAtMostOne && n > 1) {
        add(ViolationCode::kCardinalityViolation, subject, entry.predicate,
            "at most once, found " + std::to_string(n));
      }
    }
  }

  // Developer nodes: exactly one of name/legalName, at most one url.
  const std::string name_pred = schema_iri("name");
  const std::string legal_pred = schema_iri("legalName");
  const std::string url_pred = schema_iri("url");
  for (const auto& node : developer_nodes) {
    if (types.count(node) > 0) continue;  // already checked through its declared type
    const auto& counts = predicate_counts[node];
    auto count_of = [&](const std::string& p) {
      auto it = counts.find(p);
      return it == counts.end() ? 0 : it->second;
    };
    int names = count_of(name_pred) + count_of(legal_pred);
    if (names != 1) {
      add(ViolationCode::kCardinalityViolation, node, name_pred,
          "author node wants exactly one name or legalName, found " + std::to_string(names));
    }
    if (count_of(url_pred) > 1) {
      add(ViolationCode::kCardinalityViolation, node, url_pred,
          "at most once, found " + std::to_string(count_of(url_pred)));
    }
  }

  std::sort(report.violations.begin(), report.violations.end());
  report.violations.erase(std::unique(report.violations.begin(), report.violations.end()),
                          report.violations.end());
  return report;
}

int predicate_rank(std::string_view predicate_iri) {
  if (predicate_iri == rdf::iris::rdf_type) return 0;
  if (predicate_iri == rdf::iris::rdfs_sub_class_of) return 1;
  if (predicate_iri == rdf::iris::rdfs_domain) return 2;
  if (predicate_iri == rdf::iris::rdfs_range) return 3;
  const auto& entries = vocabulary().entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].predicate == predicate_iri) return static_cast<int>(i) + 4;
  }
  return 1000;
}

}  // namespace appkg::kschema
