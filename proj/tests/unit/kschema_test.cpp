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
#include <set>

#include <doctest.h>

#include "appkg/rdf.hpp"
#include "test_util.hpp"

using namespace appkg;
using rdf::Term;
using rdf::Triple;

namespace {

normalize::CanonicalAppRecord full_record() {
  normalize::CanonicalAppRecord r;
  r.app_id = "com.sweet.candy";
  r.name = "Candy Rush";
  r.developer_name = "Sweet Labs";
  r.developer_kind = normalize::DeveloperKind::kOrganization;
  r.developer_url = "https://sweetlabs.example.com";
  r.category = "Game";
  r.subcategory = "Arcade Game";
  r.review_count = 12345;
  r.rating_value = Decimal(45, 1);
  r.download_count = 1000000;
  r.date_modified = std::chrono::year_month_day{std::chrono::year(2019), std::chrono::month(5),
                                                std::chrono::day(7)};
  r.content_rating = normalize::normalize_content_rating("Everyone", locale::us_profile());
  r.min_os = normalize::OsVersion{4, 1};
  r.os_raw = "4.1 and up";
  r.price_range = normalize::PriceRange{Decimal(99, 2), Decimal(9999, 2), "USD"};
  r.install_url = "https://play.example.com/store/apps/details?id=com.sweet.candy";
  return r;
}

normalize::CanonicalAppRecord minimal_record() {
  auto r = full_record();
  r.subcategory.reset();
  r.category = "Business";
  r.price_range.reset();
  r.developer_url.reset();
  return r;
}

rdf::Graph record_graph(const normalize::CanonicalAppRecord& record) {
  auto graph = rdf::graph_with_default_prefixes();
  graph.add_all(kschema::schema_header());
  kschema::BlankAllocator blanks;
  graph.add_all(kschema::record_to_triples(record, kschema::kDefaultAppBase, blanks));
  return graph;
}

}  // namespace

TEST_CASE("vocabulary holds exactly the schema predicates and classes") {
  const auto& vocab = kschema::vocabulary();
  CHECK(vocab.entries.size() == 18);
  CHECK(vocab.classes.size() == 6);

  std::set<std::string> predicates;
  int custom = 0;
  for (const auto& entry : vocab.entries) {
    predicates.insert(entry.predicate);
    if (entry.predicate.rfind(std::string(rdf::kAsmNs), 0) == 0) ++custom;
  }
  CHECK(predicates.size() == 18);  // no duplicates
  CHECK(custom == 1);              // downloadCount is the only custom term
  CHECK(predicates.count(kschema::terms::asm_ns("downloadCount")) == 1);
  for (const char* name :
       {"name", "legalName", "url", "applicationCategory", "applicationSubCategory",
        "aggregateRating", "reviewCount", "ratingValue", "contentRating", "operatingSystem",
        "offers", "lowPrice", "highPrice", "priceCurrency", "dateModified", "installUrl",
        "author"}) {
    CHECK(predicates.count(kschema::terms::schema(name)) == 1);
  }
}

TEST_CASE("every vocabulary local name is lowerCamelCase") {
  for (const auto& entry : kschema::vocabulary().entries) {
    auto slash = entry.predicate.find_last_of("/:");
    std::string local = entry.predicate.substr(slash + 1);
    CAPTURE(local);
    CHECK(kschema::check_predicate_name(local));
  }
}

TEST_CASE("check_predicate_name wants lowerCamelCase without spaces") {
  CHECK(kschema::check_predicate_name("downloadCount"));
  CHECK(kschema::check_predicate_name("legalName"));
  CHECK(kschema::check_predicate_name("name"));
  CHECK_FALSE(kschema::check_predicate_name("Download Count"));
  CHECK_FALSE(kschema::check_predicate_name("DownloadCount"));
  CHECK_FALSE(kschema::check_predicate_name(""));
  CHECK_FALSE(kschema::check_predicate_name("download_count"));
}

TEST_CASE("schema_header emits the four meta triples") {
  auto header = kschema::schema_header();
  CHECK(header.size() == 4);
  CHECK(header == kschema::schema_header());  // pure

  Triple sub = rdf::make_triple(Term::iri(kschema::terms::schema("MobileApplication")),
                                rdf::iris::rdfs_sub_class_of,
                                Term::iri(kschema::terms::schema("CreativeWork")));
  CHECK(std::find(header.begin(), header.end(), sub) != header.end());

  Triple range = rdf::make_triple(Term::iri(kschema::terms::asm_ns("downloadCount")),
                                  rdf::iris::rdfs_range, Term::iri(rdf::iris::xsd_integer));
  CHECK(std::find(header.begin(), header.end(), range) != header.end());
}

TEST_CASE("mint_app_iri extracts the package id") {
  auto record = full_record();
  CHECK(kschema::mint_app_iri(record, "urn:app:") == "urn:app:com.sweet.candy");

  record.install_url = "https://play.example.com/store/apps/details?hl=en&id=com.other.app";
  CHECK(kschema::mint_app_iri(record, "urn:app:") == "urn:app:com.other.app");

  auto again = full_record();
  CHECK(kschema::mint_app_iri(again, "urn:app:") == kschema::mint_app_iri(full_record(), "urn:app:"));

  record.install_url = "https://play.example.com/store/apps/rush";
  CHECK(kschema::mint_app_iri(record, "urn:app:") ==
        "urn:app:" + rdf::percent_encode("https://play.example.com/store/apps/rush"));
}

TEST_CASE("record triple counts follow the mapping table") {
  kschema::BlankAllocator blanks;
  CHECK(kschema::record_to_triples(full_record(), "urn:app:", blanks).size() == 20);
  CHECK(kschema::record_to_triples(minimal_record(), "urn:app:", blanks).size() == 13);

  auto with_sub = minimal_record();
  with_sub.category = "Game";
  with_sub.subcategory = "Arcade Game";
  CHECK(kschema::record_to_triples(with_sub, "urn:app:", blanks).size() == 14);

  auto with_offer = minimal_record();
  with_offer.price_range = normalize::PriceRange{Decimal(99, 2), Decimal(99, 2), "USD"};
  CHECK(kschema::record_to_triples(with_offer, "urn:app:", blanks).size() == 18);

  auto with_dev_url = minimal_record();
  with_dev_url.developer_url = "https://dev.example.com";
  CHECK(kschema::record_to_triples(with_dev_url, "urn:app:", blanks).size() == 14);
}

TEST_CASE("record triples carry the expected statements") {
  kschema::BlankAllocator blanks;
  auto record = full_record();
  record.category = "Business";
  record.subcategory.reset();
  auto triples = kschema::record_to_triples(record, "urn:app:", blanks);

  Term subject = Term::iri("urn:app:com.sweet.candy");
  Triple category = rdf::make_triple(subject, kschema::terms::schema("applicationCategory"),
                                     Term::string_literal("Business"));
  CHECK(std::find(triples.begin(), triples.end(), category) != triples.end());

  Triple type = rdf::make_triple(subject, rdf::iris::rdf_type,
                                 Term::iri(kschema::terms::schema("MobileApplication")));
  CHECK(std::find(triples.begin(), triples.end(), type) != triples.end());

  // Date and install url carry their datatypes.
  bool date_found = false, url_found = false, decimal_found = false;
  for (const auto& t : triples) {
    if (t.object.is_literal() && t.object.datatype == rdf::iris::xsd_date) {
      CHECK(t.object.value == "2019-05-07");
      date_found = true;
    }
    if (t.predicate.value == kschema::terms::schema("installUrl")) {
      CHECK(t.object.datatype == rdf::iris::xsd_any_uri);
      url_found = true;
    }
    if (t.predicate.value == kschema::terms::schema("ratingValue")) {
      CHECK(t.object.value == "4.5");
      CHECK(t.object.datatype == rdf::iris::xsd_decimal);
      decimal_found = true;
    }
  }
  CHECK(date_found);
  CHECK(url_found);
  CHECK(decimal_found);
}

TEST_CASE("developer kind picks name or legalName") {
  kschema::BlankAllocator blanks;
  auto person = full_record();
  person.developer_kind = normalize::DeveloperKind::kPerson;
  auto person_triples = kschema::record_to_triples(person, "urn:app:", blanks);
  auto has_pred_obj = [](const std::vector<Triple>& ts, const std::string& pred,
                         const std::string& value) {
    return std::any_of(ts.begin(), ts.end(), [&](const Triple& t) {
      return t.predicate.value == pred && t.object.value == value;
    });
  };
  CHECK(has_pred_obj(person_triples, kschema::terms::schema("name"), "Sweet Labs"));
  CHECK_FALSE(has_pred_obj(person_triples, kschema::terms::schema("legalName"), "Sweet Labs"));

  auto org_triples = kschema::record_to_triples(full_record(), "urn:app:", blanks);
  CHECK(has_pred_obj(org_triples, kschema::terms::schema("legalName"), "Sweet Labs"));
}

TEST_CASE("blank labels are fresh across records") {
  kschema::BlankAllocator blanks;
  auto first = kschema::record_to_triples(full_record(), "urn:app:", blanks);
  auto record2 = full_record();
  record2.install_url = "https://play.example.com/store/apps/details?id=com.two";
  auto second = kschema::record_to_triples(record2, "urn:app:", blanks);

  std::set<std::string> labels;
  for (const auto* batch : {&first, &second}) {
    for (const auto& t : *batch) {
      if (t.subject.is_blank()) labels.insert(t.subject.value);
      if (t.object.is_blank()) labels.insert(t.object.value);
    }
  }
  CHECK(labels.size() == 6);  // three per record, none shared
}

TEST_CASE("blank nodes hang only off the three node-valued predicates") {
  auto graph = record_graph(full_record());
  std::set<std::string> linking;
  for (const auto& t : graph.triples()) {
    if (t.object.is_blank()) linking.insert(t.predicate.value);
    if (t.subject.is_blank()) {
      CHECK(t.object.is_literal() + t.object.is_iri() == 1);  // no blank-to-blank edges
    }
  }
  CHECK(linking == std::set<std::string>{kschema::terms::schema("aggregateRating"),
                                         kschema::terms::schema("offers"),
                                         kschema::terms::schema("author")});
}

TEST_CASE("conforming graphs validate cleanly") {
  auto graph = record_graph(full_record());
  auto report = kschema::validate(graph, kschema::vocabulary());
  CHECK(report.conforms());

  auto minimal = record_graph(minimal_record());
  CHECK(kschema::validate(minimal, kschema::vocabulary()).conforms());
}

TEST_CASE("record_to_triples emits only vocabulary predicates") {
  kschema::BlankAllocator blanks;
  const auto& vocab = kschema::vocabulary();
  for (const auto& t : kschema::record_to_triples(full_record(), "urn:app:", blanks)) {
    bool known = t.predicate.value == rdf::iris::rdf_type ||
                 vocab.find(t.predicate.value) != nullptr;
    CAPTURE(t.predicate.value);
    CHECK(known);
  }
}

TEST_CASE("validate flags bad literal lexical forms") {
  rdf::Graph graph;
  graph.add(rdf::make_triple(Term::iri("urn:app:x"), kschema::terms::schema("reviewCount"),
                             Term::literal("4.5", rdf::iris::xsd_integer)));
  auto report = kschema::validate(graph, kschema::vocabulary());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].code == kschema::ViolationCode::kLiteralLexError);
}

TEST_CASE("validate flags missing cardinality-one predicates") {
  auto graph = record_graph(full_record());
  rdf::Graph pruned = rdf::graph_with_default_prefixes();
  const std::string name_pred = kschema::terms::schema("name");
  for (const auto& t : graph.triples()) {
    if (t.predicate.value == name_pred && t.subject.is_iri()) continue;  // drop app name
    pruned.add(t);
  }
  auto report = kschema::validate(pruned, kschema::vocabulary());
  REQUIRE_FALSE(report.conforms());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.code == kschema::ViolationCode::kCardinalityViolation && v.predicate == name_pred) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("validate flags unknown predicates and wrong datatypes") {
  auto graph = record_graph(minimal_record());

  rdf::Graph with_unknown = graph;
  with_unknown.add(rdf::make_triple(Term::iri("urn:app:com.sweet.candy"),
                                    kschema::terms::schema("keywords"),
                                    Term::string_literal("sweets")));
  auto unknown_report = kschema::validate(with_unknown, kschema::vocabulary());
  REQUIRE_FALSE(unknown_report.conforms());
  CHECK(unknown_report.violations[0].code == kschema::ViolationCode::kUnknownPredicate);

  // Retype the date literal as a plain string: range violation.
  rdf::Graph retyped = rdf::graph_with_default_prefixes();
  for (const auto& t : graph.triples()) {
    if (t.predicate.value == kschema::terms::schema("dateModified")) {
      retyped.add(rdf::make_triple(t.subject, t.predicate.value,
                                   Term::string_literal(t.object.value)));
    } else {
      retyped.add(t);
    }
  }
  auto range_report = kschema::validate(retyped, kschema::vocabulary());
  REQUIRE_FALSE(range_report.conforms());
  bool range_found = false;
  for (const auto& v : range_report.violations) {
    if (v.code == kschema::ViolationCode::kRangeViolation) range_found = true;
  }
  CHECK(range_found);
}

TEST_CASE("validate flags domain mismatches") {
  rdf::Graph graph;
  Term app = Term::iri("urn:app:x");
  graph.add(rdf::make_triple(app, rdf::iris::rdf_type,
                             Term::iri(kschema::terms::schema("MobileApplication"))));
  // lowPrice belongs to Offer, not to the app subject.
  graph.add(rdf::make_triple(app, kschema::terms::schema("lowPrice"),
                             Term::literal("0.99", rdf::iris::xsd_decimal)));
  auto report = kschema::validate(graph, kschema::vocabulary());
  bool domain_found = false;
  for (const auto& v : report.violations) {
    if (v.code == kschema::ViolationCode::kDomainViolation) domain_found = true;
  }
  CHECK(domain_found);
}

TEST_CASE("validate flags duplicated at-most-one predicates") {
  auto graph = record_graph(full_record());
  graph.add(rdf::make_triple(Term::iri("urn:app:com.sweet.candy"),
                             kschema::terms::schema("applicationSubCategory"),
                             Term::string_literal("Second Label")));
  auto report = kschema::validate(graph, kschema::vocabulary());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.code == kschema::ViolationCode::kCardinalityViolation &&
        v.predicate == kschema::terms::schema("applicationSubCategory")) {
      found = true;
    }
  }
  CHECK(found);
}
