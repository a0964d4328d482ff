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

#include "appkg/store.hpp"

#include <algorithm>
#include <random>

#include <doctest.h>

#include "appkg/error.hpp"
#include "appkg/kschema.hpp"
#include "test_util.hpp"

using namespace appkg;
using rdf::Term;
using rdf::Triple;
using store::QueryPattern;
using store::TripleStore;

namespace {

// Brute-force oracle for match: scan everything, filter, sort by the same
// index order the store picks.
std::vector<Triple> oracle_match(const rdf::Graph& graph, const QueryPattern& pattern) {
  std::vector<Triple> out;
  for (const auto& t : graph.triples()) {
    if (pattern.subject && store::compare_terms(t.subject, *pattern.subject) != 0) continue;
    if (pattern.predicate && store::compare_terms(t.predicate, *pattern.predicate) != 0) continue;
    if (pattern.object && store::compare_terms(t.object, *pattern.object) != 0) continue;
    out.push_back(t);
  }
  auto key3 = [&](const Triple& t) {
    if (pattern.subject) return std::array<const Term*, 3>{&t.subject, &t.predicate, &t.object};
    if (pattern.predicate) return std::array<const Term*, 3>{&t.predicate, &t.object, &t.subject};
    if (pattern.object) return std::array<const Term*, 3>{&t.object, &t.subject, &t.predicate};
    return std::array<const Term*, 3>{&t.subject, &t.predicate, &t.object};
  };
  std::sort(out.begin(), out.end(), [&](const Triple& a, const Triple& b) {
    auto ka = key3(a), kb = key3(b);
    for (int i = 0; i < 3; ++i) {
      if (int c = store::compare_terms(*ka[i], *kb[i]); c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

// Random small graphs mixing app-shaped records with loose triples.
rdf::Graph random_store_graph(std::mt19937_64& rng, std::size_t apps, std::size_t noise) {
  auto graph = test::random_conforming_graph(rng, apps);
  for (std::size_t i = 0; i < noise; ++i) {
    Term subject = Term::iri("urn:x:s" + std::to_string(rng() % 10));
    std::string predicate = "urn:x:p" + std::to_string(rng() % 5);
    Term object = rng() % 2 ? Term::integer_literal(static_cast<long long>(rng() % 100))
                            : Term::string_literal("v" + std::to_string(rng() % 7));
    graph.add(rdf::make_triple(subject, predicate, object));
  }
  return graph;
}

QueryPattern random_pattern(std::mt19937_64& rng, const rdf::Graph& graph) {
  QueryPattern pattern;
  if (graph.empty()) return pattern;
  // Pick terms from a random triple so patterns actually hit.
  auto it = graph.triples().begin();
  std::advance(it, static_cast<long>(rng() % graph.size()));
  if (rng() % 2) pattern.subject = it->subject;
  if (rng() % 2) pattern.predicate = it->predicate;
  if (rng() % 2) pattern.object = it->object;
  if (rng() % 4 == 0) pattern.subject = Term::iri("urn:none:absent");
  return pattern;
}

}  // namespace

TEST_CASE("build collapses duplicates and freezes size") {
  rdf::Graph graph;
  auto t = rdf::make_triple(Term::iri("urn:s"), "urn:p", Term::integer_literal(1));
  graph.add(t);
  graph.add(t);
  CHECK(TripleStore::build(graph).size() == 1);
  CHECK(TripleStore::build(rdf::Graph{}).size() == 0);

  std::mt19937_64 rng(3);
  auto record_graph = test::random_conforming_graph(rng, 1);
  // 4 header triples + 13..20 record triples
  auto store = TripleStore::build(record_graph);
  CHECK(store.size() == record_graph.size());
}

TEST_CASE("match with fully bound and unbound patterns") {
  std::mt19937_64 rng(5);
  auto graph = test::random_conforming_graph(rng, 3);
  auto store = TripleStore::build(graph);

  CHECK(store.match(QueryPattern::any()).size() == graph.size());

  QueryPattern downloads;
  downloads.predicate = Term::iri(kschema::terms::asm_ns("downloadCount"));
  CHECK(store.match(downloads).size() == 3);  // one per app

  QueryPattern one_app;
  one_app.subject = store.match(downloads).front().subject;
  auto block = store.match(one_app);
  CHECK(block.size() >= 10);  // the app's full subject block
  for (const auto& t : block) {
    CHECK(store::compare_terms(t.subject, *one_app.subject) == 0);
  }
}

TEST_CASE("match equals the linear-scan oracle on random stores") {
  std::mt19937_64 rng(20260202);
  for (int round = 0; round < 150; ++round) {
    auto graph = random_store_graph(rng, rng() % 12, rng() % 30);
    auto store = TripleStore::build(graph);
    for (int q = 0; q < 6; ++q) {
      auto pattern = random_pattern(rng, graph);
      auto got = store.match(pattern);
      auto expected = oracle_match(graph, pattern);
      REQUIRE(got == expected);
    }
  }
}

TEST_CASE("top_k_by_numeric ranks and truncates") {
  auto graph = rdf::graph_with_default_prefixes();
  const std::string pred = kschema::terms::asm_ns("downloadCount");
  graph.add(rdf::make_triple(Term::iri("urn:app:a"), pred, Term::integer_literal(10)));
  graph.add(rdf::make_triple(Term::iri("urn:app:b"), pred, Term::integer_literal(1000)));
  graph.add(rdf::make_triple(Term::iri("urn:app:c"), pred, Term::integer_literal(500)));
  auto store = TripleStore::build(graph);

  auto top1 = store.top_k_by_numeric(pred, 1, store::SortDirection::kDescending);
  REQUIRE(top1.size() == 1);
  CHECK(top1[0].subject == "urn:app:b");
  CHECK(top1[0].value.value == "1000");

  auto all = store.top_k_by_numeric(pred, 99, store::SortDirection::kDescending);
  REQUIRE(all.size() == 3);
  CHECK(all[2].subject == "urn:app:a");

  auto asc = store.top_k_by_numeric(pred, 99, store::SortDirection::kAscending);
  CHECK(asc[0].subject == "urn:app:a");
}

TEST_CASE("top_k tie-break is subject ascending") {
  auto graph = rdf::graph_with_default_prefixes();
  const std::string pred = kschema::terms::asm_ns("downloadCount");
  graph.add(rdf::make_triple(Term::iri("urn:app:b"), pred, Term::integer_literal(5)));
  graph.add(rdf::make_triple(Term::iri("urn:app:a"), pred, Term::integer_literal(5)));
  auto store = TripleStore::build(graph);
  auto rows = store.top_k_by_numeric(pred, 2, store::SortDirection::kDescending);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].subject == "urn:app:a");
  CHECK(rows[1].subject == "urn:app:b");
}

TEST_CASE("top_k rejects non-numeric predicates") {
  auto graph = rdf::graph_with_default_prefixes();
  graph.add(rdf::make_triple(Term::iri("urn:app:a"), kschema::terms::schema("name"),
                             Term::string_literal("A")));
  auto store = TripleStore::build(graph);
  CHECK_THROWS_WITH_AS(
      store.top_k_by_numeric(kschema::terms::schema("name"), 1, store::SortDirection::kDescending),
      doctest::Contains("NON_NUMERIC_PREDICATE"), Error);
}

TEST_CASE("rating queries reach through the aggregateRating node") {
  std::mt19937_64 rng(17);
  auto graph = test::random_conforming_graph(rng, 4);
  auto store = TripleStore::build(graph);
  auto rows = store.top_k_by_numeric(kschema::terms::schema("ratingValue"), 10,
                                     store::SortDirection::kDescending);
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row.subject.rfind("urn:app:", 0) == 0);  // apps, not blank nodes
  }
}

TEST_CASE("equal_value_peers excludes the subject and matches exactly") {
  auto graph = rdf::graph_with_default_prefixes();
  const std::string rating = kschema::terms::schema("ratingValue");
  const std::string agg = kschema::terms::schema("aggregateRating");
  auto add_app = [&](const std::string& id, const std::string& value) {
    Term app = Term::iri("urn:app:" + id);
    Term node = Term::blank("b" + id);
    graph.add(rdf::make_triple(app, agg, node));
    graph.add(rdf::make_triple(node, rating, Term::literal(value, rdf::iris::xsd_decimal)));
  };
  add_app("a", "4.5");
  add_app("b", "4.5");
  add_app("c", "3.0");
  auto store = TripleStore::build(graph);

  CHECK(store.equal_value_peers("urn:app:a", rating) == std::vector<std::string>{"urn:app:b"});
  CHECK(store.equal_value_peers("urn:app:c", rating).empty());
  CHECK_THROWS_WITH_AS(store.equal_value_peers("urn:app:zz", rating),
                       doctest::Contains("VALUE_NOT_FOUND"), Error);
}

TEST_CASE("peer membership is symmetric and irreflexive on random stores") {
  std::mt19937_64 rng(20260303);
  const std::string rating = kschema::terms::schema("ratingValue");
  for (int round = 0; round < 30; ++round) {
    auto graph = test::random_conforming_graph(rng, 2 + rng() % 8);
    auto store = TripleStore::build(graph);
    auto values = store.values_for(rating);
    for (const auto& [subject, value] : values) {
      auto peers = store.equal_value_peers(subject, rating);
      CHECK(std::find(peers.begin(), peers.end(), subject) == peers.end());
      for (const auto& peer : peers) {
        auto back = store.equal_value_peers(peer, rating);
        CHECK(std::find(back.begin(), back.end(), subject) != back.end());
      }
    }
  }
}

TEST_CASE("group_shares counts, shares and ordering") {
  auto graph = rdf::graph_with_default_prefixes();
  const std::string category = kschema::terms::schema("applicationCategory");
  auto add = [&](const std::string& id, const std::string& cat) {
    graph.add(rdf::make_triple(Term::iri("urn:app:" + id), category,
                               Term::string_literal(cat)));
  };
  add("a", "Game");
  add("b", "Business");
  add("c", "Business");
  add("d", "Tools");
  add("e", "Tools");
  add("f", "Tools");
  auto store = TripleStore::build(graph);
  auto rows = store.group_shares(category);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == store::GroupRow{"Tools", 3, "0.5000"});
  CHECK(rows[1] == store::GroupRow{"Business", 2, "0.3333"});
  CHECK(rows[2] == store::GroupRow{"Game", 1, "0.1667"});

  std::int64_t total = 0;
  for (const auto& row : rows) total += row.count;
  CHECK(total == 6);
}

TEST_CASE("one game among six apps reports share 0.1667") {
  auto graph = rdf::graph_with_default_prefixes();
  const std::string category = kschema::terms::schema("applicationCategory");
  graph.add(rdf::make_triple(Term::iri("urn:app:g"), category, Term::string_literal("Game")));
  for (char c = 'a'; c < 'f'; ++c) {
    graph.add(rdf::make_triple(Term::iri(std::string("urn:app:") + c), category,
                               Term::string_literal(std::string("Cat") + c)));
  }
  auto store = TripleStore::build(graph);
  auto rows = store.group_shares(category);
  for (const auto& row : rows) {
    if (row.value == "Game") CHECK(row.share == "0.1667");
  }
}

TEST_CASE("group_shares of an empty store is empty") {
  auto store = TripleStore::build(rdf::Graph{});
  CHECK(store.group_shares(kschema::terms::schema("applicationCategory")).empty());
}

TEST_CASE("all apps in one category share 1.0000") {
  auto graph = rdf::graph_with_default_prefixes();
  const std::string category = kschema::terms::schema("applicationCategory");
  graph.add(rdf::make_triple(Term::iri("urn:app:a"), category, Term::string_literal("Game")));
  graph.add(rdf::make_triple(Term::iri("urn:app:b"), category, Term::string_literal("Game")));
  auto store = TripleStore::build(graph);
  auto rows = store.group_shares(category);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == store::GroupRow{"Game", 2, "1.0000"});
}

TEST_CASE("half-even share rounding") {
  CHECK(store::format_share(1, 6) == "0.1667");
  CHECK(store::format_share(1, 8) == "0.1250");
  CHECK(store::format_share(1, 16000) == "0.0001");  // 0.0000625 rounds up at the 4th place? no
  CHECK(store::format_share(1, 20000) == "0.0000");  // 0.00005 rounds to even (0)
  CHECK(store::format_share(3, 20000) == "0.0002");  // 0.00015 rounds to even (2)
  CHECK(store::format_share(0, 5) == "0.0000");
  CHECK(store::format_share(5, 5) == "1.0000");
  CHECK(store::format_share(0, 0) == "0.0000");
}

TEST_CASE("build is insertion-order insensitive for queries") {
  std::mt19937_64 rng(19);
  auto graph = random_store_graph(rng, 5, 10);
  std::vector<Triple> shuffled(graph.triples().begin(), graph.triples().end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  rdf::Graph reordered;
  for (const auto& t : shuffled) reordered.add(t);

  auto a = TripleStore::build(graph);
  auto b = TripleStore::build(reordered);
  CHECK(a.match(QueryPattern::any()) == b.match(QueryPattern::any()));
  const std::string pred = kschema::terms::asm_ns("downloadCount");
  CHECK(a.top_k_by_numeric(pred, 3, store::SortDirection::kDescending) ==
        b.top_k_by_numeric(pred, 3, store::SortDirection::kDescending));
  CHECK(a.group_shares(kschema::terms::schema("applicationCategory")) ==
        b.group_shares(kschema::terms::schema("applicationCategory")));
}
