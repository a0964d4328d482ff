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

#ifndef APPKG_STORE_HPP_
#define APPKG_STORE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "appkg/rdf.hpp"

namespace appkg::store {

// Term ordering used by the indices: IRIs < blanks < literals, each group
// lexicographic, except that integer/decimal literals compare by numeric
// value (datatype IRI then lexical form break exact ties).
int compare_terms(const rdf::Term& a, const rdf::Term& b);
bool terms_equal_value(const rdf::Term& a, const rdf::Term& b);

struct QueryPattern {
  std::optional<rdf::Term> subject;
  std::optional<rdf::Term> predicate;
  std::optional<rdf::Term> object;

  static QueryPattern any() { return {}; }
};

enum class SortDirection { kAscending, kDescending };

struct GroupRow {
  std::string value;
  std::int64_t count = 0;
  std::string share;  // fixed four decimal places, half-even

  bool operator==(const GroupRow&) const = default;
};

struct SubjectValue {
  std::string subject;  // IRI text, or _:label for blanks
  rdf::Term value;

  bool operator==(const SubjectValue&) const = default;
};

// Immutable store over a frozen triple array with three sorted index
// permutations (SPO, POS, OSP). Safe for concurrent readers after build.
class TripleStore {
 public:
  static TripleStore build(const rdf::Graph& graph);

  std::size_t size() const { return triples_.size(); }

  // All triples matching the fixed positions, ordered by the index chosen
  // from the bound-position prefix (subject: SPO, predicate: POS,
  // object: OSP).
  std::vector<rdf::Triple> match(const QueryPattern& pattern) const;

  // Subjects ranked by the numeric value of `predicate`, ties broken by
  // subject ascending; at most k rows. Rating and review predicates reach
  // through the aggregateRating node. Throws Error(kNonNumericPredicate).
  std::vector<SubjectValue> top_k_by_numeric(const std::string& predicate, std::size_t k,
                                             SortDirection direction) const;

  // The other subjects sharing `subject`'s value for `predicate`, subject
  // excluded, ascending. Throws Error(kValueNotFound).
  std::vector<std::string> equal_value_peers(const std::string& subject,
                                             const std::string& predicate) const;

  // One row per distinct literal value of `predicate`: subject count and
  // the count's share of all subjects bearing the predicate, rounded
  // half-even to four places. Sorted by count descending, value ascending.
  std::vector<GroupRow> group_shares(const std::string& predicate) const;

  // (subject, value) pairs for the predicate, following the one-hop
  // aggregateRating blank for ratingValue and reviewCount.
  std::vector<SubjectValue> values_for(const std::string& predicate) const;

 private:
  std::vector<rdf::Triple> triples_;
  std::vector<std::uint32_t> spo_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> osp_;
};

// Four-decimal half-even share of count/total, e.g. "0.1667".
std::string format_share(std::int64_t count, std::int64_t total);

}  // namespace appkg::store

#endif  // APPKG_STORE_HPP_
