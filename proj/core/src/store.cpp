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
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "appkg/error.hpp"
#include "appkg/kschema.hpp"

namespace appkg::store {

namespace {

using rdf::Term;
using rdf::Triple;

bool numeric_datatype(const std::string& datatype) {
  return datatype == rdf::iris::xsd_integer || datatype == rdf::iris::xsd_decimal;
}

// Exact numeric comparison of integer/decimal lexical forms, digit-string
// based so no precision is lost on large counts.
int compare_numeric_lexicals(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
      negative = s[0] == '-';
      s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string_view whole = dot == std::string_view::npos ? s : s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? "" : s.substr(dot + 1);
    while (whole.size() > 1 && whole.front() == '0') whole.remove_prefix(1);
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
    bool zero = (whole.empty() || whole == "0") && frac.empty();
    return std::tuple(negative && !zero, whole, frac);
  };
  auto [neg_a, whole_a, frac_a] = split(a);
  auto [neg_b, whole_b, frac_b] = split(b);
  if (neg_a != neg_b) return neg_a ? -1 : 1;
  int sign = neg_a ? -1 : 1;
  if (whole_a.size() != whole_b.size()) {
    return whole_a.size() < whole_b.size() ? -sign : sign;
  }
  if (int c = whole_a.compare(whole_b); c != 0) return c < 0 ? -sign : sign;
  if (int c = frac_a.compare(frac_b); c != 0) {
    // Lexicographic works for fractions once trailing zeros are gone, since
    // a proper prefix is smaller.
    return c < 0 ? -sign : sign;
  }
  return 0;
}

int kind_rank(const Term& term) {
  switch (term.kind) {
    case Term::Kind::kIri: return 0;
    case Term::Kind::kBlank: return 1;
    case Term::Kind::kLiteral: return 2;
  }
  return 3;
}

int compare_triples_rotated(const Triple& a, const Triple& b, int first, int second, int third) {
  auto part = [](const Triple& t, int which) -> const Term& {
    switch (which) {
      case 0: return t.subject;
      case 1: return t.predicate;
      default: return t.object;
    }
  };
  if (int c = compare_terms(part(a, first), part(b, first)); c != 0) return c;
  if (int c = compare_terms(part(a, second), part(b, second)); c != 0) return c;
  return compare_terms(part(a, third), part(b, third));
}

std::string subject_text(const Term& term) {
  return term.is_blank() ? "_:" + term.value : term.value;
}

}  // namespace

int compare_terms(const Term& a, const Term& b) {
  if (int c = kind_rank(a) - kind_rank(b); c != 0) return c < 0 ? -1 : 1;
  if (!a.is_literal()) {
    return a.value.compare(b.value) < 0 ? -1 : (a.value == b.value ? 0 : 1);
  }
  bool both_numeric = numeric_datatype(a.datatype) && numeric_datatype(b.datatype);
  if (both_numeric) {
    if (int c = compare_numeric_lexicals(a.value, b.value); c != 0) return c;
    if (int c = a.datatype.compare(b.datatype); c != 0) return c < 0 ? -1 : 1;
    return a.value.compare(b.value) < 0 ? -1 : (a.value == b.value ? 0 : 1);
  }
  if (int c = a.datatype.compare(b.datatype); c != 0) return c < 0 ? -1 : 1;
  if (int c = a.value.compare(b.value); c != 0) return c < 0 ? -1 : 1;
  if (int c = a.language.compare(b.language); c != 0) return c < 0 ? -1 : 1;
  return 0;
}

bool terms_equal_value(const Term& a, const Term& b) {
  if (a.is_literal() && b.is_literal() && numeric_datatype(a.datatype) &&
      numeric_datatype(b.datatype)) {
    return compare_numeric_lexicals(a.value, b.value) == 0;
  }
  return a == b;
}

TripleStore TripleStore::build(const rdf::Graph& graph) {
  TripleStore store;
  store.triples_.assign(graph.triples().begin(), graph.triples().end());

  auto make_index = [&](int first, int second, int third) {
    std::vector<std::uint32_t> index(store.triples_.size());
    std::iota(index.begin(), index.end(), 0);
    std::sort(index.begin(), index.end(), [&](std::uint32_t x, std::uint32_t y) {
      return compare_triples_rotated(store.triples_[x], store.triples_[y], first, second, third) <
             0;
    });
    return index;
  };
  store.spo_ = make_index(0, 1, 2);
  store.pos_ = make_index(1, 2, 0);
  store.osp_ = make_index(2, 0, 1);
  return store;
}

std::vector<Triple> TripleStore::match(const QueryPattern& pattern) const {
  // Choose the index whose key starts with the bound positions.
  const std::vector<std::uint32_t>* index = &spo_;
  int first = 0, second = 1, third = 2;
  if (pattern.subject) {
    index = &spo_;
    first = 0, second = 1, third = 2;
  } else if (pattern.predicate) {
    index = &pos_;
    first = 1, second = 2, third = 0;
  } else if (pattern.object) {
    index = &osp_;
    first = 2, second = 0, third = 1;
  }

  auto part_of = [](const QueryPattern& p, int which) -> const std::optional<Term>& {
    switch (which) {
      case 0: return p.subject;
      case 1: return p.predicate;
      default: return p.object;
    }
  };

  // Binary search for the run sharing the bound key prefix.
  auto prefix_compare = [&](std::uint32_t idx) {
    const Triple& t = triples_[idx];
    auto term_of = [&](int which) -> const Term& {
      switch (which) {
        case 0: return t.subject;
        case 1: return t.predicate;
        default: return t.object;
      }
    };
    for (int which : {first, second, third}) {
      const auto& bound = part_of(pattern, which);
      if (!bound) break;  // prefix exhausted
      if (int c = compare_terms(term_of(which), *bound); c != 0) return c;
    }
    return 0;
  };

  auto lo = std::partition_point(index->begin(), index->end(),
                                 [&](std::uint32_t i) { return prefix_compare(i) < 0; });
  auto hi = std::partition_point(lo, index->end(),
                                 [&](std::uint32_t i) { return prefix_compare(i) == 0; });

  std::vector<Triple> out;
  for (auto it = lo; it != hi; ++it) {
    const Triple& t = triples_[*it];
    if (pattern.subject && compare_terms(t.subject, *pattern.subject) != 0) continue;
    if (pattern.predicate && compare_terms(t.predicate, *pattern.predicate) != 0) continue;
    if (pattern.object && compare_terms(t.object, *pattern.object) != 0) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<SubjectValue> TripleStore::values_for(const std::string& predicate) const {
  std::vector<SubjectValue> out;
  const bool hop = predicate == kschema::terms::schema("ratingValue") ||
                   predicate == kschema::terms::schema("reviewCount");

  QueryPattern direct;
  direct.predicate = Term::iri(predicate);
  for (const auto& t : match(direct)) {
    if (hop && t.subject.is_blank()) continue;  // reached again through the hop
    out.push_back({subject_text(t.subject), t.object});
  }

  if (hop) {
    QueryPattern link;
    link.predicate = Term::iri(kschema::terms::schema("aggregateRating"));
    for (const auto& l : match(link)) {
      QueryPattern inner;
      inner.subject = l.object;
      inner.predicate = Term::iri(predicate);
      for (const auto& t : match(inner)) {
        out.push_back({subject_text(l.subject), t.object});
      }
    }
    std::sort(out.begin(), out.end(), [](const SubjectValue& a, const SubjectValue& b) {
      if (a.subject != b.subject) return a.subject < b.subject;
      return compare_terms(a.value, b.value) < 0;
    });
  }
  return out;
}

std::vector<SubjectValue> TripleStore::top_k_by_numeric(const std::string& predicate,
                                                        std::size_t k,
                                                        SortDirection direction) const {
  std::vector<SubjectValue> pairs = values_for(predicate);
  for (const auto& pair : pairs) {
    if (!pair.value.is_literal() || !numeric_datatype(pair.value.datatype)) {
      throw Error(ErrorCode::kNonNumericPredicate,
                  predicate + " has non-numeric value for " + pair.subject);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&](const SubjectValue& a, const SubjectValue& b) {
    int c = compare_numeric_lexicals(a.value.value, b.value.value);
    if (c != 0) return direction == SortDirection::kAscending ? c < 0 : c > 0;
    if (a.subject != b.subject) return a.subject < b.subject;
    return compare_terms(a.value, b.value) < 0;
  });
  if (pairs.size() > k) pairs.resize(k);
  return pairs;
}

std::vector<std::string> TripleStore::equal_value_peers(const std::string& subject,
                                                        const std::string& predicate) const {
  auto pairs = values_for(predicate);
  std::vector<const Term*> reference;
  for (const auto& pair : pairs) {
    if (pair.subject == subject) reference.push_back(&pair.value);
  }
  if (reference.empty()) {
    throw Error(ErrorCode::kValueNotFound, subject + " has no value for " + predicate);
  }
  std::set<std::string> peers;
  for (const auto& pair : pairs) {
    if (pair.subject == subject) continue;
    for (const Term* ref : reference) {
      if (terms_equal_value(pair.value, *ref)) {
        peers.insert(pair.subject);
        break;
      }
    }
  }
  return {peers.begin(), peers.end()};
}

std::vector<GroupRow> TripleStore::group_shares(const std::string& predicate) const {
  QueryPattern pattern;
  pattern.predicate = Term::iri(predicate);

  std::map<std::string, std::set<std::string>> subjects_by_value;
  std::set<std::string> all_subjects;
  for (const auto& t : match(pattern)) {
    if (!t.object.is_literal()) continue;
    std::string subject = subject_text(t.subject);
    subjects_by_value[t.object.value].insert(subject);
    all_subjects.insert(subject);
  }

  std::vector<GroupRow> rows;
  rows.reserve(subjects_by_value.size());
  auto total = static_cast<std::int64_t>(all_subjects.size());
  for (const auto& [value, subjects] : subjects_by_value) {
    GroupRow row;
    row.value = value;
    row.count = static_cast<std::int64_t>(subjects.size());
    row.share = format_share(row.count, total);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const GroupRow& a, const GroupRow& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.value < b.value;
  });
  return rows;
}

std::string format_share(std::int64_t count, std::int64_t total) {
  if (total == 0) return "0.0000";
  // share = count / total rounded half-even to 4 places, computed exactly.
  std::int64_t numerator = count * 10000;
  std::int64_t quotient = numerator / total;
  std::int64_t remainder = numerator % total;
  if (2 * remainder > total || (2 * remainder == total && quotient % 2 == 1)) {
    ++quotient;
  }
  std::string digits = std::to_string(quotient % 10000);
  digits.insert(0, 4 - digits.size(), '0');
  return std::to_string(quotient / 10000) + "." + digits;
}

}  // namespace appkg::store
