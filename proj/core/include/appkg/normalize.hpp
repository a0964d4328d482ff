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

#ifndef APPKG_NORMALIZE_HPP_
#define APPKG_NORMALIZE_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "appkg/decimal.hpp"
#include "appkg/error.hpp"
#include "appkg/extract.hpp"
#include "appkg/locale.hpp"

namespace appkg::normalize {

// Unified age floor across the numeric, ESRB and PEGI labels, so queries can
// compare ratings that different locales render differently.
enum class AgeFloor {
  kAll,
  kAge3,
  kAge7,
  kAge12,
  kAge13,
  kAge16,
  kAge17,
  kAge18,
  kUnrated,
};

enum class LabelSystem { kEsrb, kPegi, kNumeric };

struct ContentRating {
  AgeFloor canonical = AgeFloor::kUnrated;
  std::string original_label;
  LabelSystem system = LabelSystem::kNumeric;

  bool operator==(const ContentRating&) const = default;
};

struct PriceRange {
  Decimal low;
  Decimal high;
  std::string currency;  // ISO 4217

  bool operator==(const PriceRange&) const = default;
};

struct OsVersion {
  int major = 0;
  int minor = 0;

  bool operator==(const OsVersion&) const = default;
};

enum class DeveloperKind { kPerson, kOrganization };

// Typed, locale-normalized app metadata; the unit mapped to triples.
struct CanonicalAppRecord {
  std::string app_id;
  std::string name;
  std::string developer_name;
  DeveloperKind developer_kind = DeveloperKind::kOrganization;
  std::optional<std::string> developer_url;
  std::string category;
  std::optional<std::string> subcategory;  // present only when category == "Game"
  std::int64_t review_count = 0;
  Decimal rating_value;  // [0.0, 5.0]
  std::int64_t download_count = 0;  // bucket lower bound
  std::chrono::year_month_day date_modified{};
  ContentRating content_rating;
  std::optional<OsVersion> min_os;
  std::string os_raw;
  std::optional<PriceRange> price_range;
  std::string install_url;

  bool operator==(const CanonicalAppRecord&) const = default;
};

// Field parsers. Each throws Error with the code named in its comment.

// Strips grouping separators, drops one trailing '+', parses base 10.
// Throws kUnparseableNumber.
std::int64_t parse_download_count(std::string_view raw, const locale::LocaleProfile& profile);

// As parse_download_count without the '+' rule. Throws kUnparseableNumber.
std::int64_t parse_review_count(std::string_view raw, const locale::LocaleProfile& profile);

// Decimal star rating in [0, 5]. Throws kUnparseableNumber, kOutOfRange.
Decimal parse_rating_value(std::string_view raw, const locale::LocaleProfile& profile);

// Calendar date per the profile's pattern. Throws kUnparseableDate,
// kInvalidDate.
std::chrono::year_month_day parse_date(std::string_view raw, const locale::LocaleProfile& profile);

// Total: unrecognized labels map to kUnrated with the original preserved.
ContentRating normalize_content_rating(std::string_view raw, const locale::LocaleProfile& profile);

// First major.minor in the text; "Varies with device" yields absent.
// Throws kUnparseableVersion.
std::optional<OsVersion> parse_os_requirement(std::string_view raw);

// "$0.99 - $99.99 per item" or "$1.49"; empty input yields absent. Throws
// kUnknownCurrency, kUnparseablePrice, kRangeInverted.
std::optional<PriceRange> parse_price_range(std::string_view raw,
                                            const locale::LocaleProfile& profile);

struct CategorySplit {
  std::string category;
  std::optional<std::string> subcategory;
};

// The 17 game subcategory labels fold into ("Game", "<Label> Game");
// everything else passes through unchanged.
CategorySplit split_category(std::string_view raw);

struct FieldIssue {
  extract::FieldId field;
  ErrorCode code;
  std::string detail;
};

struct NormalizeResult {
  std::optional<CanonicalAppRecord> record;
  std::vector<FieldIssue> issues;

  bool ok() const { return record.has_value(); }
};

// Applies every field parser; a record with any hard field error is rejected
// and the issues list says why.
NormalizeResult normalize_record(const extract::RawAppRecord& raw,
                                 const locale::LocaleProfile& profile);

// Store package identifier from the install URL's `id` query parameter, or
// the whole URL when the parameter is absent.
std::string derive_app_id(std::string_view install_url);

std::string to_string(AgeFloor floor);
std::string format_date(const std::chrono::year_month_day& date);

}  // namespace appkg::normalize

#endif  // APPKG_NORMALIZE_HPP_
