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

#include "appkg/normalize.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace appkg::normalize {

namespace {

using extract::FieldId;
using locale::DatePattern;
using locale::LocaleProfile;
using locale::RatingSystem;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Lowercase with internal whitespace runs collapsed, for label lookups.
std::string fold_label(std::string_view s) {
  std::string out;
  bool pending = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::int64_t parse_grouped_integer(std::string_view raw, const LocaleProfile& profile,
                                   bool allow_plus) {
  std::string text = trim(raw);
  if (allow_plus && !text.empty() && text.back() == '+') text.pop_back();
  std::string digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (profile.thousands_separator && c == *profile.thousands_separator) continue;
    digits.push_back(c);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
        return std::isdigit(c);
      })) {
    throw Error(ErrorCode::kUnparseableNumber, "\"" + std::string(raw) + "\"");
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorCode::kUnparseableNumber, "\"" + std::string(raw) + "\"");
  }
  return value;
}

const std::array<std::string_view, 17> kGameSubcategories = {
    "action",   "adventure", "arcade",       "board",      "card",     "casino",
    "casual",   "educational", "music",      "puzzle",     "racing",   "role playing",
    "simulation", "sports",  "strategy",     "trivia",     "word",
};

std::string title_case(std::string_view folded) {
  std::string out(folded);
  bool start = true;
  for (char& c : out) {
    if (start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    start = c == ' ';
  }
  return out;
}

struct RatingEntry {
  std::string_view label;  // folded form
  AgeFloor floor;
  LabelSystem system;
};

constexpr std::array<RatingEntry, 15> kRatingTable = {{
    {"3+", AgeFloor::kAge3, LabelSystem::kNumeric},
    {"7+", AgeFloor::kAge7, LabelSystem::kNumeric},
    {"12+", AgeFloor::kAge12, LabelSystem::kNumeric},
    {"16+", AgeFloor::kAge16, LabelSystem::kNumeric},
    {"18+", AgeFloor::kAge18, LabelSystem::kNumeric},
    {"everyone", AgeFloor::kAll, LabelSystem::kEsrb},
    {"everyone 10+", AgeFloor::kAge12, LabelSystem::kEsrb},
    {"teen", AgeFloor::kAge13, LabelSystem::kEsrb},
    {"mature 17+", AgeFloor::kAge17, LabelSystem::kEsrb},
    {"adults only 18+", AgeFloor::kAge18, LabelSystem::kEsrb},
    {"pegi 3", AgeFloor::kAge3, LabelSystem::kPegi},
    {"pegi 7", AgeFloor::kAge7, LabelSystem::kPegi},
    {"pegi 12", AgeFloor::kAge12, LabelSystem::kPegi},
    {"pegi 16", AgeFloor::kAge16, LabelSystem::kPegi},
    {"pegi 18", AgeFloor::kAge18, LabelSystem::kPegi},
}};

const std::array<std::string_view, 12> kMonthNames = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december",
};

std::optional<unsigned> month_from_name(std::string_view folded) {
  for (std::size_t i = 0; i < kMonthNames.size(); ++i) {
    if (kMonthNames[i] == folded) return static_cast<unsigned>(i + 1);
  }
  return std::nullopt;
}

std::optional<int> to_int(std::string_view digits) {
  if (digits.empty() || digits.size() > 9) return std::nullopt;
  int value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

std::chrono::year_month_day make_date(int year, unsigned month, unsigned day,
                                      std::string_view raw) {
  std::chrono::year_month_day ymd{std::chrono::year(year), std::chrono::month(month),
                                  std::chrono::day(day)};
  if (!ymd.ok()) throw Error(ErrorCode::kInvalidDate, "\"" + std::string(raw) + "\"");
  return ymd;
}

// One "<symbol><number>" token starting at `pos`; advances past it.
Decimal parse_price_token(std::string_view text, std::size_t& pos, const LocaleProfile& profile,
                          std::string& currency, std::string_view raw) {
  // Longest symbol match first, so multi-character symbols win.
  const locale::CurrencySymbol* best = nullptr;
  for (const auto& cs : profile.currency_symbols) {
    if (text.substr(pos, cs.symbol.size()) == cs.symbol &&
        (!best || cs.symbol.size() > best->symbol.size())) {
      best = &cs;
    }
  }
  if (!best) throw Error(ErrorCode::kUnknownCurrency, "\"" + std::string(raw) + "\"");
  if (!currency.empty() && currency != best->code) {
    throw Error(ErrorCode::kUnparseablePrice,
                "mixed currencies in \"" + std::string(raw) + "\"");
  }
  currency = best->code;
  pos += best->symbol.size();
  while (pos < text.size() && text[pos] == ' ') ++pos;

  std::size_t start = pos;
  while (pos < text.size() &&
         (std::isdigit(static_cast<unsigned char>(text[pos])) ||
          text[pos] == profile.decimal_separator ||
          (profile.thousands_separator && text[pos] == *profile.thousands_separator))) {
    ++pos;
  }
  std::string number;
  for (char c : text.substr(start, pos - start)) {
    if (profile.thousands_separator && c == *profile.thousands_separator) continue;
    number.push_back(c);
  }
  auto value = Decimal::parse(number, profile.decimal_separator);
  if (!value) throw Error(ErrorCode::kUnparseablePrice, "\"" + std::string(raw) + "\"");
  return *value;
}

}  // namespace

std::int64_t parse_download_count(std::string_view raw, const LocaleProfile& profile) {
  return parse_grouped_integer(raw, profile, /*allow_plus=*/true);
}

std::int64_t parse_review_count(std::string_view raw, const LocaleProfile& profile) {
  return parse_grouped_integer(raw, profile, /*allow_plus=*/false);
}

Decimal parse_rating_value(std::string_view raw, const LocaleProfile& profile) {
  auto value = Decimal::parse(trim(raw), profile.decimal_separator);
  if (!value) throw Error(ErrorCode::kUnparseableNumber, "\"" + std::string(raw) + "\"");
  if (*value < Decimal::from_int(0) || *value > Decimal::from_int(5)) {
    throw Error(ErrorCode::kOutOfRange, "rating \"" + std::string(raw) + "\" outside [0, 5]");
  }
  return *value;
}

std::chrono::year_month_day parse_date(std::string_view raw, const LocaleProfile& profile) {
  std::string text = trim(raw);
  if (profile.date_pattern == DatePattern::kIso) {
    if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
      auto y = to_int(text.substr(0, 4));
      auto m = to_int(text.substr(5, 2));
      auto d = to_int(text.substr(8, 2));
      if (y && m && d) return make_date(*y, *m, *d, raw);
    }
    throw Error(ErrorCode::kUnparseableDate, "\"" + std::string(raw) + "\"");
  }

  auto words = split_words(text);
  if (words.size() != 3) throw Error(ErrorCode::kUnparseableDate, "\"" + std::string(raw) + "\"");

  std::string month_word, day_word;
  if (profile.date_pattern == DatePattern::kMdyLong) {
    // "May 7, 2019"
    month_word = words[0];
    day_word = words[1];
    if (!day_word.empty() && day_word.back() == ',') day_word.pop_back();
  } else {
    // "7 May 2019"
    day_word = words[0];
    month_word = words[1];
  }
  auto month = month_from_name(fold_label(month_word));
  auto day = to_int(day_word);
  auto year = to_int(words[2]);
  if (!month || !day || !year) {
    throw Error(ErrorCode::kUnparseableDate, "\"" + std::string(raw) + "\"");
  }
  return make_date(*year, *month, static_cast<unsigned>(*day), raw);
}

ContentRating normalize_content_rating(std::string_view raw, const LocaleProfile& profile) {
  ContentRating rating;
  rating.original_label = std::string(raw);
  std::string folded = fold_label(raw);
  for (const auto& entry : kRatingTable) {
    if (entry.label == folded) {
      rating.canonical = entry.floor;
      rating.system = entry.system;
      return rating;
    }
  }
  rating.canonical = AgeFloor::kUnrated;
  rating.system =
      profile.rating_system == RatingSystem::kPegi ? LabelSystem::kPegi : LabelSystem::kEsrb;
  return rating;
}

std::optional<OsVersion> parse_os_requirement(std::string_view raw) {
  std::string text = trim(raw);
  if (fold_label(text) == "varies with device") return std::nullopt;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) continue;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    OsVersion version;
    version.major = *to_int(std::string_view(text).substr(i, j - i));
    if (j < text.size() && text[j] == '.' && j + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
      std::size_t k = j + 1;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      version.minor = *to_int(std::string_view(text).substr(j + 1, k - j - 1));
    }
    return version;
  }
  throw Error(ErrorCode::kUnparseableVersion, "\"" + std::string(raw) + "\"");
}

std::optional<PriceRange> parse_price_range(std::string_view raw, const LocaleProfile& profile) {
  std::string text = trim(raw);
  if (text.empty()) return std::nullopt;

  PriceRange range;
  std::string currency;
  std::size_t pos = 0;
  range.low = parse_price_token(text, pos, profile, currency, raw);
  range.high = range.low;

  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos < text.size() && text[pos] == '-') {
    ++pos;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    range.high = parse_price_token(text, pos, profile, currency, raw);
  }
  // Anything after the prices ("per item") must be a separate word.
  if (pos < text.size() && text[pos] != ' ') {
    throw Error(ErrorCode::kUnparseablePrice, "\"" + std::string(raw) + "\"");
  }
  if (range.high < range.low) {
    throw Error(ErrorCode::kRangeInverted, "\"" + std::string(raw) + "\"");
  }
  range.currency = currency;
  return range;
}

CategorySplit split_category(std::string_view raw) {
  std::string folded = fold_label(raw);
  for (const auto& sub : kGameSubcategories) {
    if (sub == folded) {
      return {"Game", title_case(folded) + " Game"};
    }
  }
  return {trim(raw), std::nullopt};
}

std::string derive_app_id(std::string_view install_url) {
  auto query_start = install_url.find('?');
  if (query_start != std::string_view::npos) {
    std::string_view query = install_url.substr(query_start + 1);
    auto fragment = query.find('#');
    if (fragment != std::string_view::npos) query = query.substr(0, fragment);
    std::size_t pos = 0;
    while (pos <= query.size()) {
      auto amp = query.find('&', pos);
      std::string_view pair =
          amp == std::string_view::npos ? query.substr(pos) : query.substr(pos, amp - pos);
      if (pair.substr(0, 3) == "id=") return std::string(pair.substr(3));
      if (amp == std::string_view::npos) break;
      pos = amp + 1;
    }
  }
  return std::string(install_url);
}

NormalizeResult normalize_record(const extract::RawAppRecord& raw,
                                 const locale::LocaleProfile& profile) {
  NormalizeResult result;
  CanonicalAppRecord record;

  auto attempt = [&](FieldId field, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      result.issues.push_back({field, e.code(), e.what()});
    }
  };
  auto require = [&](FieldId field, const std::optional<std::string>& value) -> bool {
    if (value.has_value()) return true;
    result.issues.push_back({field, ErrorCode::kMissingField, "field absent"});
    return false;
  };

  if (require(FieldId::kName, raw.name)) record.name = trim(*raw.name);
  if (require(FieldId::kDeveloper, raw.developer)) record.developer_name = trim(*raw.developer);
  record.developer_kind =
      raw.developer_is_person ? DeveloperKind::kPerson : DeveloperKind::kOrganization;
  record.developer_url = raw.developer_url;

  if (require(FieldId::kCategory, raw.category)) {
    auto split = split_category(*raw.category);
    record.category = split.category;
    record.subcategory = split.subcategory;
  }
  if (require(FieldId::kReviewCount, raw.review_count)) {
    attempt(FieldId::kReviewCount,
            [&] { record.review_count = parse_review_count(*raw.review_count, profile); });
  }
  if (require(FieldId::kRatingValue, raw.rating_value)) {
    attempt(FieldId::kRatingValue,
            [&] { record.rating_value = parse_rating_value(*raw.rating_value, profile); });
  }
  if (require(FieldId::kDownloadCount, raw.download_count)) {
    attempt(FieldId::kDownloadCount,
            [&] { record.download_count = parse_download_count(*raw.download_count, profile); });
  }
  if (require(FieldId::kDateModified, raw.date_modified)) {
    attempt(FieldId::kDateModified,
            [&] { record.date_modified = parse_date(*raw.date_modified, profile); });
  }
  if (require(FieldId::kContentRating, raw.content_rating)) {
    record.content_rating = normalize_content_rating(*raw.content_rating, profile);
  }
  if (require(FieldId::kOsRequirement, raw.os_requirement)) {
    record.os_raw = trim(*raw.os_requirement);
    attempt(FieldId::kOsRequirement,
            [&] { record.min_os = parse_os_requirement(*raw.os_requirement); });
  }
  if (raw.price_range) {
    attempt(FieldId::kPriceRange,
            [&] { record.price_range = parse_price_range(*raw.price_range, profile); });
  }

  auto is_absolute_url = [](const std::string& url) {
    return url.find("://") != std::string::npos;
  };
  if (raw.url.empty()) {
    result.issues.push_back({FieldId::kUrl, ErrorCode::kMissingField, "field absent"});
  } else if (!is_absolute_url(raw.url)) {
    result.issues.push_back({FieldId::kUrl, ErrorCode::kInvalidUrl, raw.url});
  } else {
    record.install_url = raw.url;
    record.app_id = derive_app_id(raw.url);
  }
  if (record.developer_url && !is_absolute_url(*record.developer_url)) {
    result.issues.push_back({FieldId::kDeveloper, ErrorCode::kInvalidUrl, *record.developer_url});
  }

  if (result.issues.empty()) result.record = std::move(record);
  return result;
}

std::string to_string(AgeFloor floor) {
  switch (floor) {
    case AgeFloor::kAll: return "AGE_ALL";
    case AgeFloor::kAge3: return "AGE_3";
    case AgeFloor::kAge7: return "AGE_7";
    case AgeFloor::kAge12: return "AGE_12";
    case AgeFloor::kAge13: return "AGE_13";
    case AgeFloor::kAge16: return "AGE_16";
    case AgeFloor::kAge17: return "AGE_17";
    case AgeFloor::kAge18: return "AGE_18";
    case AgeFloor::kUnrated: return "UNRATED";
  }
  return "UNRATED";
}

std::string format_date(const std::chrono::year_month_day& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

}  // namespace appkg::normalize
