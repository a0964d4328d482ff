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

#ifndef APPKG_LOCALE_HPP_
#define APPKG_LOCALE_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace appkg::locale {

enum class DatePattern { kMdyLong, kDmyLong, kIso };
enum class RatingSystem { kEsrb, kPegi };

struct CurrencySymbol {
  std::string symbol;  // e.g. "$", "zł"
  std::string code;    // ISO 4217, e.g. "USD"
};

// How one store locale renders numbers, dates, ratings and prices.
struct LocaleProfile {
  std::string id;
  char decimal_separator = '.';
  std::optional<char> thousands_separator;  // absent = no grouping
  DatePattern date_pattern = DatePattern::kMdyLong;
  RatingSystem rating_system = RatingSystem::kEsrb;
  std::vector<CurrencySymbol> currency_symbols;
};

// The store default: dot decimals, comma grouping, "May 7, 2019" dates,
// ESRB ratings, dollar prices.
const LocaleProfile& us_profile();

class ProfileRegistry {
 public:
  // Starts out holding the built-in us profile.
  ProfileRegistry();

  // Adds or replaces a profile. Throws Error(kProfileInvalid) when the
  // profile violates its invariants (empty id, equal separators).
  void add(LocaleProfile profile);

  // Throws Error(kUnknownProfile) for ids not present.
  const LocaleProfile& get(std::string_view id) const;
  bool contains(std::string_view id) const;

  // Merges profiles from a registry file: blank-line separated stanzas of
  // `key: value` lines keyed by `id`. Throws on unreadable or malformed input.
  void load_file(const std::string& path);
  void load_text(std::string_view text, std::string_view origin);

 private:
  std::map<std::string, LocaleProfile, std::less<>> profiles_;
};

}  // namespace appkg::locale

#endif  // APPKG_LOCALE_HPP_
