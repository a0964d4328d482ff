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

#include "appkg/synth.hpp"

#include <array>
#include <random>

namespace appkg::synth {

namespace {

using normalize::CanonicalAppRecord;

constexpr std::array<std::string_view, 17> kGameLabels = {
    "Action Game",   "Adventure Game",  "Arcade Game",     "Board Game",  "Card Game",
    "Casino Game",   "Casual Game",     "Educational Game", "Music Game", "Puzzle Game",
    "Racing Game",   "Role Playing Game", "Simulation Game", "Sports Game", "Strategy Game",
    "Trivia Game",   "Word Game",
};

constexpr std::array<std::string_view, 31> kOtherCategories = {
    "Art & Design",    "Auto & Vehicles", "Beauty",          "Books & Reference",
    "Business",        "Comics",          "Communication",   "Dating",
    "Education",       "Entertainment",   "Events",          "Finance",
    "Food & Drink",    "Health & Fitness", "House & Home",   "Libraries & Demo",
    "Lifestyle",       "Maps & Navigation", "Medical",       "Music & Audio",
    "News & Magazines", "Parenting",      "Personalization", "Photography",
    "Productivity",    "Shopping",        "Social",          "Sports",
    "Tools",           "Travel & Local",  "Weather",
};

constexpr std::array<std::int64_t, 12> kDownloadBuckets = {
    10,      50,      100,      500,       1000,       5000,
    100000,  500000,  1000000,  10000000,  100000000,  1000000000,
};

constexpr std::array<std::string_view, 6> kEsrbLabels = {
    "Everyone", "Everyone 10+", "Teen", "Mature 17+", "Adults Only 18+", "Everyone",
};

}  // namespace

std::vector<CanonicalAppRecord> make_records(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CanonicalAppRecord> records;
  records.reserve(count);

  for (std::size_t i = 0; i < count; ++i) {
    CanonicalAppRecord r;
    std::string serial = std::to_string(i);
    r.app_id = "com.synth.app" + serial;
    r.name = "Synthetic App " + serial;
    r.install_url = "https://store.example.com/apps/details?id=" + r.app_id;

    if (rng() % 6 == 0) {
      auto label = kGameLabels[rng() % kGameLabels.size()];
      r.category = "Game";
      r.subcategory = std::string(label);
    } else {
      r.category = std::string(kOtherCategories[rng() % kOtherCategories.size()]);
    }

    r.developer_name = "Studio " + std::to_string(rng() % 5000);
    r.developer_kind = rng() % 10 == 0 ? normalize::DeveloperKind::kPerson
                                       : normalize::DeveloperKind::kOrganization;
    if (rng() % 10 == 0) {
      r.developer_url = "https://dev" + std::to_string(rng() % 5000) + ".example.com";
    }

    r.review_count = static_cast<std::int64_t>(rng() % 5000000);
    r.rating_value = Decimal(static_cast<std::int64_t>(10 + rng() % 41), 1);  // 1.0 .. 5.0
    r.download_count = kDownloadBuckets[rng() % kDownloadBuckets.size()];
    r.date_modified = std::chrono::year_month_day{
        std::chrono::year(static_cast<int>(2014 + rng() % 6)),
        std::chrono::month(static_cast<unsigned>(1 + rng() % 12)),
        std::chrono::day(static_cast<unsigned>(1 + rng() % 28))};

    auto esrb = kEsrbLabels[rng() % kEsrbLabels.size()];
    r.content_rating =
        normalize::normalize_content_rating(std::string(esrb), locale::us_profile());

    if (rng() % 4 == 0) {
      r.min_os = std::nullopt;
      r.os_raw = "Varies with device";
    } else {
      r.min_os = normalize::OsVersion{static_cast<int>(4 + rng() % 6),
                                      static_cast<int>(rng() % 5)};
      r.os_raw = std::to_string(r.min_os->major) + "." + std::to_string(r.min_os->minor) +
                 " and up";
    }

    if (rng() % 10 < 3) {
      normalize::PriceRange price;
      price.low = Decimal(static_cast<std::int64_t>(49 + rng() % 500), 2);
      price.high = Decimal(price.low.units() * (1 + static_cast<std::int64_t>(rng() % 100)),
                           price.low.scale());
      price.currency = "USD";
      r.price_range = price;
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace appkg::synth
