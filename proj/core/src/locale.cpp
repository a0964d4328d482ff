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

#include "appkg/locale.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "appkg/error.hpp"

namespace appkg::locale {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

char parse_separator(const std::string& value, std::string_view origin, std::string_view key) {
  if (value.size() == 1 && (value[0] == '.' || value[0] == ',')) return value[0];
  throw Error(ErrorCode::kProfileInvalid,
              std::string(origin) + ": " + std::string(key) + " must be '.' or ','");
}

void validate(const LocaleProfile& profile) {
  if (profile.id.empty()) {
    throw Error(ErrorCode::kProfileInvalid, "profile id must be non-empty");
  }
  if (profile.thousands_separator &&
      *profile.thousands_separator == profile.decimal_separator) {
    throw Error(ErrorCode::kProfileInvalid,
                "profile " + profile.id + ": decimal and thousands separators must differ");
  }
}

}  // namespace

const LocaleProfile& us_profile() {
  static const LocaleProfile profile = [] {
    LocaleProfile p;
    p.id = "us";
    p.decimal_separator = '.';
    p.thousands_separator = ',';
    p.date_pattern = DatePattern::kMdyLong;
    p.rating_system = RatingSystem::kEsrb;
    p.currency_symbols = {{"$", "USD"}};
    return p;
  }();
  return profile;
}

ProfileRegistry::ProfileRegistry() { add(us_profile()); }

void ProfileRegistry::add(LocaleProfile profile) {
  validate(profile);
  profiles_[profile.id] = std::move(profile);
}

const LocaleProfile& ProfileRegistry::get(std::string_view id) const {
  auto it = profiles_.find(id);
  if (it == profiles_.end()) {
    throw Error(ErrorCode::kUnknownProfile, std::string(id));
  }
  return it->second;
}

bool ProfileRegistry::contains(std::string_view id) const {
  return profiles_.find(id) != profiles_.end();
}

void ProfileRegistry::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kProfileInvalid, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  load_text(buf.str(), path);
}

void ProfileRegistry::load_text(std::string_view text, std::string_view origin) {
  LocaleProfile profile;
  bool open = false;

  auto flush = [&] {
    if (!open) return;
    add(std::move(profile));
    profile = LocaleProfile{};
    open = false;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    std::string line = trim(raw);
    if (line.empty()) {
      flush();
    } else if (line[0] != '#') {
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        throw Error(ErrorCode::kProfileInvalid, std::string(origin) + ": expected key: value");
      }
      std::string key = trim(line.substr(0, colon));
      std::string value = trim(line.substr(colon + 1));
      open = true;
      if (key == "id") {
        profile.id = value;
      } else if (key == "decimal_separator") {
        profile.decimal_separator = parse_separator(value, origin, key);
      } else if (key == "thousands_separator") {
        std::string v = lowercase(value);
        if (v == "none") {
          profile.thousands_separator.reset();
        } else if (v == "space") {
          profile.thousands_separator = ' ';
        } else {
          profile.thousands_separator = parse_separator(value, origin, key);
        }
      } else if (key == "date_pattern") {
        std::string v = value;
        if (v == "MDY_LONG") {
          profile.date_pattern = DatePattern::kMdyLong;
        } else if (v == "DMY_LONG") {
          profile.date_pattern = DatePattern::kDmyLong;
        } else if (v == "ISO") {
          profile.date_pattern = DatePattern::kIso;
        } else {
          throw Error(ErrorCode::kProfileInvalid,
                      std::string(origin) + ": unknown date_pattern \"" + value + "\"");
        }
      } else if (key == "rating_system") {
        std::string v = lowercase(value);
        if (v == "esrb") {
          profile.rating_system = RatingSystem::kEsrb;
        } else if (v == "pegi") {
          profile.rating_system = RatingSystem::kPegi;
        } else {
          throw Error(ErrorCode::kProfileInvalid,
                      std::string(origin) + ": unknown rating_system \"" + value + "\"");
        }
      } else if (key == "currency") {
        auto space = value.rfind(' ');
        if (space == std::string::npos) {
          throw Error(ErrorCode::kProfileInvalid,
                      std::string(origin) + ": currency wants \"<symbol> <code>\"");
        }
        profile.currency_symbols.push_back(
            {trim(value.substr(0, space)), trim(value.substr(space + 1))});
      } else {
        throw Error(ErrorCode::kProfileInvalid,
                    std::string(origin) + ": unknown key \"" + key + "\"");
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  flush();
}

}  // namespace appkg::locale
