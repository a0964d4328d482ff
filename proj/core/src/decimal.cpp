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

#include "appkg/decimal.hpp"

#include <cctype>
#include <cstdlib>

namespace appkg {

namespace {

std::int64_t pow10(int n) {
  std::int64_t v = 1;
  for (int i = 0; i < n; ++i) v *= 10;
  return v;
}

}  // namespace

Decimal::Decimal(std::int64_t units, int scale) : units_(units), scale_(scale) {
  if (scale_ < 1) {
    units_ *= pow10(1 - scale_);
    scale_ = 1;
  }
  while (scale_ > 1 && units_ % 10 == 0) {
    units_ /= 10;
    --scale_;
  }
}

std::optional<Decimal> Decimal::parse(std::string_view text, char decimal_separator) {
  if (text.empty()) return std::nullopt;
  std::string_view int_part = text;
  std::string_view frac_part;
  auto sep = text.find(decimal_separator);
  if (sep != std::string_view::npos) {
    if (text.find(decimal_separator, sep + 1) != std::string_view::npos) return std::nullopt;
    int_part = text.substr(0, sep);
    frac_part = text.substr(sep + 1);
    if (int_part.empty() || frac_part.empty()) return std::nullopt;
  }
  auto all_digits = [](std::string_view s) {
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return !s.empty();
  };
  if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part))) return std::nullopt;
  if (int_part.size() > 15 || frac_part.size() > 9) return std::nullopt;

  std::int64_t units = 0;
  for (char c : int_part) units = units * 10 + (c - '0');
  for (char c : frac_part) units = units * 10 + (c - '0');
  int scale = static_cast<int>(frac_part.size());
  if (scale == 0) {
    units *= 10;
    scale = 1;
  }
  return Decimal(units, scale);
}

std::string Decimal::to_string() const {
  std::int64_t div = pow10(scale_);
  std::int64_t whole = units_ / div;
  std::int64_t frac = units_ % div;
  std::string out = std::to_string(whole);
  out.push_back('.');
  std::string f = std::to_string(frac);
  out.append(scale_ - f.size(), '0');
  out += f;
  return out;
}

std::strong_ordering Decimal::operator<=>(const Decimal& other) const {
  int common = scale_ > other.scale_ ? scale_ : other.scale_;
  std::int64_t a = units_ * pow10(common - scale_);
  std::int64_t b = other.units_ * pow10(common - other.scale_);
  return a <=> b;
}

}  // namespace appkg
