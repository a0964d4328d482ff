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

#ifndef APPKG_DECIMAL_HPP_
#define APPKG_DECIMAL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace appkg {

// Exact non-negative decimal with a small fractional scale. Ratings and
// prices never need binary floating point; keeping them as scaled integers
// makes serialization lexical forms stable.
class Decimal {
 public:
  Decimal() : units_(0), scale_(1) {}
  Decimal(std::int64_t units, int scale);

  static Decimal from_int(std::int64_t value) { return Decimal(value * 10, 1); }

  // Parses `digits [sep digits]` where `sep` is the decimal separator.
  // Returns nullopt on anything else (signs, grouping, stray characters).
  static std::optional<Decimal> parse(std::string_view text, char decimal_separator = '.');

  std::int64_t units() const { return units_; }
  int scale() const { return scale_; }

  // Canonical lexical form: always carries a fractional part ("4.5", "5.0").
  std::string to_string() const;

  std::strong_ordering operator<=>(const Decimal& other) const;
  bool operator==(const Decimal& other) const { return (*this <=> other) == 0; }

 private:
  std::int64_t units_;  // value * 10^scale_
  int scale_;           // >= 1, trailing zeros stripped down to scale 1
};

}  // namespace appkg

#endif  // APPKG_DECIMAL_HPP_
