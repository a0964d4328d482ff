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

#ifndef APPKG_SYNTH_HPP_
#define APPKG_SYNTH_HPP_

#include <cstdint>
#include <vector>

#include "appkg/normalize.hpp"

namespace appkg::synth {

// Deterministic synthetic records for scale tests and benchmarks: 48
// category labels (17 game subcategories plus 31 others), one sixth games,
// bucketed download counts, a mix of free and priced apps.
std::vector<normalize::CanonicalAppRecord> make_records(std::size_t count, std::uint64_t seed);

}  // namespace appkg::synth

#endif  // APPKG_SYNTH_HPP_
