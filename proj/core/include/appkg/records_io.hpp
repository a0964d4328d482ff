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

#ifndef APPKG_RECORDS_IO_HPP_
#define APPKG_RECORDS_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "appkg/extract.hpp"

namespace appkg::extract {

// Raw records travel between pipeline stages as JSON Lines: one object per
// record, keys in a fixed order, absent fields omitted.
std::string record_to_json_line(const RawAppRecord& record);
RawAppRecord record_from_json_line(std::string_view line);  // throws kRecordsFileInvalid

std::string records_to_jsonl(const std::vector<RawAppRecord>& records);
std::vector<RawAppRecord> records_from_jsonl(std::string_view text);

std::vector<RawAppRecord> load_records_file(const std::string& path);

}  // namespace appkg::extract

#endif  // APPKG_RECORDS_IO_HPP_
