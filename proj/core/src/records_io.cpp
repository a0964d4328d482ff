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

#include "appkg/records_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "appkg/error.hpp"

namespace appkg::extract {

namespace {

using json = nlohmann::ordered_json;

}  // namespace

std::string record_to_json_line(const RawAppRecord& record) {
  json j;
  j["snapshot_id"] = record.snapshot_id;
  j["url"] = record.url;
  for (std::size_t i = 0; i < kFieldCount; ++i) {
    auto id = static_cast<FieldId>(i);
    if (id == FieldId::kUrl) continue;
    const auto& value = record.field(id);
    if (value) j[std::string(field_name(id))] = *value;
  }
  if (record.developer_is_person) j["developer_is_person"] = true;
  if (record.developer_url) j["developer_url"] = *record.developer_url;
  return j.dump();
}

RawAppRecord record_from_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kRecordsFileInvalid, e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::kRecordsFileInvalid, "record line is not an object");
  }
  RawAppRecord record;
  for (const auto& [key, value] : j.items()) {
    if (key == "snapshot_id") {
      record.snapshot_id = value.get<std::string>();
    } else if (key == "url") {
      record.url = value.get<std::string>();
    } else if (key == "developer_is_person") {
      record.developer_is_person = value.get<bool>();
    } else if (key == "developer_url") {
      record.developer_url = value.get<std::string>();
    } else if (auto id = field_from_name(key); id && *id != FieldId::kUrl) {
      record.field(*id) = value.get<std::string>();
    } else {
      throw Error(ErrorCode::kRecordsFileInvalid, "unknown key \"" + key + "\"");
    }
  }
  return record;
}

std::string records_to_jsonl(const std::vector<RawAppRecord>& records) {
  std::string out;
  for (const auto& record : records) {
    out += record_to_json_line(record);
    out += '\n';
  }
  return out;
}

std::vector<RawAppRecord> records_from_jsonl(std::string_view text) {
  std::vector<RawAppRecord> records;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    if (!line.empty() && line != "\r") records.push_back(record_from_json_line(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return records;
}

std::vector<RawAppRecord> load_records_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kRecordsFileInvalid, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return records_from_jsonl(buf.str());
}

}  // namespace appkg::extract
