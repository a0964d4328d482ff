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

#include "appkg/extract.hpp"

#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "appkg/error.hpp"
#include "appkg/records_io.hpp"
#include "test_util.hpp"

using namespace appkg;
namespace fs = std::filesystem;

namespace {

// A minimal complete rule set; tests override individual stanzas.
std::string all_optional_rules() {
  std::string out;
  const char* selector_fields[] = {"name", "developer", "category", "review_count",
                                   "rating_value"};
  const char* pattern_fields[] = {"download_count", "date_modified", "content_rating",
                                  "price_range", "os_requirement"};
  for (const char* field : selector_fields) {
    out += std::string("field: ") + field + "\ntechnique: selector\nexpression: ." + field +
           "\nrequired: false\n\n";
  }
  for (const char* field : pattern_fields) {
    out += std::string("field: ") + field + "\ntechnique: pattern\nexpression: " + field +
           ": ([^<]+)<\ncapture_group: 1\nrequired: false\n\n";
  }
  out += "field: url\ntechnique: selector\nexpression: @source\nrequired: true\n";
  return out;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("appkg_extract_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  void write(const std::string& name, const std::string& content) const {
    std::ofstream out(path / name, std::ios::binary);
    out << content;
  }
};

}  // namespace

TEST_CASE("rule set must cover all eleven fields exactly once") {
  CHECK_NOTHROW(extract::parse_rules_text(all_optional_rules(), "test"));

  SUBCASE("missing field") {
    std::string rules = all_optional_rules();
    auto pos = rules.find("field: category");
    rules = rules.substr(0, pos) + rules.substr(rules.find("\n\n", pos) + 2);
    CHECK_THROWS_AS(extract::parse_rules_text(rules, "test"), Error);
  }
  SUBCASE("duplicate field") {
    std::string rules = all_optional_rules() +
                        "\nfield: name\ntechnique: selector\nexpression: .n2\n";
    CHECK_THROWS_AS(extract::parse_rules_text(rules, "test"), Error);
  }
  SUBCASE("url rule must use @source") {
    std::string rules = all_optional_rules();
    auto pos = rules.find("expression: @source");
    rules.replace(pos, 19, "expression: .url11");
    CHECK_THROWS_AS(extract::parse_rules_text(rules, "test"), Error);
  }
  SUBCASE("pattern capture group must exist") {
    std::string rules = all_optional_rules();
    auto pos = rules.find("capture_group: 1");
    rules.replace(pos, 16, "capture_group: 3");
    CHECK_THROWS_AS(extract::parse_rules_text(rules, "test"), Error);
  }
  SUBCASE("broken selector fails at load") {
    std::string rules = all_optional_rules();
    auto pos = rules.find("expression: .name");
    rules.replace(pos, 17, "expression: ..");
    CHECK_THROWS_AS(extract::parse_rules_text(rules, "test"), Error);
  }
}

TEST_CASE("apply_rules takes the first selector match's text") {
  auto rules = extract::parse_rules_text(all_optional_rules(), "test");
  auto doc = html::parse_html(
      "<div class=\"rating_value\">4.5</div><div class=\"rating_value\">1.0</div>");
  auto record = extract::apply_rules(*doc, "", rules, "https://x.example/a", "s1");
  CHECK(record.rating_value == "4.5");
  CHECK(record.url == "https://x.example/a");
  CHECK(record.snapshot_id == "s1");
}

TEST_CASE("pattern capture reattaches a following plus sign") {
  std::string rules_text = all_optional_rules();
  auto pos = rules_text.find("expression: download_count: ([^<]+)<");
  rules_text.replace(pos, 36, "expression: ([0-9,]+)\\+ downloads?");
  auto rules = extract::parse_rules_text(rules_text, "test");

  auto doc = html::parse_html("<p>1,000,000+ downloads</p>");
  auto record =
      extract::apply_rules(*doc, "<p>1,000,000+ downloads</p>", rules, "https://x.example/a");
  CHECK(record.download_count == "1,000,000+");
}

TEST_CASE("pattern rules scan the raw page text, not element text") {
  auto rules = extract::parse_rules_text(all_optional_rules(), "test");
  std::string page = "<p>date_modified: May 7, 2019</p>";
  auto doc = html::parse_html(page);
  auto record = extract::apply_rules(*doc, page, rules, "https://x.example/a");
  CHECK(record.date_modified == "May 7, 2019");
}

TEST_CASE("all-optional rules on an empty page leave only id and url") {
  auto rules = extract::parse_rules_text(all_optional_rules(), "test");
  auto doc = html::parse_html("");
  auto record = extract::apply_rules(*doc, "", rules, "https://x.example/a", "s9");
  extract::RawAppRecord expected;
  expected.snapshot_id = "s9";
  expected.url = "https://x.example/a";
  CHECK(record == expected);
}

TEST_CASE("a required rule that matches nothing fails") {
  std::string rules_text = all_optional_rules();
  auto pos = rules_text.find("field: name\ntechnique: selector\nexpression: .name\nrequired: false");
  REQUIRE(pos != std::string::npos);
  rules_text.replace(rules_text.find("required: false", pos), 15, "required: true");
  auto rules = extract::parse_rules_text(rules_text, "test");

  auto doc = html::parse_html("<p>no name element</p>");
  CHECK_THROWS_WITH_AS(extract::apply_rules(*doc, "", rules, "https://x.example/a"),
                       "REQUIRED_FIELD_MISSING: name", Error);
}

TEST_CASE("apply_rules is deterministic") {
  auto rules = extract::parse_rules_text(all_optional_rules(), "test");
  std::string page = "<div class=\"name\">App</div><p>content_rating: Everyone</p>";
  auto doc = html::parse_html(page);
  auto a = extract::apply_rules(*doc, page, rules, "https://x.example/a", "s1");
  auto b = extract::apply_rules(*doc, page, rules, "https://x.example/a", "s1");
  CHECK(a == b);
}

TEST_CASE("load_corpus preserves manifest order and metadata") {
  TempDir dir;
  dir.write("a.html", "<p>a</p>");
  dir.write("b.html", "<p>b</p>");
  dir.write("manifest.tsv",
            "# comment line\n"
            "\n"
            "s1\thttps://x.example/a\ta.html\n"
            "s2\thttps://x.example/b\tb.html\tperson\thttps://dev.example/b\n");
  auto corpus = extract::load_corpus((dir.path / "manifest.tsv").string());
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].snapshot_id == "s1");
  CHECK_FALSE(corpus[0].developer_is_person);
  CHECK_FALSE(corpus[0].developer_url.has_value());
  CHECK(corpus[1].snapshot_id == "s2");
  CHECK(corpus[1].developer_is_person);
  CHECK(corpus[1].developer_url == "https://dev.example/b");
  CHECK(html::extract_text(*corpus[1].doc) == "b");
}

TEST_CASE("load_corpus error paths") {
  TempDir dir;
  CHECK_THROWS_AS(extract::load_corpus((dir.path / "missing.tsv").string()), Error);

  dir.write("manifest.tsv", "s1\thttps://x.example/a\tnot_there.html\n");
  CHECK_THROWS_AS(extract::load_corpus((dir.path / "manifest.tsv").string()), Error);

  dir.write("bad.html", "\xFF\xFE");
  dir.write("manifest2.tsv", "s1\thttps://x.example/a\tbad.html\n");
  CHECK_THROWS_AS(extract::load_corpus((dir.path / "manifest2.tsv").string()), Error);
}

TEST_CASE("empty manifest loads an empty corpus") {
  TempDir dir;
  dir.write("manifest.tsv", "# nothing here\n");
  CHECK(extract::load_corpus((dir.path / "manifest.tsv").string()).empty());
}

TEST_CASE("raw records survive the JSONL round trip") {
  extract::RawAppRecord record;
  record.snapshot_id = "s1";
  record.url = "https://x.example/a?id=com.a";
  record.name = "With \"quotes\" and\ttabs";
  record.download_count = "1,000+";
  record.developer_is_person = true;
  record.developer_url = "https://dev.example";

  auto line = extract::record_to_json_line(record);
  CHECK(extract::record_from_json_line(line) == record);

  auto many = extract::records_from_jsonl(extract::records_to_jsonl({record, record}));
  REQUIRE(many.size() == 2);
  CHECK(many[0] == record);
  CHECK_THROWS_AS(extract::record_from_json_line("{not json"), Error);
  CHECK_THROWS_AS(extract::record_from_json_line("{\"мystery\":1}"), Error);
}
