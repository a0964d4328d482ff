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

#include "appkg/html.hpp"

#include <random>

#include <doctest.h>

#include "appkg/error.hpp"
#include "test_util.hpp"

using namespace appkg;

TEST_CASE("parse_html builds a minimal well-formed element") {
  auto root = html::parse_html("<div class=\"a\">hi</div>");
  CHECK(test::dom_to_string(*root) == "#root[div(class=a)[\"hi\"]]");
}

TEST_CASE("parse_html of empty input is a bare root") {
  auto root = html::parse_html("");
  CHECK(root->tag == "#root");
  CHECK(root->children.empty());
}

TEST_CASE("parse_html rejects invalid UTF-8") {
  std::string bad = "<p>\xC3";  // truncated sequence
  CHECK_THROWS_AS(html::parse_html(bad), Error);
  std::string overlong = "<p>\xC0\xAF";
  CHECK_THROWS_AS(html::parse_html(overlong), Error);
  std::string surrogate = "\xED\xA0\x80";
  CHECK_THROWS_AS(html::parse_html(surrogate), Error);
}

TEST_CASE("parse_html recovers malformed markup per the fixture file") {
  std::string fixture = test::read_file(test::data_path("malformed_markup.txt"));
  int cases = 0;
  std::size_t pos = 0;
  std::string name, input, expect;
  bool in_input = false, in_expect = false;

  auto run_case = [&] {
    if (name.empty()) return;
    // Inputs and expectations carry no trailing newline.
    if (!input.empty() && input.back() == '\n') input.pop_back();
    CAPTURE(name);
    auto root = html::parse_html(input);
    CHECK(test::dom_to_string(*root) == expect);
    ++cases;
    name.clear();
    input.clear();
    expect.clear();
  };

  while (pos <= fixture.size()) {
    auto eol = fixture.find('\n', pos);
    std::string line =
        eol == std::string::npos ? fixture.substr(pos) : fixture.substr(pos, eol - pos);
    if (line.rfind("== ", 0) == 0) {
      run_case();
      name = line.substr(3);
      in_input = true;
      in_expect = false;
    } else if (line == "-- expect") {
      in_input = false;
      in_expect = true;
    } else if (in_expect && !line.empty()) {
      expect = line;
      in_expect = false;
    } else if (in_input) {
      input += line;
      input += '\n';
    }
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
  run_case();
  CHECK(cases == 20);
}

TEST_CASE("parse_html is total on arbitrary UTF-8 input") {
  std::mt19937_64 rng(20260810);
  const std::string alphabet = "<>/=\"' abcdivpst!-\n\tx0123&;";
  for (int round = 0; round < 500; ++round) {
    std::string input;
    std::size_t length = rng() % 120;
    for (std::size_t i = 0; i < length; ++i) {
      input.push_back(alphabet[rng() % alphabet.size()]);
    }
    auto root = html::parse_html(input);  // must not throw on valid UTF-8
    REQUIRE(root != nullptr);
    CHECK(root->tag == "#root");
  }
}

TEST_CASE("extract_text trims and collapses whitespace") {
  auto root = html::parse_html("<div>  4.5 </div>");
  CHECK(html::extract_text(*root) == "4.5");

  auto wrapped = html::parse_html("<div><b>A</b> <i>B</i></div>");
  CHECK(html::extract_text(*wrapped) == "A B");

  auto empty = html::parse_html("<div><span></span></div>");
  CHECK(html::extract_text(*empty) == "");

  auto multiline = html::parse_html("<p>line one\n   line\ttwo</p>");
  CHECK(html::extract_text(*multiline) == "line one line two");
}

TEST_CASE("script text is not interpreted as markup") {
  auto root = html::parse_html("<script>var x = '<div>'</script>");
  REQUIRE(root->children.size() == 1);
  const auto& script = *root->children[0];
  CHECK(script.tag == "script");
  REQUIRE(script.children.size() == 1);
  CHECK(script.children[0]->text == "var x = '<div>'");
}

TEST_CASE("attribute lookup sees only the first duplicate") {
  auto root = html::parse_html("<a id='x' id='y'>t</a>");
  const auto& a = *root->children[0];
  CHECK(a.attribute("id") == "x");
  CHECK_FALSE(a.attribute("missing").has_value());
}
