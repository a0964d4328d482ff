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

#include "appkg/css.hpp"

#include <cctype>

#include "appkg/error.hpp"

namespace appkg::css {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

class SelectorParser {
 public:
  explicit SelectorParser(std::string_view text) : text_(text) {}

  Selector parse() {
    Selector selector;
    skip_spaces();
    if (at_end()) fail("empty selector");
    selector.compounds.push_back(parse_compound());
    while (true) {
      bool saw_space = skip_spaces();
      if (at_end()) break;
      if (peek() == '>') {
        ++pos_;
        skip_spaces();
        selector.combinators.push_back(Combinator::kChild);
      } else if (saw_space) {
        selector.combinators.push_back(Combinator::kDescendant);
      } else {
        fail("expected combinator");
      }
      if (at_end()) fail("dangling combinator");
      selector.compounds.push_back(parse_compound());
    }
    return selector;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::kSelectorSyntax,
                why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  bool skip_spaces() {
    bool any = false;
    while (!at_end() && is_space(peek())) {
      ++pos_;
      any = true;
    }
    return any;
  }

  std::string parse_ident() {
    std::size_t start = pos_;
    while (!at_end() && is_ident_char(peek())) ++pos_;
    if (pos_ == start) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  Compound parse_compound() {
    Compound compound;
    bool any = false;
    if (!at_end() && is_ident_char(peek()) && peek() != '-') {
      compound.tag = lowercase(parse_ident());
      any = true;
    }
    while (!at_end()) {
      char c = peek();
      if (c == '.') {
        ++pos_;
        compound.classes.push_back(parse_ident());
      } else if (c == '#') {
        ++pos_;
        compound.ids.push_back(parse_ident());
      } else if (c == '[') {
        ++pos_;
        compound.attributes.push_back(parse_attribute_test());
      } else {
        break;
      }
      any = true;
    }
    if (!any) fail("expected simple selector");
    return compound;
  }

  AttributeTest parse_attribute_test() {
    AttributeTest test;
    skip_spaces();
    test.name = lowercase(parse_ident());
    skip_spaces();
    if (at_end() || peek() != '=') fail("expected = in attribute selector");
    ++pos_;
    skip_spaces();
    if (!at_end() && (peek() == '"' || peek() == '\'')) {
      char quote = peek();
      ++pos_;
      std::size_t start = pos_;
      while (!at_end() && peek() != quote) ++pos_;
      if (at_end()) fail("unterminated attribute value");
      test.value = std::string(text_.substr(start, pos_ - start));
      ++pos_;
    } else {
      test.value = parse_ident();
    }
    skip_spaces();
    if (at_end() || peek() != ']') fail("expected ]");
    ++pos_;
    return test;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool class_list_contains(std::string_view class_attr, std::string_view wanted) {
  std::size_t i = 0;
  while (i < class_attr.size()) {
    while (i < class_attr.size() && is_space(class_attr[i])) ++i;
    std::size_t start = i;
    while (i < class_attr.size() && !is_space(class_attr[i])) ++i;
    if (i > start && class_attr.substr(start, i - start) == wanted) return true;
  }
  return false;
}

// Right-to-left matching: the element must satisfy the final compound, then
// each earlier compound is anchored through its combinator.
bool matches_from(const html::DomNode& element, const Selector& selector, std::size_t index) {
  if (!matches_compound(element, selector.compounds[index])) return false;
  if (index == 0) return true;
  Combinator combinator = selector.combinators[index - 1];
  const html::DomNode* parent = element.parent;
  if (combinator == Combinator::kChild) {
    return parent != nullptr && parent->is_element() && matches_from(*parent, selector, index - 1);
  }
  for (; parent != nullptr; parent = parent->parent) {
    if (parent->is_element() && matches_from(*parent, selector, index - 1)) return true;
  }
  return false;
}

}  // namespace

Selector parse_selector(std::string_view text) {
  return SelectorParser(text).parse();
}

bool matches_compound(const html::DomNode& element, const Compound& compound) {
  if (!element.is_element()) return false;
  if (!compound.tag.empty() && element.tag != compound.tag) return false;
  if (!compound.classes.empty()) {
    auto class_attr = element.attribute("class");
    if (!class_attr) return false;
    for (const auto& cls : compound.classes) {
      if (!class_list_contains(*class_attr, cls)) return false;
    }
  }
  for (const auto& id : compound.ids) {
    auto id_attr = element.attribute("id");
    if (!id_attr || *id_attr != id) return false;
  }
  for (const auto& test : compound.attributes) {
    auto value = element.attribute(test.name);
    if (!value || *value != test.value) return false;
  }
  return true;
}

std::vector<const html::DomNode*> select(const html::DomNode& root, const Selector& selector) {
  std::vector<const html::DomNode*> out;
  html::for_each_element(root, [&](const html::DomNode& element) {
    if (matches_from(element, selector, selector.compounds.size() - 1)) {
      out.push_back(&element);
    }
  });
  return out;
}

std::vector<const html::DomNode*> select(const html::DomNode& root, std::string_view selector) {
  return select(root, parse_selector(selector));
}

}  // namespace appkg::css
