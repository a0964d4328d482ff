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

#ifndef APPKG_CSS_HPP_
#define APPKG_CSS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "appkg/html.hpp"

namespace appkg::css {

// Supported grammar: tag, .class, #id, [attr=value], compounds of those,
// joined by descendant (whitespace) and child (>) combinators. No
// pseudo-classes, no sibling combinators.
struct AttributeTest {
  std::string name;
  std::string value;
};

struct Compound {
  std::string tag;  // empty means any element
  std::vector<std::string> classes;
  std::vector<std::string> ids;
  std::vector<AttributeTest> attributes;
};

enum class Combinator { kDescendant, kChild };

struct Selector {
  std::vector<Compound> compounds;       // left to right
  std::vector<Combinator> combinators;   // compounds.size() - 1 entries
};

// Throws Error(kSelectorSyntax) on anything outside the grammar.
Selector parse_selector(std::string_view text);

// True when the element itself satisfies every simple selector of the
// compound. Tag names compare lowercase-folded; classes, ids and attribute
// values compare case-sensitively; .class tests whitespace-separated
// class-list membership.
bool matches_compound(const html::DomNode& element, const Compound& compound);

// All matching elements of the subtree in document order (pre-order).
std::vector<const html::DomNode*> select(const html::DomNode& root, const Selector& selector);
std::vector<const html::DomNode*> select(const html::DomNode& root, std::string_view selector);

}  // namespace appkg::css

#endif  // APPKG_CSS_HPP_
