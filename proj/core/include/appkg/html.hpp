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

#ifndef APPKG_HTML_HPP_
#define APPKG_HTML_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace appkg::html {

// One node of the recovered markup tree. Elements own their children; text
// nodes are leaves. Tag and attribute names are lowercase-folded.
struct DomNode {
  enum class Kind { kElement, kText };

  Kind kind = Kind::kElement;
  std::string tag;  // elements only
  std::vector<std::pair<std::string, std::string>> attributes;  // unique names
  std::vector<std::unique_ptr<DomNode>> children;
  std::string text;  // text nodes only
  DomNode* parent = nullptr;

  bool is_element() const { return kind == Kind::kElement; }
  bool is_text() const { return kind == Kind::kText; }

  std::optional<std::string_view> attribute(std::string_view name) const;
};

using DomNodePtr = std::unique_ptr<DomNode>;

// Error-recovering parse of arbitrary UTF-8 markup. Always returns a tree
// rooted at a synthetic `#root` element: void elements (br, img, meta, link,
// input, hr) take no children, a stray close tag pops the open stack up to
// the nearest matching tag and is dropped when none matches, an opener for a
// non-nesting tag (p, li, td, ...) closes an open element of the same tag,
// and script/style bodies become a single uninterpreted text child.
// Throws Error(kInvalidEncoding) when the input is not well-formed UTF-8.
DomNodePtr parse_html(std::string_view input);

// Concatenated descendant text in document order, whitespace runs collapsed
// to single spaces, ends trimmed.
std::string extract_text(const DomNode& node);

// Pre-order walk over element nodes, root included.
void for_each_element(const DomNode& root, const std::function<void(const DomNode&)>& fn);

bool is_valid_utf8(std::string_view bytes);

}  // namespace appkg::html

#endif  // APPKG_HTML_HPP_
