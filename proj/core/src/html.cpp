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

#include <algorithm>
#include <array>
#include <cctype>

#include "appkg/error.hpp"

namespace appkg::html {

namespace {

constexpr std::array<std::string_view, 6> kVoidElements = {
    "br", "img", "meta", "link", "input", "hr"};

// Elements that never nest in themselves: a new opener closes an open one.
constexpr std::array<std::string_view, 8> kNonNesting = {
    "p", "li", "dt", "dd", "tr", "td", "th", "option"};

bool is_void_element(std::string_view tag) {
  return std::find(kVoidElements.begin(), kVoidElements.end(), tag) != kVoidElements.end();
}

bool is_non_nesting(std::string_view tag) {
  return std::find(kNonNesting.begin(), kNonNesting.end(), tag) != kNonNesting.end();
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(ascii_lower(c));
  return out;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool starts_tag_name(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Case-insensitive search for `needle` (already lowercase) in `haystack`.
std::size_t ifind(std::string_view haystack, std::string_view needle, std::size_t from) {
  if (needle.empty()) return from;
  for (std::size_t i = from; i + needle.size() <= haystack.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (ascii_lower(haystack[i + j]) != needle[j]) {
        hit = false;
        break;
      }
    }
    if (hit) return i;
  }
  return std::string_view::npos;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  DomNodePtr run() {
    auto root = std::make_unique<DomNode>();
    root->kind = DomNode::Kind::kElement;
    root->tag = "#root";
    stack_.push_back(root.get());

    while (pos_ < src_.size()) {
      if (src_[pos_] == '<') {
        if (!handle_angle()) {
          text_ += src_[pos_++];
        }
      } else {
        text_ += src_[pos_++];
      }
    }
    flush_text();
    return root;
  }

 private:
  DomNode* top() { return stack_.back(); }

  void flush_text() {
    if (text_.empty()) return;
    auto node = std::make_unique<DomNode>();
    node->kind = DomNode::Kind::kText;
    node->text = std::move(text_);
    node->parent = top();
    top()->children.push_back(std::move(node));
    text_.clear();
  }

  // Dispatches the construct starting at '<'. Returns false when it is not a
  // tag at all and the '<' should be treated as character data.
  bool handle_angle() {
    std::size_t i = pos_ + 1;
    if (i >= src_.size()) return false;
    char c = src_[i];
    if (src_.compare(pos_, 4, "<!--") == 0) {
      flush_text();
      auto end = src_.find("-->", pos_ + 4);
      pos_ = end == std::string_view::npos ? src_.size() : end + 3;
      return true;
    }
    if (c == '!' || c == '?') {
      // doctype or processing instruction, skipped
      flush_text();
      auto end = src_.find('>', pos_);
      pos_ = end == std::string_view::npos ? src_.size() : end + 1;
      return true;
    }
    if (c == '/') {
      if (i + 1 >= src_.size() || !starts_tag_name(src_[i + 1])) return false;
      flush_text();
      parse_close_tag();
      return true;
    }
    if (starts_tag_name(c)) {
      flush_text();
      parse_open_tag();
      return true;
    }
    return false;
  }

  void parse_close_tag() {
    std::size_t i = pos_ + 2;
    std::size_t start = i;
    while (i < src_.size() && !is_space(src_[i]) && src_[i] != '>') ++i;
    std::string name = lowercase(src_.substr(start, i - start));
    while (i < src_.size() && src_[i] != '>') ++i;
    pos_ = i < src_.size() ? i + 1 : src_.size();

    // Auto-close up to the nearest matching open tag; ignore when unmatched.
    for (std::size_t depth = stack_.size(); depth > 1; --depth) {
      if (stack_[depth - 1]->tag == name) {
        stack_.resize(depth - 1);
        return;
      }
    }
  }

  void parse_open_tag() {
    std::size_t i = pos_ + 1;
    std::size_t start = i;
    while (i < src_.size() && !is_space(src_[i]) && src_[i] != '>' && src_[i] != '/') ++i;
    std::string name = lowercase(src_.substr(start, i - start));

    auto node = std::make_unique<DomNode>();
    node->kind = DomNode::Kind::kElement;
    node->tag = name;

    bool self_closing = false;
    while (i < src_.size() && src_[i] != '>') {
      if (is_space(src_[i])) {
        ++i;
        continue;
      }
      if (src_[i] == '/') {
        ++i;
        if (i < src_.size() && src_[i] == '>') self_closing = true;
        continue;
      }
      i = parse_attribute(*node, i);
    }
    if (i >= src_.size()) {
      // Unterminated tag: the remainder is character data.
      text_ += src_.substr(pos_);
      pos_ = src_.size();
      return;
    }
    pos_ = i + 1;

    if (is_non_nesting(name) && stack_.size() > 1 && top()->tag == name) {
      stack_.pop_back();
    }

    DomNode* raw = node.get();
    raw->parent = top();
    top()->children.push_back(std::move(node));
    if (self_closing || is_void_element(name)) return;

    if (name == "script" || name == "style") {
      capture_raw_text(raw, name);
      return;
    }
    stack_.push_back(raw);
  }

  std::size_t parse_attribute(DomNode& node, std::size_t i) {
    std::size_t start = i;
    while (i < src_.size() && !is_space(src_[i]) && src_[i] != '=' && src_[i] != '>' &&
           src_[i] != '/')
      ++i;
    std::string name = lowercase(src_.substr(start, i - start));
    std::string value;
    while (i < src_.size() && is_space(src_[i])) ++i;
    if (i < src_.size() && src_[i] == '=') {
      ++i;
      while (i < src_.size() && is_space(src_[i])) ++i;
      if (i < src_.size() && (src_[i] == '"' || src_[i] == '\'')) {
        char quote = src_[i++];
        std::size_t vstart = i;
        while (i < src_.size() && src_[i] != quote) ++i;
        value = std::string(src_.substr(vstart, i - vstart));
        if (i < src_.size()) ++i;
      } else {
        std::size_t vstart = i;
        while (i < src_.size() && !is_space(src_[i]) && src_[i] != '>') ++i;
        value = std::string(src_.substr(vstart, i - vstart));
      }
    }
    if (!name.empty() && !node.attribute(name).has_value()) {
      node.attributes.emplace_back(std::move(name), std::move(value));
    }
    return i;
  }

  // script/style bodies: everything up to the matching close tag is one
  // uninterpreted text child.
  void capture_raw_text(DomNode* element, const std::string& name) {
    std::string close = "</" + name;
    auto end = ifind(src_, close, pos_);
    std::size_t body_end = end == std::string_view::npos ? src_.size() : end;
    if (body_end > pos_) {
      auto child = std::make_unique<DomNode>();
      child->kind = DomNode::Kind::kText;
      child->text = std::string(src_.substr(pos_, body_end - pos_));
      child->parent = element;
      element->children.push_back(std::move(child));
    }
    if (end == std::string_view::npos) {
      pos_ = src_.size();
      return;
    }
    auto gt = src_.find('>', end);
    pos_ = gt == std::string_view::npos ? src_.size() : gt + 1;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::string text_;
  std::vector<DomNode*> stack_;
};

void collect_text(const DomNode& node, std::string& out) {
  if (node.is_text()) {
    out += node.text;
    return;
  }
  for (const auto& child : node.children) collect_text(*child, out);
}

}  // namespace

std::optional<std::string_view> DomNode::attribute(std::string_view name) const {
  for (const auto& [attr_name, attr_value] : attributes) {
    if (attr_name == name) return std::string_view(attr_value);
  }
  return std::nullopt;
}

bool is_valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    unsigned char b = static_cast<unsigned char>(bytes[i]);
    std::size_t len;
    unsigned cp_min;
    if (b < 0x80) {
      ++i;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp_min = 0x80;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp_min = 0x800;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp_min = 0x10000;
    } else {
      return false;
    }
    if (i + len > bytes.size()) return false;
    unsigned cp = b & (0xFF >> (len + 1));
    for (std::size_t j = 1; j < len; ++j) {
      unsigned char cont = static_cast<unsigned char>(bytes[i + j]);
      if ((cont & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < cp_min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

DomNodePtr parse_html(std::string_view input) {
  if (!is_valid_utf8(input)) {
    throw Error(ErrorCode::kInvalidEncoding, "input is not valid UTF-8");
  }
  return Parser(input).run();
}

std::string extract_text(const DomNode& node) {
  std::string raw;
  collect_text(node, raw);
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

void for_each_element(const DomNode& root, const std::function<void(const DomNode&)>& fn) {
  if (root.is_element()) fn(root);
  for (const auto& child : root.children) for_each_element(*child, fn);
}

}  // namespace appkg::html
