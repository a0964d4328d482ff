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

#ifndef APPKG_EXTRACT_HPP_
#define APPKG_EXTRACT_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "appkg/html.hpp"

namespace appkg::extract {

// The eleven data groups a snapshot yields. Five come from selectors, five
// from patterns, and the URL from the corpus manifest.
enum class FieldId {
  kName,
  kDeveloper,
  kCategory,
  kReviewCount,
  kRatingValue,
  kDownloadCount,
  kDateModified,
  kContentRating,
  kPriceRange,
  kOsRequirement,
  kUrl,
};

inline constexpr std::size_t kFieldCount = 11;

std::string_view field_name(FieldId field);
std::optional<FieldId> field_from_name(std::string_view name);

enum class Technique { kSelector, kPattern };

// The reserved selector expression for the url field; its value comes from
// the manifest, not the DOM.
inline constexpr std::string_view kSourceExpression = "@source";

struct ExtractionRule {
  FieldId field = FieldId::kName;
  Technique technique = Technique::kSelector;
  std::string expression;
  int capture_group = 1;  // pattern rules only
  bool required = false;
};

// Exactly one rule per field, all eleven present; enforced at load time.
class RuleSet {
 public:
  static RuleSet from_rules(std::vector<ExtractionRule> rules);

  const ExtractionRule& rule(FieldId field) const;
  const std::vector<ExtractionRule>& rules() const { return rules_; }

 private:
  std::vector<ExtractionRule> rules_;  // indexed by FieldId order
};

// Verbatim page substrings, pre-normalization, plus per-record manifest
// metadata (developer kind override and optional developer site).
struct RawAppRecord {
  std::string snapshot_id;
  std::optional<std::string> name;
  std::optional<std::string> developer;
  std::optional<std::string> category;
  std::optional<std::string> review_count;
  std::optional<std::string> rating_value;
  std::optional<std::string> download_count;
  std::optional<std::string> date_modified;
  std::optional<std::string> content_rating;
  std::optional<std::string> price_range;
  std::optional<std::string> os_requirement;
  std::string url;
  bool developer_is_person = false;
  std::optional<std::string> developer_url;

  const std::optional<std::string>& field(FieldId id) const;
  std::optional<std::string>& field(FieldId id);

  bool operator==(const RawAppRecord&) const = default;
};

// Applies the rule set to one parsed snapshot. Selector rules take the text
// of the first match; pattern rules take the configured capture group of the
// first match over the raw page text, extended by an immediately following
// '+' so bucket counts stay verbatim. Throws Error(kRequiredFieldMissing)
// when a required rule matches nothing.
RawAppRecord apply_rules(const html::DomNode& doc, std::string_view page_text,
                         const RuleSet& rules, std::string_view source_url,
                         std::string_view snapshot_id = "");

// One corpus snapshot, parsed.
struct CorpusEntry {
  std::string snapshot_id;
  std::string source_url;
  html::DomNodePtr doc;
  std::string page_text;
  bool developer_is_person = false;
  std::optional<std::string> developer_url;
};

// Reads a tab-separated manifest (`snapshot_id  source_url  relative_path
// [person|org  [developer_url]]`, `#` comments, blank lines skipped) and
// parses every referenced snapshot. Throws kManifestNotFound,
// kSnapshotNotFound, kInvalidEncoding.
std::vector<CorpusEntry> load_corpus(const std::string& manifest_path);

// Rule set file: blank-line separated stanzas of `key: value` lines with
// keys field, technique, expression, capture_group, required. Throws
// kRuleSetInvalid on malformed stanzas or incomplete coverage.
RuleSet load_rules(const std::string& path);
RuleSet parse_rules_text(std::string_view text, std::string_view origin);

}  // namespace appkg::extract

#endif  // APPKG_EXTRACT_HPP_
