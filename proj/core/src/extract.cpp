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

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "appkg/css.hpp"
#include "appkg/error.hpp"

namespace appkg::extract {

namespace {

constexpr std::array<std::string_view, kFieldCount> kFieldNames = {
    "name",          "developer",      "category",       "review_count",
    "rating_value",  "download_count", "date_modified",  "content_rating",
    "price_range",   "os_requirement", "url",
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct Stanza {
  std::vector<std::pair<std::string, std::string>> entries;
  int first_line = 0;
};

// Shared stanza reader for rule sets and locale registries: `key: value`
// lines, `#` comments, records separated by blank lines.
std::vector<Stanza> read_stanzas(std::string_view text) {
  std::vector<Stanza> stanzas;
  Stanza current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    ++line_no;
    std::string trimmed = trim(line);
    if (trimmed.empty()) {
      if (!current.entries.empty()) {
        stanzas.push_back(std::move(current));
        current = Stanza{};
      }
    } else if (trimmed[0] != '#') {
      auto colon = trimmed.find(':');
      std::string key = colon == std::string::npos ? trimmed : trim(trimmed.substr(0, colon));
      std::string value = colon == std::string::npos ? "" : trim(trimmed.substr(colon + 1));
      if (current.entries.empty()) current.first_line = line_no;
      current.entries.emplace_back(std::move(key), std::move(value));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (!current.entries.empty()) stanzas.push_back(std::move(current));
  return stanzas;
}

}  // namespace

std::string_view field_name(FieldId field) {
  return kFieldNames[static_cast<std::size_t>(field)];
}

std::optional<FieldId> field_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFieldCount; ++i) {
    if (kFieldNames[i] == name) return static_cast<FieldId>(i);
  }
  return std::nullopt;
}

const std::optional<std::string>& RawAppRecord::field(FieldId id) const {
  return const_cast<RawAppRecord*>(this)->field(id);
}

std::optional<std::string>& RawAppRecord::field(FieldId id) {
  switch (id) {
    case FieldId::kName: return name;
    case FieldId::kDeveloper: return developer;
    case FieldId::kCategory: return category;
    case FieldId::kReviewCount: return review_count;
    case FieldId::kRatingValue: return rating_value;
    case FieldId::kDownloadCount: return download_count;
    case FieldId::kDateModified: return date_modified;
    case FieldId::kContentRating: return content_rating;
    case FieldId::kPriceRange: return price_range;
    case FieldId::kOsRequirement: return os_requirement;
    case FieldId::kUrl: break;
  }
  throw Error(ErrorCode::kRuleSetInvalid, "url has no raw text slot");
}

RuleSet RuleSet::from_rules(std::vector<ExtractionRule> rules) {
  std::array<bool, kFieldCount> seen{};
  for (const auto& rule : rules) {
    auto index = static_cast<std::size_t>(rule.field);
    if (seen[index]) {
      throw Error(ErrorCode::kRuleSetInvalid,
                  "duplicate rule for field " + std::string(field_name(rule.field)));
    }
    seen[index] = true;
    if (rule.field == FieldId::kUrl) {
      if (rule.technique != Technique::kSelector || rule.expression != kSourceExpression) {
        throw Error(ErrorCode::kRuleSetInvalid,
                    "url rule must be a selector with expression @source");
      }
    } else if (rule.technique == Technique::kPattern) {
      if (rule.capture_group < 1) {
        throw Error(ErrorCode::kRuleSetInvalid,
                    "capture_group must be >= 1 for " + std::string(field_name(rule.field)));
      }
      std::regex re;
      try {
        re = std::regex(rule.expression);
      } catch (const std::regex_error& e) {
        throw Error(ErrorCode::kRuleSetInvalid, "bad pattern for " +
                                                    std::string(field_name(rule.field)) + ": " +
                                                    e.what());
      }
      if (static_cast<int>(re.mark_count()) < rule.capture_group) {
        throw Error(ErrorCode::kRuleSetInvalid,
                    "pattern for " + std::string(field_name(rule.field)) + " has " +
                        std::to_string(re.mark_count()) + " groups, capture_group is " +
                        std::to_string(rule.capture_group));
      }
    } else {
      // Parse now so a broken selector fails at load, not per page.
      css::parse_selector(rule.expression);
    }
  }
  for (std::size_t i = 0; i < kFieldCount; ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::kRuleSetInvalid,
                  "missing rule for field " + std::string(kFieldNames[i]));
    }
  }
  std::sort(rules.begin(), rules.end(),
            [](const ExtractionRule& a, const ExtractionRule& b) { return a.field < b.field; });
  RuleSet set;
  set.rules_ = std::move(rules);
  return set;
}

const ExtractionRule& RuleSet::rule(FieldId field) const {
  return rules_[static_cast<std::size_t>(field)];
}

RawAppRecord apply_rules(const html::DomNode& doc, std::string_view page_text,
                         const RuleSet& rules, std::string_view source_url,
                         std::string_view snapshot_id) {
  RawAppRecord record;
  record.snapshot_id = std::string(snapshot_id);
  record.url = std::string(source_url);

  for (const auto& rule : rules.rules()) {
    if (rule.field == FieldId::kUrl) continue;
    std::optional<std::string> value;
    if (rule.technique == Technique::kSelector) {
      auto matches = css::select(doc, rule.expression);
      if (!matches.empty()) value = html::extract_text(*matches.front());
    } else {
      std::regex re(rule.expression);
      std::cmatch m;
      if (std::regex_search(page_text.begin(), page_text.end(), m, re) &&
          static_cast<int>(m.size()) > rule.capture_group && m[rule.capture_group].matched) {
        std::string captured(m[rule.capture_group].first, m[rule.capture_group].second);
        // Keep bucket counts verbatim: a '+' sitting right after the capture
        // belongs to the value ("1,000,000+").
        if (m[rule.capture_group].second != page_text.end() &&
            *m[rule.capture_group].second == '+') {
          captured.push_back('+');
        }
        value = std::move(captured);
      }
    }
    if (!value && rule.required) {
      throw Error(ErrorCode::kRequiredFieldMissing, std::string(field_name(rule.field)));
    }
    if (value) record.field(rule.field) = std::move(value);
  }
  return record;
}

std::vector<CorpusEntry> load_corpus(const std::string& manifest_path) {
  namespace fs = std::filesystem;
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kManifestNotFound, manifest_path);
  fs::path base = fs::path(manifest_path).parent_path();

  std::vector<CorpusEntry> corpus;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (true) {
      auto tab = line.find('\t', pos);
      cols.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (cols.size() < 3) {
      throw Error(ErrorCode::kManifestNotFound,
                  manifest_path + ":" + std::to_string(row) + ": expected 3 tab-separated fields");
    }

    CorpusEntry entry;
    entry.snapshot_id = trim(cols[0]);
    entry.source_url = trim(cols[1]);
    if (cols.size() >= 4 && lowercase(trim(cols[3])) == "person") entry.developer_is_person = true;
    if (cols.size() >= 5 && !trim(cols[4]).empty()) entry.developer_url = trim(cols[4]);

    fs::path snapshot = base / trim(cols[2]);
    std::ifstream page(snapshot, std::ios::binary);
    if (!page) {
      throw Error(ErrorCode::kSnapshotNotFound,
                  "row " + std::to_string(row) + ": " + snapshot.string());
    }
    std::ostringstream buf;
    buf << page.rdbuf();
    entry.page_text = std::move(buf).str();
    if (!html::is_valid_utf8(entry.page_text)) {
      throw Error(ErrorCode::kInvalidEncoding,
                  "row " + std::to_string(row) + ": " + snapshot.string());
    }
    entry.doc = html::parse_html(entry.page_text);
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

RuleSet parse_rules_text(std::string_view text, std::string_view origin) {
  std::vector<ExtractionRule> rules;
  for (const auto& stanza : read_stanzas(text)) {
    ExtractionRule rule;
    bool have_field = false, have_expression = false;
    for (const auto& [key, value] : stanza.entries) {
      if (key == "field") {
        auto id = field_from_name(value);
        if (!id) {
          throw Error(ErrorCode::kRuleSetInvalid,
                      std::string(origin) + ": unknown field \"" + value + "\"");
        }
        rule.field = *id;
        have_field = true;
      } else if (key == "technique") {
        std::string t = lowercase(value);
        if (t == "selector") {
          rule.technique = Technique::kSelector;
        } else if (t == "pattern") {
          rule.technique = Technique::kPattern;
        } else {
          throw Error(ErrorCode::kRuleSetInvalid,
                      std::string(origin) + ": unknown technique \"" + value + "\"");
        }
      } else if (key == "expression") {
        rule.expression = value;
        have_expression = true;
      } else if (key == "capture_group") {
        try {
          rule.capture_group = std::stoi(value);
        } catch (const std::exception&) {
          throw Error(ErrorCode::kRuleSetInvalid,
                      std::string(origin) + ": bad capture_group \"" + value + "\"");
        }
      } else if (key == "required") {
        rule.required = lowercase(value) == "true";
      } else {
        throw Error(ErrorCode::kRuleSetInvalid,
                    std::string(origin) + ": unknown key \"" + key + "\" near line " +
                        std::to_string(stanza.first_line));
      }
    }
    if (!have_field || !have_expression) {
      throw Error(ErrorCode::kRuleSetInvalid,
                  std::string(origin) + ": rule near line " + std::to_string(stanza.first_line) +
                      " needs field and expression");
    }
    rules.push_back(std::move(rule));
  }
  return RuleSet::from_rules(std::move(rules));
}

RuleSet load_rules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kRuleSetInvalid, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rules_text(buf.str(), path);
}

}  // namespace appkg::extract
