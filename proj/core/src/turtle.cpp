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

#include "appkg/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <vector>

#include "appkg/error.hpp"
#include "appkg/kschema.hpp"

namespace appkg::turtle {

namespace {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;

// ---------------------------------------------------------------------------
// Serializer
// ---------------------------------------------------------------------------

bool integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool decimal_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  auto dot = s.find('.');
  if (dot == std::string_view::npos || dot + 1 >= s.size()) return false;
  auto digits = [](std::string_view part) {
    return std::all_of(part.begin(), part.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  return digits(s.substr(0, dot)) && digits(s.substr(dot + 1));
}

bool is_pn_local_safe(std::string_view local) {
  if (local.empty()) return false;
  auto head = static_cast<unsigned char>(local.front());
  if (!std::isalpha(head) && local.front() != '_') return false;
  for (char c : local) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.') {
      return false;
    }
  }
  return local.back() != '.';
}

class Serializer {
 public:
  explicit Serializer(const Graph& graph) : graph_(graph) {}

  std::string run() {
    index_triples();
    write_prefixes();
    auto subjects = ordered_subjects();
    for (const auto& subject : subjects) {
      write_subject_block(subject);
    }
    return std::move(out_);
  }

 private:
  struct TermRank {
    int rank;
    const Term* term;
  };

  void index_triples() {
    for (const auto& t : graph_.triples()) {
      by_subject_[t.subject].push_back(&t);
      if (t.object.is_blank()) blank_parents_[t.object.value].push_back(&t);
    }
  }

  // A blank node is inlined where it hangs off exactly one IRI subject;
  // anything deeper or shared keeps an explicit label.
  bool inline_blank(const std::string& label) const {
    auto it = blank_parents_.find(label);
    return it != blank_parents_.end() && it->second.size() == 1 &&
           it->second.front()->subject.is_iri();
  }

  bool is_tbox_subject(const Term& subject) const {
    auto it = by_subject_.find(subject);
    if (it == by_subject_.end()) return false;
    for (const Triple* t : it->second) {
      const std::string& p = t->predicate.value;
      if (p == rdf::iris::rdfs_sub_class_of || p == rdf::iris::rdfs_domain ||
          p == rdf::iris::rdfs_range) {
        return true;
      }
      if (p == rdf::iris::rdf_type && t->object.is_iri() &&
          t->object.value == rdf::iris::rdf_property) {
        return true;
      }
    }
    return false;
  }

  std::vector<Term> ordered_subjects() const {
    std::vector<Term> tbox, abox, blanks;
    for (const auto& [subject, triples] : by_subject_) {
      if (subject.is_blank()) {
        if (!inline_blank(subject.value)) blanks.push_back(subject);
        continue;
      }
      (is_tbox_subject(subject) ? tbox : abox).push_back(subject);
    }
    auto by_value = [](const Term& a, const Term& b) { return a.value < b.value; };
    std::sort(tbox.begin(), tbox.end(), by_value);
    std::sort(abox.begin(), abox.end(), by_value);
    std::sort(blanks.begin(), blanks.end(), by_value);
    tbox.insert(tbox.end(), abox.begin(), abox.end());
    tbox.insert(tbox.end(), blanks.begin(), blanks.end());
    return tbox;
  }

  void write_prefixes() {
    if (graph_.prefixes().empty()) return;
    for (const auto& [name, iri] : graph_.prefixes()) {
      out_ += "@prefix " + name + ": <" + iri + "> .\n";
    }
    out_ += "\n";
  }

  // Predicates sorted by vocabulary rank, unknown ones lexicographically.
  std::vector<std::pair<std::string, std::vector<const Term*>>> grouped_predicates(
      const Term& subject) const {
    std::map<std::string, std::vector<const Term*>> objects;
    for (const Triple* t : by_subject_.at(subject)) {
      objects[t->predicate.value].push_back(&t->object);
    }
    std::vector<std::pair<std::string, std::vector<const Term*>>> grouped(
        std::make_move_iterator(objects.begin()), std::make_move_iterator(objects.end()));
    std::stable_sort(grouped.begin(), grouped.end(), [](const auto& a, const auto& b) {
      int ra = kschema::predicate_rank(a.first);
      int rb = kschema::predicate_rank(b.first);
      return ra != rb ? ra < rb : a.first < b.first;
    });
    for (auto& [predicate, object_list] : grouped) {
      std::sort(object_list.begin(), object_list.end(),
                [](const Term* a, const Term* b) { return *a < *b; });
    }
    return grouped;
  }

  void write_subject_block(const Term& subject) {
    auto grouped = grouped_predicates(subject);
    out_ += render_term(subject);
    bool first = true;
    for (const auto& [predicate, object_list] : grouped) {
      out_ += first ? " " : ";\n    ";
      first = false;
      out_ += render_predicate(predicate);
      out_ += " ";
      for (std::size_t i = 0; i < object_list.size(); ++i) {
        if (i > 0) out_ += ", ";
        out_ += render_object(*object_list[i]);
      }
      out_ += " ";
    }
    out_ += ".\n\n";
  }

  std::string render_predicate(const std::string& iri) const {
    if (iri == rdf::iris::rdf_type) return "a";
    return render_iri(iri);
  }

  std::string render_iri(const std::string& iri) const {
    const std::string* best_name = nullptr;
    const std::string* best_ns = nullptr;
    for (const auto& [name, ns] : graph_.prefixes()) {
      if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0) {
        if (!best_ns || ns.size() > best_ns->size()) {
          best_name = &name;
          best_ns = &ns;
        }
      }
    }
    if (best_ns) {
      std::string local = iri.substr(best_ns->size());
      if (is_pn_local_safe(local)) return *best_name + ":" + local;
    }
    return "<" + iri + ">";
  }

  std::string render_object(const Term& term) {
    if (term.is_blank() && inline_blank(term.value)) {
      return render_inline_blank(term);
    }
    return render_term(term);
  }

  std::string render_inline_blank(const Term& blank) {
    auto it = by_subject_.find(blank);
    if (it == by_subject_.end()) return "[]";
    std::string out = "[ ";
    auto grouped = grouped_predicates(blank);
    bool first = true;
    for (const auto& [predicate, object_list] : grouped) {
      if (!first) out += " ; ";
      first = false;
      out += render_predicate(predicate);
      out += " ";
      for (std::size_t i = 0; i < object_list.size(); ++i) {
        if (i > 0) out += ", ";
        out += render_object(*object_list[i]);
      }
    }
    out += " ]";
    return out;
  }

  std::string render_term(const Term& term) const {
    switch (term.kind) {
      case Term::Kind::kIri:
        return render_iri(term.value);
      case Term::Kind::kBlank:
        return "_:" + term.value;
      case Term::Kind::kLiteral:
        break;
    }
    if ((term.datatype == rdf::iris::xsd_integer && integer_token(term.value)) ||
        (term.datatype == rdf::iris::xsd_decimal && decimal_token(term.value))) {
      return term.value;  // bare numeric token
    }
    std::string quoted = "\"" + escape_literal(term.value) + "\"";
    if (term.datatype == rdf::iris::xsd_string) return quoted;
    return quoted + "^^" + render_iri(term.datatype);
  }

  const Graph& graph_;
  std::map<Term, std::vector<const Triple*>> by_subject_;
  std::map<std::string, std::vector<const Triple*>> blank_parents_;
  std::string out_;
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Graph run() {
    while (true) {
      skip_trivia();
      if (at_end()) break;
      if (peek() == '@') {
        parse_prefix_declaration();
      } else {
        parse_triples_statement();
      }
    }
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line_) + ", column " +
                                             std::to_string(column_) + ": expected " + expected);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  bool try_consume(char c) {
    skip_trivia();
    if (at_end() || peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("'") + c + "'");
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  }

  std::string read_while(bool (*pred)(char)) {
    std::string out;
    while (!at_end() && pred(peek())) out.push_back(advance());
    return out;
  }

  void parse_prefix_declaration() {
    // "@prefix name: <iri> ."
    std::string keyword = read_while([](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '@'; });
    if (keyword != "@prefix") fail("@prefix");
    skip_trivia();
    std::string name = read_while(name_char);
    expect(':');
    skip_trivia();
    std::string iri = parse_iriref();
    expect('.');
    graph_.set_prefix(name, iri);
  }

  std::string parse_iriref() {
    skip_trivia();
    if (at_end() || peek() != '<') fail("'<'");
    advance();
    std::string iri;
    while (!at_end() && peek() != '>') {
      char c = advance();
      if (c == '\\' || c == '"' || c == '\n' || c == ' ') fail("valid IRI character");
      iri.push_back(c);
    }
    if (at_end()) fail("'>'");
    advance();
    return iri;
  }

  std::string resolve_prefixed_name() {
    int at_line = line_;
    std::string prefix = read_while(name_char);
    if (at_end() || peek() != ':') fail("':'");
    advance();
    std::string local = read_name_token();
    const auto& prefixes = graph_.prefixes();
    auto it = prefixes.find(prefix);
    if (it == prefixes.end()) {
      throw Error(ErrorCode::kUndeclaredPrefix,
                  "line " + std::to_string(at_line) + ": prefix \"" + prefix + "\"");
    }
    return it->second + local;
  }

  // Name with internal dots allowed; a trailing dot is the statement
  // terminator and stays unconsumed.
  std::string read_name_token() {
    std::string out = read_while(name_char);
    while (!out.empty() && out.back() == '.') {
      out.pop_back();
      --pos_;
      --column_;
    }
    return out;
  }

  Term fresh_blank(const std::string& source_label) {
    auto [it, inserted] = blank_map_.try_emplace(source_label, "");
    if (inserted) it->second = "b" + std::to_string(blank_counter_++);
    return Term::blank(it->second);
  }

  Term parse_subject() {
    skip_trivia();
    if (at_end()) fail("subject");
    char c = peek();
    if (c == '<') return Term::iri(parse_iriref());
    if (c == '_') {
      advance();
      expect(':');
      return fresh_blank(read_name_token());
    }
    if (c == '[') {
      advance();
      Term node = Term::blank("b" + std::to_string(blank_counter_++));
      skip_trivia();
      if (peek() != ']') parse_predicate_object_list(node);
      expect(']');
      return node;
    }
    return Term::iri(resolve_prefixed_name());
  }

  std::string parse_predicate() {
    skip_trivia();
    if (at_end()) fail("predicate");
    if (peek() == '<') return parse_iriref();
    if (peek() == 'a') {
      // "a" only when not the start of a longer name.
      if (pos_ + 1 >= src_.size() || (!name_char(src_[pos_ + 1]) && src_[pos_ + 1] != ':')) {
        advance();
        return rdf::iris::rdf_type;
      }
    }
    return resolve_prefixed_name();
  }

  Term parse_literal() {
    advance();  // opening quote
    std::string raw;
    while (!at_end() && peek() != '"') {
      char c = advance();
      raw.push_back(c);
      if (c == '\\') {
        if (at_end()) fail("escape character");
        raw.push_back(advance());
      }
      if (c == '\n') fail("closing '\"' before end of line");
    }
    if (at_end()) fail("closing '\"'");
    advance();
    std::string lexical = unescape_literal(raw);

    if (!at_end() && peek() == '@') {
      fail("datatype or end of literal (language tags unsupported)");
    }
    if (pos_ + 1 < src_.size() && peek() == '^' && src_[pos_ + 1] == '^') {
      advance();
      advance();
      skip_trivia();
      std::string datatype =
          peek() == '<' ? parse_iriref() : resolve_prefixed_name();
      if (datatype != rdf::iris::xsd_string && datatype != rdf::iris::xsd_integer &&
          datatype != rdf::iris::xsd_decimal && datatype != rdf::iris::xsd_date &&
          datatype != rdf::iris::xsd_any_uri) {
        throw Error(ErrorCode::kUnsupportedDatatype, datatype);
      }
      return Term::literal(std::move(lexical), std::move(datatype));
    }
    return Term::string_literal(std::move(lexical));
  }

  Term parse_numeric() {
    std::string token;
    if (peek() == '+' || peek() == '-') token.push_back(advance());
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
      // A '.' followed by a non-digit terminates the statement instead.
      if (peek() == '.' &&
          (pos_ + 1 >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        break;
      }
      token.push_back(advance());
    }
    if (token.empty() || token == "+" || token == "-") fail("numeric literal");
    if (integer_token(token)) return Term::literal(token, rdf::iris::xsd_integer);
    if (!decimal_token(token)) fail("numeric literal");
    return Term::literal(token, rdf::iris::xsd_decimal);
  }

  Term parse_object() {
    skip_trivia();
    if (at_end()) fail("object");
    char c = peek();
    if (c == '<') return Term::iri(parse_iriref());
    if (c == '"') return parse_literal();
    if (c == '_') {
      advance();
      expect(':');
      return fresh_blank(read_name_token());
    }
    if (c == '[') {
      advance();
      Term node = Term::blank("b" + std::to_string(blank_counter_++));
      skip_trivia();
      if (!at_end() && peek() != ']') parse_predicate_object_list(node);
      expect(']');
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.') {
      return parse_numeric();
    }
    // Bare keywords: true/false are outside the supported datatype set.
    std::string word = read_while(name_char);
    if (word == "true" || word == "false") {
      throw Error(ErrorCode::kUnsupportedDatatype, rdf::iris::xsd_boolean);
    }
    if (!at_end() && peek() == ':') {
      pos_backtrack(word);
      return Term::iri(resolve_prefixed_name());
    }
    fail("object");
  }

  // read_while consumed a candidate prefixed name head; put it back so
  // resolve_prefixed_name sees the whole token.
  void pos_backtrack(const std::string& word) {
    pos_ -= word.size();
    column_ -= static_cast<int>(word.size());
  }

  void parse_predicate_object_list(const Term& subject) {
    while (true) {
      std::string predicate = parse_predicate();
      while (true) {
        Term object = parse_object();
        graph_.add(rdf::make_triple(subject, predicate, object));
        if (!try_consume(',')) break;
      }
      if (!try_consume(';')) break;
      skip_trivia();
      // Trailing ';' before '.' or ']' is legal.
      if (at_end() || peek() == '.' || peek() == ']') break;
    }
  }

  void parse_triples_statement() {
    Term subject = parse_subject();
    skip_trivia();
    if (!at_end() && peek() == '.' && subject.is_blank()) {
      // "[ ... ] ." with no outer predicates.
      advance();
      return;
    }
    parse_predicate_object_list(subject);
    expect('.');
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Graph graph_;
  std::map<std::string, std::string> blank_map_;
  int blank_counter_ = 0;
};

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

// Canonical key for every blank label, or an error when the tree-shape
// invariant does not hold.
std::map<std::string, std::string> blank_keys(const Graph& graph) {
  std::map<std::string, std::vector<const Triple*>> as_object;
  std::set<std::string> all_blanks;
  for (const auto& t : graph.triples()) {
    if (t.subject.is_blank()) all_blanks.insert(t.subject.value);
    if (t.object.is_blank()) {
      all_blanks.insert(t.object.value);
      as_object[t.object.value].push_back(&t);
    }
  }
  std::map<std::string, std::string> keys;
  std::set<std::string> used;
  for (const auto& label : all_blanks) {
    auto it = as_object.find(label);
    if (it == as_object.end() || it->second.size() != 1) {
      throw Error(ErrorCode::kNonTreeBlanks,
                  "blank _:" + label + " is the object of " +
                      std::to_string(it == as_object.end() ? 0 : it->second.size()) +
                      " triples");
    }
    const Triple* link = it->second.front();
    if (!link->subject.is_iri()) {
      throw Error(ErrorCode::kNonTreeBlanks, "blank _:" + label + " hangs off a non-IRI subject");
    }
    std::string key = link->subject.value + "\x1f" + link->predicate.value;
    if (!used.insert(key).second) {
      throw Error(ErrorCode::kNonTreeBlanks,
                  "two blanks share parent and predicate under " + link->subject.value);
    }
    keys[label] = std::move(key);
  }
  return keys;
}

std::set<Triple> relabeled(const Graph& graph) {
  auto keys = blank_keys(graph);
  std::set<Triple> out;
  for (const auto& t : graph.triples()) {
    Triple copy = t;
    if (copy.subject.is_blank()) copy.subject.value = keys.at(copy.subject.value);
    if (copy.object.is_blank()) copy.object.value = keys.at(copy.object.value);
    out.insert(std::move(copy));
  }
  return out;
}

}  // namespace

std::string escape_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '\\') {
      out.push_back(c);
      continue;
    }
    if (i + 1 >= text.size()) {
      throw Error(ErrorCode::kSyntaxError, "dangling escape at end of literal");
    }
    char esc = text[++i];
    switch (esc) {
      case '"': out.push_back('"'); break;
      case '\\': out.push_back('\\'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 't': out.push_back('\t'); break;
      default:
        throw Error(ErrorCode::kSyntaxError, std::string("unsupported escape \\") + esc);
    }
  }
  return out;
}

std::string serialize(const rdf::Graph& graph) { return Serializer(graph).run(); }

rdf::Graph parse(std::string_view document) { return Parser(document).run(); }

bool isomorphic(const rdf::Graph& a, const rdf::Graph& b) {
  return relabeled(a) == relabeled(b);
}

}  // namespace appkg::turtle
