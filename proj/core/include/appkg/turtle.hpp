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

#ifndef APPKG_TURTLE_HPP_
#define APPKG_TURTLE_HPP_

#include <string>
#include <string_view>

#include "appkg/rdf.hpp"

namespace appkg::turtle {

// Deterministic Turtle rendering: sorted prefix block, subjects ordered
// TBox-first then lexicographically, predicates in vocabulary order, blank
// objects inlined with [ ... ], integers and decimals as bare tokens,
// dates and URIs with explicit datatypes. Byte-identical across runs and
// across insertion orders.
std::string serialize(const rdf::Graph& graph);

// Reads the serialize grammar plus comments, explicit _:labels and long
// prefix declarations. Blank nodes get fresh labels in parse order.
// Throws Error(kSyntaxError) with line/column, Error(kUndeclaredPrefix),
// Error(kUnsupportedDatatype).
rdf::Graph parse(std::string_view document);

// Blank-label-insensitive graph equality. Works by canonical relabeling:
// each blank node is keyed by (parent subject IRI, linking predicate),
// which the tree-shaped blank structure makes unique. Throws
// Error(kNonTreeBlanks) when a graph violates that shape.
bool isomorphic(const rdf::Graph& a, const rdf::Graph& b);

// ECHAR string escaping used for literals.
std::string escape_literal(std::string_view text);
std::string unescape_literal(std::string_view text);  // throws Error(kSyntaxError)

}  // namespace appkg::turtle

#endif  // APPKG_TURTLE_HPP_
