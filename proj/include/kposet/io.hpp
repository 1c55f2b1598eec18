#pragma once

#include "kposet/digraph.hpp"
#include "kposet/poset.hpp"

#include <string>
#include <string_view>

namespace kposet {

/// JSON poset format:
///   {"k":2,"elements":[{"id":"a","label":0},...],"covers":[["a","b"],...]}
/// Covers may be any order pairs; redundant ones are reduced away. Malformed
/// input raises Error{ParseError} naming the line/column or the offending
/// field; structural problems surface the build_poset errors.
auto parse_poset(std::string_view text) -> LabeledPoset;

/// Canonical form: elements and covers sorted by id, one entry per line.
auto serialize_poset(const LabeledPoset & p) -> std::string;

/// JSON digraph format: {"vertices":["a",...],"edges":[["a","b"],...]}
auto parse_digraph(std::string_view text) -> Digraph;
auto serialize_digraph(const Digraph & g) -> std::string;

/// True when the text looks like a digraph document rather than a poset.
auto is_digraph_document(std::string_view text) -> bool;

/// Hasse diagram as an undirected DOT graph drawn bottom-to-top, one node
/// per element captioned "<id>:<label>" and one edge per cover.
auto export_dot(const LabeledPoset & p) -> std::string;

/// Directed DOT graph, nodes and edges in sorted order.
auto export_dot(const Digraph & g) -> std::string;

auto read_file(const std::string & path) -> std::string;

} // namespace kposet
