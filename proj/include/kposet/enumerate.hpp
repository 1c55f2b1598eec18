#pragma once

#include "kposet/digraph.hpp"
#include "kposet/poset.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace kposet {

/// Isomorphism-invariant encoding of a small poset: equal keys iff the posets
/// are isomorphic. Cost grows with the sizes of the groups of elements that
/// share a (label, up-count, down-count) profile.
auto canonical_key(const LabeledPoset & p) -> std::string;
auto canonical_key(const Digraph & g) -> std::string;

/// All k-posets with at most max_size elements, one per isomorphism class,
/// smallest first (the empty poset included). Element ids are "a", "b", ...
auto all_posets(std::size_t max_size, int k) -> std::vector<LabeledPoset>;

/// All digraphs (loops allowed) on at most max_vertices vertices, one per
/// isomorphism class, the empty graph included. Vertex ids are "a", "b", ...
auto all_digraphs(std::size_t max_vertices) -> std::vector<Digraph>;

/// Random k-poset on `size` elements: each pair i < j of a hidden linear
/// order is related with the given probability, then closed transitively.
/// Ids are shuffled so that id order and order are unrelated.
auto random_poset(std::mt19937_64 & rng, std::size_t size, int k, double density = 0.4) -> LabeledPoset;

/// Random bounded k-poset with `size` >= 2 elements: a random interior between
/// a bottom "bot" and a top "top" with the given labels.
auto random_bounded_poset(std::mt19937_64 & rng, std::size_t size, int k, Label top_label, Label bottom_label,
    double density = 0.4) -> LabeledPoset;

auto random_digraph(std::mt19937_64 & rng, std::size_t vertices, double density = 0.3) -> Digraph;

} // namespace kposet
