#pragma once

#include "kposet/bitset.hpp"
#include "kposet/poset.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kposet {

/// Finite simple directed graph; loops allowed. Vertices are indexed in
/// lexicographic id order, edges are kept sorted.
class Digraph {
public:
    Digraph() = default;

    auto vertex_count() const noexcept -> std::size_t { return ids_.size(); }
    auto edge_count() const noexcept -> std::size_t { return edges_.size(); }
    auto ids() const noexcept -> const std::vector<std::string> & { return ids_; }
    auto id(std::size_t v) const -> const std::string & { return ids_[v]; }
    auto index_of(std::string_view id) const -> std::optional<std::size_t>;
    auto edges() const noexcept -> const std::vector<std::pair<std::size_t, std::size_t>> & { return edges_; }
    auto has_edge(std::size_t u, std::size_t v) const -> bool { return out_[u].test(v); }
    auto out_neighbours(std::size_t u) const -> const DynamicBitset & { return out_[u]; }
    auto in_neighbours(std::size_t v) const -> const DynamicBitset & { return in_[v]; }
    auto has_loop() const -> bool;

    friend auto build_digraph(std::span<const std::string>, std::span<const std::pair<std::string, std::string>>)
        -> Digraph;

private:
    std::vector<std::string> ids_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<DynamicBitset> out_;
    std::vector<DynamicBitset> in_;
};

/// Throws Error{DuplicateId} for repeated vertices and Error{UnknownElement}
/// for edges with undeclared endpoints. Repeated edges collapse to one.
auto build_digraph(std::span<const std::string> vertices, std::span<const std::pair<std::string, std::string>> edges)
    -> Digraph;

auto induced_subgraph(const Digraph & g, const DynamicBitset & keep) -> Digraph;

/// Element ids used by the encodings.
auto vertex_element_id(const std::string & v, int bit) -> std::string;
auto edge_element_id(const std::string & u, const std::string & v, int bit) -> std::string;
inline const std::string lattice_top_id = "top";
inline const std::string lattice_bottom_id = "bot";

/// The 2-poset with a two-element gadget per vertex, (v,0) < (v,1), and per
/// edge, (e,1) < (e,0), tied together by (u,0) < (e,0) and (e,1) < (v,1) for
/// every edge e = (u,v).
auto encode_poset(const Digraph & g) -> LabeledPoset;

/// encode_poset(g) with a top and a bottom labeled 2 adjoined, as a 3-poset.
/// The empty graph encodes to the empty poset.
auto encode_lattice(const Digraph & g) -> LabeledPoset;

/// Edge-preserving vertex map, found by plain backtracking with forward
/// checking. Kept deliberately independent of the poset solver.
auto graph_find_homomorphism(const Digraph & g, const Digraph & h) -> std::optional<Homomorphism>;

auto graph_verify_homomorphism(const Digraph & g, const Digraph & h, const Homomorphism & map) -> bool;

auto graph_find_nonsurjective_endomorphism(const Digraph & g) -> std::optional<Homomorphism>;

auto graph_is_core(const Digraph & g) -> bool;

/// Minimal retract, reached by repeatedly restricting to the image of a
/// nonsurjective endomorphism.
auto graph_core(const Digraph & g) -> Digraph;

} // namespace kposet
