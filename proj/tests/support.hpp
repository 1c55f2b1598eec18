#pragma once

// Shared builders and brute-force oracles for the test suites. The oracles
// work from the closure queries of LabeledPoset only and never call into the
// solver, the algebra module or the chain tools.

#include "kposet/digraph.hpp"
#include "kposet/poset.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kposet::testing {

// Chain with ids prefix0 < prefix1 < ... carrying the given labels.
inline auto chain(const std::vector<Label> & labels, const std::string & prefix = "c", int k = 0) -> LabeledPoset
{
    int max_label = 0;
    for (auto l : labels)
        max_label = std::max(max_label, l);
    PosetBuilder b(k > 0 ? k : max_label + 1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        b.add_element(prefix + std::to_string(i), labels[i]);
    for (std::size_t i = 1; i < labels.size(); ++i)
        b.add_relation(i - 1, i);
    return b.build();
}

inline auto antichain(const std::vector<Label> & labels, const std::string & prefix = "a", int k = 0) -> LabeledPoset
{
    int max_label = 0;
    for (auto l : labels)
        max_label = std::max(max_label, l);
    PosetBuilder b(k > 0 ? k : max_label + 1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        b.add_element(prefix + std::to_string(i), labels[i]);
    return b.build();
}

inline auto poset(int k, std::vector<std::pair<std::string, Label>> elements,
    std::vector<std::pair<std::string, std::string>> covers) -> LabeledPoset
{
    return build_poset(k, elements, covers);
}

inline auto digraph(std::vector<std::string> vertices, std::vector<std::pair<std::string, std::string>> edges)
    -> Digraph
{
    return build_digraph(vertices, edges);
}

// Chains of the product figure: 0<1<0<2 and 1<0<1<2.
inline auto figure_left_chain() -> LabeledPoset
{
    return poset(3, {{"e1", 0}, {"e2", 1}, {"e3", 0}, {"e4", 2}}, {{"e1", "e2"}, {"e2", "e3"}, {"e3", "e4"}});
}

inline auto figure_right_chain() -> LabeledPoset
{
    return poset(3, {{"f1", 1}, {"f2", 0}, {"f3", 1}, {"f4", 2}}, {{"f1", "f2"}, {"f2", "f3"}, {"f3", "f4"}});
}

// Two minimal elements (0 and 1), both below two middle elements (1 and 0),
// which lie below a top labeled 2.
inline auto figure_product() -> LabeledPoset
{
    return poset(3, {{"p", 0}, {"q", 1}, {"r", 1}, {"s", 0}, {"t", 2}},
        {{"p", "r"}, {"p", "s"}, {"q", "r"}, {"q", "s"}, {"r", "t"}, {"s", "t"}});
}

// Bounded 3-poset of a single loop: bottom 2, then 0 and 1, then 1 and 0
// each above both, then top 2.
inline auto figure_loop() -> LabeledPoset
{
    return poset(3, {{"a", 2}, {"b", 0}, {"c", 1}, {"d", 1}, {"e", 0}, {"f", 2}},
        {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"b", "e"}, {"c", "d"}, {"c", "e"}, {"d", "f"}, {"e", "f"}});
}

inline auto figure_graph() -> Digraph
{
    return digraph({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "d"}, {"c", "d"}, {"b", "c"}, {"c", "b"}});
}

inline auto directed_cycle(std::size_t n) -> Digraph
{
    std::vector<std::string> v;
    std::vector<std::pair<std::string, std::string>> e;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        e.emplace_back(v[i], v[(i + 1) % n]);
    return digraph(v, e);
}

// Symmetric complete digraph without loops.
inline auto clique(std::size_t n) -> Digraph
{
    std::vector<std::string> v;
    std::vector<std::pair<std::string, std::string>> e;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back("k" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                e.emplace_back(v[i], v[j]);
    return digraph(v, e);
}

// ---- oracles ----

// Calls f on every map [0,n) -> [0,m) until it returns true.
inline auto for_each_map(std::size_t n, std::size_t m, const std::function<bool(const std::vector<std::size_t> &)> & f)
    -> bool
{
    std::vector<std::size_t> images(n, 0);
    if (n > 0 && m == 0)
        return false;
    while (true) {
        if (f(images))
            return true;
        std::size_t i = n;
        while (true) {
            if (i == 0)
                return false;
            --i;
            if (++images[i] < m)
                break;
            images[i] = 0;
        }
    }
}

inline auto preserves(const LabeledPoset & p, const LabeledPoset & q, const std::vector<std::size_t> & h) -> bool
{
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (p.label(x) != q.label(h[x]))
            return false;
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.less(x, y) && ! q.leq(h[x], h[y]))
                return false;
    }
    return true;
}

inline auto oracle_hom(const LabeledPoset & p, const LabeledPoset & q) -> bool
{
    return for_each_map(p.size(), q.size(), [&](const auto & h) { return preserves(p, q, h); });
}

inline auto oracle_graph_hom(const Digraph & g, const Digraph & h) -> bool
{
    return for_each_map(g.vertex_count(), h.vertex_count(), [&](const auto & f) {
        for (auto [u, v] : g.edges())
            if (! h.has_edge(f[u], f[v]))
                return false;
        return true;
    });
}

inline auto oracle_graph_is_core(const Digraph & g) -> bool
{
    const auto n = g.vertex_count();
    return ! for_each_map(n, n, [&](const auto & f) {
        std::vector<bool> hit(n, false);
        for (auto v : f)
            hit[v] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
            return false;
        for (auto [u, v] : g.edges())
            if (! g.has_edge(f[u], f[v]))
                return false;
        return true;
    });
}

// Smallest image size over all endomorphisms: the size of the core.
inline auto oracle_core_size(const LabeledPoset & p) -> std::size_t
{
    const auto n = p.size();
    std::size_t best = n;
    for_each_map(n, n, [&](const auto & h) {
        if (! preserves(p, p, h))
            return false;
        std::vector<std::size_t> image(h.begin(), h.end());
        std::sort(image.begin(), image.end());
        auto size = static_cast<std::size_t>(std::unique(image.begin(), image.end()) - image.begin());
        best = std::min(best, size);
        return false;
    });
    return best;
}

inline auto oracle_is_core(const LabeledPoset & p) -> bool { return oracle_core_size(p) == p.size(); }

inline auto oracle_is_lattice(const LabeledPoset & p) -> bool
{
    const auto n = p.size();
    auto least_of = [&](const std::vector<std::size_t> & set, bool upward) {
        for (auto c : set) {
            bool extreme = true;
            for (auto d : set)
                if (upward ? ! p.leq(c, d) : ! p.leq(d, c))
                    extreme = false;
            if (extreme)
                return true;
        }
        return false;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<std::size_t> upper, lower;
            for (std::size_t z = 0; z < n; ++z) {
                if (p.leq(x, z) && p.leq(y, z))
                    upper.push_back(z);
                if (p.leq(z, x) && p.leq(z, y))
                    lower.push_back(z);
            }
            if (! least_of(upper, true) || ! least_of(lower, false))
                return false;
        }
    return true;
}

// Longest alternating chain by exhaustive depth-first extension.
inline auto oracle_alternation(const LabeledPoset & p) -> std::size_t
{
    std::function<std::size_t(std::size_t)> longest_from = [&](std::size_t x) {
        std::size_t best = 1;
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.less(x, y) && p.label(x) != p.label(y))
                best = std::max(best, 1 + longest_from(y));
        return best;
    };
    std::size_t best = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
        best = std::max(best, longest_from(x));
    return best;
}

inline auto oracle_isomorphic(const LabeledPoset & p, const LabeledPoset & q) -> bool
{
    if (p.size() != q.size())
        return false;
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t x = 0; x < p.size() && ok; ++x) {
            if (p.label(x) != q.label(perm[x]))
                ok = false;
            for (std::size_t y = 0; y < p.size() && ok; ++y)
                if (p.less(x, y) != q.less(perm[x], perm[y]))
                    ok = false;
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace kposet::testing
