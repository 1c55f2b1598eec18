#include "kposet/digraph.hpp"
#include "kposet/error.hpp"

#include <algorithm>

namespace kposet {

auto Digraph::index_of(std::string_view id) const -> std::optional<std::size_t>
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

auto Digraph::has_loop() const -> bool
{
    return std::any_of(edges_.begin(), edges_.end(), [](auto e) { return e.first == e.second; });
}

auto build_digraph(std::span<const std::string> vertices, std::span<const std::pair<std::string, std::string>> edges)
    -> Digraph
{
    Digraph g;
    g.ids_.assign(vertices.begin(), vertices.end());
    std::sort(g.ids_.begin(), g.ids_.end());
    auto dup = std::adjacent_find(g.ids_.begin(), g.ids_.end());
    if (dup != g.ids_.end())
        throw Error(ErrorKind::DuplicateId, "vertex '" + *dup + "' declared twice");

    const auto n = g.ids_.size();
    g.out_.assign(n, DynamicBitset(n));
    g.in_.assign(n, DynamicBitset(n));
    for (const auto & [a, b] : edges) {
        auto u = g.index_of(a);
        if (! u)
            throw Error(ErrorKind::UnknownElement, "edge endpoint '" + a + "' is not a declared vertex");
        auto v = g.index_of(b);
        if (! v)
            throw Error(ErrorKind::UnknownElement, "edge endpoint '" + b + "' is not a declared vertex");
        g.edges_.emplace_back(*u, *v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    for (auto [u, v] : g.edges_) {
        g.out_[u].set(v);
        g.in_[v].set(u);
    }
    return g;
}

auto induced_subgraph(const Digraph & g, const DynamicBitset & keep) -> Digraph
{
    std::vector<std::string> vertices;
    keep.for_each([&](std::size_t v) { vertices.push_back(g.id(v)); });
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edges())
        if (keep.test(u) && keep.test(v))
            edges.emplace_back(g.id(u), g.id(v));
    return build_digraph(vertices, edges);
}

auto vertex_element_id(const std::string & v, int bit) -> std::string
{
    return "v:" + v + ":" + std::to_string(bit);
}

auto edge_element_id(const std::string & u, const std::string & v, int bit) -> std::string
{
    return "e:" + u + "->" + v + ":" + std::to_string(bit);
}

namespace {
    auto add_graph_gadgets(PosetBuilder & builder, const Digraph & g) -> void
    {
        std::vector<std::size_t> v0(g.vertex_count()), v1(g.vertex_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            v0[v] = builder.add_element(vertex_element_id(g.id(v), 0), 0);
            v1[v] = builder.add_element(vertex_element_id(g.id(v), 1), 1);
            builder.add_relation(v0[v], v1[v]);
        }
        for (auto [u, v] : g.edges()) {
            auto e0 = builder.add_element(edge_element_id(g.id(u), g.id(v), 0), 0);
            auto e1 = builder.add_element(edge_element_id(g.id(u), g.id(v), 1), 1);
            builder.add_relation(e1, e0);
            builder.add_relation(v0[u], e0);
            builder.add_relation(e1, v1[v]);
        }
    }
}

auto encode_poset(const Digraph & g) -> LabeledPoset
{
    PosetBuilder builder(2);
    add_graph_gadgets(builder, g);
    return builder.build();
}

auto encode_lattice(const Digraph & g) -> LabeledPoset
{
    PosetBuilder builder(3);
    if (g.vertex_count() == 0)
        return builder.build();
    add_graph_gadgets(builder, g);
    const auto inner = builder.element_count();
    auto bottom = builder.add_element(lattice_bottom_id, 2);
    auto top = builder.add_element(lattice_top_id, 2);
    for (std::size_t x = 0; x < inner; ++x) {
        builder.add_relation(bottom, x);
        builder.add_relation(x, top);
    }
    return builder.build();
}

namespace {
    class GraphSearch {
    public:
        GraphSearch(const Digraph & g, const Digraph & h, const DynamicBitset & allowed) :
            g_(g), h_(h), images_(g.vertex_count(), 0)
        {
            domains_.assign(g.vertex_count(), allowed);
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                if (g.has_edge(v, v))
                    for (std::size_t w = 0; w < h.vertex_count(); ++w)
                        if (! h.has_edge(w, w))
                            domains_[v].reset(w);
        }

        auto run() -> std::optional<Homomorphism>
        {
            if (extend(0, domains_))
                return Homomorphism{images_};
            return std::nullopt;
        }

    private:
        auto extend(std::size_t v, const std::vector<DynamicBitset> & domains) -> bool
        {
            if (v == g_.vertex_count())
                return true;
            for (auto w = domains[v].find_first(); w != DynamicBitset::npos; w = domains[v].find_next(w)) {
                auto next = domains;
                bool ok = true;
                for (auto u = v + 1; u < g_.vertex_count() && ok; ++u) {
                    if (g_.has_edge(v, u))
                        next[u] &= h_.out_neighbours(w);
                    if (g_.has_edge(u, v))
                        next[u] &= h_.in_neighbours(w);
                    ok = next[u].any();
                }
                if (! ok)
                    continue;
                images_[v] = w;
                if (extend(v + 1, next))
                    return true;
            }
            return false;
        }

        const Digraph & g_;
        const Digraph & h_;
        std::vector<std::size_t> images_;
        std::vector<DynamicBitset> domains_;
    };
}

auto graph_find_homomorphism(const Digraph & g, const Digraph & h) -> std::optional<Homomorphism>
{
    DynamicBitset allowed(h.vertex_count());
    allowed.set_all();
    return GraphSearch(g, h, allowed).run();
}

auto graph_verify_homomorphism(const Digraph & g, const Digraph & h, const Homomorphism & map) -> bool
{
    if (map.images.size() != g.vertex_count())
        return false;
    for (auto w : map.images)
        if (w >= h.vertex_count())
            return false;
    return std::all_of(g.edges().begin(), g.edges().end(),
        [&](auto e) { return h.has_edge(map.images[e.first], map.images[e.second]); });
}

auto graph_find_nonsurjective_endomorphism(const Digraph & g) -> std::optional<Homomorphism>
{
    DynamicBitset allowed(g.vertex_count());
    allowed.set_all();
    for (std::size_t excluded = 0; excluded < g.vertex_count(); ++excluded) {
        allowed.reset(excluded);
        auto h = GraphSearch(g, g, allowed).run();
        allowed.set(excluded);
        if (h)
            return h;
    }
    return std::nullopt;
}

auto graph_is_core(const Digraph & g) -> bool
{
    return ! graph_find_nonsurjective_endomorphism(g);
}

auto graph_core(const Digraph & g) -> Digraph
{
    auto current = g;
    while (auto h = graph_find_nonsurjective_endomorphism(current)) {
        DynamicBitset image(current.vertex_count());
        for (auto w : h->images)
            image.set(w);
        current = induced_subgraph(current, image);
    }
    return current;
}

} // namespace kposet
