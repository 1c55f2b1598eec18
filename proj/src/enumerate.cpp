#include "kposet/enumerate.hpp"
#include "kposet/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>
#include <unordered_set>

namespace kposet {

namespace {
    // Minimises `encode` over all orderings that keep elements sorted by
    // profile, permuting freely inside each block of equal profiles.
    template <typename Profile>
    auto minimise_over_blocks(const std::vector<Profile> & profiles,
        const std::function<std::string(const std::vector<std::size_t> &)> & encode) -> std::string
    {
        const auto n = profiles.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return profiles[a] < profiles[b]; });

        std::vector<std::pair<std::size_t, std::size_t>> blocks;
        for (std::size_t i = 0; i < n;) {
            auto j = i;
            while (j < n && profiles[order[j]] == profiles[order[i]])
                ++j;
            blocks.emplace_back(i, j);
            i = j;
        }

        std::string best;
        bool have_best = false;
        std::function<void(std::size_t)> recurse = [&](std::size_t b) {
            if (b == blocks.size()) {
                auto key = encode(order);
                if (! have_best || key < best) {
                    best = std::move(key);
                    have_best = true;
                }
                return;
            }
            auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
            auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
            std::sort(first, last);
            do
                recurse(b + 1);
            while (std::next_permutation(first, last));
        };
        recurse(0);
        return best;
    }

    auto letter_id(std::size_t i) -> std::string
    {
        std::string id;
        do {
            id.insert(id.begin(), static_cast<char>('a' + i % 26));
            i /= 26;
        } while (i-- > 0);
        return id;
    }
}

auto canonical_key(const LabeledPoset & p) -> std::string
{
    using Profile = std::tuple<Label, std::size_t, std::size_t>;
    std::vector<Profile> profiles;
    for (std::size_t x = 0; x < p.size(); ++x)
        profiles.emplace_back(p.label(x), p.up(x).count(), p.down(x).count());

    return minimise_over_blocks<Profile>(profiles, [&](const std::vector<std::size_t> & order) {
        std::string key;
        for (auto x : order) {
            key += std::to_string(p.label(x));
            key += ':';
            for (auto y : order)
                key += p.less(x, y) ? '1' : '0';
            key += ';';
        }
        return key;
    });
}

auto canonical_key(const Digraph & g) -> std::string
{
    using Profile = std::tuple<bool, std::size_t, std::size_t>;
    std::vector<Profile> profiles;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        profiles.emplace_back(g.has_edge(v, v), g.out_neighbours(v).count(), g.in_neighbours(v).count());

    return std::to_string(g.vertex_count()) + "|" +
        minimise_over_blocks<Profile>(profiles, [&](const std::vector<std::size_t> & order) {
            std::string key;
            for (auto u : order)
                for (auto v : order)
                    key += g.has_edge(u, v) ? '1' : '0';
            return key;
        });
}

auto all_posets(std::size_t max_size, int k) -> std::vector<LabeledPoset>
{
    if (k < 1)
        throw Error(ErrorKind::InvalidArgument, "k must be positive");
    std::vector<LabeledPoset> result;
    for (std::size_t n = 0; n <= max_size; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                slots.emplace_back(i, j);

        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i)
            ids.push_back(letter_id(i));

        std::unordered_set<std::string> seen;
        std::size_t labelings = 1;
        for (std::size_t i = 0; i < n; ++i)
            labelings *= static_cast<std::size_t>(k);

        // every poset has a linear extension, so relations inside the
        // upper triangle of a fixed order reach every isomorphism class
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            std::vector<DynamicBitset> up(n, DynamicBitset(n));
            for (std::size_t s = 0; s < slots.size(); ++s)
                if ((mask >> s) & 1U)
                    up[slots[s].first].set(slots[s].second);
            bool transitive = true;
            for (std::size_t x = 0; x < n && transitive; ++x)
                up[x].for_each([&](std::size_t y) {
                    if (! up[y].is_subset_of(up[x]))
                        transitive = false;
                });
            if (! transitive)
                continue;

            for (std::size_t code = 0; code < labelings; ++code) {
                std::vector<Label> labels(n);
                auto c = code;
                for (std::size_t i = 0; i < n; ++i) {
                    labels[i] = static_cast<Label>(c % static_cast<std::size_t>(k));
                    c /= static_cast<std::size_t>(k);
                }
                auto p = LabeledPoset::from_sorted_closure(k, ids, std::move(labels), up);
                if (seen.insert(canonical_key(p)).second)
                    result.push_back(std::move(p));
            }
        }
    }
    return result;
}

auto all_digraphs(std::size_t max_vertices) -> std::vector<Digraph>
{
    std::vector<Digraph> result;
    for (std::size_t n = 0; n <= max_vertices; ++n) {
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i)
            ids.push_back(letter_id(i));
        std::unordered_set<std::string> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
            std::vector<std::pair<std::string, std::string>> edges;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    if ((mask >> (u * n + v)) & 1U)
                        edges.emplace_back(ids[u], ids[v]);
            auto g = build_digraph(ids, edges);
            if (seen.insert(canonical_key(g)).second)
                result.push_back(std::move(g));
        }
    }
    return result;
}

auto random_poset(std::mt19937_64 & rng, std::size_t size, int k, double density) -> LabeledPoset
{
    std::vector<std::size_t> names(size);
    std::iota(names.begin(), names.end(), 0);
    std::shuffle(names.begin(), names.end(), rng);

    std::uniform_int_distribution<Label> label(0, k - 1);
    std::bernoulli_distribution related(density);
    PosetBuilder builder(k);
    for (std::size_t i = 0; i < size; ++i)
        builder.add_element("x" + std::to_string(names[i]), label(rng));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if (related(rng))
                builder.add_relation(i, j);
    return builder.build();
}

auto random_bounded_poset(std::mt19937_64 & rng, std::size_t size, int k, Label top_label, Label bottom_label,
    double density) -> LabeledPoset
{
    if (size < 2)
        throw Error(ErrorKind::InvalidArgument, "a bounded poset with distinct extremes needs two elements");
    auto interior = random_poset(rng, size - 2, k, density);
    PosetBuilder builder(k);
    auto bottom = builder.add_element("bot", bottom_label);
    auto top = builder.add_element("top", top_label);
    builder.add_relation(bottom, top);
    for (std::size_t x = 0; x < interior.size(); ++x) {
        auto i = builder.add_element(interior.id(x), interior.label(x));
        builder.add_relation(bottom, i);
        builder.add_relation(i, top);
    }
    for (auto [lower, upper] : interior.covers())
        builder.add_relation(lower + 2, upper + 2);
    return builder.build();
}

auto random_digraph(std::mt19937_64 & rng, std::size_t vertices, double density) -> Digraph
{
    std::bernoulli_distribution edge(density);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < vertices; ++i)
        ids.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t u = 0; u < vertices; ++u)
        for (std::size_t v = 0; v < vertices; ++v)
            if (edge(rng))
                edges.emplace_back(ids[u], ids[v]);
    return build_digraph(ids, edges);
}

} // namespace kposet
