#include "kposet/poset.hpp"
#include "kposet/error.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace kposet {

auto LabeledPoset::from_sorted_closure(int k, std::vector<std::string> ids, std::vector<Label> labels,
    std::vector<DynamicBitset> strict_up) -> LabeledPoset
{
    LabeledPoset p;
    p.k_ = k;
    p.ids_ = std::move(ids);
    p.labels_ = std::move(labels);
    p.up_ = std::move(strict_up);

    const auto n = p.ids_.size();
    p.down_.assign(n, DynamicBitset(n));
    for (std::size_t x = 0; x < n; ++x)
        p.up_[x].for_each([&](std::size_t y) { p.down_[y].set(x); });

    p.upper_start_.assign(n + 1, 0);
    p.lower_start_.assign(n + 1, 0);
    for (std::size_t x = 0; x < n; ++x)
        p.up_[x].for_each([&](std::size_t y) {
            if (! p.up_[x].intersects(p.down_[y]))
                p.covers_.emplace_back(x, y);
        });
    for (auto [x, y] : p.covers_) {
        ++p.upper_start_[x + 1];
        ++p.lower_start_[y + 1];
    }
    for (std::size_t x = 0; x < n; ++x) {
        p.upper_start_[x + 1] += p.upper_start_[x];
        p.lower_start_[x + 1] += p.lower_start_[x];
    }
    p.upper_covers_.resize(p.covers_.size());
    p.lower_covers_.resize(p.covers_.size());
    auto fill = p.lower_start_;
    for (std::size_t c = 0; c < p.covers_.size(); ++c) {
        auto [x, y] = p.covers_[c];
        p.upper_covers_[c] = y;
        p.lower_covers_[fill[y]++] = x;
    }
    return p;
}

auto LabeledPoset::index_of(std::string_view id) const -> std::optional<std::size_t>
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
}

auto LabeledPoset::lifted(int l) const -> LabeledPoset
{
    auto result = *this;
    result.k_ = std::max(k_, l);
    return result;
}

PosetBuilder::PosetBuilder(int k) : k_(k)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidArgument, "k must be positive, got " + std::to_string(k));
}

auto PosetBuilder::add_element(std::string id, Label label) -> std::size_t
{
    ids_.push_back(std::move(id));
    labels_.push_back(label);
    return ids_.size() - 1;
}

void PosetBuilder::add_relation(std::size_t lower, std::size_t upper)
{
    relations_.emplace_back(lower, upper);
}

auto PosetBuilder::build() const -> LabeledPoset
{
    const auto n = ids_.size();
    for (std::size_t i = 0; i < n; ++i)
        if (labels_[i] < 0 || labels_[i] >= k_)
            throw Error(ErrorKind::LabelOutOfRange, "element '" + ids_[i] + "' has label " +
                    std::to_string(labels_[i]) + " outside [0," + std::to_string(k_ - 1) + "]");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ids_[a] < ids_[b]; });
    for (std::size_t i = 1; i < n; ++i)
        if (ids_[order[i]] == ids_[order[i - 1]])
            throw Error(ErrorKind::DuplicateId, "element id '" + ids_[order[i]] + "' declared twice");

    std::vector<std::size_t> position(n);
    std::vector<std::string> ids(n);
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        position[order[i]] = i;
        ids[i] = ids_[order[i]];
        labels[i] = labels_[order[i]];
    }

    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<std::size_t> in_degree(n, 0);
    for (auto [a, b] : relations_) {
        if (a == b)
            throw Error(ErrorKind::CycleDetected, "element '" + ids_[a] + "' is related to itself");
        succ[position[a]].push_back(position[b]);
    }
    for (auto & s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (auto y : s)
            ++in_degree[y];
    }

    std::vector<std::size_t> topo;
    topo.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
        if (in_degree[x] == 0)
            topo.push_back(x);
    for (std::size_t head = 0; head < topo.size(); ++head)
        for (auto y : succ[topo[head]])
            if (--in_degree[y] == 0)
                topo.push_back(y);
    if (topo.size() != n) {
        auto culprit = std::find_if(in_degree.begin(), in_degree.end(), [](auto d) { return d > 0; });
        throw Error(ErrorKind::CycleDetected,
            "order relation contains a directed cycle through '" + ids[static_cast<std::size_t>(culprit - in_degree.begin())] + "'");
    }

    std::vector<DynamicBitset> up(n, DynamicBitset(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (auto y : succ[*it]) {
            up[*it].set(y);
            up[*it] |= up[y];
        }

    return LabeledPoset::from_sorted_closure(k_, std::move(ids), std::move(labels), std::move(up));
}

auto to_id_map(const LabeledPoset & src, const LabeledPoset & dst, const Homomorphism & h)
    -> std::map<std::string, std::string>
{
    std::map<std::string, std::string> m;
    for (std::size_t x = 0; x < src.size(); ++x)
        m.emplace(src.id(x), dst.id(h.images[x]));
    return m;
}

auto from_id_map(const LabeledPoset & src, const LabeledPoset & dst, const std::map<std::string, std::string> & m)
    -> Homomorphism
{
    Homomorphism h;
    h.images.resize(src.size());
    for (std::size_t x = 0; x < src.size(); ++x) {
        auto it = m.find(src.id(x));
        if (it == m.end())
            throw Error(ErrorKind::UnknownElement, "map is not defined on source element '" + src.id(x) + "'");
        auto y = dst.index_of(it->second);
        if (! y)
            throw Error(ErrorKind::UnknownElement, "image '" + it->second + "' is not an element of the target");
        h.images[x] = *y;
    }
    for (const auto & [key, _] : m)
        if (! src.index_of(key))
            throw Error(ErrorKind::UnknownElement, "map key '" + key + "' is not an element of the source");
    return h;
}

auto build_poset(int k, std::span<const std::pair<std::string, Label>> labeled_elements,
    std::span<const std::pair<std::string, std::string>> covers) -> LabeledPoset
{
    PosetBuilder builder(k);
    std::unordered_map<std::string, std::size_t> index;
    for (const auto & [id, label] : labeled_elements) {
        auto i = builder.add_element(id, label);
        index.emplace(id, i);
    }
    for (const auto & [lower, upper] : covers) {
        auto a = index.find(lower);
        if (a == index.end())
            throw Error(ErrorKind::UnknownElement, "cover endpoint '" + lower + "' is not a declared element");
        auto b = index.find(upper);
        if (b == index.end())
            throw Error(ErrorKind::UnknownElement, "cover endpoint '" + upper + "' is not a declared element");
        builder.add_relation(a->second, b->second);
    }
    return builder.build();
}

auto induced_subposet(const LabeledPoset & p, const DynamicBitset & keep) -> LabeledPoset
{
    std::vector<std::size_t> kept;
    keep.for_each([&](std::size_t x) { kept.push_back(x); });

    const auto m = kept.size();
    std::vector<std::string> ids;
    std::vector<Label> labels;
    ids.reserve(m);
    labels.reserve(m);
    for (auto x : kept) {
        ids.push_back(p.id(x));
        labels.push_back(p.label(x));
    }
    std::vector<DynamicBitset> up(m, DynamicBitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (p.less(kept[i], kept[j]))
                up[i].set(j);
    return LabeledPoset::from_sorted_closure(p.k(), std::move(ids), std::move(labels), std::move(up));
}

auto induced_subposet(const LabeledPoset & p, const std::set<std::string> & subset) -> LabeledPoset
{
    DynamicBitset keep(p.size());
    for (const auto & id : subset) {
        auto x = p.index_of(id);
        if (! x)
            throw Error(ErrorKind::UnknownElement, "'" + id + "' is not an element of the poset");
        keep.set(*x);
    }
    return induced_subposet(p, keep);
}

auto component_indices(const LabeledPoset & p) -> std::vector<std::vector<std::size_t>>
{
    const auto n = p.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> result;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        std::vector<std::size_t> component{start};
        seen[start] = true;
        for (std::size_t head = 0; head < component.size(); ++head) {
            auto x = component[head];
            auto visit = [&](std::size_t y) {
                if (! seen[y]) {
                    seen[y] = true;
                    component.push_back(y);
                }
            };
            p.up(x).for_each(visit);
            p.down(x).for_each(visit);
        }
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
    }
    return result;
}

auto connected_components(const LabeledPoset & p) -> std::vector<LabeledPoset>
{
    std::vector<LabeledPoset> result;
    for (const auto & component : component_indices(p)) {
        DynamicBitset keep(p.size());
        for (auto x : component)
            keep.set(x);
        result.push_back(induced_subposet(p, keep));
    }
    return result;
}

namespace {
    auto reflexive_up(const LabeledPoset & p, std::size_t x) -> DynamicBitset
    {
        auto s = p.up(x);
        s.set(x);
        return s;
    }

    auto reflexive_down(const LabeledPoset & p, std::size_t x) -> DynamicBitset
    {
        auto s = p.down(x);
        s.set(x);
        return s;
    }

    // The set has a least element iff some member's up-set contains all of it.
    auto has_least(const LabeledPoset & p, const DynamicBitset & s) -> bool
    {
        bool found = false;
        s.for_each([&](std::size_t u) {
            if (! found && s.is_subset_of(reflexive_up(p, u)))
                found = true;
        });
        return found;
    }

    auto has_greatest(const LabeledPoset & p, const DynamicBitset & s) -> bool
    {
        bool found = false;
        s.for_each([&](std::size_t u) {
            if (! found && s.is_subset_of(reflexive_down(p, u)))
                found = true;
        });
        return found;
    }
}

auto top_element(const LabeledPoset & p) -> std::optional<std::size_t>
{
    std::optional<std::size_t> result;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.up(x).none()) {
            if (result)
                return std::nullopt;
            result = x;
        }
    return result;
}

auto bottom_element(const LabeledPoset & p) -> std::optional<std::size_t>
{
    std::optional<std::size_t> result;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.down(x).none()) {
            if (result)
                return std::nullopt;
            result = x;
        }
    return result;
}

auto structure_report(const LabeledPoset & p) -> StructureReport
{
    StructureReport report;
    const auto n = p.size();
    report.component_count = component_indices(p).size();
    report.is_connected = report.component_count == 1;

    report.is_chain = true;
    for (std::size_t x = 0; x < n && report.is_chain; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (! p.comparable(x, y)) {
                report.is_chain = false;
                break;
            }

    // The empty poset counts as a lattice so that the empty graph (loopless)
    // encodes to a lattice.
    report.is_lattice = true;
    for (std::size_t x = 0; x < n && report.is_lattice; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            if (! has_least(p, reflexive_up(p, x) & reflexive_up(p, y)) ||
                ! has_greatest(p, reflexive_down(p, x) & reflexive_down(p, y))) {
                report.is_lattice = false;
                break;
            }
        }

    auto top = top_element(p);
    auto bottom = bottom_element(p);
    if (top && bottom)
        report.bounds = Bounds{p.id(*top), p.label(*top), p.id(*bottom), p.label(*bottom)};
    return report;
}

namespace {
    using Profile = std::tuple<Label, std::size_t, std::size_t, std::size_t, std::size_t>;

    auto profile(const LabeledPoset & p, std::size_t x) -> Profile
    {
        return {p.label(x), p.up(x).count(), p.down(x).count(), p.upper_covers(x).size(), p.lower_covers(x).size()};
    }

    struct IsoSearch {
        const LabeledPoset & p;
        const LabeledPoset & q;
        std::vector<Profile> p_profiles;
        std::vector<Profile> q_profiles;
        std::vector<std::size_t> images;
        std::vector<bool> used;

        auto extend(std::size_t x) -> bool
        {
            if (x == p.size())
                return true;
            for (std::size_t v = 0; v < q.size(); ++v) {
                if (used[v] || q_profiles[v] != p_profiles[x])
                    continue;
                bool ok = true;
                for (std::size_t y = 0; y < x && ok; ++y) {
                    auto w = images[y];
                    ok = p.less(y, x) == q.less(w, v) && p.less(x, y) == q.less(v, w);
                }
                if (! ok)
                    continue;
                images[x] = v;
                used[v] = true;
                if (extend(x + 1))
                    return true;
                used[v] = false;
            }
            return false;
        }
    };
}

auto is_isomorphic(const LabeledPoset & p, const LabeledPoset & q) -> std::optional<Homomorphism>
{
    if (p.size() != q.size() || p.covers().size() != q.covers().size())
        return std::nullopt;

    IsoSearch search{p, q, {}, {}, std::vector<std::size_t>(p.size()), std::vector<bool>(q.size(), false)};
    for (std::size_t x = 0; x < p.size(); ++x) {
        search.p_profiles.push_back(profile(p, x));
        search.q_profiles.push_back(profile(q, x));
    }
    auto a = search.p_profiles;
    auto b = search.q_profiles;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        return std::nullopt;

    if (! search.extend(0))
        return std::nullopt;
    return Homomorphism{std::move(search.images)};
}

} // namespace kposet
