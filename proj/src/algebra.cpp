#include "kposet/algebra.hpp"
#include "kposet/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kposet {

namespace {
    // Sorts the elements by id and materialises the strict order given by
    // `less` (over the caller's indexing), which must already be a partial
    // order.
    template <typename Less>
    auto assemble(int k, std::vector<std::string> ids, std::vector<Label> labels, const Less & less) -> LabeledPoset
    {
        const auto n = ids.size();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ids[a] < ids[b]; });
        for (std::size_t i = 1; i < n; ++i)
            if (ids[order[i]] == ids[order[i - 1]])
                throw Error(ErrorKind::DuplicateId, "constructed element id '" + ids[order[i]] + "' is ambiguous");

        std::vector<std::string> sorted_ids(n);
        std::vector<Label> sorted_labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            sorted_ids[i] = std::move(ids[order[i]]);
            sorted_labels[i] = labels[order[i]];
        }
        std::vector<DynamicBitset> up(n, DynamicBitset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && less(order[i], order[j]))
                    up[i].set(j);
        return LabeledPoset::from_sorted_closure(k, std::move(sorted_ids), std::move(sorted_labels), std::move(up));
    }

    using Family = std::vector<const LabeledPoset *>;

    auto max_k(const Family & family) -> int
    {
        int k = 1;
        for (const auto * p : family)
            k = std::max(k, p->k());
        return k;
    }

    auto as_family(std::span<const LabeledPoset> posets) -> Family
    {
        Family family;
        for (const auto & p : posets)
            family.push_back(&p);
        return family;
    }

    auto union_of(const Family & family) -> LabeledPoset
    {
        if (family.empty())
            throw Error(ErrorKind::InvalidArgument, "disjoint union of an empty family");

        std::vector<std::string> ids;
        std::vector<Label> labels;
        std::vector<std::pair<std::size_t, std::size_t>> origin;
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t x = 0; x < family[i]->size(); ++x) {
                ids.push_back(std::to_string(i) + "/" + family[i]->id(x));
                labels.push_back(family[i]->label(x));
                origin.emplace_back(i, x);
            }
        return assemble(max_k(family), std::move(ids), std::move(labels), [&](std::size_t a, std::size_t b) {
            return origin[a].first == origin[b].first && family[origin[a].first]->less(origin[a].second, origin[b].second);
        });
    }

    auto product_of(const Family & family, std::uint64_t budget) -> LabeledPoset
    {
        if (family.empty())
            throw Error(ErrorKind::InvalidArgument, "label-matching product of an empty family");
        const auto k = static_cast<std::size_t>(max_k(family));
        const auto m = family.size();

        // members[i][l] = elements of family[i] carrying label l
        std::vector<std::vector<std::vector<std::size_t>>> members(m, std::vector<std::vector<std::size_t>>(k));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t x = 0; x < family[i]->size(); ++x)
                members[i][static_cast<std::size_t>(family[i]->label(x))].push_back(x);

        std::uint64_t total = 0;
        for (std::size_t l = 0; l < k; ++l) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < m && count > 0; ++i) {
                auto c = members[i][l].size();
                if (c != 0 && count > budget / c)
                    throw Error(ErrorKind::SizeBudgetExceeded,
                        "label-matching product exceeds " + std::to_string(budget) + " elements");
                count *= c;
            }
            total += count;
            if (total > budget)
                throw Error(ErrorKind::SizeBudgetExceeded,
                    "label-matching product exceeds " + std::to_string(budget) + " elements");
        }

        // tuples stored flat, m entries per element
        std::vector<std::size_t> tuples;
        std::vector<std::string> ids;
        std::vector<Label> labels;
        tuples.reserve(total * m);
        ids.reserve(total);
        labels.reserve(total);
        std::vector<std::size_t> current(m);
        for (std::size_t l = 0; l < k; ++l) {
            bool nonempty = true;
            for (std::size_t i = 0; i < m; ++i)
                nonempty = nonempty && ! members[i][l].empty();
            if (! nonempty)
                continue;
            // odometer over members[0][l] x ... x members[m-1][l]
            std::vector<std::size_t> digit(m, 0);
            for (bool more = true; more;) {
                std::string id = "(";
                for (std::size_t i = 0; i < m; ++i) {
                    auto x = members[i][l][digit[i]];
                    tuples.push_back(x);
                    if (i > 0)
                        id += ',';
                    id += family[i]->id(x);
                }
                id += ')';
                ids.push_back(std::move(id));
                labels.push_back(static_cast<Label>(l));

                more = false;
                for (std::size_t i = m; i-- > 0;) {
                    if (++digit[i] < members[i][l].size()) {
                        more = true;
                        break;
                    }
                    digit[i] = 0;
                }
            }
        }

        return assemble(static_cast<int>(k), std::move(ids), std::move(labels), [&](std::size_t a, std::size_t b) {
            for (std::size_t i = 0; i < m; ++i)
                if (! family[i]->leq(tuples[a * m + i], tuples[b * m + i]))
                    return false;
            return true;
        });
    }
}

auto disjoint_union(std::span<const LabeledPoset> family) -> LabeledPoset
{
    return union_of(as_family(family));
}

auto disjoint_union(const LabeledPoset & p, const LabeledPoset & q) -> LabeledPoset
{
    return union_of({&p, &q});
}

auto label_matching_product(std::span<const LabeledPoset> family, std::uint64_t budget) -> LabeledPoset
{
    return product_of(as_family(family), budget);
}

auto label_matching_product(const LabeledPoset & p, const LabeledPoset & q, std::uint64_t budget) -> LabeledPoset
{
    return product_of({&p, &q}, budget);
}

void require_bounded(const LabeledPoset & p, Label top_label, Label bottom_label)
{
    auto top = top_element(p);
    auto bottom = bottom_element(p);
    if (! top || ! bottom)
        throw Error(ErrorKind::NotBounded, "poset has no greatest or no least element");
    if (p.label(*top) != top_label)
        throw Error(ErrorKind::WrongExtremeLabel, "top '" + p.id(*top) + "' is labeled " + std::to_string(p.label(*top)) +
                ", expected " + std::to_string(top_label));
    if (p.label(*bottom) != bottom_label)
        throw Error(ErrorKind::WrongExtremeLabel, "bottom '" + p.id(*bottom) + "' is labeled " +
                std::to_string(p.label(*bottom)) + ", expected " + std::to_string(bottom_label));
}

auto glue_join(const LabeledPoset & p, const LabeledPoset & q, Label top_label, Label bottom_label) -> LabeledPoset
{
    require_bounded(p, top_label, bottom_label);
    require_bounded(q, top_label, bottom_label);
    const int k = std::max({p.k(), q.k(), top_label + 1, bottom_label + 1});

    const LabeledPoset * parts[] = {&p, &q};
    std::vector<std::string> ids{"bot", "top"};
    std::vector<Label> labels{bottom_label, top_label};
    // origin of interior elements; the first two entries stand for bot/top
    std::vector<std::pair<std::size_t, std::size_t>> origin{{2, 0}, {2, 1}};
    for (std::size_t i = 0; i < 2; ++i) {
        const auto & part = *parts[i];
        auto top = *top_element(part);
        auto bottom = *bottom_element(part);
        for (std::size_t x = 0; x < part.size(); ++x) {
            if (x == top || x == bottom)
                continue;
            ids.push_back(std::to_string(i) + "/" + part.id(x));
            labels.push_back(part.label(x));
            origin.emplace_back(i, x);
        }
    }
    return assemble(k, std::move(ids), std::move(labels), [&](std::size_t a, std::size_t b) {
        if (a == 0 || b == 1)
            return true;
        if (a == 1 || b == 0)
            return false;
        return origin[a].first == origin[b].first && parts[origin[a].first]->less(origin[a].second, origin[b].second);
    });
}

auto glue_join(std::span<const LabeledPoset> family, Label top_label, Label bottom_label) -> LabeledPoset
{
    if (family.empty())
        throw Error(ErrorKind::InvalidArgument, "glued join of an empty family");
    require_bounded(family[0], top_label, bottom_label);
    auto result = family[0];
    for (std::size_t i = 1; i < family.size(); ++i)
        result = glue_join(result, family[i], top_label, bottom_label);
    return result;
}

auto glue_injection(const LabeledPoset & part, std::size_t which, const LabeledPoset & glued) -> Homomorphism
{
    auto top = top_element(part);
    auto bottom = bottom_element(part);
    if (! top || ! bottom)
        throw Error(ErrorKind::NotBounded, "poset has no greatest or no least element");

    Homomorphism h;
    for (std::size_t x = 0; x < part.size(); ++x) {
        std::string target = x == *top ? "top" : x == *bottom ? "bot" : std::to_string(which) + "/" + part.id(x);
        auto v = glued.index_of(target);
        if (! v)
            throw Error(ErrorKind::UnknownElement, "'" + target + "' is not an element of the glued poset");
        h.images.push_back(*v);
    }
    return h;
}

auto is_join_irreducible(const LabeledPoset & p, const SolverOptions & options) -> bool
{
    return component_indices(compute_core(p, options).core).size() <= 1;
}

auto LawReport::all_passed() const -> bool
{
    return std::all_of(laws.begin(), laws.end(), [](const auto & law) { return law.passed; });
}

namespace {
    // Pairs each element (x, t/y) of p*(q+r) with t/(x, y) in (p*q)+(p*r)
    // and checks that the pairing is an isomorphism.
    auto meet_over_join_isomorphism(const LabeledPoset & p, const LabeledPoset & q, const LabeledPoset & r,
        const LabeledPoset & lhs, const LabeledPoset & rhs) -> std::optional<Homomorphism>
    {
        if (lhs.size() != rhs.size())
            return std::nullopt;
        Homomorphism h;
        h.images.assign(lhs.size(), 0);
        std::vector<bool> hit(rhs.size(), false);
        std::size_t mapped = 0;
        const LabeledPoset * parts[] = {&q, &r};
        for (std::size_t t = 0; t < 2; ++t)
            for (std::size_t x = 0; x < p.size(); ++x)
                for (std::size_t y = 0; y < parts[t]->size(); ++y) {
                    if (p.label(x) != parts[t]->label(y))
                        continue;
                    auto from = lhs.index_of("(" + p.id(x) + "," + std::to_string(t) + "/" + parts[t]->id(y) + ")");
                    auto to = rhs.index_of(std::to_string(t) + "/(" + p.id(x) + "," + parts[t]->id(y) + ")");
                    if (! from || ! to || hit[*to])
                        return std::nullopt;
                    h.images[*from] = *to;
                    hit[*to] = true;
                    ++mapped;
                }
        if (mapped != lhs.size())
            return std::nullopt;

        Homomorphism inverse;
        inverse.images.assign(rhs.size(), 0);
        for (std::size_t x = 0; x < lhs.size(); ++x)
            inverse.images[h.images[x]] = x;
        if (! verify_homomorphism(lhs, rhs, h) || ! verify_homomorphism(rhs, lhs, inverse))
            return std::nullopt;
        return h;
    }

    auto push_witness(LawResult & law, std::optional<Homomorphism> h) -> bool
    {
        if (! h)
            return false;
        law.witnesses.push_back(std::move(*h));
        return true;
    }
}

auto check_lattice_laws(const LabeledPoset & p0, const LabeledPoset & q0, const LabeledPoset & r0, std::uint64_t budget)
    -> LawReport
{
    // mixed k is lifted to the largest one
    const int k = std::max({p0.k(), q0.k(), r0.k()});
    std::optional<LabeledPoset> lifted[3];
    auto lift = [&](const LabeledPoset & x, std::size_t i) -> const LabeledPoset & {
        if (x.k() == k)
            return x;
        lifted[i] = x.lifted(k);
        return *lifted[i];
    };
    const auto & p = lift(p0, 0);
    const auto & q = lift(q0, 1);
    const auto & r = lift(r0, 2);

    const auto meet_pq = label_matching_product(p, q, budget);
    const auto join_pq = disjoint_union(p, q);

    LawReport report;

    {
        LawResult law{"meet-lower-bound", false, {}};
        law.passed = push_witness(law, find_homomorphism(meet_pq, p)) && push_witness(law, find_homomorphism(meet_pq, q));
        report.laws.push_back(std::move(law));
    }
    {
        LawResult law{"join-upper-bound", false, {}};
        law.passed = push_witness(law, find_homomorphism(p, join_pq)) && push_witness(law, find_homomorphism(q, join_pq));
        report.laws.push_back(std::move(law));
    }
    {
        LawResult law{"meet-greatest-lower-bound", true, {}};
        auto rp = find_homomorphism(r, p);
        auto rq = rp ? find_homomorphism(r, q) : std::nullopt;
        if (rp && rq)
            law.passed = push_witness(law, find_homomorphism(r, meet_pq));
        report.laws.push_back(std::move(law));
    }
    {
        LawResult law{"join-least-upper-bound", true, {}};
        auto pr = find_homomorphism(p, r);
        auto qr = pr ? find_homomorphism(q, r) : std::nullopt;
        if (pr && qr)
            law.passed = push_witness(law, find_homomorphism(join_pq, r));
        report.laws.push_back(std::move(law));
    }

    const auto meet_pr = label_matching_product(p, r, budget);
    const auto mj_lhs = label_matching_product(p, disjoint_union(q, r), budget);
    const auto mj_rhs = disjoint_union(meet_pq, meet_pr);
    {
        LawResult law{"meet-over-join", false, {}};
        law.passed = push_witness(law, find_homomorphism(mj_lhs, mj_rhs)) && push_witness(law, find_homomorphism(mj_rhs, mj_lhs));
        report.laws.push_back(std::move(law));
    }
    {
        LawResult law{"meet-over-join-isomorphism", false, {}};
        law.passed = push_witness(law, meet_over_join_isomorphism(p, q, r, mj_lhs, mj_rhs));
        report.laws.push_back(std::move(law));
    }
    {
        const auto jm_lhs = disjoint_union(p, label_matching_product(q, r, budget));
        const auto jm_rhs = label_matching_product(join_pq, disjoint_union(p, r), budget);
        LawResult law{"join-over-meet", false, {}};
        law.passed = push_witness(law, find_homomorphism(jm_lhs, jm_rhs)) && push_witness(law, find_homomorphism(jm_rhs, jm_lhs));
        report.laws.push_back(std::move(law));
    }
    return report;
}

auto check_glue_distributivity(const LabeledPoset & p1, const LabeledPoset & p2, const LabeledPoset & p3,
    Label top_label, Label bottom_label, std::uint64_t budget) -> bool
{
    require_bounded(p1, top_label, bottom_label);
    require_bounded(p2, top_label, bottom_label);
    require_bounded(p3, top_label, bottom_label);

    const auto lhs = label_matching_product(p1, glue_join(p2, p3, top_label, bottom_label), budget);
    const auto m12 = label_matching_product(p1, p2, budget);
    const auto m13 = label_matching_product(p1, p3, budget);
    try {
        require_bounded(m12, top_label, bottom_label);
        require_bounded(m13, top_label, bottom_label);
    }
    catch (const Error & e) {
        throw std::logic_error(std::string("product of bounded posets lost its bounds: ") + e.what());
    }
    const auto rhs = glue_join(m12, m13, top_label, bottom_label);
    return equivalent(lhs, rhs);
}

} // namespace kposet
