#include "kposet/chains.hpp"
#include "kposet/error.hpp"

#include <algorithm>

namespace kposet {

namespace {
    // a sequence of indices starting at x and following `next`
    auto walk(const std::vector<std::size_t> & next, std::size_t x) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> seq{x};
        while (next[seq.back()] != seq.back())
            seq.push_back(next[seq.back()]);
        return seq;
    }
}

auto alternation_number(const LabeledPoset & p) -> AlternationResult
{
    const auto n = p.size();
    AlternationResult result;
    if (n == 0)
        return result;

    // Process elements so that everything above x is done before x: sorting
    // by up-set size works because x < y implies |up(y)| < |up(x)|.
    std::vector<std::size_t> order(n);
    for (std::size_t x = 0; x < n; ++x)
        order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return p.up(a).count() < p.up(b).count(); });

    // length[x]: longest alternating chain starting at x going up;
    // next[x]: successor on the lexicographically smallest such chain
    // (next[x] == x marks the end).
    std::vector<std::size_t> length(n, 1);
    std::vector<std::size_t> next(n);
    for (auto x : order) {
        next[x] = x;
        p.up(x).for_each([&](std::size_t y) {
            if (p.label(y) == p.label(x))
                return;
            if (length[y] + 1 > length[x]) {
                length[x] = length[y] + 1;
                next[x] = y;
            }
            else if (length[y] + 1 == length[x] && next[x] != x && walk(next, y) < walk(next, next[x]))
                next[x] = y;
        });
    }

    std::size_t best = 0;
    for (std::size_t x = 1; x < n; ++x)
        if (length[x] > length[best])
            best = x;
    // ties: smallest starting index wins, and index order is id order

    result.count = length[best];
    for (auto x : walk(next, best))
        result.witness.push_back(p.id(x));
    return result;
}

auto alternating_two_chain(std::size_t n, Label bottom_label) -> LabeledPoset
{
    PosetBuilder builder(2);
    for (std::size_t i = 0; i < n; ++i) {
        auto label = static_cast<Label>((static_cast<std::size_t>(bottom_label) + i) % 2);
        builder.add_element("c" + std::to_string(i), label);
        if (i > 0)
            builder.add_relation(i - 1, i);
    }
    return builder.build();
}

namespace {
    void require_two_lattice(const LabeledPoset & l)
    {
        if (l.empty())
            throw Error(ErrorKind::NotTwoLattice, "the empty poset is not accepted as a 2-lattice");
        for (auto label : l.labels())
            if (label > 1)
                throw Error(ErrorKind::NotTwoLattice, "label " + std::to_string(label) + " does not fit a 2-poset");
        if (! structure_report(l).is_lattice)
            throw Error(ErrorKind::NotTwoLattice, "underlying poset is not a lattice");
    }
}

auto two_lattice_decide(const LabeledPoset & l1, const LabeledPoset & l2) -> bool
{
    require_two_lattice(l1);
    require_two_lattice(l2);
    auto alt1 = alternation_number(l1).count;
    auto alt2 = alternation_number(l2).count;
    return alt1 < alt2 || (alt1 == alt2 && l1.label(*bottom_element(l1)) == l2.label(*bottom_element(l2)));
}

auto two_lattice_core(const LabeledPoset & l) -> LabeledPoset
{
    require_two_lattice(l);
    return alternating_two_chain(alternation_number(l).count, l.label(*bottom_element(l)));
}

} // namespace kposet
