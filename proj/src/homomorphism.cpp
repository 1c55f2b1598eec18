#include "kposet/homomorphism.hpp"
#include "kposet/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_map>

namespace kposet {

namespace {
    using Word = std::uint64_t;

    // Target-side tables shared by every component search against one target.
    struct TargetTables {
        std::size_t size = 0;
        std::size_t words = 0;
        std::vector<Word> up_refl;
        std::vector<Word> down_refl;
        std::vector<std::vector<Word>> label_masks;
        std::vector<std::size_t> value_order;

        TargetTables(const LabeledPoset & dst, const SolverOptions & options) :
            size(dst.size()), words((dst.size() + 63) / 64)
        {
            up_refl.assign(size * words, 0);
            down_refl.assign(size * words, 0);
            for (std::size_t v = 0; v < size; ++v) {
                auto * up = &up_refl[v * words];
                auto * down = &down_refl[v * words];
                for (std::size_t w = 0; w < words; ++w) {
                    up[w] = dst.up(v).words()[w];
                    down[w] = dst.down(v).words()[w];
                }
                up[v / 64] |= Word{1} << (v % 64);
                down[v / 64] |= Word{1} << (v % 64);
                auto l = static_cast<std::size_t>(dst.label(v));
                if (label_masks.size() <= l)
                    label_masks.resize(l + 1, std::vector<Word>(words, 0));
                label_masks[l][v / 64] |= Word{1} << (v % 64);
            }
            value_order.resize(size);
            std::iota(value_order.begin(), value_order.end(), 0);
            if (options.shuffle_seed) {
                std::mt19937_64 rng(*options.shuffle_seed);
                std::shuffle(value_order.begin(), value_order.end(), rng);
            }
        }

        auto up(std::size_t v) const -> const Word * { return &up_refl[v * words]; }
        auto down(std::size_t v) const -> const Word * { return &down_refl[v * words]; }
    };

    auto test_bit(const Word * set, std::size_t i) -> bool { return (set[i / 64] >> (i % 64)) & 1U; }

    // Linear extension of the given elements, smallest index first among the
    // currently available minimal elements.
    auto linear_extension(const LabeledPoset & p, const std::vector<std::size_t> & elements) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> pending(p.size(), 0);
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
        for (auto x : elements) {
            pending[x] = p.lower_covers(x).size();
            if (pending[x] == 0)
                ready.push(x);
        }
        std::vector<std::size_t> order;
        order.reserve(elements.size());
        while (! ready.empty()) {
            auto x = ready.top();
            ready.pop();
            order.push_back(x);
            for (auto y : p.upper_covers(x))
                if (--pending[y] == 0)
                    ready.push(y);
        }
        return order;
    }

    class ComponentSearch {
    public:
        ComponentSearch(const LabeledPoset & src, const std::vector<std::size_t> & component, const TargetTables & target,
            const std::vector<Word> & allowed, const SolverOptions & options) :
            target_(target),
            words_(target.words),
            full_ac_(options.full_arc_consistency)
        {
            vars_ = linear_extension(src, component);
            const auto n = vars_.size();
            position_.assign(src.size(), 0);
            for (std::size_t i = 0; i < n; ++i)
                position_[vars_[i]] = i;

            // later_[later_start_[i]..] lists the later positions above i,
            // then those below it, split at later_split_[i]
            later_start_.resize(n + 1);
            later_split_.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                later_start_[i] = later_.size();
                for (std::size_t j = i + 1; j < n; ++j)
                    if (src.less(vars_[i], vars_[j]))
                        later_.push_back(j);
                later_split_[i] = later_.size();
                for (std::size_t j = i + 1; j < n; ++j)
                    if (src.less(vars_[j], vars_[i]))
                        later_.push_back(j);
            }
            later_start_[n] = later_.size();
            cover_pairs_.reserve(src.covers().size());
            for (auto x : vars_)
                for (auto y : src.upper_covers(x))
                    cover_pairs_.emplace_back(position_[x], position_[y]);

            // neighbours_[neighbour_start_[i]..] are the positions covering i,
            // then those covered by it, split at neighbour_split_[i]
            neighbour_start_.resize(n + 1);
            neighbour_split_.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                neighbour_start_[i] = neighbours_.size();
                for (auto y : src.upper_covers(vars_[i]))
                    neighbours_.push_back(position_[y]);
                neighbour_split_[i] = neighbours_.size();
                for (auto y : src.lower_covers(vars_[i]))
                    neighbours_.push_back(position_[y]);
            }
            neighbour_start_[n] = neighbours_.size();
            queued_.assign(n, 0);

            domains_.assign((n + 1) * n * words_, 0);
            auto * root = level(0);
            for (std::size_t i = 0; i < n; ++i) {
                auto l = static_cast<std::size_t>(src.label(vars_[i]));
                auto * d = root + i * words_;
                if (l < target.label_masks.size())
                    for (std::size_t w = 0; w < words_; ++w)
                        d[w] = target.label_masks[l][w] & allowed[w];
            }
            assignment_.assign(n, 0);
        }

        // Images indexed by position in `component` order (ascending index).
        auto solve() -> std::optional<std::vector<std::size_t>>
        {
            const auto n = vars_.size();
            for (std::size_t i = 0; i < n; ++i)
                if (is_empty(level(0) + i * words_))
                    return std::nullopt;
            if (! propagate(level(0), 0, cover_pairs_))
                return std::nullopt;
            if (! search(0))
                return std::nullopt;

            std::vector<std::pair<std::size_t, std::size_t>> by_element;
            for (std::size_t i = 0; i < n; ++i)
                by_element.emplace_back(vars_[i], assignment_[i]);
            std::sort(by_element.begin(), by_element.end());
            std::vector<std::size_t> images;
            for (auto & [_, v] : by_element)
                images.push_back(v);
            return images;
        }

    private:
        auto level(std::size_t depth) -> Word * { return &domains_[depth * vars_.size() * words_]; }

        auto is_empty(const Word * d) const -> bool
        {
            for (std::size_t w = 0; w < words_; ++w)
                if (d[w])
                    return false;
            return true;
        }

        // Removes values of `lower` with no support in `upper` and vice versa.
        auto revise(Word * lower, Word * upper, bool & changed) -> bool
        {
            for (std::size_t w = 0; w < words_; ++w) {
                auto bits = lower[w];
                while (bits) {
                    auto b = static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    auto v = w * 64 + b;
                    if (! intersects(target_.up(v), upper)) {
                        lower[w] &= ~(Word{1} << b);
                        changed = true;
                    }
                }
            }
            for (std::size_t w = 0; w < words_; ++w) {
                auto bits = upper[w];
                while (bits) {
                    auto b = static_cast<std::size_t>(std::countr_zero(bits));
                    bits &= bits - 1;
                    auto v = w * 64 + b;
                    if (! intersects(target_.down(v), lower)) {
                        upper[w] &= ~(Word{1} << b);
                        changed = true;
                    }
                }
            }
            return ! is_empty(lower) && ! is_empty(upper);
        }

        auto intersects(const Word * a, const Word * b) const -> bool
        {
            for (std::size_t w = 0; w < words_; ++w)
                if (a[w] & b[w])
                    return true;
            return false;
        }

        // Arc consistency to a fixpoint over the given (lower, upper) position
        // pairs, ignoring pairs that touch positions before `from`.
        auto propagate(Word * domains, std::size_t from, const std::vector<std::pair<std::size_t, std::size_t>> & pairs) -> bool
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto [a, b] : pairs) {
                    if (a < from || b < from)
                        continue;
                    if (! revise(domains + a * words_, domains + b * words_, changed))
                        return false;
                }
            }
            return true;
        }

        auto search(std::size_t depth) -> bool
        {
            const auto n = vars_.size();
            if (depth == n)
                return true;

            auto * current = level(depth);
            auto * next = level(depth + 1);
            const auto * domain = current + depth * words_;

            for (auto v : target_.value_order) {
                if (! test_bit(domain, v))
                    continue;
                std::copy(current, current + n * words_, next);
                auto * own = next + depth * words_;
                std::fill(own, own + words_, 0);
                own[v / 64] |= Word{1} << (v % 64);

                bool ok = true;
                worklist_.clear();
                for (auto c = later_start_[depth]; ok && c < later_start_[depth + 1]; ++c) {
                    auto * d = next + later_[c] * words_;
                    const auto * bound = c < later_split_[depth] ? target_.up(v) : target_.down(v);
                    Word removed = 0;
                    for (std::size_t w = 0; w < words_; ++w) {
                        removed |= d[w] & ~bound[w];
                        d[w] &= bound[w];
                    }
                    ok = ! is_empty(d);
                    if (removed)
                        enqueue(later_[c]);
                }
                if (ok)
                    ok = full_ac_ ? propagate(next, depth + 1, all_pairs()) : settle(next, depth + 1);
                for (auto i : worklist_)
                    queued_[i] = 0;
                if (! ok)
                    continue;

                assignment_[depth] = v;
                if (search(depth + 1))
                    return true;
            }
            return false;
        }

        void enqueue(std::size_t i)
        {
            if (! queued_[i]) {
                queued_[i] = 1;
                worklist_.push_back(i);
            }
        }

        // Arc consistency over cover pairs among positions >= from, revisiting
        // only the neighbours of domains that shrank.
        auto settle(Word * domains, std::size_t from) -> bool
        {
            for (std::size_t head = 0; head < worklist_.size(); ++head) {
                auto i = worklist_[head];
                queued_[i] = 0;
                const auto * support = domains + i * words_;
                for (auto c = neighbour_start_[i]; c < neighbour_start_[i + 1]; ++c) {
                    auto j = neighbours_[c];
                    if (j < from)
                        continue;
                    // j above i needs a value over some value of i, and vice versa
                    bool above = c < neighbour_split_[i];
                    auto * d = domains + j * words_;
                    bool changed = false;
                    for (std::size_t w = 0; w < words_; ++w) {
                        auto bits = d[w];
                        while (bits) {
                            auto b = static_cast<std::size_t>(std::countr_zero(bits));
                            bits &= bits - 1;
                            auto value = w * 64 + b;
                            if (! intersects(above ? target_.down(value) : target_.up(value), support)) {
                                d[w] &= ~(Word{1} << b);
                                changed = true;
                            }
                        }
                    }
                    if (changed) {
                        if (is_empty(d))
                            return false;
                        if (! queued_[j]) {
                            queued_[j] = 1;
                            worklist_.push_back(j);
                        }
                    }
                }
            }
            return true;
        }

        auto all_pairs() -> const std::vector<std::pair<std::size_t, std::size_t>> &
        {
            if (comparable_pairs_.empty())
                for (std::size_t i = 0; i < vars_.size(); ++i)
                    for (auto c = later_start_[i]; c < later_split_[i]; ++c)
                        comparable_pairs_.emplace_back(i, later_[c]);
            return comparable_pairs_;
        }

        const TargetTables & target_;
        std::size_t words_;
        bool full_ac_;
        std::vector<std::size_t> vars_;
        std::vector<std::size_t> position_;
        std::vector<std::size_t> later_;
        std::vector<std::size_t> later_start_;
        std::vector<std::size_t> later_split_;
        std::vector<std::pair<std::size_t, std::size_t>> cover_pairs_;
        std::vector<std::pair<std::size_t, std::size_t>> comparable_pairs_;
        std::vector<std::size_t> neighbours_;
        std::vector<std::size_t> neighbour_start_;
        std::vector<std::size_t> neighbour_split_;
        std::vector<std::size_t> worklist_;
        std::vector<char> queued_;
        std::vector<Word> domains_;
        std::vector<std::size_t> assignment_;
    };

    // Structure of a component relative to its own id order; equal keys mean
    // the components are identical up to the order-preserving renaming of ids.
    auto component_key(const LabeledPoset & p, const std::vector<std::size_t> & component) -> std::string
    {
        std::string key;
        key.reserve(component.size() * (component.size() + 2));
        for (auto x : component) {
            key += std::to_string(p.label(x));
            key += ':';
            for (auto y : component)
                key += p.less(x, y) ? '1' : '0';
            key += ';';
        }
        return key;
    }

    auto solve_with_mask(const LabeledPoset & src, const TargetTables & target, const std::vector<Word> & allowed,
        const SolverOptions & options) -> std::optional<Homomorphism>
    {
        Homomorphism h;
        h.images.assign(src.size(), 0);
        if (src.empty())
            return h;
        if (target.size == 0)
            return std::nullopt;

        const auto components = component_indices(src);
        std::unordered_map<std::string, std::optional<std::vector<std::size_t>>> memo;
        for (const auto & component : components) {
            std::optional<std::vector<std::size_t>> images;
            if (options.memoize_components && components.size() > 1) {
                auto key = component_key(src, component);
                auto it = memo.find(key);
                if (it == memo.end()) {
                    images = ComponentSearch(src, component, target, allowed, options).solve();
                    memo.emplace(std::move(key), images);
                }
                else
                    images = it->second;
            }
            else
                images = ComponentSearch(src, component, target, allowed, options).solve();

            if (! images)
                return std::nullopt;
            for (std::size_t i = 0; i < component.size(); ++i)
                h.images[component[i]] = (*images)[i];
        }
        return h;
    }

    auto full_mask(std::size_t size) -> std::vector<Word>
    {
        std::vector<Word> mask((size + 63) / 64, ~Word{0});
        if (size % 64 != 0)
            mask.back() = (Word{1} << (size % 64)) - 1;
        return mask;
    }
}

auto find_homomorphism(const LabeledPoset & src, const LabeledPoset & dst, const SolverOptions & options)
    -> std::optional<Homomorphism>
{
    if (src.empty())
        return Homomorphism{};
    if (dst.empty())
        return std::nullopt;
    TargetTables target(dst, options);
    return solve_with_mask(src, target, full_mask(dst.size()), options);
}

auto verify_homomorphism(const LabeledPoset & src, const LabeledPoset & dst, const Homomorphism & h) -> bool
{
    if (h.images.size() != src.size())
        throw Error(ErrorKind::UnknownElement, "map is not total on the source");
    for (auto v : h.images)
        if (v >= dst.size())
            throw Error(ErrorKind::UnknownElement, "image index " + std::to_string(v) + " is not an element of the target");

    for (std::size_t x = 0; x < src.size(); ++x) {
        if (src.label(x) != dst.label(h.images[x]))
            return false;
        bool ok = true;
        src.up(x).for_each([&](std::size_t y) {
            if (ok && ! dst.leq(h.images[x], h.images[y]))
                ok = false;
        });
        if (! ok)
            return false;
    }
    return true;
}

auto verify_homomorphism(const LabeledPoset & src, const LabeledPoset & dst,
    const std::map<std::string, std::string> & h) -> bool
{
    return verify_homomorphism(src, dst, from_id_map(src, dst, h));
}

auto brute_force_homomorphism(const LabeledPoset & src, const LabeledPoset & dst, std::uint64_t budget)
    -> std::optional<Homomorphism>
{
    const auto n = src.size();
    const auto m = dst.size();
    if (n == 0)
        return Homomorphism{};
    if (m == 0)
        return std::nullopt;

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget / m)
            throw Error(ErrorKind::BudgetExceeded, std::to_string(m) + "^" + std::to_string(n) +
                    " candidate maps exceed the enumeration budget of " + std::to_string(budget));
        total *= m;
    }

    Homomorphism h;
    h.images.assign(n, 0);
    while (true) {
        if (verify_homomorphism(src, dst, h))
            return h;
        // odometer with the first source element most significant
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++h.images[i] < m)
                break;
            h.images[i] = 0;
            if (i == 0)
                return std::nullopt;
        }
    }
}

auto find_nonsurjective_endomorphism(const LabeledPoset & p, const SolverOptions & options)
    -> std::optional<Homomorphism>
{
    if (p.empty())
        return std::nullopt;
    TargetTables target(p, options);
    auto allowed = full_mask(p.size());
    // excluding the largest ids first keeps the collapsed image on the
    // earliest elements
    for (std::size_t excluded = p.size(); excluded-- > 0;) {
        allowed[excluded / 64] &= ~(Word{1} << (excluded % 64));
        auto h = solve_with_mask(p, target, allowed, options);
        allowed[excluded / 64] |= Word{1} << (excluded % 64);
        if (h)
            return h;
    }
    return std::nullopt;
}

auto is_core(const LabeledPoset & p, const SolverOptions & options) -> bool
{
    return ! find_nonsurjective_endomorphism(p, options);
}

auto compose(const Homomorphism & h1, const Homomorphism & h2) -> Homomorphism
{
    Homomorphism result;
    result.images.reserve(h1.images.size());
    for (auto v : h1.images)
        result.images.push_back(h2.images[v]);
    return result;
}

auto compute_core(const LabeledPoset & p, const SolverOptions & options) -> CoreResult
{
    CoreResult result;
    result.stages.push_back(p);
    while (true) {
        const auto & current = result.stages.back();
        auto h = find_nonsurjective_endomorphism(current, options);
        if (! h)
            break;

        DynamicBitset image(current.size());
        for (auto v : h->images)
            image.set(v);
        std::vector<std::size_t> renumber(current.size(), 0);
        std::size_t next_index = 0;
        image.for_each([&](std::size_t v) { renumber[v] = next_index++; });

        Homomorphism retraction;
        for (auto v : h->images)
            retraction.images.push_back(renumber[v]);
        auto next = induced_subposet(current, image);
        result.retractions.push_back(std::move(retraction));
        result.stages.push_back(std::move(next));
    }
    result.core = result.stages.back();
    return result;
}

auto to_string(Verdict v) -> std::string
{
    switch (v) {
        case Verdict::StrictlyLess: return "strictly-less";
        case Verdict::StrictlyGreater: return "strictly-greater";
        case Verdict::Equivalent: return "equivalent";
        case Verdict::Incomparable: return "incomparable";
    }
    return "incomparable";
}

auto compare(const LabeledPoset & p, const LabeledPoset & q, const SolverOptions & options) -> CompareVerdict
{
    CompareVerdict result;
    result.forward = find_homomorphism(p, q, options);
    result.backward = find_homomorphism(q, p, options);
    if (result.forward && result.backward)
        result.verdict = Verdict::Equivalent;
    else if (result.forward)
        result.verdict = Verdict::StrictlyLess;
    else if (result.backward)
        result.verdict = Verdict::StrictlyGreater;
    else
        result.verdict = Verdict::Incomparable;
    return result;
}

auto homomorphic(const LabeledPoset & p, const LabeledPoset & q) -> bool
{
    return find_homomorphism(p, q).has_value();
}

auto equivalent(const LabeledPoset & p, const LabeledPoset & q) -> bool
{
    return homomorphic(p, q) && homomorphic(q, p);
}

} // namespace kposet
