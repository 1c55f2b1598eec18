#pragma once

#include "kposet/bitset.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kposet {

using Label = int;

/// A finite partially ordered set whose elements carry labels in [0, k).
///
/// Elements are indexed 0..size()-1 in lexicographic order of their ids, and
/// every public result (covers, components, witnesses) follows that order.
/// The strict order is cached as per-element up-set and down-set bitsets so
/// comparability queries are O(1). Values are immutable once built.
class LabeledPoset {
public:
    LabeledPoset() = default;

    /// Unchecked constructor: `ids` sorted and unique, `labels` in range and
    /// `strict_up` a transitive, irreflexive relation over the same indexing.
    static auto from_sorted_closure(int k, std::vector<std::string> ids, std::vector<Label> labels,
        std::vector<DynamicBitset> strict_up) -> LabeledPoset;

    auto k() const noexcept -> int { return k_; }
    auto size() const noexcept -> std::size_t { return ids_.size(); }
    auto empty() const noexcept -> bool { return ids_.empty(); }

    auto ids() const noexcept -> const std::vector<std::string> & { return ids_; }
    auto id(std::size_t i) const -> const std::string & { return ids_[i]; }
    auto labels() const noexcept -> std::span<const Label> { return labels_; }
    auto label(std::size_t i) const -> Label { return labels_[i]; }
    auto index_of(std::string_view id) const -> std::optional<std::size_t>;

    auto less(std::size_t x, std::size_t y) const -> bool { return up_[x].test(y); }
    auto leq(std::size_t x, std::size_t y) const -> bool { return x == y || up_[x].test(y); }
    auto comparable(std::size_t x, std::size_t y) const -> bool { return leq(x, y) || leq(y, x); }

    /// Strict up-set / down-set of x.
    auto up(std::size_t x) const -> const DynamicBitset & { return up_[x]; }
    auto down(std::size_t x) const -> const DynamicBitset & { return down_[x]; }

    /// Cover pairs (lower, upper), sorted.
    auto covers() const noexcept -> const std::vector<std::pair<std::size_t, std::size_t>> & { return covers_; }
    auto upper_covers(std::size_t x) const -> std::span<const std::size_t>
    {
        return {upper_covers_.data() + upper_start_[x], upper_start_[x + 1] - upper_start_[x]};
    }
    auto lower_covers(std::size_t x) const -> std::span<const std::size_t>
    {
        return {lower_covers_.data() + lower_start_[x], lower_start_[x + 1] - lower_start_[x]};
    }

    /// Same poset regarded as an l-poset for some l >= k().
    auto lifted(int l) const -> LabeledPoset;

private:
    int k_ = 1;
    std::vector<std::string> ids_;
    std::vector<Label> labels_;
    std::vector<DynamicBitset> up_;
    std::vector<DynamicBitset> down_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    // covers in compressed rows: row x is [start[x], start[x + 1])
    std::vector<std::size_t> upper_covers_;
    std::vector<std::size_t> upper_start_;
    std::vector<std::size_t> lower_covers_;
    std::vector<std::size_t> lower_start_;
};

/// Incremental construction of a poset from arbitrary order pairs. The
/// pairs may be redundant; build() validates and reduces them.
class PosetBuilder {
public:
    explicit PosetBuilder(int k);

    auto add_element(std::string id, Label label) -> std::size_t;
    void add_relation(std::size_t lower, std::size_t upper);
    auto element_count() const noexcept -> std::size_t { return ids_.size(); }

    /// Throws Error{LabelOutOfRange, DuplicateId, CycleDetected}.
    auto build() const -> LabeledPoset;

private:
    int k_;
    std::vector<std::string> ids_;
    std::vector<Label> labels_;
    std::vector<std::pair<std::size_t, std::size_t>> relations_;
};

/// A map from source element indices to target element indices.
struct Homomorphism {
    std::vector<std::size_t> images;

    friend auto operator==(const Homomorphism &, const Homomorphism &) -> bool = default;
};

auto to_id_map(const LabeledPoset & src, const LabeledPoset & dst, const Homomorphism & h)
    -> std::map<std::string, std::string>;

auto from_id_map(const LabeledPoset & src, const LabeledPoset & dst, const std::map<std::string, std::string> & m)
    -> Homomorphism;

struct Bounds {
    std::string top_id;
    Label top_label;
    std::string bottom_id;
    Label bottom_label;

    friend auto operator==(const Bounds &, const Bounds &) -> bool = default;
};

struct StructureReport {
    bool is_connected = false;
    bool is_chain = false;
    bool is_lattice = false;
    std::optional<Bounds> bounds;
    std::size_t component_count = 0;
};

auto build_poset(int k, std::span<const std::pair<std::string, Label>> labeled_elements,
    std::span<const std::pair<std::string, std::string>> covers) -> LabeledPoset;

auto induced_subposet(const LabeledPoset & p, const std::set<std::string> & subset) -> LabeledPoset;
auto induced_subposet(const LabeledPoset & p, const DynamicBitset & keep) -> LabeledPoset;

/// Element indices of each connected component, ordered by smallest index.
auto component_indices(const LabeledPoset & p) -> std::vector<std::vector<std::size_t>>;
auto connected_components(const LabeledPoset & p) -> std::vector<LabeledPoset>;

auto structure_report(const LabeledPoset & p) -> StructureReport;

/// Index of the greatest / least element, if one exists.
auto top_element(const LabeledPoset & p) -> std::optional<std::size_t>;
auto bottom_element(const LabeledPoset & p) -> std::optional<std::size_t>;

auto is_isomorphic(const LabeledPoset & p, const LabeledPoset & q) -> std::optional<Homomorphism>;

} // namespace kposet
