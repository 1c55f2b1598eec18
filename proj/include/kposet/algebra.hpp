#pragma once

#include "kposet/homomorphism.hpp"
#include "kposet/poset.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kposet {

inline constexpr std::uint64_t default_product_budget = 1'000'000;

/// Join of the homomorphism order. Element (i, x) gets id "i/<x>"; the result
/// is a max(k)-poset.
auto disjoint_union(std::span<const LabeledPoset> family) -> LabeledPoset;
auto disjoint_union(const LabeledPoset & p, const LabeledPoset & q) -> LabeledPoset;

/// Meet of the homomorphism order: tuples whose components all carry the same
/// label, ordered componentwise, with ids "(x1,x2,...)". Only the matching
/// tuples are generated. Throws Error{SizeBudgetExceeded} when their number
/// exceeds `budget`.
auto label_matching_product(std::span<const LabeledPoset> family, std::uint64_t budget = default_product_budget)
    -> LabeledPoset;
auto label_matching_product(const LabeledPoset & p, const LabeledPoset & q,
    std::uint64_t budget = default_product_budget) -> LabeledPoset;

/// Throws Error{NotBounded} or Error{WrongExtremeLabel} unless p has a top
/// labeled `top_label` and a bottom labeled `bottom_label`.
void require_bounded(const LabeledPoset & p, Label top_label, Label bottom_label);

/// Interiors of p and q placed side by side ("0/<x>", "1/<y>") between a new
/// bottom "bot" labeled `bottom_label` and a new top "top" labeled
/// `top_label`. This is the supremum among bounded posets with those extreme
/// labels.
auto glue_join(const LabeledPoset & p, const LabeledPoset & q, Label top_label, Label bottom_label) -> LabeledPoset;

/// Left fold of glue_join over a nonempty family.
auto glue_join(std::span<const LabeledPoset> family, Label top_label, Label bottom_label) -> LabeledPoset;

/// The embedding of the i-th argument (0 or 1) of glue_join(p, q, ...) into
/// the result: extremes to extremes, interior elements to their copies.
auto glue_injection(const LabeledPoset & part, std::size_t which, const LabeledPoset & glued) -> Homomorphism;

/// True iff the core of p has at most one connected component.
auto is_join_irreducible(const LabeledPoset & p, const SolverOptions & options = {}) -> bool;

struct LawResult {
    std::string name;
    bool passed = false;
    /// Homomorphisms establishing the law, in the order the law names them.
    std::vector<Homomorphism> witnesses;
};

struct LawReport {
    std::vector<LawResult> laws;

    auto all_passed() const -> bool;
};

/// Checks the universal properties of meet and join for (p, q) against r,
/// and both distributive laws up to homomorphic equivalence:
///   p*(q+r) = (p*q)+(p*r)  and  p+(q*r) = (p+q)*(p+r).
/// The first law is also checked as a literal isomorphism via the map
/// (x, t/y) -> t/(x, y).
auto check_lattice_laws(const LabeledPoset & p, const LabeledPoset & q, const LabeledPoset & r,
    std::uint64_t budget = default_product_budget) -> LawReport;

/// p1 * glue(p2, p3) equivalent to glue(p1 * p2, p1 * p3), for bounded
/// inputs with the given extreme labels.
auto check_glue_distributivity(const LabeledPoset & p1, const LabeledPoset & p2, const LabeledPoset & p3,
    Label top_label, Label bottom_label, std::uint64_t budget = default_product_budget) -> bool;

} // namespace kposet
