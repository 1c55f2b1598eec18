#pragma once

#include "kposet/poset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kposet {

struct SolverOptions {
    /// Maintain arc consistency over every comparable pair of unassigned
    /// variables after each assignment. Without it only cover pairs are kept
    /// arc consistent, on top of forward checking.
    bool full_arc_consistency = false;

    /// Reuse decisions for structurally identical source components.
    bool memoize_components = true;

    /// When set, target values are tried in a seeded random order instead of
    /// lexicographic order. Existence verdicts are unaffected; witnesses and
    /// retraction sequences may differ.
    std::optional<std::uint64_t> shuffle_seed;
};

inline constexpr std::uint64_t default_enumeration_budget = 100'000'000;

/// Backtracking search over label-filtered domains. The source is split into
/// connected components which are solved independently; variables follow a
/// linear extension of each component (ties broken by id) and values are
/// tried in target id order, so the result is the first witness in that
/// order.
auto find_homomorphism(const LabeledPoset & src, const LabeledPoset & dst, const SolverOptions & options = {})
    -> std::optional<Homomorphism>;

auto verify_homomorphism(const LabeledPoset & src, const LabeledPoset & dst, const Homomorphism & h) -> bool;
auto verify_homomorphism(const LabeledPoset & src, const LabeledPoset & dst,
    const std::map<std::string, std::string> & h) -> bool;

/// Exhaustive enumeration of all |dst|^|src| maps in lexicographic order.
/// Throws Error{BudgetExceeded} when that count exceeds `budget`.
auto brute_force_homomorphism(const LabeledPoset & src, const LabeledPoset & dst,
    std::uint64_t budget = default_enumeration_budget) -> std::optional<Homomorphism>;

/// Tries, from the largest id down, to solve p -> p with one element left
/// out of the image; the first success is returned.
auto find_nonsurjective_endomorphism(const LabeledPoset & p, const SolverOptions & options = {})
    -> std::optional<Homomorphism>;

auto is_core(const LabeledPoset & p, const SolverOptions & options = {}) -> bool;

/// h2 after h1.
auto compose(const Homomorphism & h1, const Homomorphism & h2) -> Homomorphism;

struct CoreResult {
    LabeledPoset core;
    /// stages[0] is the input and stages.back() the core. retractions[i]
    /// maps stages[i] onto stages[i+1], which is the image of a nonsurjective
    /// endomorphism of stages[i]; images index into stages[i+1].
    std::vector<LabeledPoset> stages;
    std::vector<Homomorphism> retractions;
};

auto compute_core(const LabeledPoset & p, const SolverOptions & options = {}) -> CoreResult;

enum class Verdict { StrictlyLess, StrictlyGreater, Equivalent, Incomparable };

auto to_string(Verdict v) -> std::string;

struct CompareVerdict {
    Verdict verdict = Verdict::Incomparable;
    std::optional<Homomorphism> forward;
    std::optional<Homomorphism> backward;
};

auto compare(const LabeledPoset & p, const LabeledPoset & q, const SolverOptions & options = {}) -> CompareVerdict;

auto homomorphic(const LabeledPoset & p, const LabeledPoset & q) -> bool;
auto equivalent(const LabeledPoset & p, const LabeledPoset & q) -> bool;

} // namespace kposet
