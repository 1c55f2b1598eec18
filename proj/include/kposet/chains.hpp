#pragma once

#include "kposet/poset.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace kposet {

struct AlternationResult {
    std::size_t count = 0;
    /// Element ids from bottom to top; the lexicographically smallest id
    /// sequence among the longest alternating chains.
    std::vector<std::string> witness;
};

/// Longest chain (over comparabilities, not just covers) whose consecutive
/// elements carry different labels. Longest-path dynamic programming over
/// the label-differing part of the order.
auto alternation_number(const LabeledPoset & p) -> AlternationResult;

/// The alternating chain of n elements whose least element has the given
/// label, over labels {0, 1}; ids are "c0" (bottom) to "c<n-1>".
auto alternating_two_chain(std::size_t n, Label bottom_label) -> LabeledPoset;

/// For nonempty 2-lattices: l1 maps to l2 iff Alt(l1) < Alt(l2), or the
/// alternation numbers agree and the least elements share a label.
/// Throws Error{NotTwoLattice} otherwise.
auto two_lattice_decide(const LabeledPoset & l1, const LabeledPoset & l2) -> bool;

/// The alternating 2-chain equivalent to the given nonempty 2-lattice.
auto two_lattice_core(const LabeledPoset & l) -> LabeledPoset;

} // namespace kposet
