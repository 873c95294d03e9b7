#pragma once

#include <cstdint>
#include <optional>

#include "schur/core.hpp"

namespace schur {

struct SearchStats {
    std::uint64_t nodes_expanded = 0;  // decision assignments tried
    std::uint64_t propagations = 0;    // forced assignments
    std::uint64_t max_depth = 0;       // deepest decision stack
    bool operator==(const SearchStats&) const = default;
};

enum class RamseyVerdict { Ramsey, NotRamsey, BudgetExceeded };

struct DecideResult {
    RamseyVerdict verdict = RamseyVerdict::Ramsey;
    std::optional<TwoColoring> witness;  // Schur-free coloring when NotRamsey
    SearchStats stats;
};

// Backtracking search for a Schur-free 2-coloring. Branching is by ascending
// element value, red tried before blue; the first branched element is fixed
// to red (colorings are closed under color swap). Unit propagation: a triple
// with two distinct same-colored elements forces the third to the opposite
// color, and (a, a, 2a) under the Schur policy forces color(2a) != color(a).
//
// The node budget is strict: the search aborts with BudgetExceeded as soon as
// nodes_expanded reaches it, so completed runs always used fewer nodes than
// the budget. Verdicts from completed runs are exact.
DecideResult decide_with_budget(const IntegerSet& s, TriplePolicy policy,
                                std::uint64_t node_budget);

struct ColoringSearchResult {
    std::optional<TwoColoring> coloring;
    SearchStats stats;
};

ColoringSearchResult find_schur_free_coloring(const IntegerSet& s, TriplePolicy policy);

bool is_two_schur_ramsey(const IntegerSet& s, TriplePolicy policy);

// Least n <= n_max whose full prefix [n] is 2-Schur-Ramsey, if any.
std::optional<int> smallest_ramsey_prefix(TriplePolicy policy, int n_max);

}  // namespace schur
