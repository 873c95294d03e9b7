#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "schur/core.hpp"

namespace schur {

// The 10-tuple
//   L(x,y,d) = (x-d, x, x+d, x+2d, y-d, y, y+d, d, y-x-d, y-x)
// for y > x + d and x > d. Entries 1-4 form a 4AP with step d, entries 5-7 a
// 3AP with step d, and the last three entries form the Schur triple
// S(x,y,d) = (d, y-x-d, y-x). Coincident entries are allowed; `values` is the
// distinct-value set of the tuple.
struct GadgetSpec {
    int x = 0;
    int y = 0;
    int d = 0;
    int n = 0;
    std::array<int, 10> tuple{};
    std::vector<int> values;  // sorted, distinct
    SchurTriple schur_part;
};

// Throws ConstraintViolation when y <= x+d or x <= d, OutOfRange when any
// tuple entry leaves [1, n].
GadgetSpec build_gadget(int x, int y, int d, int n);

struct GadgetVerdict {
    bool is_ramsey = false;
    std::uint64_t colorings_checked = 0;
    std::optional<TwoColoring> counterexample;  // a Schur-free coloring, when one exists
};

// Sweeps all 2^k colorings of a distinct-value set (k = |values|); Ramsey iff
// every coloring leaves some triple within the value set monochromatic.
// Coincident tuple entries necessarily share a color under this reading.
GadgetVerdict exhaustive_ramsey_check(const std::vector<int>& values, TriplePolicy policy);

GadgetVerdict verify_gadget_ramsey(const GadgetSpec& g, TriplePolicy policy);

// The eight forcing-chain triples used by the case analysis behind the
// gadget: each satisfies a + b = c with all elements among the tuple values.
std::array<SchurTriple, 8> proof_chain_triples(const GadgetSpec& g);

// True when every tuple value of g is a member of u.
bool gadget_contained_in(const GadgetSpec& g, const IntegerSet& u);

}  // namespace schur
