#pragma once

#include <cstdint>
#include <map>

#include "schur/family.hpp"

namespace schur {

// Pairwise overlap structure of a triple family. pairs_by_union_size counts
// every unordered pair of distinct triples, keyed by |values(t) ∪ values(t')|,
// so it also covers disjoint pairs; share counts are the slices with exactly
// one and exactly two common values. Two distinct Schur triples can never
// share all three values.
struct OverlapProfile {
    std::uint64_t pairs_share1 = 0;
    std::uint64_t pairs_share2 = 0;
    std::map<int, std::uint64_t> pairs_by_union_size;
    bool share1_within_cubic = true;      // pairs_share1 <= 3 n^3
    bool share2_within_quadratic = true;  // pairs_share2 <= 2 n^2
};

// Direct pairwise scan, quadratic in the family size.
OverlapProfile overlap_profile(const TripleFamily& fam);

// Same counts via value-indexed buckets (hash join); linear-ish in the family
// size. Kept as an independent route and used where the quadratic scan is too
// slow.
OverlapProfile overlap_profile_bucketed(const TripleFamily& fam);

// E[X] = sum over triples of p^{#distinct values}: exponent 3 for a < b
// triples and 2 for (a, a, 2a).
long double expected_capture(const TripleFamily& fam, double p);

struct MomentReport {
    int n = 0;
    double p = 0.0;
    Rational epsilon;
    std::uint64_t family_size = 0;
    long double expected = 0;            // E[X]
    std::uint64_t pairs_share1 = 0;
    std::uint64_t pairs_share2 = 0;
    long double cross_term = 0;          // sum over ordered pairs t != t' of E[X_t X_t']
    long double cheb_bound = 0;          // 1/E[X] + cross_term / E[X]^2
    long double expected_lower_ref = 0;  // eps^2 p^3 n^2 / 4, for comparison
};

// Assembles the Chebyshev bound on Pr[X = 0]. The cross term is exact:
// 2 * p^{|values(t) ∪ values(t')|} summed over unordered pairs. Throws
// DegenerateFamily when E[X] = 0.
MomentReport chebyshev_zero_bound(const TripleFamily& fam, double p);
MomentReport chebyshev_zero_bound(const TripleFamily& fam, double p,
                                  const OverlapProfile& profile);

}  // namespace schur
