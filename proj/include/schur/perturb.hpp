#pragma once

#include <cstdint>

#include "schur/core.hpp"

namespace schur {

// Parameters of one [n]_p draw. (master_seed, index) fully determines the
// sample; inclusion bits are generated counter-style per element, so samples
// are order-independent and reproducible under parallel generation.
struct SampleSpec {
    int n = 0;
    double p = 0.0;
    std::uint64_t master_seed = 0;
    std::uint64_t index = 0;
};

// Each element of [n] included independently with probability p. Inclusion
// thresholds are resolved at 53-bit granularity, so probabilities closer than
// 2^-53 to a representable boundary are implementation-defined.
IntegerSet sample_np(const SampleSpec& spec);

// A ∪ R; throws std::invalid_argument on ground-size mismatch.
IntegerSet perturbed_union(const IntegerSet& a, const IntegerSet& r);

// {floor(n/2)+1, ..., n}; sum-free under both policies. Requires n >= 2.
IntegerSet half_interval(int n);

// Elements of A red, elements of U \ A blue; total on U. Requires A ⊆ U.
TwoColoring lower_bound_coloring(const IntegerSet& a, const IntegerSet& u);

}  // namespace schur
