#include "schur/perturb.hpp"

#include <cmath>
#include <stdexcept>

namespace schur {

namespace {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

IntegerSet sample_np(const SampleSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("sample ground size must be nonnegative");
    if (!(spec.p >= 0.0 && spec.p <= 1.0))
        throw std::invalid_argument("inclusion probability must lie in [0, 1]");
    // p scaled to a 53-bit integer threshold; p=0 admits nothing, p=1 everything.
    const auto threshold =
        static_cast<std::uint64_t>(std::llround(spec.p * 9007199254740992.0));  // 2^53
    const std::uint64_t stream = mix64(mix64(spec.master_seed) ^ spec.index);
    IntegerSet r(spec.n);
    for (int v = 1; v <= spec.n; ++v) {
        const std::uint64_t u = mix64(stream ^ static_cast<std::uint64_t>(v));
        if ((u >> 11) < threshold) r.insert(v);
    }
    return r;
}

IntegerSet perturbed_union(const IntegerSet& a, const IntegerSet& r) {
    if (a.ground_size() != r.ground_size())
        throw std::invalid_argument("perturbed union requires equal ground sizes");
    return set_union(a, r);
}

IntegerSet half_interval(int n) {
    if (n < 2) throw std::invalid_argument("half interval requires n >= 2");
    return IntegerSet::interval(n, n / 2 + 1, n);
}

TwoColoring lower_bound_coloring(const IntegerSet& a, const IntegerSet& u) {
    if (!a.is_subset_of(u))
        throw std::invalid_argument("lower-bound coloring requires A ⊆ U");
    TwoColoring col(u.ground_size());
    for (int m : u.members()) col.set(m, a.contains(m) ? Color::Red : Color::Blue);
    return col;
}

}  // namespace schur
