#include "schur/moments.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "schur/errors.hpp"

namespace schur {

namespace {

struct ValueList {
    std::array<int, 3> v{};
    int size = 0;
};

ValueList values_of(const SchurTriple& t) {
    if (t.a == t.b) return ValueList{{t.a, t.c, 0}, 2};
    return ValueList{{t.a, t.b, t.c}, 3};
}

int shared_count(const ValueList& s, const ValueList& t) {
    int i = 0, j = 0, shared = 0;
    while (i < s.size && j < t.size) {
        if (s.v[static_cast<std::size_t>(i)] == t.v[static_cast<std::size_t>(j)]) {
            ++shared;
            ++i;
            ++j;
        } else if (s.v[static_cast<std::size_t>(i)] < t.v[static_cast<std::size_t>(j)]) {
            ++i;
        } else {
            ++j;
        }
    }
    return shared;
}

void apply_limits(OverlapProfile& prof, int n) {
    const __int128 nn = static_cast<__int128>(n);
    prof.share1_within_cubic = static_cast<__int128>(prof.pairs_share1) <= 3 * nn * nn * nn;
    prof.share2_within_quadratic = static_cast<__int128>(prof.pairs_share2) <= 2 * nn * nn;
}

std::uint64_t choose2(std::uint64_t m) { return m * (m - 1) / 2; }

}  // namespace

OverlapProfile overlap_profile(const TripleFamily& fam) {
    OverlapProfile prof;
    std::vector<ValueList> vals;
    vals.reserve(fam.triples.size());
    for (const SchurTriple& t : fam.triples) vals.push_back(values_of(t));

    std::array<std::uint64_t, 7> hist{};
    for (std::size_t i = 0; i < vals.size(); ++i) {
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            const int shared = shared_count(vals[i], vals[j]);
            if (shared == 1)
                ++prof.pairs_share1;
            else if (shared == 2)
                ++prof.pairs_share2;
            ++hist[static_cast<std::size_t>(vals[i].size + vals[j].size - shared)];
        }
    }
    for (int u = 0; u < 7; ++u)
        if (hist[static_cast<std::size_t>(u)] > 0)
            prof.pairs_by_union_size[u] = hist[static_cast<std::size_t>(u)];
    apply_limits(prof, fam.n);
    return prof;
}

OverlapProfile overlap_profile_bucketed(const TripleFamily& fam) {
    OverlapProfile prof;

    // Per-value and per-value-pair buckets, split by triple size (2 or 3
    // distinct values). Classes are indexed 0:(2,2), 1:(2,3), 2:(3,3).
    struct Counts {
        std::uint64_t c2 = 0, c3 = 0;
    };
    std::unordered_map<int, Counts> by_value;
    std::unordered_map<std::uint64_t, Counts> by_pair;
    std::uint64_t n2 = 0, n3 = 0;

    for (const SchurTriple& t : fam.triples) {
        const ValueList vl = values_of(t);
        (vl.size == 2 ? n2 : n3) += 1;
        for (int i = 0; i < vl.size; ++i) {
            Counts& cv = by_value[vl.v[static_cast<std::size_t>(i)]];
            (vl.size == 2 ? cv.c2 : cv.c3) += 1;
            for (int j = i + 1; j < vl.size; ++j) {
                const std::uint64_t key =
                    (static_cast<std::uint64_t>(vl.v[static_cast<std::size_t>(i)]) << 32) |
                    static_cast<std::uint64_t>(vl.v[static_cast<std::size_t>(j)]);
                Counts& cp = by_pair[key];
                (vl.size == 2 ? cp.c2 : cp.c3) += 1;
            }
        }
    }

    std::array<std::uint64_t, 3> share2{};  // by class
    for (const auto& [key, c] : by_pair) {
        (void)key;
        share2[0] += choose2(c.c2);
        share2[1] += c.c2 * c.c3;
        share2[2] += choose2(c.c3);
    }
    std::array<std::uint64_t, 3> share_at_least1{};  // pairs counted once per shared value
    for (const auto& [v, c] : by_value) {
        (void)v;
        share_at_least1[0] += choose2(c.c2);
        share_at_least1[1] += c.c2 * c.c3;
        share_at_least1[2] += choose2(c.c3);
    }
    std::array<std::uint64_t, 3> share1{};
    for (int cls = 0; cls < 3; ++cls)
        share1[static_cast<std::size_t>(cls)] =
            share_at_least1[static_cast<std::size_t>(cls)] -
            2 * share2[static_cast<std::size_t>(cls)];

    const std::array<std::uint64_t, 3> totals{choose2(n2), n2 * n3, choose2(n3)};
    const std::array<int, 3> size_sum{4, 5, 6};
    for (int cls = 0; cls < 3; ++cls) {
        const std::size_t k = static_cast<std::size_t>(cls);
        const std::uint64_t disjoint = totals[k] - share1[k] - share2[k];
        for (int shared = 0; shared <= 2; ++shared) {
            const std::uint64_t cnt =
                shared == 0 ? disjoint : (shared == 1 ? share1[k] : share2[k]);
            if (cnt > 0) prof.pairs_by_union_size[size_sum[k] - shared] += cnt;
        }
        prof.pairs_share1 += share1[k];
        prof.pairs_share2 += share2[k];
    }
    apply_limits(prof, fam.n);
    return prof;
}

long double expected_capture(const TripleFamily& fam, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
    std::uint64_t n2 = 0, n3 = 0;
    for (const SchurTriple& t : fam.triples) (t.distinct_values() == 2 ? n2 : n3) += 1;
    const long double lp = static_cast<long double>(p);
    return static_cast<long double>(n2) * lp * lp + static_cast<long double>(n3) * lp * lp * lp;
}

MomentReport chebyshev_zero_bound(const TripleFamily& fam, double p) {
    return chebyshev_zero_bound(fam, p, overlap_profile(fam));
}

MomentReport chebyshev_zero_bound(const TripleFamily& fam, double p,
                                  const OverlapProfile& profile) {
    MomentReport rep;
    rep.n = fam.n;
    rep.p = p;
    rep.epsilon = fam.epsilon;
    rep.family_size = fam.triples.size();
    rep.expected = expected_capture(fam, p);
    if (rep.expected <= 0.0L)
        throw DegenerateFamily("E[X] = 0: empty family or p = 0");
    const long double lp = static_cast<long double>(p);
    long double cross = 0.0L;
    for (const auto& [union_size, pairs] : profile.pairs_by_union_size)
        cross += 2.0L * static_cast<long double>(pairs) * powl(lp, union_size);
    rep.pairs_share1 = profile.pairs_share1;
    rep.pairs_share2 = profile.pairs_share2;
    rep.cross_term = cross;
    rep.cheb_bound = 1.0L / rep.expected + cross / (rep.expected * rep.expected);
    const long double e = fam.epsilon.value();
    rep.expected_lower_ref =
        e * e * lp * lp * lp * static_cast<long double>(fam.n) * static_cast<long double>(fam.n) /
        4.0L;
    return rep;
}

}  // namespace schur
