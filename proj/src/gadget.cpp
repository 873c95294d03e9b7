#include "schur/gadget.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "schur/errors.hpp"

namespace schur {

GadgetSpec build_gadget(int x, int y, int d, int n) {
    if (n < 1) throw std::invalid_argument("ambient size must be positive");
    const std::string tag =
        "(x=" + std::to_string(x) + ", y=" + std::to_string(y) + ", d=" + std::to_string(d) + ")";
    if (d < 1 || x <= d || y <= x + d)
        throw ConstraintViolation("gadget requires x > d >= 1 and y > x + d; got " + tag);
    GadgetSpec g;
    g.x = x;
    g.y = y;
    g.d = d;
    g.n = n;
    g.tuple = {x - d, x, x + d, x + 2 * d, y - d, y, y + d, d, y - x - d, y - x};
    for (int v : g.tuple) {
        if (v < 1 || v > n)
            throw OutOfRange("gadget entry " + std::to_string(v) + " outside [1, " +
                             std::to_string(n) + "] for " + tag);
    }
    g.values.assign(g.tuple.begin(), g.tuple.end());
    std::sort(g.values.begin(), g.values.end());
    g.values.erase(std::unique(g.values.begin(), g.values.end()), g.values.end());
    g.schur_part = SchurTriple::canonical(d, y - x - d);
    return g;
}

GadgetVerdict exhaustive_ramsey_check(const std::vector<int>& values, TriplePolicy policy) {
    std::vector<int> vs(values);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const int k = static_cast<int>(vs.size());
    if (k > 25) throw std::invalid_argument("value set too large for exhaustive sweep");

    if (k == 0) return GadgetVerdict{false, 1, TwoColoring(0)};

    auto index_of = [&vs](int v) -> int {
        const auto it = std::lower_bound(vs.begin(), vs.end(), v);
        if (it == vs.end() || *it != v) return -1;
        return static_cast<int>(it - vs.begin());
    };

    // Triples within the value set, as bitmasks over value indices. A triple
    // (a, a, 2a) yields a 2-bit mask; it is monochromatic exactly when a and
    // 2a share a color, which the subset test below captures.
    std::vector<std::uint32_t> triple_masks;
    for (int i = 0; i < k; ++i) {
        const int j0 = policy == TriplePolicy::WeakSchur ? i + 1 : i;
        for (int j = j0; j < k; ++j) {
            const int c = index_of(vs[static_cast<std::size_t>(i)] + vs[static_cast<std::size_t>(j)]);
            if (c >= 0)
                triple_masks.push_back((1u << i) | (1u << j) | (1u << c));
        }
    }

    GadgetVerdict verdict;
    const std::uint32_t limit = std::uint32_t{1} << k;
    for (std::uint32_t red = 0; red < limit; ++red) {
        bool mono = false;
        for (std::uint32_t t : triple_masks) {
            const std::uint32_t hit = red & t;
            if (hit == t || hit == 0) {
                mono = true;
                break;
            }
        }
        if (!mono) {
            TwoColoring witness(vs.back());
            for (int i = 0; i < k; ++i)
                witness.set(vs[static_cast<std::size_t>(i)],
                            (red >> i) & 1u ? Color::Red : Color::Blue);
            verdict.is_ramsey = false;
            verdict.colorings_checked = red + 1;
            verdict.counterexample = std::move(witness);
            return verdict;
        }
    }
    verdict.is_ramsey = true;
    verdict.colorings_checked = limit;
    return verdict;
}

GadgetVerdict verify_gadget_ramsey(const GadgetSpec& g, TriplePolicy policy) {
    return exhaustive_ramsey_check(g.values, policy);
}

std::array<SchurTriple, 8> proof_chain_triples(const GadgetSpec& g) {
    const int x = g.x, y = g.y, d = g.d;
    return {
        SchurTriple::canonical(y - x, x - d),
        SchurTriple::canonical(y - x - d, x),
        SchurTriple::canonical(y - x - d, d),
        SchurTriple::canonical(y - x - d, x + d),
        SchurTriple::canonical(y - x, x + d),
        SchurTriple::canonical(x + d, d),
        SchurTriple::canonical(y - x - d, x + 2 * d),
        SchurTriple::canonical(y - x, x),
    };
}

bool gadget_contained_in(const GadgetSpec& g, const IntegerSet& u) {
    for (int v : g.tuple)
        if (!u.contains(v)) return false;
    return true;
}

}  // namespace schur
