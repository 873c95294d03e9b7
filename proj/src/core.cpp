#include "schur/core.hpp"

#include <stdexcept>

namespace schur {

std::vector<SchurTriple> enumerate_schur_triples(const IntegerSet& s, TriplePolicy policy) {
    std::vector<SchurTriple> out;
    const int n = s.ground_size();
    const std::vector<int> ms = s.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const int a = ms[i];
        const std::size_t j0 = policy == TriplePolicy::WeakSchur ? i + 1 : i;
        for (std::size_t j = j0; j < ms.size(); ++j) {
            const int b = ms[j];
            const int c = a + b;
            if (c > n) break;
            if (s.contains(c)) out.push_back(SchurTriple{a, b, c});
        }
    }
    return out;
}

std::vector<FourAP> enumerate_4aps(const IntegerSet& s) {
    std::vector<FourAP> out;
    const int n = s.ground_size();
    for (int start = 1; start <= n; ++start) {
        if (!s.contains(start)) continue;
        for (int d = 1; start + 3 * d <= n; ++d) {
            if (s.contains(start + d) && s.contains(start + 2 * d) && s.contains(start + 3 * d))
                out.push_back(FourAP{start, d});
        }
    }
    return out;
}

std::map<int, long long> count_4aps_by_step(const IntegerSet& s) {
    std::map<int, long long> counts;
    const int n = s.ground_size();
    for (int d = 1; 1 + 3 * d <= n; ++d) {
        long long c = 0;
        for (int start = 1; start + 3 * d <= n; ++start) {
            if (s.contains(start) && s.contains(start + d) && s.contains(start + 2 * d) &&
                s.contains(start + 3 * d))
                ++c;
        }
        if (c > 0) counts[d] = c;
    }
    return counts;
}

std::optional<SchurTriple> verify_coloring(const IntegerSet& s, const TwoColoring& col,
                                           TriplePolicy policy) {
    const int n = s.ground_size();
    const std::vector<int> ms = s.members();
    for (int m : ms)
        if (col.get(m) == Color::None)
            throw std::invalid_argument("coloring is partial on the given set");
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const int a = ms[i];
        const Color ca = col.get(a);
        const std::size_t j0 = policy == TriplePolicy::WeakSchur ? i + 1 : i;
        for (std::size_t j = j0; j < ms.size(); ++j) {
            const int b = ms[j];
            const int c = a + b;
            if (c > n) break;
            if (col.get(b) == ca && s.contains(c) && col.get(c) == ca)
                return SchurTriple{a, b, c};
        }
    }
    return std::nullopt;
}

bool is_sum_free(const IntegerSet& s, TriplePolicy policy) {
    const int n = s.ground_size();
    const std::vector<int> ms = s.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const int a = ms[i];
        const std::size_t j0 = policy == TriplePolicy::WeakSchur ? i + 1 : i;
        for (std::size_t j = j0; j < ms.size(); ++j) {
            const int c = a + ms[j];
            if (c > n) break;
            if (s.contains(c)) return false;
        }
    }
    return true;
}

}  // namespace schur
