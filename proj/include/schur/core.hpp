#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "schur/integer_set.hpp"

namespace schur {

// A Schur triple is (a, b, a+b). The Schur policy admits a = b, i.e. the
// triple (a, a, 2a); WeakSchur requires a < b.
enum class TriplePolicy { Schur, WeakSchur };

// Canonical triple a + b = c with a <= b.
struct SchurTriple {
    int a = 0;
    int b = 0;
    int c = 0;

    static SchurTriple canonical(int u, int v) {
        return u <= v ? SchurTriple{u, v, u + v} : SchurTriple{v, u, u + v};
    }
    int distinct_values() const { return a == b ? 2 : 3; }
    auto operator<=>(const SchurTriple&) const = default;
};

// 4-term arithmetic progression start, start+d, start+2d, start+3d.
struct FourAP {
    int start = 0;
    int step = 0;
    auto operator<=>(const FourAP&) const = default;
};

enum class Color : std::uint8_t { None = 0, Red = 1, Blue = 2 };

inline Color other_color(Color c) {
    return c == Color::Red ? Color::Blue : Color::Red;
}

// Total or partial assignment element -> {red, blue} over an ambient [1, n].
class TwoColoring {
public:
    TwoColoring() : assign_(1, Color::None) {}
    explicit TwoColoring(int ground_size) : assign_(static_cast<std::size_t>(ground_size) + 1, Color::None) {}

    int ground_size() const { return static_cast<int>(assign_.size()) - 1; }

    Color get(int v) const {
        if (v < 1 || v >= static_cast<int>(assign_.size())) return Color::None;
        return assign_[static_cast<std::size_t>(v)];
    }
    void set(int v, Color c) {
        if (v < 1 || v >= static_cast<int>(assign_.size()))
            throw std::invalid_argument("colored element outside ground set");
        assign_[static_cast<std::size_t>(v)] = c;
    }

    bool total_on(const IntegerSet& s) const {
        for (int v = 1; v <= s.ground_size(); ++v)
            if (s.contains(v) && get(v) == Color::None) return false;
        return true;
    }

    std::vector<int> members_with(Color c) const {
        std::vector<int> ms;
        for (int v = 1; v < static_cast<int>(assign_.size()); ++v)
            if (assign_[static_cast<std::size_t>(v)] == c) ms.push_back(v);
        return ms;
    }

    bool operator==(const TwoColoring&) const = default;

private:
    std::vector<Color> assign_;
};

// All canonical triples (a, b, a+b) fully inside S, sorted lexicographically.
std::vector<SchurTriple> enumerate_schur_triples(const IntegerSet& s, TriplePolicy policy);

// All (start, d) with d >= 1 and all four terms in S, sorted by (start, d).
std::vector<FourAP> enumerate_4aps(const IntegerSet& s);

// Step d -> number of 4APs in S with that step; zero-count steps omitted.
std::map<int, long long> count_4aps_by_step(const IntegerSet& s);

// Lexicographically least monochromatic triple of S, or nullopt when the
// coloring is Schur-free. Throws std::invalid_argument on partial colorings.
std::optional<SchurTriple> verify_coloring(const IntegerSet& s, const TwoColoring& col,
                                           TriplePolicy policy);

bool is_sum_free(const IntegerSet& s, TriplePolicy policy);

}  // namespace schur
