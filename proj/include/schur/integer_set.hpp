#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

// Subset of {1, ..., n} with bitmap storage. The ground size n is part of
// the set's identity: two sets compare equal only when both n and the
// membership agree. Instances are treated as immutable values once built.
class IntegerSet {
public:
    IntegerSet() = default;

    explicit IntegerSet(int ground_size)
        : n_(checked_ground(ground_size)), words_(word_count(ground_size), 0) {}

    IntegerSet(int ground_size, std::initializer_list<int> ms) : IntegerSet(ground_size) {
        for (int m : ms) insert(m);
    }

    static IntegerSet full(int n) {
        IntegerSet s(n);
        for (int v = 1; v <= n; ++v) s.insert(v);
        return s;
    }

    // {lo, ..., hi} inside ground [1, n]; empty when lo > hi.
    static IntegerSet interval(int n, int lo, int hi) {
        IntegerSet s(n);
        for (int v = lo; v <= hi; ++v) s.insert(v);
        return s;
    }

    static IntegerSet from_members(int n, const std::vector<int>& ms) {
        IntegerSet s(n);
        for (int m : ms) s.insert(m);
        return s;
    }

    int ground_size() const { return n_; }
    int size() const { return card_; }
    bool empty() const { return card_ == 0; }

    bool contains(int v) const {
        if (v < 1 || v > n_) return false;
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        if (v < 1 || v > n_)
            throw std::invalid_argument("element " + std::to_string(v) +
                                        " outside ground [1, " + std::to_string(n_) + "]");
        std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (!(w & bit)) {
            w |= bit;
            ++card_;
        }
    }

    std::vector<int> members() const {
        std::vector<int> ms;
        ms.reserve(static_cast<std::size_t>(card_));
        for (int v = 1; v <= n_; ++v)
            if (contains(v)) ms.push_back(v);
        return ms;
    }

    bool is_subset_of(const IntegerSet& o) const {
        if (n_ != o.n_) return false;
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const IntegerSet& o) const { return n_ == o.n_ && words_ == o.words_; }

private:
    static int checked_ground(int n) {
        if (n < 0) throw std::invalid_argument("ground size must be nonnegative");
        return n;
    }
    static std::size_t word_count(int n) { return static_cast<std::size_t>(n) / 64 + 1; }

    friend IntegerSet set_union(const IntegerSet&, const IntegerSet&);
    friend IntegerSet set_difference(const IntegerSet&, const IntegerSet&);

    int n_ = 0;
    int card_ = 0;
    std::vector<std::uint64_t> words_;
};

inline IntegerSet set_union(const IntegerSet& a, const IntegerSet& b) {
    if (a.ground_size() != b.ground_size())
        throw std::invalid_argument("ground size mismatch in set union");
    IntegerSet r(a.ground_size());
    int card = 0;
    for (std::size_t i = 0; i < r.words_.size(); ++i) {
        r.words_[i] = a.words_[i] | b.words_[i];
        card += __builtin_popcountll(r.words_[i]);
    }
    r.card_ = card;
    return r;
}

inline IntegerSet set_difference(const IntegerSet& a, const IntegerSet& b) {
    if (a.ground_size() != b.ground_size())
        throw std::invalid_argument("ground size mismatch in set difference");
    IntegerSet r(a.ground_size());
    int card = 0;
    for (std::size_t i = 0; i < r.words_.size(); ++i) {
        r.words_[i] = a.words_[i] & ~b.words_[i];
        card += __builtin_popcountll(r.words_[i]);
    }
    r.card_ = card;
    return r;
}

}  // namespace schur
