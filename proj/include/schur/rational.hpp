#pragma once

#include <string>
#include <string_view>

namespace schur {

// Exact nonnegative rational. Used wherever a threshold like
// "count >= eps * n" must not depend on floating-point ties.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    // Accepts "0.1", ".05", "3", or "1/24".
    static Rational parse(std::string_view text);

    long double value() const {
        return static_cast<long double>(num) / static_cast<long double>(den);
    }
    std::string str() const;

    bool operator==(const Rational&) const = default;
};

// count >= r * n, evaluated exactly in integer arithmetic.
bool meets_threshold(long long count, const Rational& r, long long n);

}  // namespace schur
