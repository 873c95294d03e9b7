#include "schur/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace schur {

namespace {

long long parse_digits(std::string_view s) {
    if (s.empty() || s.size() > 18) throw std::invalid_argument("bad numeric field");
    long long v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit in rational");
        v = v * 10 + (ch - '0');
    }
    return v;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (num < 0 || den < 0) throw std::invalid_argument("rational must be nonnegative");
    const long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        return Rational(parse_digits(text.substr(0, slash)), parse_digits(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_digits(text), 1);
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 12) throw std::invalid_argument("too many decimal digits");
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const long long w = whole.empty() ? 0 : parse_digits(whole);
    const long long f = frac.empty() ? 0 : parse_digits(frac);
    return Rational(w * den + f, den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool meets_threshold(long long count, const Rational& r, long long n) {
    return static_cast<__int128>(count) * r.den >= static_cast<__int128>(r.num) * n;
}

}  // namespace schur
