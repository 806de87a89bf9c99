#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace tilewave {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator, so every result is canonical.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_den(q) == 1; }

inline Integer rat_floor(const Rational& q) {
    Integer n = rat_num(q), d = rat_den(q);
    if (d == 1) return n;
    if (n >= 0) return Integer(n / d);
    Integer up = (-n + d - 1) / d;
    return Integer(-up);
}

inline Integer rat_ceil(const Rational& q) { return -rat_floor(-q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact integer power; negative exponents require a nonzero base.
inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return rat_pow(Rational(1) / base, -e);
    }
    Rational acc(1), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

/// Largest rational g with a, b both integer multiples of g (a, b not both 0).
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    using boost::multiprecision::gcd;
    Integer n1 = rat_num(a), d1 = rat_den(a);
    Integer n2 = rat_num(b), d2 = rat_den(b);
    Integer n = gcd(Integer(abs(n1) * d2), Integer(abs(n2) * d1));
    return Rational(n, d1 * d2);
}

/// Parse "p", "-p" or "p/q" with arbitrary-precision integers.
/// Floating-point syntax is rejected: exact inputs stay exact.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') { neg = s[i] == '-'; ++i; }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    std::string num;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
    std::string den = "1";
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        den.clear();
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
        if (i != s.size()) return std::nullopt;
    }
    Integer n(num), d(den);
    if (d == 0) return std::nullopt;
    if (neg) n = -n;
    return Rational(n, d);
}

inline std::string format_rational(const Rational& q) {
    std::string s = rat_num(q).str();
    if (!is_integer(q)) s += "/" + rat_den(q).str();
    return s;
}

}  // namespace tilewave
