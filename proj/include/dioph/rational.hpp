#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "dioph/errors.hpp"

namespace dioph {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

// cpp_rational refuses negative denominators outright, so every place that
// builds a fraction from parts goes through here.
inline Rational make_rational(Int num, Int den) {
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline std::string to_string(const Int& n) { return n.str(); }

// "p/q", or just "p" when the denominator is 1.  This is the wire format for
// every number in the JSON interfaces; it must round-trip bit-exactly.
inline std::string to_string(const Rational& x) { return x.str(); }

// Strict inverse of to_string: optional leading '-', decimal digits, optional
// "/digits".  Anything else (hex, whitespace, exponents, signs on the
// denominator) is rejected.
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] {
        throw std::invalid_argument("not a rational: \"" + std::string(s) + "\"");
    };
    size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    size_t num_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == num_begin) fail();
    Int num(std::string(s.substr(0, i)));
    if (i == s.size()) return Rational(num);
    if (s[i] != '/') fail();
    ++i;
    size_t den_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == den_begin || i != s.size()) fail();
    Int den(std::string(s.substr(den_begin)));
    if (den == 0) fail();
    return make_rational(std::move(num), std::move(den));
}

inline Int parse_int(std::string_view s) {
    Rational r = parse_rational(s);
    if (!is_integer(r))
        throw std::invalid_argument("not an integer: \"" + std::string(s) + "\"");
    return numerator(r);
}

// x^e by squaring; boost's pow() only covers the integer type.
inline Rational rat_pow(const Rational& x, unsigned e) {
    Rational acc(1), base = x;
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

inline Int int_pow(const Int& x, unsigned e) { return boost::multiprecision::pow(x, e); }

// Floor square root (boost's sqrt on cpp_int), plus the exact variants used
// for square testing.  Negative input is a caller bug.
inline Int isqrt(const Int& n) {
    if (n < 0) throw contract_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = isqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

// sqrt of a reduced fraction exists iff numerator and denominator are both
// perfect squares.  Returns the nonnegative root.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    auto rn = exact_sqrt(numerator(x));
    if (!rn) return std::nullopt;
    auto rd = exact_sqrt(denominator(x));
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

inline bool is_square(const Rational& x) { return rational_sqrt(x).has_value(); }

// Miller-Rabin with the first twelve primes as witnesses: deterministic for
// n < 3.2e24, a strong-probable-prime test beyond that.  Denominators at desk
// scale never get near the boundary.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r && witness; ++i) {
            x = (x * x) % n;
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

// v such that x = p^v * (m/n) with p dividing neither m nor n.
inline long p_adic_valuation(const Rational& x, const Int& p) {
    if (x == 0) throw contract_error("p-adic valuation of zero is undefined");
    if (!is_prime(p)) throw contract_error("p-adic valuation requires a prime");
    long v = 0;
    Int n = numerator(x);
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    if (v == 0) {
        Int d = denominator(x);
        while (d % p == 0) {
            d /= p;
            --v;
        }
    }
    return v;
}

} // namespace dioph
