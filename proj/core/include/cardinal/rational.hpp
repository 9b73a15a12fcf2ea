#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "cardinal/errors.hpp"

namespace cardinal {

// Exact scalar domain. BigInt is an arbitrary-precision signed integer;
// Rational keeps the canonical form num/den with gcd(num,den)=1, den>=1,
// and zero stored as 0/1 (guaranteed by the backend).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

inline Rational rat_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (q == 0) throw DomainError("rat_pow: zero to a negative power");
        return Rational(1) / rat_pow(q, -e);
    }
    Rational base = q, acc = 1;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline BigInt int_pow(const BigInt& b, long e) {
    if (e < 0) throw DomainError("int_pow: negative exponent");
    BigInt base = b, acc = 1;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

// Floor of a rational (exact; C++ integer division truncates, so fix up negatives).
inline BigInt rat_floor(const Rational& q) {
    BigInt n = num(q), d = den(q);
    BigInt t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

// Rational -> double with explicit scaling so astronomically large numerators /
// denominators do not overflow the naive per-component conversion.
inline double to_double(const Rational& q) {
    if (q == 0) return 0.0;
    BigInt n = num(q), d = den(q);
    const long bn = static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(n)));
    const long bd = static_cast<long>(boost::multiprecision::msb(d));
    const long shift = std::max(0L, std::max(bn, bd) - 512);
    if (shift > 0) {
        n >>= shift;
        d >>= shift;
        if (d == 0) return n < 0 ? -std::numeric_limits<double>::infinity()
                                 : std::numeric_limits<double>::infinity();
        if (n == 0) return 0.0;
    }
    return n.convert_to<double>() / d.convert_to<double>();
}

// Canonical text form: "a/b", or plain "a" when the denominator is 1.
inline std::string render(const Rational& q) {
    const BigInt d = den(q);
    if (d == 1) return num(q).str();
    return num(q).str() + "/" + d.str();
}

inline std::string render(const BigInt& n) { return n.str(); }

// Fixed 17-significant-digit float rendering (deterministic interchange form).
inline std::string render_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Parses "a" or "a/b" (optional leading '-'). Anything else is a usage error.
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&] { throw UsageError("not a rational: '" + text + "'"); };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        const std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        if (a.empty() || b.empty()) bad();
        BigInt d(b);
        if (d == 0) bad();
        return Rational(BigInt(a), d);
    } catch (const std::exception&) {
        bad();
    }
    return Rational(0); // unreachable
}

} // namespace cardinal
