#include "cardinal/spline.hpp"

#include <algorithm>

#include "cardinal/generating_functions.hpp"

namespace cardinal {
namespace {

// (B_{k}^{d} - B_{k-1}^{d})(omega - j), the difference every assembly formula
// below consumes. Out-of-range Bernstein indices contribute zero.
PolyQ bernstein_diff(long k, long d, long j) {
    PolyQ r = bernstein(k, d) - bernstein(k - 1, d);
    return r.shifted(Rational(-j));
}

} // namespace

PolyQ bernstein(long d, long k, Sym sym) {
    if (d < 0 || k < 0 || d > k) return PolyQ();
    const PolyQ x = poly_var(sym);
    const PolyQ one_minus = poly_const(Rational(1)) - x;
    return Rational(binomial(k, d)) * (x.pow(d) * one_minus.pow(k - d));
}

SplineSegment bspline_segment(long n, long p) {
    if (n < 0) throw DomainError("bspline_segment: negative degree");
    SplineSegment seg{n, p, PolyQ()};
    if (p < 0 || p > n) return seg;
    PolyQ acc;
    for (long j = 0; j <= std::min(p, n + 1); ++j) {
        PolyQ term = Rational(binomial(n + 1, j)) * shifted_power(Sym::omega, Rational(-j), n);
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    seg.poly = acc / poly_const(Rational(factorial(n)));
    return seg;
}

Rational bspline_eval(long n, const Rational& x) {
    if (n < 0) throw DomainError("bspline_eval: negative degree");
    if (x < 0) throw DomainError("bspline_eval: negative argument (support is [0, n+1])");
    const BigInt fl = rat_floor(x);
    if (fl > n) return Rational(0);
    const long p = fl.convert_to<long>();
    return bspline_segment(n, p).poly.eval(x);
}

PolyQ bspline_via_bernstein(long n, long p) {
    if (n < 0) throw DomainError("bspline_via_bernstein: negative degree");
    if (p < 0 || p > n) return PolyQ();
    PolyQ acc;
    for (long v = 0; v <= n; ++v) {
        PolyQ inner;
        for (long j = 0; j <= p; ++j) inner = inner + bernstein_diff(j, v, j);
        const PolyQ term = Rational(binomial(n, v)) * inner;
        acc = v % 2 == 0 ? acc + term : acc - term;
    }
    return acc / poly_const(Rational(factorial(n)));
}

PolyQ bspline_derivative(long n, long p, long v) {
    if (n < 0) throw DomainError("bspline_derivative: negative degree");
    if (v < 0) throw DomainError("bspline_derivative: negative order");
    if (p < 0 || p > n) return PolyQ();
    if (v > n) return PolyQ();
    PolyQ acc;
    for (long d = v; d <= n; ++d) {
        const Rational outer(binomial(n, d) * binomial(d, v) * factorial(v));
        PolyQ msum;
        for (long m = 0; m <= v; ++m) {
            PolyQ jsum;
            for (long j = 0; j <= p; ++j) jsum = jsum + bernstein_diff(j - m, d - v, j);
            const PolyQ term = Rational(binomial(v, m)) * jsum;
            msum = (v + d - m) % 2 == 0 ? msum + term : msum - term;
        }
        acc = acc + outer * msum;
    }
    return acc / poly_const(Rational(factorial(n)));
}

PolyQ bspline_leibniz(long n, long p, long v) {
    if (n < 0 || v < 0) throw DomainError("bspline_leibniz: negative index");
    if (p < 0) return PolyQ();
    PolyQ acc;
    for (long d = 0; d <= n; ++d) {
        const Rational cd(binomial(n, d));
        for (long m = 0; m <= v; ++m) {
            PolyQ jsum;
            for (long j = 0; j <= p; ++j) {
                const Rational mj(-j);
                for (long c = 0; c <= m; ++c) {
                    const PolyQ b = bernstein(c, m).shifted(mj);
                    if (b.is_zero()) continue;
                    jsum = jsum + b * bernstein_diff(j - c, d, j);
                }
            }
            const PolyQ term = cd * Rational(binomial(v, m)) * jsum;
            acc = (d + m) % 2 == 0 ? acc + term : acc - term;
        }
    }
    return acc / poly_const(Rational(factorial(n + v)));
}

PolyQ deboor_rhs(long n, long p) {
    if (n < 1) throw DomainError("deboor_rhs: needs degree >= 1");
    const PolyQ w = poly_var(Sym::omega);
    const PolyQ left = w * bspline_segment(n - 1, p).poly;
    const PolyQ right = (poly_const(Rational(n + 1)) - w) *
                        bspline_segment(n - 1, p - 1).poly.shifted(Rational(-1));
    return (left + right) / poly_const(Rational(n));
}

std::vector<PolyQ> goldman_coefficients(long p, int order) {
    const PowerSeries<PolyQ> s = gf_goldman(p, order);
    std::vector<PolyQ> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (int nn = 0; nn <= order; ++nn) out.push_back(s.entry(nn));
    return out;
}

EulerianRow eulerian_from_spline(long n) {
    EulerianRow r;
    r.n = n;
    const Rational nf(factorial(n));
    for (long p = 0; p <= n; ++p) {
        const Rational v = nf * bspline_segment(n, p).poly.eval(Rational(p));
        if (den(v) != 1)
            throw DomainError("eulerian_from_spline: n! N(p; p) is not an integer");
        r.a.push_back(num(v));
    }
    return r;
}

RatFunc apostol_from_spline(long n) {
    if (n < 0) throw DomainError("apostol_from_spline: negative index");
    PolyQ sum;
    for (long j = 0; j <= n; ++j) {
        const Rational nj = bspline_segment(n, j).poly.eval(Rational(j));
        if (nj == 0) continue;
        sum = sum + PolyQ::monomial(nj, static_cast<int>(j), Sym::rho);
    }
    const PolyQ rm1 = poly_var(Sym::rho) - poly_const(Rational(1));
    Rational scalar(factorial(n + 1));
    if (n % 2 == 1) scalar = -scalar;
    return RatFunc(scalar * sum, rm1.pow(n + 1));
}

} // namespace cardinal
