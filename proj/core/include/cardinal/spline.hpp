#pragma once

#include "cardinal/numbers.hpp"

namespace cardinal {

// Bernstein basis polynomial B_d^k(x) = C(k,d) x^d (1-x)^{k-d}.
// Zero outside 0 <= d <= k, so difference formulas can index freely.
PolyQ bernstein(long d, long k, Sym sym = Sym::omega);

// One polynomial piece of the uniform B-spline N_{0,n} with knots 0..n+1:
// the restriction of N_{0,n} to [p, p+1), written in the global variable omega.
struct SplineSegment {
    long degree = 0;
    long p = 0;
    PolyQ poly;
    friend bool operator==(const SplineSegment& a, const SplineSegment& b) {
        return a.degree == b.degree && a.p == b.p && a.poly == b.poly;
    }
    friend bool operator!=(const SplineSegment& a, const SplineSegment& b) { return !(a == b); }
};

// Truncated-power construction: N_{0,n}(omega; p) =
//   (1/n!) sum_{j=0}^{p} (-1)^j C(n+1,j) (omega-j)^n.
// The zero polynomial outside the support (p < 0 or p > n; the sum itself
// already vanishes identically for p >= n+1).
SplineSegment bspline_segment(long n, long p);

// N_{0,n}(x) for x >= 0 (negative x is rejected; the support is [0, n+1]).
Rational bspline_eval(long n, const Rational& x);

// The same segment assembled from Bernstein first differences; an independent
// route that never forms a truncated power.
PolyQ bspline_via_bernstein(long n, long p);

// v-th derivative of the (n, p) segment, assembled directly from shifted
// Bernstein differences rather than by differentiating the polynomial.
PolyQ bspline_derivative(long n, long p, long v);

// Degree raising: returns the (n+v, p) segment from products of Bernstein
// polynomials against the degree-n differences.
PolyQ bspline_leibniz(long n, long p, long v);

// Right side of the two-term knot recurrence,
//   (omega/n) N_{0,n-1}(omega; p) + ((n+1-omega)/n) N_{0,n-1}(omega-1; p-1).
PolyQ deboor_rhs(long n, long p);

// Segment polynomials read off the closed-form ordinary generating function;
// entry n of the result is N_{0,n}(omega; p).
std::vector<PolyQ> goldman_coefficients(long p, int order);

// Eulerian row from diagonal segment values, A_{n,p} = n! N_{0,n}(p; p).
// Throws if any value fails to be an integer.
EulerianRow eulerian_from_spline(long n);

// Apostol-Bernoulli number from diagonal segment values:
//   B_{n+1}(rho) = (-1)^n (n+1)! (rho-1)^{-(n+1)} sum_{j=0}^n N_{0,n}(j; j) rho^j.
RatFunc apostol_from_spline(long n);

} // namespace cardinal
