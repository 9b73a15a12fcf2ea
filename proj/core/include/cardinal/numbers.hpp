#pragma once

#include <string>
#include <vector>

#include "cardinal/ratfunc.hpp"

namespace cardinal {

// Stirling numbers of the second kind, S2(n, c). Zero outside 0 <= c <= n.
BigInt stirling2(long n, long c);

// Array polynomial S_c^n(omega): binomial convolution of omega-powers with the
// Stirling column c, i.e. the egf product e^{t omega}(e^t - 1)^c read off at n.
PolyQ array_poly(long c, long n);

// Eulerian triangle A_{n,j} (canonical convention: A_n(rho) = sum_j A_{n,j} rho^j).
BigInt eulerian_number(long n, long j);

struct EulerianRow {
    long n = 0;
    std::vector<BigInt> a; // a[j] = A_{n,j}, j = 0..n
    friend bool operator==(const EulerianRow& x, const EulerianRow& y) {
        return x.n == y.n && x.a == y.a;
    }
};

EulerianRow eulerian_row(long n);

// Independent oracle: counts permutations of {1..n} by 1 + (number of ascents).
// Exponential cost; refuses n > 9.
EulerianRow eulerian_bruteforce(long n);

PolyQ eulerian_poly(long n); // A_n(rho), a polynomial in rho

// Euler-Frobenius numbers H_n(phi) and polynomials H_n(omega; phi).
RatFunc frobenius_number(long n);
BiPoly frobenius_poly(long n);

// Apostol-Bernoulli numbers B_n(rho) via the closed Stirling double sum.
RatFunc apostol_bernoulli_number(long n);

// Four independent constructions of the Apostol-Bernoulli polynomial B_n(omega; rho).
enum class AbMethod { binomial, bernstein, array, stirling };
const char* ab_method_name(AbMethod m);
AbMethod parse_ab_method(const std::string& name);
BiPoly apostol_bernoulli_poly(long n, AbMethod method);

// Apostol-Euler numbers E_n(rho) in the 2-convention (E_0 = 2/(1+rho)) and the
// corresponding polynomials E_n(omega; rho).
RatFunc apostol_euler_number(long n);
BiPoly apostol_euler_poly(long n);

// Geometric polynomials W_n(w) = sum_j j! S2(n,j) w^j.
PolyQ geometric_poly(long n);

// y1(m, n) = (1/n!) sum_{h=0}^n C(n,h) h^m  (0^0 = 1).
Rational y1(long m, long n);

// Bernoulli numbers with B_1 = -1/2 (the sign the Volkenborn limit forces).
Rational bernoulli(long n);

// Euler numbers E_n = H_n(-1) (equivalently the Euler polynomial value E_n(0)).
Rational euler_number(long n);

// Families whose printed presentation is internally inconsistent, together with
// the canonical convention this library fixes. Data, so tools can surface it.
struct ConventionEntry {
    std::string family;
    std::string canonical;
    std::string discrepancy;
};
const std::vector<ConventionEntry>& convention_ledger();

} // namespace cardinal
