#pragma once

#include <utility>

#include "cardinal/spline.hpp"

namespace cardinal {

// Sentinel for the valuation of zero.
inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

// v_p(q) = (multiplicity of p in the numerator) - (in the denominator).
long padic_valuation(const Rational& q, long p);

// sum_{v=0}^{n_terms - 1} v^k, closed form (Faulhaber), exact for any size.
Rational power_sum(long k, const BigInt& n_terms);

// Truncated mean p^{-m} sum_{v=0}^{p^m - 1} f(v); as m grows this approaches
// the bosonic integral of f p-adically. Coefficient denominators must be
// coprime to p. Degree <= 8 goes through closed-form power sums; higher
// degrees sum directly and refuse infeasible levels.
Rational volkenborn_truncated(const PolyQ& f, long p, long m);

// The limit the truncation approaches: sum_k a_k B_k for f = sum_k a_k omega^k.
Rational volkenborn_limit(const PolyQ& f);

// Truncated alternating sum sum_{v=0}^{p^m - 1} (-1)^v f(v); approaches the
// fermionic integral. Needs odd p so the summand count is odd.
Rational fermionic_truncated(const PolyQ& f, long p, long m);

// sum_k a_k E_k, the fermionic limit.
Rational fermionic_limit(const PolyQ& f);

struct PadicApprox {
    long prime = 0;
    long level = 0;       // m: the truncation sums p^m values
    Rational value;       // truncated integral
    Rational target;      // exact limit
    long distance_valuation = 0; // v_p(value - target); kValuationInfinity when equal
};

std::vector<PadicApprox> volkenborn_sweep(const PolyQ& f, long p, long max_m);
std::vector<PadicApprox> fermionic_sweep(const PolyQ& f, long p, long max_m);

// CSV with header "m,value,valuation"; exact rationals, "inf" for equality.
std::string padic_sweep_csv(const std::vector<PadicApprox>& rows);

// Eulerian expansion of the monomial derivative: both sides of
//   sum_{j=1}^{n} (-1)^{j+1} C(n,j) j (rho-1)^{-j} A_{j-1}(rho)
//       (rho (omega+1)^{n-j} - omega^{n-j})  =  n omega^{n-1}
// as polynomials in omega over Q(rho).
std::pair<BiPoly, BiPoly> epi_sides(long n);
bool epi_check(long n); // n >= 1

// Umbral substitution omega^k -> X_k into the expansion above, with X the
// Bernoulli or Euler numbers; both sides collapse to constants n X_{n-1}.
enum class WittKind { bernoulli, euler };
const char* witt_kind_name(WittKind k);
std::pair<RatFunc, RatFunc> witt_sides(long n, WittKind kind);
bool padic_theorem_check(long n, WittKind kind); // n >= 1

// Numeric comparison of a truncated series against its closed form. Floats are
// doubles, accumulated in ascending n; converged demands both the final error
// and the last term magnitude within tol.
struct SeriesEvalReport {
    std::string identity;
    long p = 0;
    Rational omega, y;
    int terms_used = 0;
    double lhs = 0, rhs = 0, abs_error = 0, tol = 0;
    bool converged = false;
};

// sum_n N_{0,n}(omega+y; p) n!/y^{n+2} against the closed rational expression
// in (omega, y). Domain: y > 0, j - omega > 0 and |omega+y-j| < y for all
// j = 0..p; violations raise DivergenceError naming the failed inequality.
SeriesEvalReport laplace_series_check(long p, const Rational& omega, const Rational& y,
                                      int terms, double tol = 1e-10);

// sum_n n! N_{0,n}(omega; p)/(y+1)^{n+1} against the Bernstein-difference
// series sum_n (-1)^n sum_j (B_j^n - B_{j-1}^n)(omega-j)/y^{n+1}.
// Domain: y > 0, |1+j-omega| < y and |omega-j| < y+1 for all j = 0..p.
SeriesEvalReport bernstein_series_check(long p, const Rational& omega, const Rational& y,
                                        int terms, double tol = 1e-9);

// Alternating series for the Apostol-Euler number E_m(rho), summed exactly and
// compared against the recurrence value. Domain: 2|rho/(1-rho)| < 1, which is
// strictly tighter than |rho/(1-rho)| < 1 (rho = 1/3 already diverges).
struct ApostolEulerSeriesReport {
    long m = 0;
    Rational rho;
    int terms_used = 0;
    Rational value, target;
    double abs_error = 0, tol = 0;
    bool converged = false;
};

ApostolEulerSeriesReport apostol_euler_series(long m, const Rational& rho, double tol = 1e-12,
                                              int max_terms = 2000);

} // namespace cardinal
