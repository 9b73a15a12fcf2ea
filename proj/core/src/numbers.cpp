#include "cardinal/numbers.hpp"

#include <algorithm>
#include <numeric>

#include "cardinal/spline.hpp"

namespace cardinal {
namespace {

RatFunc rho_var() { return RatFunc(PolyQ::variable(Sym::rho)); }
PolyQ rho_poly() { return PolyQ::variable(Sym::rho); }
PolyQ phi_poly() { return PolyQ::variable(Sym::phi); }

// H_0..H_n. The printed recurrence carries H_n on both sides; the rearranged
// form H_n = (sum_{j<n} C(n,j) H_j) / (phi - 1) is what actually computes.
std::vector<RatFunc> frobenius_upto(long n) {
    if (n < 0) throw DomainError("frobenius_number: negative index");
    std::vector<RatFunc> h;
    h.reserve(static_cast<size_t>(n) + 1);
    h.emplace_back(1L);
    const RatFunc phim1 = RatFunc(phi_poly() - poly_const(Rational(1)));
    for (long k = 1; k <= n; ++k) {
        RatFunc acc;
        for (long j = 0; j < k; ++j) acc = acc + RatFunc(Rational(binomial(k, j))) * h[j];
        h.push_back(acc / phim1);
    }
    return h;
}

std::vector<RatFunc> apostol_euler_upto(long n) {
    if (n < 0) throw DomainError("apostol_euler_number: negative index");
    const RatFunc rho = rho_var();
    const RatFunc one(1L);
    std::vector<RatFunc> e;
    e.reserve(static_cast<size_t>(n) + 1);
    e.push_back(RatFunc(2L) / (one + rho));
    for (long k = 1; k <= n; ++k) {
        // rho * sum_{j<=k} C(k,j) E_j + E_k = 0
        RatFunc acc;
        for (long j = 0; j < k; ++j) acc = acc + RatFunc(Rational(binomial(k, j))) * e[j];
        e.push_back(-(rho * acc) / (rho + one));
    }
    return e;
}

BiPoly binomial_convolve(const std::vector<RatFunc>& nums, long n) {
    // sum_j C(n,j) omega^{n-j} nums[j]
    BiPoly acc;
    for (long j = 0; j <= n; ++j) {
        const RatFunc c = RatFunc(Rational(binomial(n, j))) * nums[j];
        if (c.is_zero()) continue;
        acc = acc + BiPoly::monomial(c, static_cast<int>(n - j), Sym::omega);
    }
    return acc;
}

} // namespace

BigInt stirling2(long n, long c) {
    if (n < 0) throw DomainError("stirling2: negative n");
    if (c < 0 || c > n) return 0;
    // per-call triangle; cheap at desk scale and trivially thread-safe
    std::vector<BigInt> row(1, BigInt(1)); // S2(0, *)
    for (long i = 1; i <= n; ++i) {
        std::vector<BigInt> next(static_cast<size_t>(std::min(i, c)) + 1, BigInt(0));
        for (long j = 1; j <= std::min(i, c); ++j) {
            BigInt v = 0;
            if (j < i && static_cast<size_t>(j) < row.size()) v += j * row[j];
            if (static_cast<size_t>(j - 1) < row.size()) v += row[j - 1];
            next[static_cast<size_t>(j)] = v;
        }
        if (c == 0) next[0] = 0; // S2(i, 0) = 0 for i >= 1
        row = std::move(next);
    }
    return static_cast<size_t>(c) < row.size() ? row[static_cast<size_t>(c)] : BigInt(0);
}

PolyQ array_poly(long c, long n) {
    if (c < 0 || n < 0) throw DomainError("array_poly: negative index");
    PolyQ acc;
    for (long k = c; k <= n; ++k) {
        const BigInt s = stirling2(k, c);
        if (s == 0) continue;
        acc = acc + PolyQ::monomial(Rational(binomial(n, k) * s), static_cast<int>(n - k),
                                    Sym::omega);
    }
    return acc;
}

BigInt eulerian_number(long n, long j) {
    if (n < 0) throw DomainError("eulerian_number: negative n");
    if (j < 0 || j > n) throw DomainError("eulerian_number: j out of range 0..n");
    BigInt acc = 0;
    for (long v = 0; v <= j; ++v) {
        const BigInt term = binomial(n + 1, v) * int_pow(BigInt(j - v), n);
        acc += (v % 2 == 0) ? term : -term;
    }
    return acc;
}

EulerianRow eulerian_row(long n) {
    EulerianRow r;
    r.n = n;
    for (long j = 0; j <= n; ++j) r.a.push_back(eulerian_number(n, j));
    return r;
}

EulerianRow eulerian_bruteforce(long n) {
    if (n < 0) throw DomainError("eulerian_bruteforce: negative n");
    if (n > 9) throw ResourceError("eulerian_bruteforce: n > 9 costs n! permutations");
    EulerianRow r;
    r.n = n;
    r.a.assign(static_cast<size_t>(n) + 1, BigInt(0));
    if (n == 0) {
        r.a[0] = 1; // the empty permutation; statistic 0
        return r;
    }
    std::vector<long> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        long ascents = 0;
        for (size_t i = 0; i + 1 < perm.size(); ++i)
            if (perm[i] < perm[i + 1]) ++ascents;
        r.a[static_cast<size_t>(1 + ascents)] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

PolyQ eulerian_poly(long n) {
    const EulerianRow row = eulerian_row(n);
    std::vector<Rational> cs;
    cs.reserve(row.a.size());
    for (const BigInt& v : row.a) cs.emplace_back(v);
    return PolyQ(std::move(cs), Sym::rho);
}

RatFunc frobenius_number(long n) { return frobenius_upto(n).back(); }

BiPoly frobenius_poly(long n) { return binomial_convolve(frobenius_upto(n), n); }

RatFunc apostol_bernoulli_number(long n) {
    if (n < 0) throw DomainError("apostol_bernoulli_number: negative index");
    if (n == 0) return RatFunc();
    // n/(rho-1)^n * sum_s (-1)^s s! S2(n-1,s) rho^s (rho-1)^{n-1-s}
    const PolyQ rm1 = rho_poly() - poly_const(Rational(1));
    PolyQ num;
    for (long s = 0; s <= n - 1; ++s) {
        const BigInt s2 = stirling2(n - 1, s);
        if (s2 == 0) continue;
        Rational coeff(factorial(s) * s2);
        if (s % 2 == 1) coeff = -coeff;
        num = num + coeff * (PolyQ::monomial(Rational(1), static_cast<int>(s), Sym::rho) *
                             rm1.pow(n - 1 - s));
    }
    return RatFunc(Rational(n) * num, rm1.pow(n));
}

const char* ab_method_name(AbMethod m) {
    switch (m) {
        case AbMethod::binomial: return "binomial";
        case AbMethod::bernstein: return "bernstein";
        case AbMethod::array: return "array";
        case AbMethod::stirling: return "stirling";
    }
    return "?";
}

AbMethod parse_ab_method(const std::string& name) {
    for (AbMethod m : {AbMethod::binomial, AbMethod::bernstein, AbMethod::array,
                       AbMethod::stirling})
        if (name == ab_method_name(m)) return m;
    throw UsageError("unknown apostol-bernoulli method '" + name +
                     "' (known: binomial, bernstein, array, stirling)");
}

BiPoly apostol_bernoulli_poly(long n, AbMethod method) {
    if (n < 0) throw DomainError("apostol_bernoulli_poly: negative index");
    const RatFunc rho = rho_var();
    const RatFunc one(1L);
    switch (method) {
        case AbMethod::binomial: {
            std::vector<RatFunc> nums;
            nums.reserve(static_cast<size_t>(n) + 1);
            for (long j = 0; j <= n; ++j) nums.push_back(apostol_bernoulli_number(j));
            return binomial_convolve(nums, n);
        }
        case AbMethod::bernstein: {
            // Bernstein-basis double sum; the C(j-1,s) denominator is guarded by
            // skipping terms whose Stirling factor vanishes.
            BiPoly acc;
            const RatFunc rm1 = rho - one;
            for (long j = 1; j <= n; ++j) {
                RatFunc inner;
                for (long s = 0; s <= j - 1; ++s) {
                    const BigInt s2 = stirling2(j - 1, s);
                    if (s2 == 0) continue;
                    const Rational scalar =
                        Rational(factorial(s) * s2) / Rational(binomial(j - 1, s));
                    inner = inner +
                            RatFunc(scalar) * RatFunc(bernstein(s, j - 1, Sym::rho));
                }
                RatFunc coeff = RatFunc(Rational(binomial(n, j) * j)) * inner / rm1.pow(j);
                if (j % 2 == 0) coeff = -coeff; // (-1)^{j-1}
                if (coeff.is_zero()) continue;
                acc = acc + BiPoly::monomial(coeff, static_cast<int>(n - j), Sym::omega);
            }
            return acc;
        }
        case AbMethod::array: {
            if (n < 1) throw DomainError("apostol_bernoulli_poly(array): needs n >= 1");
            const RatFunc ratio = rho / (one - rho);
            BiPoly bracket = BiPoly::monomial(one, static_cast<int>(n - 1), Sym::omega);
            for (long u = 1; u <= n - 1; ++u) {
                const RatFunc s = ratio.pow(u) * RatFunc(Rational(factorial(u)));
                bracket = bracket + bipoly_lift(array_poly(u, n - 1)) * s;
            }
            return bracket * (RatFunc(Rational(n)) / (rho - one));
        }
        case AbMethod::stirling: {
            if (n < 1) throw DomainError("apostol_bernoulli_poly(stirling): needs n >= 1");
            const RatFunc ratio = rho / (one - rho);
            BiPoly bracket = BiPoly::monomial(one, static_cast<int>(n - 1), Sym::omega);
            for (long v = 0; v <= n - 1; ++v) {
                RatFunc inner;
                for (long u = 1; u <= v; ++u) {
                    const BigInt s2 = stirling2(v, u);
                    if (s2 == 0) continue;
                    inner = inner + ratio.pow(u) * RatFunc(Rational(factorial(u) * s2));
                }
                if (inner.is_zero()) continue;
                inner = inner * RatFunc(Rational(binomial(n - 1, v)));
                bracket = bracket + BiPoly::monomial(inner, static_cast<int>(n - 1 - v),
                                                     Sym::omega);
            }
            return bracket * (RatFunc(Rational(n)) / (rho - one));
        }
    }
    throw UsageError("unhandled apostol-bernoulli method");
}

RatFunc apostol_euler_number(long n) { return apostol_euler_upto(n).back(); }

BiPoly apostol_euler_poly(long n) { return binomial_convolve(apostol_euler_upto(n), n); }

PolyQ geometric_poly(long n) {
    if (n < 0) throw DomainError("geometric_poly: negative index");
    PolyQ acc;
    for (long j = 0; j <= n; ++j) {
        const BigInt s2 = stirling2(n, j);
        if (s2 == 0) continue;
        acc = acc + PolyQ::monomial(Rational(factorial(j) * s2), static_cast<int>(j), Sym::w);
    }
    return acc;
}

Rational y1(long m, long n) {
    if (m < 0 || n < 0) throw DomainError("y1: negative index");
    BigInt acc = 0;
    for (long h = 0; h <= n; ++h) acc += binomial(n, h) * int_pow(BigInt(h), m);
    return Rational(acc) / Rational(factorial(n));
}

Rational bernoulli(long n) {
    if (n < 0) throw DomainError("bernoulli: negative index");
    std::vector<Rational> b;
    b.reserve(static_cast<size_t>(n) + 1);
    b.emplace_back(1);
    for (long k = 1; k <= n; ++k) {
        Rational acc(0);
        for (long j = 0; j < k; ++j) acc += Rational(binomial(k + 1, j)) * b[j];
        b.push_back(-acc / Rational(k + 1));
    }
    return b.back();
}

Rational euler_number(long n) { return frobenius_number(n).eval(Rational(-1)); }

const std::vector<ConventionEntry>& convention_ledger() {
    static const std::vector<ConventionEntry> entries = {
        {"eulerian",
         "A_n(rho) = sum_{j=0}^n A_{n,j} rho^j with A_{n,j} = sum_v (-1)^v C(n+1,v)(j-v)^n; "
         "A_0 = 1, A_1 = rho.",
         "the classical low-order value list circulates divided by rho (e.g. it prints "
         "A_4 = rho^3+11rho^2+11rho+1 where the canonical polynomial is rho times that), "
         "so indices there appear shifted by one."},
        {"euler-frobenius",
         "H_n(phi) from (1-phi)/(e^t - phi); computed by H_n = (sum_{j<n} C(n,j) H_j)/(phi-1).",
         "the recurrence is often printed as H_n = (1/phi) sum_{j<=n} C(n,j) H_j, which "
         "carries H_n on both sides and only determines H_n after rearrangement."},
        {"bernoulli",
         "B_1 = -1/2; the Volkenborn limit of truncated means fixes this sign.",
         "both sign conventions for B_1 circulate; the +1/2 convention is incompatible "
         "with the p-adic integral identities checked here."},
        {"apostol-bernoulli",
         "-B_{k+1}(rho)/(k+1) = (rho d/drho)^k {1/(1-rho)}; the spline-sum identity reads "
         "B_{n+1}(rho) = (-1)^n (n+1)! (rho-1)^{-(n+1)} sum_j N_{0,n}(j;j) rho^j.",
         "the theta-operator identity is sometimes printed with denominator n+1 instead of "
         "k+1, and the spline-sum identity with (rho-1)^{n+1} as a factor instead of a "
         "divisor; both forms fail on direct evaluation at small n."},
        {"uniform-bspline-derivative",
         "d^v/domega^v N_{0,n}(omega;p) = (1/n!) sum_{d} C(n,d)C(d,v)v! sum_m "
         "(-1)^{v+d-m} C(v,m) sum_j (B_{j-m}^{d-v} - B_{j-m-1}^{d-v})(omega-j).",
         "the double-sum theorem circulates without the 1/n! prefactor and with sign "
         "(-1)^{v+n-d-m}; coefficient comparison in its own derivation restores both."},
        {"laplace-series",
         "sum_n N_{0,n}(omega+y;p) n!/y^{n+2} = (1/y) sum_j (-1)^j [(omega+y-j)^j/(j-omega)^{j+1}"
         " + (omega+y-j)^{j-1}/(j-omega)^j], second bracket absent at j=0.",
         "the identity is sometimes stated with argument omega and with a j=0 copy of the "
         "second bracket; both make the two sides disagree term by term."},
    };
    return entries;
}

} // namespace cardinal
