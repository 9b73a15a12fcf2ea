#include "cardinal/analysis.hpp"

#include <cmath>

namespace cardinal {
namespace {

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(long p) {
    if (!is_prime_long(p)) throw DomainError("p must be prime, got " + std::to_string(p));
}

void require_coeffs_coprime(const PolyQ& f, long p) {
    for (const Rational& c : f.coeffs())
        if (den(c) % p == 0)
            throw DomainError("coefficient denominator shares a factor with p = " +
                              std::to_string(p));
}

// B_d^k evaluated at a rational point, without building the polynomial.
Rational bernstein_at(long d, long k, const Rational& z) {
    if (d < 0 || d > k) return Rational(0);
    return Rational(binomial(k, d)) * rat_pow(z, d) * rat_pow(Rational(1) - z, k - d);
}

// n! N_{0,n}(x; p) as a scalar: the alternating truncated-power sum.
Rational segment_scaled_at(long n, long p, const Rational& x) {
    Rational acc(0);
    const long top = std::min(p, n + 1);
    for (long j = 0; j <= top; ++j) {
        const Rational t = Rational(binomial(n + 1, j)) * rat_pow(x - j, n);
        acc += (j % 2 == 0) ? t : -t;
    }
    return acc;
}

// Shared coefficient of the Eulerian expansion: (-1)^{j+1} C(n,j) j (rho-1)^{-j} A_{j-1}(rho).
RatFunc eulerian_expansion_coeff(long n, long j, const RatFunc& rm1) {
    RatFunc c = RatFunc(Rational(binomial(n, j) * j)) * RatFunc(eulerian_poly(j - 1)) *
                rm1.pow(-j);
    return j % 2 == 0 ? -c : c;
}

} // namespace

long padic_valuation(const Rational& q, long p) {
    require_prime(p);
    if (q == 0) return kValuationInfinity;
    const auto count = [p](BigInt x) {
        long v = 0;
        x = boost::multiprecision::abs(x);
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        return v;
    };
    return count(num(q)) - count(den(q));
}

Rational power_sum(long k, const BigInt& n_terms) {
    if (k < 0) throw DomainError("power_sum: negative exponent");
    if (n_terms <= 0) return Rational(0);
    Rational acc(0);
    for (long i = 0; i <= k; ++i)
        acc += Rational(binomial(k + 1, i)) * bernoulli(i) * Rational(int_pow(n_terms, k + 1 - i));
    return acc / Rational(k + 1);
}

Rational volkenborn_truncated(const PolyQ& f, long p, long m) {
    require_prime(p);
    if (m < 1) throw DomainError("volkenborn_truncated: level must be >= 1");
    require_coeffs_coprime(f, p);
    const BigInt n_terms = int_pow(BigInt(p), m);
    Rational acc(0);
    if (f.degree() <= 8) {
        const auto& cs = f.coeffs();
        for (size_t k = 0; k < cs.size(); ++k)
            acc += cs[k] * power_sum(static_cast<long>(k), n_terms);
    } else {
        if (n_terms > (1L << 20))
            throw ResourceError("volkenborn_truncated: p^m exceeds the direct-summation "
                                "bound 2^20 at degree > 8");
        const long top = n_terms.convert_to<long>();
        for (long v = 0; v < top; ++v) acc += f.eval(Rational(v));
    }
    return acc / Rational(n_terms);
}

Rational volkenborn_limit(const PolyQ& f) {
    Rational acc(0);
    const auto& cs = f.coeffs();
    for (size_t k = 0; k < cs.size(); ++k) acc += cs[k] * bernoulli(static_cast<long>(k));
    return acc;
}

Rational fermionic_truncated(const PolyQ& f, long p, long m) {
    require_prime(p);
    if (p == 2)
        throw DomainError("fermionic_truncated: p = 2 (the alternating sum needs odd p^m)");
    if (m < 1) throw DomainError("fermionic_truncated: level must be >= 1");
    require_coeffs_coprime(f, p);
    const BigInt n_terms = int_pow(BigInt(p), m);
    if (n_terms > 1000000)
        throw ResourceError("fermionic_truncated: p^m exceeds the summation bound 10^6");
    const long top = n_terms.convert_to<long>();
    Rational acc(0);
    for (long v = 0; v < top; ++v) {
        const Rational fv = f.eval(Rational(v));
        acc += (v % 2 == 0) ? fv : -fv;
    }
    return acc;
}

Rational fermionic_limit(const PolyQ& f) {
    Rational acc(0);
    const auto& cs = f.coeffs();
    for (size_t k = 0; k < cs.size(); ++k) acc += cs[k] * euler_number(static_cast<long>(k));
    return acc;
}

static std::vector<PadicApprox> sweep(const PolyQ& f, long p, long max_m, bool fermionic) {
    std::vector<PadicApprox> rows;
    const Rational target = fermionic ? fermionic_limit(f) : volkenborn_limit(f);
    for (long m = 1; m <= max_m; ++m) {
        const Rational v = fermionic ? fermionic_truncated(f, p, m) : volkenborn_truncated(f, p, m);
        rows.push_back({p, m, v, target, padic_valuation(v - target, p)});
    }
    return rows;
}

std::vector<PadicApprox> volkenborn_sweep(const PolyQ& f, long p, long max_m) {
    return sweep(f, p, max_m, false);
}

std::vector<PadicApprox> fermionic_sweep(const PolyQ& f, long p, long max_m) {
    return sweep(f, p, max_m, true);
}

std::string padic_sweep_csv(const std::vector<PadicApprox>& rows) {
    std::string out = "m,value,valuation\n";
    for (const auto& r : rows) {
        out += std::to_string(r.level) + "," + render(r.value) + ",";
        out += r.distance_valuation == kValuationInfinity ? std::string("inf")
                                                          : std::to_string(r.distance_valuation);
        out += "\n";
    }
    return out;
}

std::pair<BiPoly, BiPoly> epi_sides(long n) {
    if (n < 1) throw DomainError("epi_sides: needs n >= 1");
    const RatFunc rho = RatFunc(PolyQ::variable(Sym::rho));
    const RatFunc rm1 = rho - RatFunc(1L);
    const BiPoly omega_plus_1 = bipoly_var() + BiPoly(RatFunc(1L));
    BiPoly lhs;
    for (long j = 1; j <= n; ++j) {
        const RatFunc c = eulerian_expansion_coeff(n, j, rm1);
        BiPoly bracket = omega_plus_1.pow(n - j) * rho -
                         BiPoly::monomial(RatFunc(1L), static_cast<int>(n - j), Sym::omega);
        lhs = lhs + bracket * c;
    }
    const BiPoly rhs =
        BiPoly::monomial(RatFunc(Rational(n)), static_cast<int>(n - 1), Sym::omega);
    return {lhs, rhs};
}

bool epi_check(long n) {
    const auto [lhs, rhs] = epi_sides(n);
    return lhs == rhs;
}

const char* witt_kind_name(WittKind k) {
    return k == WittKind::bernoulli ? "bernoulli" : "euler";
}

std::pair<RatFunc, RatFunc> witt_sides(long n, WittKind kind) {
    if (n < 1) throw DomainError("witt_sides: needs n >= 1");
    std::vector<Rational> x;
    x.reserve(static_cast<size_t>(n));
    for (long k = 0; k <= n - 1; ++k)
        x.push_back(kind == WittKind::bernoulli ? bernoulli(k) : euler_number(k));
    const RatFunc rho = RatFunc(PolyQ::variable(Sym::rho));
    const RatFunc rm1 = rho - RatFunc(1L);
    RatFunc lhs;
    for (long j = 1; j <= n; ++j) {
        const RatFunc c = eulerian_expansion_coeff(n, j, rm1);
        Rational s(0);
        for (long k = 0; k <= n - j; ++k) s += Rational(binomial(n - j, k)) * x[k];
        lhs = lhs + c * (rho * RatFunc(s) - RatFunc(x[n - j]));
    }
    return {lhs, RatFunc(Rational(n) * x[n - 1])};
}

bool padic_theorem_check(long n, WittKind kind) {
    const auto [lhs, rhs] = witt_sides(n, kind);
    return lhs == rhs;
}

SeriesEvalReport laplace_series_check(long p, const Rational& omega, const Rational& y,
                                      int terms, double tol) {
    if (p < 0) throw DomainError("laplace_series_check: negative p");
    if (terms < 1) throw DomainError("laplace_series_check: needs at least one term");
    if (!(y > 0)) throw DivergenceError("y > 0 violated");
    const Rational x = omega + y;
    Rational ratio(0);
    for (long j = 0; j <= p; ++j) {
        if (!(Rational(j) > omega))
            throw DivergenceError("j - omega > 0 violated at j = " + std::to_string(j));
        const Rational a = rat_abs(x - j);
        if (!(a < y))
            throw DivergenceError("|omega + y - j| < y violated at j = " + std::to_string(j));
        if (a / y > ratio) ratio = a / y;
    }

    Rational rhs_exact(0);
    for (long j = 0; j <= p; ++j) {
        const Rational jw = Rational(j) - omega;
        Rational t = rat_pow(x - j, j) / rat_pow(jw, j + 1);
        if (j >= 1) t += rat_pow(x - j, j - 1) / rat_pow(jw, j);
        rhs_exact += (j % 2 == 0) ? t : -t;
    }
    rhs_exact /= y;

    const double stop = tol * (1.0 - to_double(ratio)) / 2.0;
    double lhs = 0, last = 0;
    int used = 0;
    // Segments with n < p vanish identically, so the sum starts at n = p.
    for (long n = p; n < p + terms; ++n) {
        const Rational tn = segment_scaled_at(n, p, x) / rat_pow(y, n + 2);
        last = to_double(tn);
        lhs += last;
        ++used;
        if (used >= 2 && std::fabs(last) <= stop) break;
    }

    SeriesEvalReport rep;
    rep.identity = "sr";
    rep.p = p;
    rep.omega = omega;
    rep.y = y;
    rep.terms_used = used;
    rep.lhs = lhs;
    rep.rhs = to_double(rhs_exact);
    rep.abs_error = std::fabs(rep.lhs - rep.rhs);
    rep.tol = tol;
    rep.converged = rep.abs_error <= tol && std::fabs(last) <= tol;
    return rep;
}

SeriesEvalReport bernstein_series_check(long p, const Rational& omega, const Rational& y,
                                        int terms, double tol) {
    if (p < 0) throw DomainError("bernstein_series_check: negative p");
    if (terms < 1) throw DomainError("bernstein_series_check: needs at least one term");
    if (!(y > 0)) throw DivergenceError("y > 0 violated");
    Rational ratio_lhs(0), ratio_rhs(0);
    for (long j = 0; j <= p; ++j) {
        const Rational a = rat_abs(Rational(1 + j) - omega);
        if (!(a < y))
            throw DivergenceError("|1 + j - omega| < y violated at j = " + std::to_string(j));
        const Rational b = rat_abs(omega - j);
        if (!(b < y + 1))
            throw DivergenceError("|omega - j| < y + 1 violated at j = " + std::to_string(j));
        if (a / y > ratio_rhs) ratio_rhs = a / y;
        if (b / (y + 1) > ratio_lhs) ratio_lhs = b / (y + 1);
    }

    const double stop_lhs = tol * (1.0 - to_double(ratio_lhs)) / 2.0;
    const double stop_rhs = tol * (1.0 - to_double(ratio_rhs)) / 2.0;
    double lhs = 0, rhs = 0, last_lhs = 0, last_rhs = 0;
    int used_lhs = 0, used_rhs = 0;
    // Same support argument as the spline series: n < p contributes nothing.
    for (long n = p; n < p + terms; ++n) {
        const Rational tn = segment_scaled_at(n, p, omega) / rat_pow(y + 1, n + 1);
        last_lhs = to_double(tn);
        lhs += last_lhs;
        ++used_lhs;
        if (used_lhs >= 2 && std::fabs(last_lhs) <= stop_lhs) break;
    }
    for (int n = 0; n < terms; ++n) {
        Rational tn(0);
        for (long j = 0; j <= p; ++j)
            tn += bernstein_at(j, n, omega - j) - bernstein_at(j - 1, n, omega - j);
        tn /= rat_pow(y, n + 1);
        if (n % 2 == 1) tn = -tn;
        last_rhs = to_double(tn);
        rhs += last_rhs;
        used_rhs = n + 1;
        if (n >= 1 && std::fabs(last_rhs) <= stop_rhs) break;
    }

    SeriesEvalReport rep;
    rep.identity = "bernstein";
    rep.p = p;
    rep.omega = omega;
    rep.y = y;
    rep.terms_used = std::max(used_lhs, used_rhs);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.abs_error = std::fabs(lhs - rhs);
    rep.tol = tol;
    rep.converged = rep.abs_error <= tol &&
                    std::max(std::fabs(last_lhs), std::fabs(last_rhs)) <= tol;
    return rep;
}

ApostolEulerSeriesReport apostol_euler_series(long m, const Rational& rho, double tol,
                                              int max_terms) {
    if (m < 0) throw DomainError("apostol_euler_series: negative m");
    if (max_terms < 1) throw DomainError("apostol_euler_series: needs at least one term");
    if (rho == 1) throw DomainError("apostol_euler_series: rho = 1 is a pole");
    const Rational ratio_arg = rho / (Rational(1) - rho);
    const Rational twice = 2 * rat_abs(ratio_arg);
    if (!(twice < 1))
        throw DivergenceError("2|rho/(1-rho)| < 1 violated (got " + render(twice) + ")");

    const Rational prefactor = Rational(2) / (Rational(1) - rho);
    const double pref = to_double(prefactor);
    const double stop = tol * (1.0 - to_double(twice)) / 2.0;
    Rational acc(0);
    double last = 0;
    int used = 0;
    for (int n = 0; n < max_terms; ++n) {
        BigInt s = 0;
        for (long h = 0; h <= n; ++h) s += binomial(n, h) * int_pow(BigInt(h), m);
        Rational term = rat_pow(ratio_arg, n) * Rational(s);
        if (n % 2 == 1) term = -term;
        acc += term;
        used = n + 1;
        last = to_double(term) * pref;
        if (n >= 1 && std::fabs(last) <= stop) break;
    }

    ApostolEulerSeriesReport rep;
    rep.m = m;
    rep.rho = rho;
    rep.terms_used = used;
    rep.value = prefactor * acc;
    rep.target = apostol_euler_number(m).eval(rho);
    rep.abs_error = std::fabs(to_double(rep.value - rep.target));
    rep.tol = tol;
    rep.converged = rep.abs_error <= tol && std::fabs(last) <= tol;
    return rep;
}

} // namespace cardinal
