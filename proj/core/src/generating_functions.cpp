#include "cardinal/generating_functions.hpp"

namespace cardinal {
namespace {

constexpr auto kEgf = SeriesKind::exponential;
constexpr auto kOgf = SeriesKind::ordinary;

template <class C>
PowerSeries<C> series_pow(const PowerSeries<C>& base, long e, int order) {
    PowerSeries<C> acc = PowerSeries<C>::constant(base.kind(), C(1L), order);
    for (long i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

// (e^t - 1)^c over any scalar ring S.
template <class S>
PowerSeries<S> expm1_pow(long c, int order) {
    PowerSeries<S> e = PowerSeries<S>::exp_linear(kEgf, S(1L), order);
    e.set(0, S());
    return series_pow(e, c, order);
}

// S is the scalar ring of the parameter (RatFunc for symbolic rho/phi,
// Rational when specialized); P is the polynomial ring in omega over S.

template <class S>
PowerSeries<S> ab_numbers(const S& rho, int order) {
    PowerSeries<S> num(kEgf, order);
    if (order >= 1) num.set(1, S(1L));
    PowerSeries<S> den(kEgf, order);
    den.set(0, rho - S(1L));
    for (int n = 1; n <= order; ++n) den.set(n, rho);
    return num / den;
}

template <class P, class S>
PowerSeries<P> ab_polys(const S& rho, int order) {
    PowerSeries<P> num =
        PowerSeries<P>::exp_linear(kEgf, P::variable(Sym::omega), order).shift_t(1);
    PowerSeries<P> den(kEgf, order);
    den.set(0, P(rho) - P(S(1L)));
    for (int n = 1; n <= order; ++n) den.set(n, P(rho));
    return num / den;
}

template <class S>
PowerSeries<S> fe_numbers(const S& phi, int order) {
    PowerSeries<S> num = PowerSeries<S>::constant(kEgf, S(1L) - phi, order);
    PowerSeries<S> den(kEgf, order);
    den.set(0, S(1L) - phi);
    for (int n = 1; n <= order; ++n) den.set(n, S(1L));
    return num / den;
}

template <class P, class S>
PowerSeries<P> fe_polys(const S& phi, int order) {
    PowerSeries<P> num =
        PowerSeries<P>::exp_linear(kEgf, P::variable(Sym::omega), order) * P(S(1L) - phi);
    PowerSeries<P> den(kEgf, order);
    den.set(0, P(S(1L) - phi));
    for (int n = 1; n <= order; ++n) den.set(n, P(S(1L)));
    return num / den;
}

template <class S>
PowerSeries<S> ae_numbers(const S& rho, int order) {
    PowerSeries<S> num = PowerSeries<S>::constant(kEgf, S(1L), order);
    PowerSeries<S> den(kEgf, order);
    den.set(0, rho + S(1L));
    for (int n = 1; n <= order; ++n) den.set(n, rho);
    return num / den;
}

template <class P, class S>
PowerSeries<P> ae_polys(const S& rho, int order) {
    PowerSeries<P> num = PowerSeries<P>::exp_linear(kEgf, P::variable(Sym::omega), order);
    PowerSeries<P> den(kEgf, order);
    den.set(0, P(rho) + P(S(1L)));
    for (int n = 1; n <= order; ++n) den.set(n, P(rho));
    return num / den;
}

// 1 / (1 - rho e^{t(1-rho)}).
template <class S>
PowerSeries<S> eulerian_series(const S& rho, int order) {
    PowerSeries<S> num = PowerSeries<S>::constant(kEgf, S(1L), order);
    PowerSeries<S> den =
        PowerSeries<S>::constant(kEgf, S(1L), order) -
        PowerSeries<S>::exp_linear(kEgf, S(1L) - rho, order) * rho;
    return num / den;
}

template <class P, class S>
PowerSeries<P> bernstein_series(long d, int order) {
    P omega = P::variable(Sym::omega);
    PowerSeries<P> e = PowerSeries<P>::exp_linear(kEgf, P(S(1L)) - omega, order);
    return e.shift_t(static_cast<int>(d)) * cpow(omega, d);
}

// Ordinary Goldman series; the j-th summand is assembled as an honest Cauchy
// product so the closed Schoenberg form stays an independent route.
template <class P, class S>
PowerSeries<P> goldman_series(long p, int order) {
    P omega = P::variable(Sym::omega);
    PowerSeries<P> acc(kOgf, order);
    for (long j = 0; j <= p; ++j) {
        const P base = omega - P(S(static_cast<long>(j)));
        PowerSeries<P> part =
            PowerSeries<P>::constant(kOgf, cpow(base, j), order).shift_t(static_cast<int>(j)) *
            scale(P(S(1L)), Rational(1) / Rational(factorial(j)));
        if (j >= 1) {
            PowerSeries<P> second = PowerSeries<P>::constant(kOgf, cpow(base, j - 1), order)
                                        .shift_t(static_cast<int>(j - 1)) *
                                    scale(P(S(1L)), Rational(1) / Rational(factorial(j - 1)));
            part = part + second;
        }
        part = part * PowerSeries<P>::exp_linear(kOgf, base, order);
        if (j % 2 == 1) part = -part;
        acc = acc + part;
    }
    return acc;
}

RatFunc rho_var() { return RatFunc(PolyQ::variable(Sym::rho)); }
RatFunc phi_var() { return RatFunc(PolyQ::variable(Sym::phi)); }

long require_index(const std::optional<long>& v, const char* name, GfKind k) {
    if (!v) throw UsageError(std::string("gf kind '") + gf_kind_name(k) +
                             "' requires parameter " + name);
    if (*v < 0) throw UsageError(std::string("parameter ") + name + " must be nonnegative");
    return *v;
}

void reject_scalar_params(const GfParams& p, GfKind k) {
    if (p.rho || p.phi)
        throw UsageError(std::string("gf kind '") + gf_kind_name(k) +
                         "' does not take rho/phi parameters");
}

void check_not_pole(const Rational& value, const Rational& excluded, const char* pname,
                    GfKind k) {
    if (value == excluded)
        throw DomainError(std::string(pname) + "=" + render(excluded) + " is a pole of '" +
                          gf_kind_name(k) + "'; expansion is undefined there");
}

} // namespace

const char* gf_kind_name(GfKind k) {
    switch (k) {
        case GfKind::stirling2: return "stirling2";
        case GfKind::array: return "array";
        case GfKind::apostol_bernoulli_numbers: return "apostol_bernoulli_numbers";
        case GfKind::apostol_bernoulli_polys: return "apostol_bernoulli_polys";
        case GfKind::frobenius_numbers: return "frobenius_numbers";
        case GfKind::frobenius_polys: return "frobenius_polys";
        case GfKind::apostol_euler_numbers: return "apostol_euler_numbers";
        case GfKind::apostol_euler_polys: return "apostol_euler_polys";
        case GfKind::eulerian: return "eulerian";
        case GfKind::bernstein: return "bernstein";
        case GfKind::goldman: return "goldman";
    }
    return "?";
}

std::vector<GfKind> all_gf_kinds() {
    return {GfKind::stirling2,
            GfKind::array,
            GfKind::apostol_bernoulli_numbers,
            GfKind::apostol_bernoulli_polys,
            GfKind::frobenius_numbers,
            GfKind::frobenius_polys,
            GfKind::apostol_euler_numbers,
            GfKind::apostol_euler_polys,
            GfKind::eulerian,
            GfKind::bernstein,
            GfKind::goldman};
}

GfKind parse_gf_kind(const std::string& name) {
    for (GfKind k : all_gf_kinds())
        if (name == gf_kind_name(k)) return k;
    std::string known;
    for (GfKind k : all_gf_kinds()) {
        if (!known.empty()) known += ", ";
        known += gf_kind_name(k);
    }
    throw UsageError("unknown gf kind '" + name + "' (known: " + known + ")");
}

PowerSeries<Rational> gf_stirling2(long c, int order) { return expm1_pow<Rational>(c, order); }

PowerSeries<PolyQ> gf_array(long c, int order) {
    PowerSeries<PolyQ> e =
        PowerSeries<PolyQ>::exp_linear(kEgf, PolyQ::variable(Sym::omega), order);
    return e * expm1_pow<PolyQ>(c, order);
}

PowerSeries<RatFunc> gf_apostol_bernoulli_numbers(int order) {
    return ab_numbers<RatFunc>(rho_var(), order);
}
PowerSeries<BiPoly> gf_apostol_bernoulli_polys(int order) {
    return ab_polys<BiPoly, RatFunc>(rho_var(), order);
}
PowerSeries<RatFunc> gf_frobenius_numbers(int order) {
    return fe_numbers<RatFunc>(phi_var(), order);
}
PowerSeries<BiPoly> gf_frobenius_polys(int order) {
    return fe_polys<BiPoly, RatFunc>(phi_var(), order);
}
PowerSeries<RatFunc> gf_apostol_euler_numbers(int order) {
    return ae_numbers<RatFunc>(rho_var(), order);
}
PowerSeries<BiPoly> gf_apostol_euler_polys(int order) {
    return ae_polys<BiPoly, RatFunc>(rho_var(), order);
}
PowerSeries<RatFunc> gf_eulerian(int order) {
    return eulerian_series<RatFunc>(rho_var(), order);
}
PowerSeries<PolyQ> gf_bernstein(long d, int order) {
    return bernstein_series<PolyQ, Rational>(d, order);
}
PowerSeries<PolyQ> gf_goldman(long p, int order) {
    return goldman_series<PolyQ, Rational>(p, order);
}

GfSeries gf_expand(GfKind kind, const GfParams& params, int order) {
    if (order < 0) throw UsageError("expansion order must be nonnegative");
    switch (kind) {
        case GfKind::stirling2: {
            reject_scalar_params(params, kind);
            return gf_stirling2(require_index(params.c, "c", kind), order);
        }
        case GfKind::array: {
            reject_scalar_params(params, kind);
            return gf_array(require_index(params.c, "c", kind), order);
        }
        case GfKind::bernstein: {
            reject_scalar_params(params, kind);
            return gf_bernstein(require_index(params.d, "d", kind), order);
        }
        case GfKind::goldman: {
            reject_scalar_params(params, kind);
            return gf_goldman(require_index(params.p, "p", kind), order);
        }
        case GfKind::apostol_bernoulli_numbers: {
            if (params.phi) throw UsageError("apostol kinds take rho, not phi");
            if (params.rho) {
                check_not_pole(*params.rho, Rational(1), "rho", kind);
                return ab_numbers<Rational>(*params.rho, order);
            }
            return gf_apostol_bernoulli_numbers(order);
        }
        case GfKind::apostol_bernoulli_polys: {
            if (params.phi) throw UsageError("apostol kinds take rho, not phi");
            if (params.rho) {
                check_not_pole(*params.rho, Rational(1), "rho", kind);
                return ab_polys<PolyQ, Rational>(*params.rho, order);
            }
            return gf_apostol_bernoulli_polys(order);
        }
        case GfKind::frobenius_numbers: {
            if (params.rho) throw UsageError("frobenius kinds take phi, not rho");
            if (params.phi) {
                check_not_pole(*params.phi, Rational(1), "phi", kind);
                return fe_numbers<Rational>(*params.phi, order);
            }
            return gf_frobenius_numbers(order);
        }
        case GfKind::frobenius_polys: {
            if (params.rho) throw UsageError("frobenius kinds take phi, not rho");
            if (params.phi) {
                check_not_pole(*params.phi, Rational(1), "phi", kind);
                return fe_polys<PolyQ, Rational>(*params.phi, order);
            }
            return gf_frobenius_polys(order);
        }
        case GfKind::apostol_euler_numbers: {
            if (params.phi) throw UsageError("apostol kinds take rho, not phi");
            if (params.rho) {
                check_not_pole(*params.rho, Rational(-1), "rho", kind);
                return ae_numbers<Rational>(*params.rho, order);
            }
            return gf_apostol_euler_numbers(order);
        }
        case GfKind::apostol_euler_polys: {
            if (params.phi) throw UsageError("apostol kinds take rho, not phi");
            if (params.rho) {
                check_not_pole(*params.rho, Rational(-1), "rho", kind);
                return ae_polys<PolyQ, Rational>(*params.rho, order);
            }
            return gf_apostol_euler_polys(order);
        }
        case GfKind::eulerian: {
            if (params.phi) throw UsageError("eulerian takes rho, not phi");
            if (params.rho) {
                check_not_pole(*params.rho, Rational(1), "rho", kind);
                return eulerian_series<Rational>(*params.rho, order);
            }
            return gf_eulerian(order);
        }
    }
    throw UsageError("unhandled gf kind");
}

GfSeries gf_expand(const std::string& kind, const GfParams& params, int order) {
    return gf_expand(parse_gf_kind(kind), params, order);
}

} // namespace cardinal
