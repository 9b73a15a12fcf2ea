#include "cardinal/registry.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "cardinal/generating_functions.hpp"
#include "render.hpp"

namespace cardinal {

const char* case_mode_name(CaseMode m) {
    switch (m) {
        case CaseMode::exact_symbolic: return "exact-symbolic";
        case CaseMode::numeric_series: return "numeric-series";
        case CaseMode::padic_convergence: return "padic-convergence";
    }
    return "?";
}

const char* case_status_name(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::skipped_domain: return "skipped-domain";
    }
    return "?";
}

namespace {

class Stopwatch {
    std::chrono::steady_clock::time_point t_ = std::chrono::steady_clock::now();

public:
    long lap_ms() {
        const auto now = std::chrono::steady_clock::now();
        return static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(now - t_).count());
    }
};

std::string num(long v) { return std::to_string(v); }

// Most symbolic cases walk a grid and stop at the first mismatch; the report
// then carries the failing point and both canonical witnesses.
template <class T>
bool expect(Report& rep, const std::string& point, const T& lhs, const T& rhs) {
    if (lhs == rhs) return true;
    rep.status = CaseStatus::fail;
    rep.params = point;
    rep.lhs = witness(lhs);
    rep.rhs = witness(rhs);
    return false;
}

bool expect_zero(Report& rep, const std::string& point, const PolyQ& f) {
    if (f.is_zero()) return true;
    rep.status = CaseStatus::fail;
    rep.params = point;
    rep.lhs = witness(f);
    rep.rhs = "0";
    return false;
}

template <class Fn>
std::vector<Report> symbolic_case(const char* id, std::string range, Fn&& body) {
    Report rep;
    rep.id = id;
    rep.params = std::move(range);
    Stopwatch sw;
    body(rep);
    rep.elapsed_ms = sw.lap_ms();
    return {rep};
}

std::string row_witness(const EulerianRow& r) {
    std::string s = "[";
    for (size_t i = 0; i < r.a.size(); ++i) {
        if (i) s += ";";
        s += render(r.a[i]);
    }
    return s + "]";
}

bool expect_row(Report& rep, const std::string& point, const EulerianRow& lhs,
                const EulerianRow& rhs) {
    if (lhs == rhs) return true;
    rep.status = CaseStatus::fail;
    rep.params = point;
    rep.lhs = row_witness(lhs);
    rep.rhs = row_witness(rhs);
    return false;
}

PolyQ rho_poly() { return poly_var(Sym::rho); }
RatFunc rho_rf() { return RatFunc(poly_var(Sym::rho)); }
PolyQ one_minus_rho_poly() { return poly_const(Rational(1)) - poly_var(Sym::rho); }
RatFunc one_minus_rho() { return RatFunc(one_minus_rho_poly()); }

// C(omega + shift, n) = prod_{i=0}^{n-1} (omega + shift - i) / n!
PolyQ binom_poly(long shift, long n) {
    PolyQ acc = poly_const(Rational(1));
    for (long i = 0; i < n; ++i)
        acc = acc * (poly_var(Sym::omega) + poly_const(Rational(shift - i)));
    return acc * Rational(BigInt(1), factorial(n));
}

// Coefficient-wise rho -> -rho.
BiPoly subst_neg_rho(const BiPoly& f) {
    const RatFunc neg = RatFunc(-rho_poly());
    std::vector<RatFunc> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(c.compose(neg));
    return BiPoly(std::move(cs), f.sym());
}

// --- exact symbolic cases -------------------------------------------------

std::vector<Report> case_worpitzky(long max_n) {
    return symbolic_case("worpitzky", "n=0.." + num(max_n), [&](Report& rep) {
        for (long n = 0; n <= max_n; ++n) {
            PolyQ lhs;
            for (long v = 0; v <= n; ++v)
                lhs = lhs + binom_poly(v - 1, n) * Rational(eulerian_number(n, v));
            const PolyQ rhs = PolyQ::monomial(Rational(1), static_cast<int>(n), Sym::omega);
            if (!expect(rep, "n=" + num(n), lhs, rhs)) return;
        }
    });
}

std::vector<Report> case_eulerian_row(long max_n) {
    const long hi = std::min<long>(max_n, 9); // brute force refuses larger n
    return symbolic_case("eulerian-row", "n=0.." + num(hi), [&](Report& rep) {
        for (long n = 0; n <= hi; ++n)
            if (!expect_row(rep, "n=" + num(n), eulerian_row(n), eulerian_bruteforce(n))) return;
    });
}

std::vector<Report> case_eulerian_umbral(long max_n) {
    return symbolic_case("eulerian-umbral", "n=1.." + num(max_n), [&](Report& rep) {
        const PolyQ om = one_minus_rho_poly();
        for (long n = 1; n <= max_n; ++n) {
            PolyQ rhs;
            for (long j = 0; j <= n; ++j)
                rhs = rhs + eulerian_poly(j) * Rational(binomial(n, j)) * om.pow(n - j);
            rhs = rhs * rho_poly();
            if (!expect(rep, "n=" + num(n), eulerian_poly(n), rhs)) return;
        }
    });
}

std::vector<Report> case_eulerian_stirling_sum(long max_n) {
    return symbolic_case("eulerian-stirling-sum", "m=1.." + num(max_n), [&](Report& rep) {
        const PolyQ om = one_minus_rho_poly();
        const RatFunc ratio = rho_rf() / one_minus_rho();
        for (long m = 1; m <= max_n; ++m) {
            const PolyQ ref = eulerian_poly(m);
            PolyQ plain;
            RatFunc folded;
            for (long k = 1; k <= m; ++k) {
                const Rational w(factorial(k) * stirling2(m, k));
                plain = plain + PolyQ::monomial(w, static_cast<int>(k), Sym::rho) * om.pow(m - k);
                folded = folded + ratio.pow(k) * RatFunc(w);
            }
            folded = folded * RatFunc(om.pow(m));
            if (!expect(rep, "m=" + num(m) + " route=plain", plain, ref)) return;
            if (!expect(rep, "m=" + num(m) + " route=folded", folded, RatFunc(ref))) return;
        }
    });
}

std::vector<Report> case_apostol_eulerian_link(long max_n) {
    return symbolic_case("apostol-eulerian-link", "n=1.." + num(max_n), [&](Report& rep) {
        const PolyQ om = one_minus_rho_poly();
        for (long n = 1; n <= max_n; ++n) {
            const RatFunc lhs = RatFunc(eulerian_poly(n - 1));
            const RatFunc rhs =
                -(RatFunc(om.pow(n)) * apostol_bernoulli_number(n)) / RatFunc(Rational(n));
            if (!expect(rep, "n=" + num(n), lhs, rhs)) return;
        }
    });
}

std::vector<Report> case_frobenius_link(long max_n) {
    return symbolic_case("frobenius-link", "n=1.." + num(max_n), [&](Report& rep) {
        const PolyQ om = one_minus_rho_poly();
        const RatFunc inv_rho = RatFunc(1L) / rho_rf();
        for (long n = 1; n <= max_n; ++n) {
            RatFunc sum;
            for (long j = 0; j <= n; ++j)
                sum = sum + frobenius_number(j).compose(inv_rho) * RatFunc(Rational(binomial(n, j)));
            const RatFunc rhs = rho_rf() * RatFunc(om.pow(n)) * sum;
            if (!expect(rep, "n=" + num(n), RatFunc(eulerian_poly(n)), rhs)) return;
        }
    });
}

std::vector<Report> case_geometric_link(long max_n) {
    return symbolic_case("geometric-link", "n=1.." + num(max_n), [&](Report& rep) {
        const RatFunc ratio = rho_rf() / one_minus_rho();
        for (long n = 1; n <= max_n; ++n) {
            const RatFunc w = substitute(geometric_poly(n - 1), ratio);
            const RatFunc rhs = RatFunc(Rational(n)) / (rho_rf() - RatFunc(1L)) * w;
            if (!expect(rep, "n=" + num(n), apostol_bernoulli_number(n), rhs)) return;
        }
    });
}

std::vector<Report> case_geometric_shifted(long max_n) {
    return symbolic_case("geometric-shifted", "n=1.." + num(max_n), [&](Report& rep) {
        const RatFunc shift_arg = rho_rf() / (rho_rf() + RatFunc(1L));
        for (long n = 1; n <= max_n; ++n) {
            const RatFunc lhs = apostol_bernoulli_number(n).compose(shift_arg);
            const RatFunc rhs = RatFunc(Rational(-n)) * (rho_rf() + RatFunc(1L)) *
                                substitute(geometric_poly(n - 1), rho_rf());
            if (!expect(rep, "n=" + num(n), lhs, rhs)) return;
        }
    });
}

std::vector<Report> case_euler_operator(long max_n) {
    return symbolic_case("euler-operator", "k=0.." + num(max_n), [&](Report& rep) {
        const PolyQ om = one_minus_rho_poly();
        const RatFunc geom = RatFunc(1L) / one_minus_rho();
        for (long k = 0; k <= max_n; ++k) {
            const RatFunc theta = euler_operator(geom, k);
            const RatFunc lhs = -apostol_bernoulli_number(k + 1) / RatFunc(Rational(k + 1));
            if (!expect(rep, "k=" + num(k) + " value=apostol-bernoulli", lhs, theta)) return;
            const RatFunc scaled = RatFunc(om.pow(k + 1)) * theta;
            if (!expect(rep, "k=" + num(k) + " value=eulerian", RatFunc(eulerian_poly(k)), scaled))
                return;
        }
    });
}

std::vector<Report> case_apostol_euler_bernoulli(long max_n) {
    return symbolic_case("apostol-euler-bernoulli", "n=0.." + num(max_n), [&](Report& rep) {
        for (long n = 0; n <= max_n; ++n) {
            const BiPoly lhs = apostol_euler_poly(n);
            const BiPoly rhs = subst_neg_rho(apostol_bernoulli_poly(n + 1, AbMethod::binomial)) *
                               RatFunc(Rational(-2) / Rational(n + 1));
            if (!expect(rep, "n=" + num(n), lhs, rhs)) return;
        }
    });
}

std::vector<Report> case_apostol_binomial_shift(long max_n) {
    return symbolic_case("apostol-binomial-shift", "n=1.." + num(max_n), [&](Report& rep) {
        for (long n = 1; n <= max_n; ++n) {
            const BiPoly f = apostol_bernoulli_poly(n, AbMethod::binomial);
            const BiPoly lhs = f.shifted(RatFunc(1L)) * rho_rf() - f;
            const BiPoly rhs =
                BiPoly::monomial(RatFunc(Rational(n)), static_cast<int>(n - 1), Sym::omega);
            if (!expect(rep, "n=" + num(n), lhs, rhs)) return;
            if (n >= 2) {
                const RatFunc at_one = rho_rf() * bipoly_eval(f, Rational(1));
                if (!expect(rep, "n=" + num(n) + " omega=1", at_one, apostol_bernoulli_number(n)))
                    return;
            }
        }
    });
}

std::vector<Report> case_apostol_poly_methods(long max_n) {
    return symbolic_case("apostol-poly-methods", "n=0.." + num(max_n), [&](Report& rep) {
        for (long n = 0; n <= max_n; ++n) {
            const BiPoly ref = apostol_bernoulli_poly(n, AbMethod::binomial);
            const std::string pt = "n=" + num(n);
            if (!expect(rep, pt + " method=bernstein",
                        apostol_bernoulli_poly(n, AbMethod::bernstein), ref))
                return;
            if (n < 1) continue; // the two recurrence-free routes start at degree one
            if (!expect(rep, pt + " method=array", apostol_bernoulli_poly(n, AbMethod::array), ref))
                return;
            if (!expect(rep, pt + " method=stirling",
                        apostol_bernoulli_poly(n, AbMethod::stirling), ref))
                return;
        }
    });
}

std::vector<Report> case_epi(long max_n) {
    return symbolic_case("epi", "n=1.." + num(max_n), [&](Report& rep) {
        for (long n = 1; n <= max_n; ++n) {
            const auto [lhs, rhs] = epi_sides(n);
            if (!expect(rep, "n=" + num(n), lhs, rhs)) return;
        }
    });
}

std::vector<Report> witt_case(WittKind kind, long max_n) {
    Report rep;
    rep.id = std::string("witt-") + witt_kind_name(kind);
    rep.params = "n=1.." + num(max_n);
    Stopwatch sw;
    for (long n = 1; n <= max_n; ++n) {
        const auto [lhs, rhs] = witt_sides(n, kind);
        if (!expect(rep, "n=" + num(n), lhs, rhs)) break;
    }
    rep.elapsed_ms = sw.lap_ms();
    return {rep};
}

std::vector<Report> case_witt_bernoulli(long max_n) { return witt_case(WittKind::bernoulli, max_n); }
std::vector<Report> case_witt_euler(long max_n) { return witt_case(WittKind::euler, max_n); }

std::vector<Report> case_five_route(long max_n) {
    return symbolic_case("five-route", "n=0.." + num(max_n) + " p=0..n", [&](Report& rep) {
        for (long p = 0; p <= max_n; ++p) {
            const auto gold = goldman_coefficients(p, static_cast<int>(max_n));
            for (long n = p; n <= max_n; ++n) {
                const PolyQ ref = bspline_segment(n, p).poly;
                const std::string pt = "n=" + num(n) + " p=" + num(p);
                if (!expect(rep, pt + " route=bernstein", bspline_via_bernstein(n, p), ref)) return;
                if (!expect(rep, pt + " route=goldman", gold[static_cast<size_t>(n)], ref)) return;
                const PolyQ lifted =
                    n >= 1 ? bspline_leibniz(n - 1, p, 1) : bspline_leibniz(0, p, 0);
                if (!expect(rep, pt + " route=leibniz", lifted, ref)) return;
                if (n >= 1 && !expect(rep, pt + " route=deboor", deboor_rhs(n, p), ref)) return;
            }
        }
    });
}

std::vector<Report> case_spline_derivative(long max_n) {
    const long hi = std::min<long>(max_n, 8);
    return symbolic_case("spline-derivative", "n=0.." + num(hi) + " p=0..n v=0..4",
                         [&](Report& rep) {
                             for (long n = 0; n <= hi; ++n)
                                 for (long p = 0; p <= n; ++p) {
                                     PolyQ ref = bspline_segment(n, p).poly;
                                     for (long v = 0; v <= 4; ++v) {
                                         const std::string pt = "n=" + num(n) + " p=" + num(p) +
                                                                " v=" + num(v);
                                         if (!expect(rep, pt, bspline_derivative(n, p, v), ref))
                                             return;
                                         ref = ref.derivative();
                                     }
                                 }
                         });
}

std::vector<Report> case_bs3(long max_n) {
    return symbolic_case("bs3", "n=0.." + num(max_n), [&](Report& rep) {
        for (long n = 0; n <= max_n; ++n)
            if (!expect_row(rep, "n=" + num(n), eulerian_from_spline(n), eulerian_row(n))) return;
    });
}

std::vector<Report> case_apostol_spline(long max_n) {
    return symbolic_case("apostol-spline", "n=0.." + num(max_n), [&](Report& rep) {
        for (long n = 0; n <= max_n; ++n)
            if (!expect(rep, "n=" + num(n), apostol_from_spline(n), apostol_bernoulli_number(n + 1)))
                return;
    });
}

std::vector<Report> case_partition_of_unity(long max_n) {
    return symbolic_case("partition-of-unity", "n=0.." + num(max_n), [&](Report& rep) {
        const PolyQ one = poly_const(Rational(1));
        for (long n = 0; n <= max_n; ++n) {
            PolyQ sum;
            for (long j = 0; j <= n; ++j)
                sum = sum + bspline_segment(n, j).poly.shifted(Rational(j));
            if (!expect(rep, "n=" + num(n), sum, one)) return;
        }
    });
}

std::vector<Report> case_local_support(long max_n) {
    return symbolic_case("local-support", "n=0.." + num(max_n), [&](Report& rep) {
        for (long n = 0; n <= max_n; ++n) {
            const std::string pt = "n=" + num(n);
            if (!expect_zero(rep, pt + " p=-1", bspline_segment(n, -1).poly)) return;
            if (!expect_zero(rep, pt + " p=" + num(n + 1), bspline_segment(n, n + 1).poly)) return;
            if (!expect_zero(rep, pt + " p=" + num(n + 2), bspline_segment(n, n + 2).poly)) return;
            for (long p = 0; p <= n; ++p) {
                if (!bspline_segment(n, p).poly.is_zero()) continue;
                rep.status = CaseStatus::fail;
                rep.params = pt + " p=" + num(p);
                rep.lhs = "0";
                rep.rhs = "a nonzero segment on the support";
                return;
            }
        }
    });
}

std::vector<Report> case_bernstein_partition(long max_n) {
    const long hi = max_n + 4;
    return symbolic_case("bernstein-partition", "k=0.." + num(hi), [&](Report& rep) {
        const PolyQ one = poly_const(Rational(1));
        for (long k = 0; k <= hi; ++k) {
            PolyQ sum;
            for (long d = 0; d <= k; ++d) sum = sum + bernstein(d, k);
            if (!expect(rep, "k=" + num(k), sum, one)) return;
        }
    });
}

std::vector<Report> case_gf_closed_form(long max_n) {
    const int ord = static_cast<int>(max_n);
    return symbolic_case("gf-closed-form", "order=" + num(max_n), [&](Report& rep) {
        for (long c = 0; c <= 3; ++c) {
            const auto s = gf_stirling2(c, ord);
            for (int n = 0; n <= ord; ++n) {
                const Rational want(factorial(c) * stirling2(n, c));
                if (!expect(rep, "gf=stirling2 c=" + num(c) + " n=" + num(n), s.entry(n), want))
                    return;
            }
        }
        for (long c = 0; c <= 2; ++c) {
            const auto s = gf_array(c, ord);
            for (int n = 0; n <= ord; ++n) {
                const PolyQ want = array_poly(c, n) * Rational(factorial(c));
                if (!expect(rep, "gf=array c=" + num(c) + " n=" + num(n), s.entry(n), want))
                    return;
            }
        }
        {
            const auto s = gf_apostol_bernoulli_numbers(ord);
            for (int n = 0; n <= ord; ++n)
                if (!expect(rep, "gf=apostol_bernoulli_numbers n=" + num(n), s.entry(n),
                            apostol_bernoulli_number(n)))
                    return;
        }
        {
            const auto s = gf_apostol_bernoulli_polys(ord);
            for (int n = 0; n <= ord; ++n)
                if (!expect(rep, "gf=apostol_bernoulli_polys n=" + num(n), s.entry(n),
                            apostol_bernoulli_poly(n, AbMethod::binomial)))
                    return;
        }
        {
            const auto s = gf_frobenius_numbers(ord);
            for (int n = 0; n <= ord; ++n)
                if (!expect(rep, "gf=frobenius_numbers n=" + num(n), s.entry(n),
                            frobenius_number(n)))
                    return;
        }
        {
            const auto s = gf_frobenius_polys(ord);
            for (int n = 0; n <= ord; ++n)
                if (!expect(rep, "gf=frobenius_polys n=" + num(n), s.entry(n), frobenius_poly(n)))
                    return;
        }
        {
            const RatFunc half = RatFunc(Rational(1, 2));
            const auto s = gf_apostol_euler_numbers(ord);
            for (int n = 0; n <= ord; ++n)
                if (!expect(rep, "gf=apostol_euler_numbers n=" + num(n), s.entry(n),
                            apostol_euler_number(n) * half))
                    return;
            const auto sp = gf_apostol_euler_polys(ord);
            for (int n = 0; n <= ord; ++n)
                if (!expect(rep, "gf=apostol_euler_polys n=" + num(n), sp.entry(n),
                            apostol_euler_poly(n) * half))
                    return;
        }
        {
            const auto s = gf_eulerian(ord);
            for (int n = 0; n <= ord; ++n)
                if (!expect(rep, "gf=eulerian n=" + num(n), s.entry(n),
                            RatFunc(eulerian_poly(n)) / one_minus_rho()))
                    return;
        }
        for (long d = 0; d <= 3; ++d) {
            const auto s = gf_bernstein(d, ord);
            for (int n = 0; n <= ord; ++n) {
                const PolyQ want = bernstein(d, n) * Rational(factorial(d));
                if (!expect(rep, "gf=bernstein d=" + num(d) + " n=" + num(n), s.entry(n), want))
                    return;
            }
        }
        {
            // Specialized expansion dispatch: rho pinned to 2 must agree with
            // pointwise evaluation of the symbolic entries.
            GfParams params;
            params.rho = Rational(2);
            const auto spec = std::get<PowerSeries<Rational>>(
                gf_expand(GfKind::apostol_bernoulli_numbers, params, ord));
            for (int n = 0; n <= ord; ++n)
                if (!expect(rep, "gf=apostol_bernoulli_numbers rho=2 n=" + num(n), spec.entry(n),
                            apostol_bernoulli_number(n).eval(Rational(2))))
                    return;
        }
    });
}

// --- numeric series cases ---------------------------------------------------

std::string series_params(long p, const Rational& omega, const Rational& y) {
    return "p=" + num(p) + " omega=" + render(omega) + " y=" + render(y);
}

template <class Check>
std::vector<Report> series_case(const char* id, Check&& check,
                                const std::vector<std::tuple<long, Rational, Rational>>& tuples,
                                int terms) {
    std::vector<Report> out;
    for (const auto& [p, omega, y] : tuples) {
        Report rep;
        rep.id = id;
        rep.params = series_params(p, omega, y);
        Stopwatch sw;
        try {
            const SeriesEvalReport r = check(p, omega, y, terms);
            rep.status = r.converged ? CaseStatus::pass : CaseStatus::fail;
            rep.lhs = render_double(r.lhs);
            rep.rhs = render_double(r.rhs);
            rep.abs_error = r.abs_error;
        } catch (const DomainError& e) {
            rep.status = CaseStatus::skipped_domain;
            rep.params += " [" + std::string(e.what()) + "]";
        }
        rep.elapsed_ms = sw.lap_ms();
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<Report> case_sr(long) {
    return series_case(
        "sr",
        [](long p, const Rational& omega, const Rational& y, int terms) {
            return laplace_series_check(p, omega, y, terms);
        },
        {{0, Rational(-1, 2), Rational(1)},
         {1, Rational(-1, 2), Rational(2)},
         {0, Rational(1, 2), Rational(1)}},
        80);
}

std::vector<Report> case_bernstein_series(long) {
    return series_case(
        "bernstein-series",
        [](long p, const Rational& omega, const Rational& y, int terms) {
            return bernstein_series_check(p, omega, y, terms);
        },
        {{0, Rational(1, 2), Rational(1)},
         {1, Rational(3, 2), Rational(2)},
         {1, Rational(3, 2), Rational(1, 4)}},
        80);
}

std::vector<Report> case_apostol_euler_series(long max_n) {
    const long mhi = std::min<long>(max_n, 6);
    std::vector<Report> out;
    for (const Rational& rho : {Rational(1, 5), Rational(1, 4), Rational(-1, 10)}) {
        Report rep;
        rep.id = "apostol-euler-series";
        rep.params = "m=0.." + num(mhi) + " rho=" + render(rho);
        Stopwatch sw;
        double worst = 0;
        for (long m = 0; m <= mhi; ++m) {
            const ApostolEulerSeriesReport r = apostol_euler_series(m, rho);
            worst = std::max(worst, r.abs_error);
            if (!r.converged) {
                rep.status = CaseStatus::fail;
                rep.params = "m=" + num(m) + " rho=" + render(rho);
                rep.lhs = render(r.value);
                rep.rhs = render(r.target);
                rep.abs_error = r.abs_error;
                break;
            }
        }
        if (rep.status == CaseStatus::pass) rep.abs_error = worst;
        rep.elapsed_ms = sw.lap_ms();
        out.push_back(std::move(rep));
    }

    Report rej;
    rej.id = "apostol-euler-series";
    rej.params = "m=1 rho=1/3";
    Stopwatch sw;
    try {
        apostol_euler_series(1, Rational(1, 3));
        rej.status = CaseStatus::fail; // the ratio test must reject this point
        rej.lhs = "series accepted rho=1/3";
        rej.rhs = "rejection: 2|rho/(1-rho)| < 1 violated";
    } catch (const DivergenceError& e) {
        rej.status = CaseStatus::skipped_domain;
        rej.params += " [" + std::string(e.what()) + "]";
    }
    rej.elapsed_ms = sw.lap_ms();
    out.push_back(std::move(rej));
    return out;
}

// --- p-adic convergence cases -----------------------------------------------

// Valuations must strictly increase level over level; exact hits (infinite
// valuation) may only be followed by exact hits.
bool valuations_increase(Report& rep, const std::string& pt,
                         const std::vector<PadicApprox>& rows) {
    for (size_t i = 1; i < rows.size(); ++i) {
        const long prev = rows[i - 1].distance_valuation;
        const long cur = rows[i].distance_valuation;
        if (cur == kValuationInfinity || (prev != kValuationInfinity && cur > prev)) continue;
        rep.status = CaseStatus::fail;
        rep.params = pt + " m=" + num(rows[i].level);
        rep.lhs = "valuation " + num(cur);
        rep.rhs = "> valuation " + num(prev) + " from level m=" + num(rows[i - 1].level);
        return false;
    }
    return true;
}

std::vector<Report> case_volkenborn(long max_n) {
    const long khi = std::min<long>(max_n, 6);
    Report rep;
    rep.id = "volkenborn-convergence";
    rep.params = "k=0.." + num(khi) + " p=2,3,5 m=1..8";
    Stopwatch sw;
    [&] {
        for (long k = 0; k <= khi; ++k) {
            const PolyQ f = PolyQ::monomial(Rational(1), static_cast<int>(k), Sym::omega);
            for (long p : {2L, 3L, 5L}) {
                const auto rows = volkenborn_sweep(f, p, 8);
                if (!valuations_increase(rep, "k=" + num(k) + " p=" + num(p), rows)) return;
            }
        }
        // For f = omega at p = 3 the defect is 3^m/2 exactly, so the valuation
        // equals the level itself.
        const auto rows = volkenborn_sweep(poly_var(Sym::omega), 3, 8);
        for (const auto& row : rows) {
            if (row.distance_valuation == row.level) continue;
            rep.status = CaseStatus::fail;
            rep.params = "k=1 p=3 m=" + num(row.level);
            rep.lhs = "valuation " + num(row.distance_valuation);
            rep.rhs = "valuation " + num(row.level);
            return;
        }
    }();
    rep.elapsed_ms = sw.lap_ms();
    return {rep};
}

std::vector<Report> case_fermionic(long max_n) {
    const long khi = std::min<long>(max_n, 6);
    Report rep;
    rep.id = "fermionic-convergence";
    rep.params = "k=0.." + num(khi) + " p=3,5 m=1..6";
    Stopwatch sw;
    [&] {
        for (long k = 0; k <= khi; ++k) {
            const PolyQ f = PolyQ::monomial(Rational(1), static_cast<int>(k), Sym::omega);
            for (long p : {3L, 5L}) {
                const auto rows = fermionic_sweep(f, p, 6);
                if (!valuations_increase(rep, "k=" + num(k) + " p=" + num(p), rows)) return;
            }
        }
        // Frozen truncations for f = omega at p = 3.
        const PolyQ f = poly_var(Sym::omega);
        const Rational m1 = fermionic_truncated(f, 3, 1);
        const Rational m2 = fermionic_truncated(f, 3, 2);
        if (m1 != Rational(1) || m2 != Rational(4)) {
            rep.status = CaseStatus::fail;
            rep.params = "k=1 p=3 m=1,2";
            rep.lhs = render(m1) + ";" + render(m2);
            rep.rhs = "1;4";
        }
    }();
    rep.elapsed_ms = sw.lap_ms();
    return {rep};
}

} // namespace

const std::vector<IdentityCase>& registry() {
    static const std::vector<IdentityCase> cases = [] {
        std::vector<IdentityCase> v;
        auto add = [&v](const char* id, const char* desc, const char* ranges, CaseMode mode,
                        std::vector<Report> (*run)(long)) {
            v.push_back(IdentityCase{id, desc, ranges, mode, run});
        };

        add("worpitzky", "monomials expanded over shifted binomial polynomials with Eulerian weights",
            "n=0..max_n", CaseMode::exact_symbolic, case_worpitzky);
        add("eulerian-row", "Eulerian triangle rows against ascent-counting brute force",
            "n=0..min(max_n,9)", CaseMode::exact_symbolic, case_eulerian_row);
        add("eulerian-umbral", "Eulerian polynomials reproduce themselves under binomial convolution",
            "n=1..max_n", CaseMode::exact_symbolic, case_eulerian_umbral);
        add("eulerian-stirling-sum",
            "Eulerian polynomial as a Stirling-weighted power sum, plain and folded forms",
            "m=1..max_n", CaseMode::exact_symbolic, case_eulerian_stirling_sum);
        add("apostol-eulerian-link", "Eulerian polynomial recovered from the Apostol-Bernoulli number",
            "n=1..max_n", CaseMode::exact_symbolic, case_apostol_eulerian_link);
        add("frobenius-link",
            "Eulerian polynomial from Euler-Frobenius numbers at the reciprocal parameter",
            "n=1..max_n", CaseMode::exact_symbolic, case_frobenius_link);
        add("geometric-link", "Apostol-Bernoulli number from the geometric polynomial at rho/(1-rho)",
            "n=1..max_n", CaseMode::exact_symbolic, case_geometric_link);
        add("geometric-shifted",
            "Apostol-Bernoulli number at rho/(1+rho) against the geometric polynomial at rho",
            "n=1..max_n", CaseMode::exact_symbolic, case_geometric_shifted);
        add("euler-operator",
            "iterated rho d/drho of the geometric series yields Apostol-Bernoulli numbers and "
            "Eulerian polynomials",
            "k=0..max_n", CaseMode::exact_symbolic, case_euler_operator);
        add("apostol-euler-bernoulli",
            "Apostol-Euler polynomial from the next Apostol-Bernoulli polynomial at negated rho",
            "n=0..max_n", CaseMode::exact_symbolic, case_apostol_euler_bernoulli);
        add("apostol-binomial-shift",
            "rho-weighted unit shift of the Apostol-Bernoulli polynomial drops to n omega^{n-1}",
            "n=1..max_n", CaseMode::exact_symbolic, case_apostol_binomial_shift);
        add("apostol-poly-methods", "four independent Apostol-Bernoulli polynomial routes agree",
            "n=0..max_n", CaseMode::exact_symbolic, case_apostol_poly_methods);
        add("epi", "Eulerian-weighted telescoping expansion of the monomial derivative",
            "n=1..max_n", CaseMode::exact_symbolic, case_epi);
        add("witt-bernoulli",
            "umbral Bernoulli substitution collapses the expansion to n B_{n-1}",
            "n=1..max_n", CaseMode::exact_symbolic, case_witt_bernoulli);
        add("witt-euler", "umbral Euler substitution collapses the expansion to n E_{n-1}",
            "n=1..max_n", CaseMode::exact_symbolic, case_witt_euler);
        add("five-route",
            "truncated-power, Bernstein, generating-function, degree-raising and knot-recurrence "
            "segment routes agree",
            "n=0..max_n p=0..n", CaseMode::exact_symbolic, case_five_route);
        add("spline-derivative",
            "Bernstein-difference derivative assembly against formal differentiation",
            "n=0..min(max_n,8) p=0..n v=0..4", CaseMode::exact_symbolic, case_spline_derivative);
        add("bs3", "Eulerian rows from diagonal spline segment values", "n=0..max_n",
            CaseMode::exact_symbolic, case_bs3);
        add("apostol-spline", "Apostol-Bernoulli numbers from diagonal spline segment values",
            "n=0..max_n", CaseMode::exact_symbolic, case_apostol_spline);
        add("partition-of-unity", "integer translates of the segment family sum to one",
            "n=0..max_n", CaseMode::exact_symbolic, case_partition_of_unity);
        add("local-support", "segments vanish off the support and are nonzero on it",
            "n=0..max_n", CaseMode::exact_symbolic, case_local_support);
        add("bernstein-partition", "each Bernstein basis row sums to one", "k=0..max_n+4",
            CaseMode::exact_symbolic, case_bernstein_partition);
        add("gf-closed-form", "registered generating functions match their closed-form families",
            "order=max_n", CaseMode::exact_symbolic, case_gf_closed_form);
        add("sr", "spline transform series against its closed rational value",
            "fixed sample points", CaseMode::numeric_series, case_sr);
        add("bernstein-series", "segment series against the Bernstein-difference series",
            "fixed sample points", CaseMode::numeric_series, case_bernstein_series);
        add("apostol-euler-series", "alternating series for Apostol-Euler numbers at rational rho",
            "m=0..min(max_n,6), rho in {1/5,1/4,-1/10,1/3}", CaseMode::numeric_series,
            case_apostol_euler_series);
        add("volkenborn-convergence",
            "truncated means approach the Bernoulli-valued limit with strictly growing valuation",
            "k=0..min(max_n,6) p=2,3,5 m=1..8", CaseMode::padic_convergence, case_volkenborn);
        add("fermionic-convergence",
            "truncated alternating sums approach the Euler-valued limit with strictly growing "
            "valuation",
            "k=0..min(max_n,6) p=3,5 m=1..6", CaseMode::padic_convergence, case_fermionic);
        return v;
    }();
    return cases;
}

std::vector<Report> run_suite(const std::string& filter, long max_n) {
    if (max_n < 0) throw UsageError("max-n must be >= 0");
    std::vector<Report> out;
    bool matched = false;
    for (const auto& c : registry()) {
        if (fnmatch(filter.c_str(), c.id.c_str(), 0) != 0) continue;
        matched = true;
        auto reps = c.run(max_n);
        out.insert(out.end(), std::make_move_iterator(reps.begin()),
                   std::make_move_iterator(reps.end()));
    }
    if (!matched) throw UsageError("filter '" + filter + "' matches no identity case");
    return out;
}

int exit_code_for(const std::vector<Report>& reports) {
    for (const auto& r : reports)
        if (r.status == CaseStatus::fail) return 1;
    return 0;
}

} // namespace cardinal
