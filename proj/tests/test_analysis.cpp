#include <doctest.h>

#include <cmath>

#include "cardinal/analysis.hpp"

using namespace cardinal;

namespace {
PolyQ Om() { return poly_var(Sym::omega); }
PolyQ om_power(long k) { return PolyQ::monomial(Rational(1), static_cast<int>(k), Sym::omega); }
} // namespace

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(Rational(9, 2), 3) == 2);
    CHECK(padic_valuation(Rational(-1, 2), 2) == -1);
    CHECK(padic_valuation(Rational(12), 2) == 2);
    CHECK(padic_valuation(Rational(5, 27), 3) == -3);
    CHECK(padic_valuation(Rational(7), 5) == 0);
    CHECK(padic_valuation(Rational(0), 3) == kValuationInfinity);
}

TEST_CASE("closed power sums match brute force") {
    for (long k = 0; k <= 8; ++k)
        for (long N = 0; N <= 12; ++N) {
            Rational direct = 0;
            for (long v = 0; v < N; ++v)
                direct += (k == 0 && v == 0) ? Rational(1) : rat_pow(Rational(v), k);
            CHECK(power_sum(k, BigInt(N)) == direct);
        }
    CHECK(power_sum(3, BigInt(0)) == Rational(0));
}

TEST_CASE("truncated means: frozen values and guards") {
    for (long m = 1; m <= 6; ++m)
        CHECK(volkenborn_truncated(Om(), 3, m) == (rat_pow(Rational(3), m) - 1) / 2);
    CHECK(volkenborn_truncated(poly_const(Rational(5)), 3, 4) == Rational(5));
    CHECK_THROWS_AS(volkenborn_truncated(Om(), 4, 2), DomainError);  // not prime
    CHECK_THROWS_AS(volkenborn_truncated(Om(), 3, 0), DomainError);  // level must be >= 1
    CHECK_THROWS_AS(volkenborn_truncated(Om() * Rational(1, 3), 3, 2), DomainError);
    // Degree > 8 falls back to direct summation, which refuses huge levels.
    CHECK_THROWS_AS(volkenborn_truncated(om_power(9), 2, 21), ResourceError);
    // The direct route agrees with the closed-form route where both apply.
    const PolyQ f = om_power(3) + Om() * Rational(1, 5);
    Rational direct = 0;
    for (long v = 0; v < 27; ++v) direct += f.eval(Rational(v));
    CHECK(volkenborn_truncated(f, 3, 3) == direct / 27);
    const PolyQ g = om_power(9) + Om();
    Rational direct9 = 0;
    for (long v = 0; v < 8; ++v) direct9 += g.eval(Rational(v));
    CHECK(volkenborn_truncated(g, 2, 3) == direct9 / 8);
}

TEST_CASE("volkenborn limit is the Bernoulli transform") {
    CHECK(volkenborn_limit(poly_const(Rational(1))) == Rational(1));
    CHECK(volkenborn_limit(Om()) == Rational(-1, 2));
    CHECK(volkenborn_limit(om_power(2)) == Rational(1, 6));
    CHECK(volkenborn_limit(om_power(4)) == Rational(-1, 30));
    CHECK(volkenborn_limit(om_power(2) * Rational(6) + Om()) == Rational(1, 2));
}

TEST_CASE("fermionic sums: frozen values and guards") {
    CHECK(fermionic_truncated(Om(), 3, 1) == Rational(1));
    CHECK(fermionic_truncated(Om(), 3, 2) == Rational(4));
    CHECK_THROWS_AS(fermionic_truncated(Om(), 2, 2), DomainError); // needs odd p
    CHECK_THROWS_AS(fermionic_truncated(Om(), 3, 13), ResourceError);
    CHECK(fermionic_limit(Om()) == Rational(-1, 2));
    CHECK(fermionic_limit(om_power(3)) == Rational(1, 4));
    CHECK(fermionic_limit(poly_const(Rational(2))) == Rational(2));
}

TEST_CASE("sweeps report levels and valuations") {
    const auto rows = volkenborn_sweep(Om(), 3, 8);
    REQUIRE(rows.size() == 8);
    for (long m = 1; m <= 8; ++m) {
        const auto& r = rows[static_cast<size_t>(m - 1)];
        CHECK(r.prime == 3);
        CHECK(r.level == m);
        CHECK(r.target == Rational(-1, 2));
        CHECK(r.distance_valuation == m); // defect is exactly 3^m/2
    }
    const auto frows = fermionic_sweep(Om(), 3, 4);
    REQUIRE(frows.size() == 4);
    CHECK(frows[0].value == Rational(1));
    CHECK(frows[1].value == Rational(4));
    for (size_t i = 1; i < frows.size(); ++i)
        CHECK(frows[i].distance_valuation > frows[i - 1].distance_valuation);
}

TEST_CASE("sweep csv rendering") {
    CHECK(padic_sweep_csv(volkenborn_sweep(Om(), 3, 3)) ==
          "m,value,valuation\n1,1,1\n2,4,2\n3,13,3\n");
    // A constant is integrated exactly at every level: distance valuation inf.
    CHECK(padic_sweep_csv(fermionic_sweep(poly_const(Rational(1)), 3, 2)) ==
          "m,value,valuation\n1,1,inf\n2,1,inf\n");
}

TEST_CASE("monomial derivative expansion") {
    for (long n = 1; n <= 6; ++n) CHECK(epi_check(n));
    const auto [lhs, rhs] = epi_sides(1);
    CHECK(lhs == BiPoly(RatFunc(1L)));
    CHECK(rhs == BiPoly(RatFunc(1L)));
    CHECK_THROWS_AS(epi_sides(0), DomainError);
}

TEST_CASE("umbral collapse to classical sequences") {
    for (long n = 1; n <= 6; ++n) {
        CHECK(padic_theorem_check(n, WittKind::bernoulli));
        CHECK(padic_theorem_check(n, WittKind::euler));
    }
    const auto [lb, rb] = witt_sides(2, WittKind::bernoulli);
    CHECK(lb == RatFunc(Rational(-1))); // 2 B_1
    CHECK(rb == RatFunc(Rational(-1)));
    const auto [le, re] = witt_sides(2, WittKind::euler);
    CHECK(le == RatFunc(Rational(-1))); // 2 E_1
    CHECK(re == RatFunc(Rational(-1)));
    CHECK_THROWS_AS(witt_sides(0, WittKind::euler), DomainError);
    CHECK(std::string(witt_kind_name(WittKind::bernoulli)) == "bernoulli");
    CHECK(std::string(witt_kind_name(WittKind::euler)) == "euler");
}

TEST_CASE("laplace-type series evaluation") {
    const auto r1 = laplace_series_check(0, Rational(-1, 2), Rational(1), 80);
    CHECK(r1.converged);
    CHECK(r1.abs_error <= 1e-10);
    CHECK(std::abs(r1.rhs - 2.0) < 1e-12); // closed side is exactly 2 here
    CHECK(std::abs(r1.lhs - 2.0) <= 1e-10);
    CHECK(r1.terms_used <= 80);

    const auto r2 = laplace_series_check(1, Rational(-1, 2), Rational(2), 80);
    CHECK(r2.converged);
    CHECK(std::abs(r2.rhs - 5.0 / 9.0) < 1e-12);
    CHECK(std::abs(r2.lhs - 5.0 / 9.0) <= 1e-10);

    CHECK_THROWS_WITH_AS(laplace_series_check(0, Rational(1, 2), Rational(1), 80),
                         doctest::Contains("j - omega > 0 violated at j = 0"), DivergenceError);
    CHECK_THROWS_WITH_AS(laplace_series_check(0, Rational(-1, 2), Rational(-1), 80),
                         doctest::Contains("y > 0"), DivergenceError);
    CHECK_THROWS_WITH_AS(laplace_series_check(0, Rational(-3), Rational(1), 80),
                         doctest::Contains("|omega + y - j| < y violated"), DivergenceError);
    CHECK_THROWS_AS(laplace_series_check(-1, Rational(-1, 2), Rational(1), 80), DomainError);
    CHECK_THROWS_AS(laplace_series_check(0, Rational(-1, 2), Rational(1), 0), DomainError);
}

TEST_CASE("bernstein-difference series evaluation") {
    const auto r1 = bernstein_series_check(0, Rational(1, 2), Rational(1), 80);
    CHECK(r1.converged);
    CHECK(std::abs(r1.lhs - 2.0 / 3.0) <= 1e-9);
    CHECK(std::abs(r1.rhs - 2.0 / 3.0) <= 1e-9);

    const auto r2 = bernstein_series_check(1, Rational(3, 2), Rational(2), 80);
    CHECK(r2.converged);
    CHECK(std::abs(r2.lhs - 14.0 / 75.0) <= 1e-9);
    CHECK(std::abs(r2.rhs - 14.0 / 75.0) <= 1e-9);

    CHECK_THROWS_AS(bernstein_series_check(1, Rational(3, 2), Rational(1, 4), 80),
                    DivergenceError);
}

TEST_CASE("alternating apostol-euler series") {
    const auto r = apostol_euler_series(1, Rational(1, 5));
    CHECK(r.converged);
    CHECK(r.target == Rational(-5, 18));
    CHECK(std::abs(to_double(r.value - r.target)) <= 1e-12);
    CHECK(r.terms_used <= 2000);

    const auto r0 = apostol_euler_series(0, Rational(1, 5));
    CHECK(r0.converged);
    CHECK(r0.target == Rational(5, 3));

    const auto rn = apostol_euler_series(3, Rational(-1, 10));
    CHECK(rn.converged);

    CHECK_THROWS_WITH_AS(apostol_euler_series(1, Rational(1, 3)),
                         doctest::Contains("2|rho/(1-rho)| < 1 violated"), DivergenceError);
    CHECK_THROWS_AS(apostol_euler_series(1, Rational(1)), DomainError); // pole
    CHECK_THROWS_AS(apostol_euler_series(-1, Rational(1, 5)), DomainError);
}
