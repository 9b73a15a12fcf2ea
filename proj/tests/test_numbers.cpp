#include <doctest.h>

#include "cardinal/numbers.hpp"

using namespace cardinal;

namespace {
PolyQ R() { return poly_var(Sym::rho); }
PolyQ W() { return poly_var(Sym::w); }
PolyQ C1(long v) { return poly_const(Rational(v)); }
RatFunc RF(const PolyQ& n, const PolyQ& d) { return RatFunc(n, d); }
} // namespace

TEST_CASE("stirling2 values and bounds") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(6, 1) == 1);
    for (long n = 1; n <= 8; ++n) {
        CHECK(stirling2(n, 0) == 0);
        CHECK(stirling2(n, n) == 1);
        CHECK(stirling2(n, n + 1) == 0);
        CHECK(stirling2(n, -1) == 0);
    }
    // Triangle recurrence, sampled.
    for (long n = 1; n <= 9; ++n)
        for (long c = 1; c <= n; ++c)
            CHECK(stirling2(n, c) == c * stirling2(n - 1, c) + stirling2(n - 1, c - 1));
}

TEST_CASE("array polynomials") {
    CHECK(array_poly(0, 3) == PolyQ::monomial(Rational(1), 3, Sym::omega));
    CHECK(array_poly(1, 2) == PolyQ(std::vector<Rational>{1, 2}, Sym::omega));        // 2w+1 in omega
    CHECK(array_poly(2, 2) == poly_const(Rational(1)));          // S2(2,2) only
    CHECK(array_poly(3, 2).is_zero());                           // column above the row
    // Evaluation at omega = 0 collapses to the Stirling number itself.
    for (long n = 0; n <= 6; ++n)
        for (long c = 0; c <= n; ++c)
            CHECK(array_poly(c, n).eval(Rational(0)) == Rational(stirling2(n, c)));
}

TEST_CASE("eulerian triangle frozen rows") {
    CHECK(eulerian_row(0).a == std::vector<BigInt>{1});
    CHECK(eulerian_row(1).a == std::vector<BigInt>{0, 1});
    CHECK(eulerian_row(2).a == std::vector<BigInt>{0, 1, 1});
    CHECK(eulerian_row(3).a == std::vector<BigInt>{0, 1, 4, 1});
    CHECK(eulerian_row(4).a == std::vector<BigInt>{0, 1, 11, 11, 1});
    CHECK(eulerian_number(4, 2) == 11);
    CHECK_THROWS_AS(eulerian_number(4, 5), DomainError);
    CHECK_THROWS_AS(eulerian_number(4, -1), DomainError);
}

TEST_CASE("eulerian rows: symmetry, row sums, brute force") {
    for (long n = 1; n <= 7; ++n) {
        const auto row = eulerian_row(n).a;
        BigInt sum = 0;
        for (const auto& v : row) sum += v;
        CHECK(sum == factorial(n)); // every permutation counted once
        for (long j = 1; j <= n; ++j) CHECK(row[j] == row[n + 1 - j]);
        CHECK(eulerian_row(n) == eulerian_bruteforce(n));
    }
    CHECK(eulerian_bruteforce(0) == eulerian_row(0));
    CHECK_THROWS_AS(eulerian_bruteforce(10), ResourceError);
    CHECK(eulerian_poly(2) == PolyQ(std::vector<Rational>{0, 1, 1}, Sym::rho));
    CHECK(eulerian_poly(6).eval(Rational(1)) == Rational(factorial(6)));
}

TEST_CASE("euler-frobenius numbers") {
    CHECK(frobenius_number(0) == RatFunc(1L));
    CHECK(frobenius_number(1) == RF(C1(1), poly_var(Sym::phi) - C1(1)));
    CHECK(frobenius_number(2) ==
          RF(poly_var(Sym::phi) + C1(1), (poly_var(Sym::phi) - C1(1)).pow(2)));
    // phi = 1 is the pole of every positive index.
    CHECK_THROWS_AS(frobenius_number(1).eval(Rational(1)), DomainError);
    CHECK(euler_number(0) == Rational(1));
    CHECK(euler_number(1) == Rational(-1, 2));
    CHECK(euler_number(2) == Rational(0));
    CHECK(euler_number(3) == Rational(1, 4));
    CHECK(euler_number(4) == Rational(0));
    CHECK(euler_number(5) == Rational(-1, 2));
}

TEST_CASE("apostol-bernoulli numbers frozen") {
    CHECK(apostol_bernoulli_number(0) == RatFunc());
    CHECK(apostol_bernoulli_number(1) == RF(C1(1), R() - C1(1)));
    CHECK(apostol_bernoulli_number(2) == RF(R() * C1(-2), (R() - C1(1)).pow(2)));
    CHECK(apostol_bernoulli_number(3) ==
          RF((R() * R() + R()) * C1(3), (R() - C1(1)).pow(3)));
}

TEST_CASE("bernoulli numbers from the recurrence") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(5) == Rational(0));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("apostol-bernoulli polynomial methods agree on small degrees") {
    for (long n = 0; n <= 5; ++n) {
        const BiPoly ref = apostol_bernoulli_poly(n, AbMethod::binomial);
        CHECK(apostol_bernoulli_poly(n, AbMethod::bernstein) == ref);
        if (n >= 1) {
            CHECK(apostol_bernoulli_poly(n, AbMethod::array) == ref);
            CHECK(apostol_bernoulli_poly(n, AbMethod::stirling) == ref);
        }
    }
    CHECK_THROWS_AS(apostol_bernoulli_poly(0, AbMethod::array), DomainError);
    CHECK_THROWS_AS(apostol_bernoulli_poly(0, AbMethod::stirling), DomainError);
    // Frozen degree-2 polynomial: 2 omega/(rho-1) - 2 rho/(rho-1)^2.
    const BiPoly b2 = apostol_bernoulli_poly(2, AbMethod::binomial);
    CHECK(b2.coeff(2) == RatFunc());
    CHECK(b2.coeff(1) == RF(C1(2), R() - C1(1)));
    CHECK(b2.coeff(0) == RF(R() * C1(-2), (R() - C1(1)).pow(2)));
}

TEST_CASE("ab method names round trip") {
    for (AbMethod m : {AbMethod::binomial, AbMethod::bernstein, AbMethod::array, AbMethod::stirling})
        CHECK(parse_ab_method(ab_method_name(m)) == m);
    CHECK_THROWS_AS(parse_ab_method("newton"), UsageError);
}

TEST_CASE("apostol-euler numbers and polynomials frozen") {
    CHECK(apostol_euler_number(0) == RF(C1(2), R() + C1(1)));
    CHECK(apostol_euler_number(1) == RF(R() * C1(-2), (R() + C1(1)).pow(2)));
    // rho = -1 is the pole.
    CHECK_THROWS_AS(apostol_euler_number(0).eval(Rational(-1)), DomainError);
    const BiPoly e1 = apostol_euler_poly(1);
    CHECK(e1.coeff(1) == RF(C1(2), R() + C1(1)));
    CHECK(e1.coeff(0) == RF(R() * C1(-2), (R() + C1(1)).pow(2)));
    // The recurrence the numbers satisfy: rho sum_{j<=n} C(n,j) E_j + E_n = 0 for n >= 1.
    for (long n = 1; n <= 6; ++n) {
        RatFunc acc;
        for (long j = 0; j <= n; ++j)
            acc = acc + apostol_euler_number(j) * RatFunc(Rational(binomial(n, j)));
        CHECK(RatFunc(poly_var(Sym::rho)) * acc + apostol_euler_number(n) == RatFunc());
    }
}

TEST_CASE("geometric polynomials") {
    CHECK(geometric_poly(0) == poly_const(Rational(1)));
    CHECK(geometric_poly(1) == W());
    CHECK(geometric_poly(2) == W() + W() * W() * Rational(2));
    // W_n(1) is the nth ordered-Bell-ish value: sum_j j! S2(n,j).
    Rational expected = 0;
    for (long j = 0; j <= 4; ++j) expected += Rational(factorial(j) * stirling2(4, j));
    CHECK(geometric_poly(4).eval(Rational(1)) == expected);
}

TEST_CASE("y1 binomial mean") {
    CHECK(y1(0, 0) == Rational(1)); // 0^0 = 1 convention
    CHECK(y1(1, 2) == Rational(2));
    for (long m = 0; m <= 4; ++m)
        for (long n = 0; n <= 5; ++n) {
            Rational direct = 0;
            for (long h = 0; h <= n; ++h) {
                Rational hp = (m == 0 && h == 0) ? Rational(1) : rat_pow(Rational(h), m);
                direct += Rational(binomial(n, h)) * hp;
            }
            CHECK(y1(m, n) == direct / Rational(factorial(n)));
        }
}

TEST_CASE("convention ledger names every fixed choice") {
    const auto& entries = convention_ledger();
    CHECK(entries.size() >= 6);
    auto has = [&](const std::string& family) {
        for (const auto& e : entries)
            if (e.family == family) return !e.canonical.empty() && !e.discrepancy.empty();
        return false;
    };
    CHECK(has("eulerian"));
    CHECK(has("euler-frobenius"));
    CHECK(has("bernoulli"));
    CHECK(has("apostol-bernoulli"));
    CHECK(has("uniform-bspline-derivative"));
    CHECK(has("laplace-series"));
}
