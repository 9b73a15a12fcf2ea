#pragma once

#include "cardinal/polynomial.hpp"

namespace cardinal {

// Rational function over Q in one indeterminate, kept reduced at all times:
// gcd(num, den) = 1 and den is monic, so operator== is plain structural equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(PolyQ(Rational(1))) {}
    RatFunc(long v) : RatFunc(Rational(v)) {}                     // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& v) : num_(PolyQ(v)), den_(PolyQ(Rational(1))) {} // NOLINT
    explicit RatFunc(const PolyQ& p) : num_(p), den_(PolyQ(Rational(1))) {}
    RatFunc(const PolyQ& num, const PolyQ& den);

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;
    Sym sym() const { return unify(num_.sym(), den_.sym()); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative() const;
    RatFunc pow(long e) const;
    RatFunc reciprocal() const;

    // Evaluation at a rational point; a pole raises DomainError.
    Rational eval(const Rational& x) const;

    // f(g(x)) as a reduced rational function.
    RatFunc compose(const RatFunc& g) const;

    friend RatFunc normalize(const PolyQ& num, const PolyQ& den);

private:
    struct Reduced {};
    RatFunc(Reduced, PolyQ n, PolyQ d) : num_(std::move(n)), den_(std::move(d)) {}

    PolyQ num_, den_;
};

// Reduction to lowest terms with a monic denominator (identity on valid inputs;
// the RatFunc constructor already establishes the invariant).
RatFunc normalize(const PolyQ& num, const PolyQ& den);
inline RatFunc normalize(const RatFunc& f) { return normalize(f.num(), f.den()); }

// Polynomial substituted with a rational function: f(g).
RatFunc substitute(const PolyQ& f, const RatFunc& g);

// k-fold theta operator (x d/dx)^k applied to f, x being f's indeterminate.
RatFunc euler_operator(const RatFunc& f, long k);

// Bivariate layer: polynomials in omega whose coefficients live in Q(rho) or Q(phi).
using BiPoly = Polynomial<RatFunc>;

BiPoly bipoly_lift(const PolyQ& p);
inline BiPoly bipoly_const(const RatFunc& r) { return BiPoly(r); }
inline BiPoly bipoly_var() { return BiPoly::variable(Sym::omega); }
inline RatFunc bipoly_eval(const BiPoly& f, const Rational& x) {
    return f.eval<RatFunc>(RatFunc(x));
}

} // namespace cardinal
