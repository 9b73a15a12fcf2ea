#include "cardinal/ratfunc.hpp"

namespace cardinal {

RatFunc::RatFunc(const PolyQ& num, const PolyQ& den) {
    const RatFunc r = normalize(num, den);
    num_ = r.num_;
    den_ = r.den_;
}

RatFunc normalize(const PolyQ& num, const PolyQ& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) return RatFunc(); // canonical 0/1
    unify(num.sym(), den.sym());
    PolyQ n = num, d = den;
    const PolyQ g = poly_gcd(n, d);
    if (g.degree() > 0) {
        n = n / g;
        d = d / g;
    }
    const Rational inv_lead = Rational(1) / d.leading();
    return RatFunc(RatFunc::Reduced{}, n * inv_lead, d * inv_lead);
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw DomainError("constant_value: rational function is not constant");
    return num_.constant_value() / den_.constant_value();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return normalize(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    return normalize(den_, num_);
}

RatFunc RatFunc::derivative() const {
    return normalize(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    RatFunc acc(1L), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rational RatFunc::eval(const Rational& x) const {
    const Rational d = den_.eval<Rational>(x);
    if (d == 0) throw DomainError("pole at " + render(x));
    return num_.eval<Rational>(x) / d;
}

RatFunc RatFunc::compose(const RatFunc& g) const {
    const RatFunc n = num_.eval<RatFunc>(g);
    const RatFunc d = den_.eval<RatFunc>(g);
    if (d.is_zero()) throw DomainError("composition evaluates the denominator to zero");
    return n / d;
}

RatFunc substitute(const PolyQ& f, const RatFunc& g) { return f.eval<RatFunc>(g); }

RatFunc euler_operator(const RatFunc& f, long k) {
    if (k < 0) throw DomainError("euler_operator: negative order");
    Sym s = f.sym();
    if (s == Sym::none) s = Sym::rho; // theta of a constant is 0 regardless of the name
    const RatFunc x{PolyQ::variable(s)};
    RatFunc g = f;
    for (long i = 0; i < k; ++i) g = x * g.derivative();
    return g;
}

BiPoly bipoly_lift(const PolyQ& p) {
    std::vector<RatFunc> cs;
    cs.reserve(static_cast<size_t>(std::max(p.degree(), 0)) + 1);
    for (int i = 0; i <= p.degree(); ++i) cs.emplace_back(p.coeff(i));
    if (p.is_zero()) return BiPoly();
    return BiPoly(std::move(cs), p.sym());
}

} // namespace cardinal
