#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "cardinal/errors.hpp"
#include "cardinal/rational.hpp"
#include "cardinal/symbol.hpp"

namespace cardinal {

// Dense univariate polynomial over an exact coefficient ring C.
// Invariants: no trailing zero coefficients; a constant (or zero) polynomial
// carries Sym::none, so the symbol tag is meaningful exactly when degree >= 1.
// degree() of the zero polynomial is the distinguished kNegInfDegree marker.
template <class C>
class Polynomial {
public:
    static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

    Polynomial() : sym_(Sym::none) {}

    explicit Polynomial(const C& constant, Sym s = Sym::none) : sym_(s) {
        if (!(constant == C())) c_.push_back(constant);
        trim();
    }

    Polynomial(std::vector<C> coeffs, Sym s) : sym_(s), c_(std::move(coeffs)) { trim(); }

    static Polynomial variable(Sym s) { return monomial(C(1L), 1, s); }

    static Polynomial monomial(const C& coeff, int deg, Sym s) {
        if (deg < 0) throw DomainError("monomial: negative degree");
        std::vector<C> v(static_cast<size_t>(deg) + 1, C());
        v.back() = coeff;
        return Polynomial(std::move(v), s);
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    Sym sym() const { return sym_; }

    C coeff(int k) const {
        if (k < 0 || static_cast<size_t>(k) >= c_.size()) return C();
        return c_[static_cast<size_t>(k)];
    }

    const std::vector<C>& coeffs() const { return c_; }

    C constant_value() const {
        if (!is_constant()) throw DomainError("constant_value: polynomial is not constant");
        return c_.empty() ? C() : c_[0];
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Sym s = unify(a.sym_, b.sym_);
        std::vector<C> v(std::max(a.c_.size(), b.c_.size()), C());
        for (size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size()) v[i] = v[i] + a.c_[i];
            if (i < b.c_.size()) v[i] = v[i] + b.c_[i];
        }
        return Polynomial(std::move(v), s);
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = C() - x;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Sym s = unify(a.sym_, b.sym_);
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<C> v(a.c_.size() + b.c_.size() - 1, C());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(v), s);
    }

    friend Polynomial operator*(const Polynomial& a, const C& k) {
        Polynomial r = a;
        for (auto& x : r.c_) x = x * k;
        r.trim();
        return r;
    }
    friend Polynomial operator*(const C& k, const Polynomial& a) { return a * k; }

    // Exact division. A constant divisor divides coefficient-wise; otherwise the
    // division must leave no remainder.
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        if (b.is_constant()) {
            Polynomial r = a;
            const C inv = C(1L) / b.c_[0];
            for (auto& x : r.c_) x = x * inv;
            r.sym_ = unify(a.sym_, b.sym_);
            r.trim();
            return r;
        }
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw DomainError("polynomial division is not exact");
        return q;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        if (a.sym_ != Sym::none && b.sym_ != Sym::none && a.sym_ != b.sym_) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Horner evaluation in any ring T that embeds C via T(C).
    template <class T>
    T eval(const T& x) const {
        T acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
        return acc;
    }

    Polynomial compose(const Polynomial& g) const { return eval<Polynomial>(g); }

    // f(x + shift); the symbol is preserved.
    Polynomial shifted(const C& shift) const {
        if (is_constant()) return *this;
        return compose(Polynomial::variable(sym_) + Polynomial(shift));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<C> v(c_.size() - 1, C());
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * C(static_cast<long>(i));
        return Polynomial(std::move(v), sym_);
    }

    Polynomial pow(long e) const {
        if (e < 0) throw DomainError("polynomial pow: negative exponent");
        Polynomial acc(C(1L));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    C leading() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this / Polynomial(leading());
    }

    // Quotient and remainder over a coefficient field.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DomainError("polynomial divmod by zero");
        Sym s = unify(a.sym_, b.sym_);
        Polynomial r = a;
        std::vector<C> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, C());
        const C binv = C(1L) / b.c_.back();
        while (!r.is_zero() && r.c_.size() >= b.c_.size()) {
            const size_t shift = r.c_.size() - b.c_.size();
            const C factor = r.c_.back() * binv;
            q[shift] = q[shift] + factor;
            for (size_t i = 0; i < b.c_.size(); ++i)
                r.c_[shift + i] = r.c_[shift + i] - factor * b.c_[i];
            r.trim_keep_sym();
        }
        r.trim();
        return {Polynomial(std::move(q), s), r};
    }

private:
    void trim() {
        trim_keep_sym();
        if (c_.size() <= 1) sym_ = Sym::none;
    }
    void trim_keep_sym() {
        while (!c_.empty() && c_.back() == C()) c_.pop_back();
    }

    Sym sym_;
    std::vector<C> c_;
};

using PolyQ = Polynomial<Rational>;

// Monic gcd over a coefficient field (Euclid; remainders kept monic to tame growth).
template <class C>
Polynomial<C> poly_gcd(Polynomial<C> a, Polynomial<C> b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a;
}

// Convenience builders for rational-coefficient polynomials.
inline PolyQ poly_var(Sym s) { return PolyQ::variable(s); }
inline PolyQ poly_const(const Rational& q) { return PolyQ(q); }

// (x + shift)^e over symbol s; the workhorse for (omega - j)^n style terms.
inline PolyQ shifted_power(Sym s, const Rational& shift, long e) {
    PolyQ base = poly_var(s) + poly_const(shift);
    return base.pow(e);
}

} // namespace cardinal
