#pragma once

#include <vector>

#include "cardinal/ratfunc.hpp"

namespace cardinal {

// Truncated power series in t. The convention tag is part of the value:
// exponential series store a_n with f = sum a_n t^n/n!, ordinary series store
// the plain t^n coefficient. Every binary operation insists the tags match,
// because silently mixing the two is the classic way to corrupt coefficients.
enum class SeriesKind { exponential, ordinary };

inline const char* series_kind_name(SeriesKind k) {
    return k == SeriesKind::exponential ? "egf" : "ogf";
}

// Scalar helpers so generic series code can scale any coefficient domain by a
// rational and take integer powers of it.
inline Rational scale(const Rational& x, const Rational& q) { return x * q; }
inline PolyQ scale(const PolyQ& x, const Rational& q) { return x * q; }
inline RatFunc scale(const RatFunc& x, const Rational& q) { return x * RatFunc(q); }
inline BiPoly scale(const BiPoly& x, const Rational& q) { return x * RatFunc(q); }

inline Rational cpow(const Rational& x, long e) { return rat_pow(x, e); }
inline PolyQ cpow(const PolyQ& x, long e) { return x.pow(e); }
inline RatFunc cpow(const RatFunc& x, long e) { return x.pow(e); }
inline BiPoly cpow(const BiPoly& x, long e) { return x.pow(e); }

template <class C>
class PowerSeries {
public:
    PowerSeries(SeriesKind kind, int order)
        : kind_(kind), c_(static_cast<size_t>(order) + 1, C()) {
        if (order < 0) throw DomainError("power series with negative order");
    }

    PowerSeries(SeriesKind kind, std::vector<C> entries) : kind_(kind), c_(std::move(entries)) {
        if (c_.empty()) throw DomainError("power series needs at least the constant entry");
    }

    SeriesKind kind() const { return kind_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }

    const C& entry(int n) const {
        if (n < 0 || n > order()) throw DomainError("series entry out of stored range");
        return c_[static_cast<size_t>(n)];
    }
    void set(int n, C v) {
        if (n < 0 || n > order()) throw DomainError("series entry out of stored range");
        c_[static_cast<size_t>(n)] = std::move(v);
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        const int ord = a.matched_order(b);
        PowerSeries r(a.kind_, ord);
        for (int n = 0; n <= ord; ++n) r.c_[n] = a.c_[n] + b.c_[n];
        return r;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        const int ord = a.matched_order(b);
        PowerSeries r(a.kind_, ord);
        for (int n = 0; n <= ord; ++n) r.c_[n] = a.c_[n] - b.c_[n];
        return r;
    }

    PowerSeries operator-() const {
        PowerSeries r = *this;
        for (auto& x : r.c_) x = C() - x;
        return r;
    }

    // Cauchy product; binomially weighted in the exponential convention.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const int ord = a.matched_order(b);
        PowerSeries r(a.kind_, ord);
        for (int n = 0; n <= ord; ++n) {
            C acc{};
            for (int k = 0; k <= n; ++k) {
                C term = a.c_[k] * b.c_[n - k];
                if (a.kind_ == SeriesKind::exponential)
                    term = scale(term, Rational(binomial(n, k)));
                acc = acc + term;
            }
            r.c_[n] = acc;
        }
        return r;
    }

    friend PowerSeries operator*(const PowerSeries& a, const C& k) {
        PowerSeries r = a;
        for (auto& x : r.c_) x = x * k;
        return r;
    }
    friend PowerSeries operator*(const C& k, const PowerSeries& a) { return a * k; }

    // Coefficient-recurrence division. The divisor's constant entry must be
    // invertible; a zero constant term means the caller forgot to factor out
    // the known power of t from numerator and denominator first.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
        const int ord = a.matched_order(b);
        if (b.c_[0] == C())
            throw DomainError("series division by zero constant term; factor out t first");
        PowerSeries q(a.kind_, ord);
        for (int n = 0; n <= ord; ++n) {
            C acc = a.c_[n];
            for (int k = 1; k <= n; ++k) {
                C term = b.c_[k] * q.c_[n - k];
                if (a.kind_ == SeriesKind::exponential)
                    term = scale(term, Rational(binomial(n, k)));
                acc = acc - term;
            }
            q.c_[n] = acc / b.c_[0];
        }
        return q;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.kind_ == b.kind_ && a.c_ == b.c_;
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    // Multiplication by t^k (entry bookkeeping differs between conventions).
    PowerSeries shift_t(int k) const {
        if (k < 0) throw DomainError("shift_t: negative power of t");
        PowerSeries r(kind_, order());
        for (int n = k; n <= order(); ++n) {
            C v = c_[n - k];
            if (kind_ == SeriesKind::exponential) {
                // a_{n-k} t^{n-k}/(n-k)! becomes (n!/(n-k)!) a_{n-k} t^n/n!
                Rational f(1);
                for (int i = n - k + 1; i <= n; ++i) f *= i;
                v = scale(v, f);
            }
            r.c_[n] = v;
        }
        return r;
    }

    // e^{base t} truncated at `order`.
    static PowerSeries exp_linear(SeriesKind kind, const C& base, int order) {
        PowerSeries r(kind, order);
        for (int n = 0; n <= order; ++n) {
            C v = cpow(base, n);
            if (kind == SeriesKind::ordinary) v = scale(v, Rational(1) / Rational(factorial(n)));
            r.c_[n] = v;
        }
        return r;
    }

    static PowerSeries constant(SeriesKind kind, const C& value, int order) {
        PowerSeries r(kind, order);
        r.c_[0] = value;
        return r;
    }

private:
    int matched_order(const PowerSeries& other) const {
        if (kind_ != other.kind_)
            throw DomainError("power series convention mismatch (egf vs ogf)");
        return std::min(order(), other.order());
    }

    SeriesKind kind_;
    std::vector<C> c_;
};

} // namespace cardinal
