#pragma once

#include "qsv/ball.hpp"
#include "qsv/hypergeometric.hpp"
#include "qsv/laurent_series.hpp"
#include "qsv/qseries.hpp"

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsv {

struct ModeMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// prod_{k<count} (1 - c q^{s + step k})^power with s > 0; count < 0 means unbounded.
struct BinomialRun {
    Rational c;
    long s;
    long step;
    long count;
    int power;
};

// Lazily multiplied formal value: coeff * q^exp * (valuation-zero factors).
// Sums are materialized through `cap`; products stay symbolic until then.
class FVal {
public:
    Rational coeff{1};
    long exp = 0;
    std::vector<BinomialRun> runs;
    std::vector<std::pair<std::shared_ptr<const LaurentSeries>, int>> dense;
    long cap = 0;
    long zero_valid = LaurentSeries::kExact;  // meaningful when coeff == 0

    static FVal zero(long cap, long valid = LaurentSeries::kExact);
    static FVal constant(const Rational& c, long cap);
    static FVal monomial(const Rational& c, long e, long cap);
    static FVal from_series(const LaurentSeries& f, long cap);

    bool is_zero() const { return coeff == 0; }
    // Exact valuation for nonzero values.
    long valuation() const { return exp; }

    // Multiply by (1 - c q^e)^power, normalizing the exponent to be positive.
    void mul_factor(const Rational& c, long e, int power);

    LaurentSeries materialize(long cap) const;
    LaurentSeries materialize() const { return materialize(cap); }

    FVal inverse() const;
    FVal operator-() const;
    friend FVal operator*(const FVal& a, const FVal& b);
    friend FVal operator/(const FVal& a, const FVal& b);
    friend FVal operator+(const FVal& a, const FVal& b);
    friend FVal operator-(const FVal& a, const FVal& b);
    friend FVal operator*(const FVal& a, const Rational& r);
    friend FVal operator*(const Rational& r, const FVal& a) { return a * r; }
    friend FVal operator/(const FVal& a, const Rational& r);
    friend FVal operator+(const FVal& a, const Rational& r) { return a + constant(r, a.cap); }
    friend FVal operator-(const FVal& a, const Rational& r) { return a + constant(-r, a.cap); }
    FVal& operator+=(const FVal& b) { return *this = *this + b; }
    FVal& operator*=(const FVal& b) { return *this = *this * b; }
};

// Exact rational with checked division.
struct XVal {
    Rational v{0};
    XVal() = default;
    XVal(Rational r) : v(std::move(r)) {}
    XVal operator-() const { return XVal(-v); }
    friend XVal operator+(const XVal& a, const XVal& b) { return XVal(a.v + b.v); }
    friend XVal operator-(const XVal& a, const XVal& b) { return XVal(a.v - b.v); }
    friend XVal operator*(const XVal& a, const XVal& b) { return XVal(a.v * b.v); }
    friend XVal operator/(const XVal& a, const XVal& b) {
        if (b.v == 0) throw DivisionByZero("exact division by zero");
        return XVal(a.v / b.v);
    }
    friend XVal operator*(const XVal& a, const Rational& r) { return XVal(a.v * r); }
    friend XVal operator*(const Rational& r, const XVal& a) { return XVal(a.v * r); }
    friend XVal operator/(const XVal& a, const Rational& r) { return a / XVal(r); }
    friend XVal operator+(const XVal& a, const Rational& r) { return XVal(a.v + r); }
    friend XVal operator-(const XVal& a, const Rational& r) { return XVal(a.v - r); }
    XVal& operator+=(const XVal& b) { v += b.v; return *this; }
    XVal& operator*=(const XVal& b) { v *= b.v; return *this; }
};

inline Ball operator*(const Ball& a, const Rational& r) { return a * Ball(r); }
inline Ball operator*(const Rational& r, const Ball& a) { return a * Ball(r); }
inline Ball operator/(const Ball& a, const Rational& r) { return a / Ball(r); }
inline Ball operator+(const Ball& a, const Rational& r) { return a + Ball(r); }
inline Ball operator-(const Ball& a, const Rational& r) { return a - Ball(r); }

// Formal q-expansion through q^order.
class FormalCtx {
public:
    using Value = FVal;
    explicit FormalCtx(long order) : order_(order) {}
    long order() const { return order_; }

    FVal k(const Rational& r) const { return FVal::constant(r, order_); }
    FVal qp(long s) const { return FVal::monomial(1, s, order_); }
    FVal mono(const Monomial& x) const { return FVal::monomial(x.coeff, x.exp, order_); }
    FVal binom(const Monomial& x) const;
    FVal poch(const Monomial& x, long n, long r = 1) const;
    FVal pinf(const Monomial& x, long r = 1) const;
    FVal lin(const Rational& x, const Monomial& y, long n, long r = 1) const;
    FVal qbin(long N, long n, long r = 1) const;
    FVal lambert(const Rational& x) const;
    FVal wlambert(const Rational& x) const;
    FVal phi(const PhiSpec& spec) const;

    template <class F>
    FVal sum(long lo, long hi, F&& f) const {
        LaurentSeries acc;
        for (long n = lo; n <= hi; ++n) add_term(acc, f(n));
        return FVal::from_series(acc.truncated(order_), order_);
    }

    // Terms with lower valuation bound lb(n) > order are dropped; lb must be nondecreasing.
    template <class B, class F>
    FVal sum_inf(long lo, B&& lb, F&& f) const {
        LaurentSeries acc;
        const long guard = 4 * (std::max<long>(order_, 0) + 1) + 256;
        for (long n = lo;; ++n) {
            if (n - lo > guard) throw NonconvergentFormal("term valuations do not reach the truncation order");
            long b = lb(n);
            if (b > order_) break;
            FVal t = f(n);
            if (!t.is_zero() && t.valuation() < b)
                throw std::logic_error("declared valuation bound exceeds the actual valuation");
            add_term(acc, t);
        }
        return FVal::from_series(acc.truncated(order_), order_);
    }

    // pref * inner(ctx) with the inner value needed only through order - valuation(pref).
    template <class F>
    FVal times(const FVal& pref, F&& inner) const {
        if (pref.is_zero()) return pref * inner(*this);
        FormalCtx sub(order_ - pref.valuation());
        FVal out = pref * inner(sub);
        out.cap = order_;
        return out;
    }

    LaurentSeries series(const FVal& v) const { return v.materialize(order_); }

private:
    void add_term(LaurentSeries& acc, const FVal& t) const;
    long order_;
};

// Exact rational evaluation at a rational q; only finite constructions.
class ExactCtx {
public:
    using Value = XVal;
    explicit ExactCtx(Rational q) : q_(std::move(q)) {}
    const Rational& q() const { return q_; }

    XVal k(const Rational& r) const { return XVal(r); }
    XVal qp(long s) const;
    XVal mono(const Monomial& x) const { return XVal(x.at(q_)); }
    XVal binom(const Monomial& x) const { return XVal(Rational(1) - x.at(q_)); }
    XVal poch(const Monomial& x, long n, long r = 1) const;
    XVal pinf(const Monomial&, long = 1) const { throw ModeMismatch("infinite product in exact point mode"); }
    XVal lin(const Rational& x, const Monomial& y, long n, long r = 1) const;
    XVal qbin(long N, long n, long r = 1) const;
    XVal lambert(const Rational&) const { throw ModeMismatch("Lambert series in exact point mode"); }
    XVal wlambert(const Rational&) const { throw ModeMismatch("Lambert series in exact point mode"); }
    XVal phi(const PhiSpec& spec) const;

    template <class F>
    XVal sum(long lo, long hi, F&& f) const {
        XVal acc;
        for (long n = lo; n <= hi; ++n) acc += f(n);
        return acc;
    }
    template <class B, class F>
    XVal sum_inf(long, B&&, F&&) const {
        throw ModeMismatch("infinite sum in exact point mode");
    }
    template <class F>
    XVal times(const XVal& pref, F&& inner) const {
        return pref * inner(*this);
    }

private:
    Rational q_;
};

// Certified-enclosure evaluation; infinite sums use the ratio heuristic and set `heuristic`.
class BallCtx {
public:
    using Value = Ball;
    explicit BallCtx(Rational q, Rational tolerance = default_tolerance());
    static Rational default_tolerance();
    const Rational& q() const { return q_; }

    Ball k(const Rational& r) const { return Ball(r); }
    Ball qp(long s) const { return Ball(pow(q_, s)); }
    Ball mono(const Monomial& x) const { return Ball(x.at(q_)); }
    Ball binom(const Monomial& x) const { return Ball(Rational(1) - x.at(q_)); }
    Ball poch(const Monomial& x, long n, long r = 1) const;
    Ball pinf(const Monomial& x, long r = 1) const;
    Ball lin(const Rational& x, const Monomial& y, long n, long r = 1) const;
    Ball qbin(long N, long n, long r = 1) const;
    Ball lambert(const Rational& x) const;
    Ball wlambert(const Rational& x) const;
    Ball phi(const PhiSpec& spec) const;

    template <class F>
    Ball sum(long lo, long hi, F&& f) const {
        Ball acc;
        for (long n = lo; n <= hi; ++n) acc += f(n);
        return acc;
    }

    template <class B, class F>
    Ball sum_inf(long lo, B&&, F&& f) const {
        Ball acc;
        RatioTail tail;
        for (long n = lo;; ++n) {
            if (n - lo > kMaxTerms) throw RatioNotContracting("series terms are not contracting");
            Ball t = f(n);
            acc += t;
            tail.push(magnitude_log2(t));
            if (!tail.ready()) continue;
            auto b = tail.bound();
            if (b && *b <= tolerance_) {
                heuristic = true;
                return acc.widened(*b);
            }
        }
    }

    template <class F>
    Ball times(const Ball& pref, F&& inner) const {
        return pref * inner(*this);
    }

    mutable bool heuristic = false;
    static constexpr long kMaxTerms = 6000;

private:
    static double magnitude_log2(const Ball& b);
    Rational q_;
    Rational tolerance_;
};

// (q/x; q)_n x^n = prod_{j=1..n} (x - q^j)
template <class C>
auto rpoch(const C& c, const Rational& x, long n) {
    return c.lin(x, Monomial(1, 1), n);
}

template <class C, class V>
V vpow(const C& c, const V& x, long n) {
    if (n < 0) return c.k(1) / vpow(c, x, -n);
    V r = c.k(1);
    for (long i = 0; i < n; ++i) r = r * x;
    return r;
}

inline Rational sign(long n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace qsv
