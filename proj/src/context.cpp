#include "qsv/context.hpp"

#include <algorithm>

namespace qsv {

namespace {

long sat_add(long a, long b) {
    if (a >= LaurentSeries::kExact || b >= LaurentSeries::kExact) return LaurentSeries::kExact;
    return a + b;
}

}  // namespace

FVal FVal::zero(long cap, long valid) {
    FVal z;
    z.coeff = 0;
    z.cap = cap;
    z.zero_valid = valid;
    return z;
}

FVal FVal::constant(const Rational& c, long cap) { return monomial(c, 0, cap); }

FVal FVal::monomial(const Rational& c, long e, long cap) {
    if (c == 0) return zero(cap);
    FVal v;
    v.coeff = c;
    v.exp = e;
    v.cap = cap;
    return v;
}

FVal FVal::from_series(const LaurentSeries& f, long cap) {
    if (f.is_zero()) return zero(cap, f.valid_through());
    FVal v;
    v.cap = cap;
    v.coeff = f.leading();
    v.exp = f.min_exp();
    if (f.exact() && f.coeffs().size() == 1) return v;
    auto d = std::make_shared<LaurentSeries>(f.scaled(Rational(1) / v.coeff).shifted(-v.exp));
    v.dense.emplace_back(std::move(d), 1);
    return v;
}

void FVal::mul_factor(const Rational& c, long e, int power) {
    if (c == 0 || power == 0 || is_zero()) return;
    if (e > 0) {
        runs.push_back({c, e, 1, 1, power});
        return;
    }
    if (e == 0) {
        Rational f = Rational(1) - c;
        if (f == 0) {
            if (power < 0) throw DivisionByZero("division by a vanishing factor");
            *this = zero(cap);
            return;
        }
        coeff *= pow(f, power);
        return;
    }
    // 1 - c q^e = -c q^e (1 - q^{-e}/c)
    coeff *= pow(-c, power);
    exp += e * power;
    runs.push_back({Rational(1) / c, -e, 1, 1, power});
}

LaurentSeries FVal::materialize(long at) const {
    if (is_zero()) return LaurentSeries::zero(zero_valid);
    long rel = at - exp;
    for (const auto& [d, p] : dense) rel = std::min(rel, d->valid_through());
    if (rel < 0) {
        if (at - exp < 0) return LaurentSeries::zero(exp - 1);
        return LaurentSeries::zero(rel + exp);
    }
    LaurentSeries f = LaurentSeries::constant(1).truncated(rel);
    for (const auto& [d, p] : dense) {
        if (p > 0) {
            for (int i = 0; i < p; ++i) f = mul(f, *d, rel);
        } else {
            LaurentSeries inv = d->inverse(rel);
            for (int i = 0; i < -p; ++i) f = mul(f, inv, rel);
        }
    }
    for (const auto& run : runs) {
        for (long k = 0; run.count < 0 || k < run.count; ++k) {
            long s = run.s + run.step * k;
            if (s > rel) break;
            if (run.power > 0)
                for (int i = 0; i < run.power; ++i) f.mul_binomial(run.c, s);
            else
                for (int i = 0; i < -run.power; ++i) f.div_binomial(run.c, s, rel);
        }
    }
    return f.truncated(rel).scaled(coeff).shifted(exp);
}

FVal FVal::inverse() const {
    if (is_zero()) throw DivisionByZero("formal division by zero");
    FVal v = *this;
    v.coeff = Rational(1) / coeff;
    v.exp = -exp;
    for (auto& r : v.runs) r.power = -r.power;
    for (auto& d : v.dense) d.second = -d.second;
    return v;
}

FVal FVal::operator-() const {
    FVal v = *this;
    v.coeff = -v.coeff;
    return v;
}

FVal operator*(const FVal& a, const FVal& b) {
    long cap = std::max(a.cap, b.cap);
    if (a.is_zero() && b.is_zero()) return FVal::zero(cap, sat_add(sat_add(a.zero_valid, b.zero_valid), 1));
    if (a.is_zero()) return FVal::zero(cap, sat_add(a.zero_valid, b.exp));
    if (b.is_zero()) return FVal::zero(cap, sat_add(b.zero_valid, a.exp));
    FVal v = a;
    v.cap = cap;
    v.coeff *= b.coeff;
    v.exp += b.exp;
    v.runs.insert(v.runs.end(), b.runs.begin(), b.runs.end());
    v.dense.insert(v.dense.end(), b.dense.begin(), b.dense.end());
    return v;
}

FVal operator/(const FVal& a, const FVal& b) { return a * b.inverse(); }

FVal operator+(const FVal& a, const FVal& b) {
    long cap = std::max(a.cap, b.cap);
    if (b.is_zero() && b.zero_valid >= LaurentSeries::kExact) {
        FVal v = a;
        v.cap = cap;
        return v;
    }
    if (a.is_zero() && a.zero_valid >= LaurentSeries::kExact) {
        FVal v = b;
        v.cap = cap;
        return v;
    }
    LaurentSeries s = a.materialize(cap) + b.materialize(cap);
    return FVal::from_series(s.truncated(cap), cap);
}

FVal operator-(const FVal& a, const FVal& b) { return a + (-b); }

FVal operator*(const FVal& a, const Rational& r) {
    if (r == 0) return FVal::zero(a.cap);
    FVal v = a;
    v.coeff *= r;
    return v;
}

FVal operator/(const FVal& a, const Rational& r) {
    if (r == 0) throw DivisionByZero("formal division by zero");
    FVal v = a;
    v.coeff /= r;
    return v;
}

// ---- FormalCtx

FVal FormalCtx::binom(const Monomial& x) const {
    FVal v = k(1);
    v.mul_factor(x.coeff, x.exp, 1);
    return v;
}

FVal FormalCtx::poch(const Monomial& x, long n, long r) const {
    FVal v = k(1);
    if (x.coeff == 0 || n <= 0) return v;
    long j = 0;
    for (; j < n && x.exp + r * j <= 0; ++j) v.mul_factor(x.coeff, x.exp + r * j, 1);
    if (j < n && !v.is_zero()) v.runs.push_back({x.coeff, x.exp + r * j, r, n - j, 1});
    return v;
}

FVal FormalCtx::pinf(const Monomial& x, long r) const {
    if (x.coeff == 0) return k(1);
    if (x.exp < 0) throw NonformalInfiniteProduct("infinite product with a negative power of q is not a formal series");
    FVal v = k(1);
    long s = x.exp;
    if (s == 0) {
        v.mul_factor(x.coeff, 0, 1);
        s = r;
    }
    if (!v.is_zero()) v.runs.push_back({x.coeff, s, r, -1, 1});
    return v;
}

FVal FormalCtx::lin(const Rational& x, const Monomial& y, long n, long r) const {
    if (n <= 0) return k(1);
    if (y.coeff == 0) return k(pow(x, n));
    if (x != 0) return poch(Monomial(y.coeff / x, y.exp), n, r) * pow(x, n);
    return FVal::monomial(pow(-y.coeff, n), n * y.exp + r * n * (n - 1) / 2, order_);
}

FVal FormalCtx::qbin(long N, long n, long r) const {
    if (n < 0 || n > N) return FVal::zero(order_);
    long m = std::min(n, N - n);
    FVal v = k(1);
    if (m == 0) return v;
    v.runs.push_back({1, r * (N - m + 1), r, m, 1});
    v.runs.push_back({1, r, r, m, -1});
    return v;
}

FVal FormalCtx::lambert(const Rational& x) const {
    return FVal::from_series(qsv::lambert(x, order_), order_);
}

FVal FormalCtx::wlambert(const Rational& x) const {
    return FVal::from_series(weighted_lambert(x, order_), order_);
}

FVal FormalCtx::phi(const PhiSpec& spec) const { return FVal::from_series(phi_series(spec, order_), order_); }

void FormalCtx::add_term(LaurentSeries& acc, const FVal& t) const {
    if (t.is_zero()) {
        acc += LaurentSeries::zero(t.zero_valid);
        return;
    }
    if (t.valuation() > order_) return;
    acc += t.materialize(order_);
}

// ---- ExactCtx

XVal ExactCtx::qp(long s) const {
    if (q_ == 0 && s < 0) throw DivisionByZero("negative power of q = 0");
    return XVal(pow(q_, s));
}

XVal ExactCtx::poch(const Monomial& x, long n, long r) const {
    Rational p = 1;
    if (x.coeff == 0) return XVal(p);
    Rational t = x.at(q_), step = pow(q_, r);
    for (long j = 0; j < n; ++j) {
        p *= Rational(1) - t;
        t *= step;
    }
    return XVal(p);
}

XVal ExactCtx::lin(const Rational& x, const Monomial& y, long n, long r) const {
    Rational p = 1;
    Rational t = y.at(q_), step = pow(q_, r);
    for (long j = 0; j < n; ++j) {
        p *= x - t;
        t *= step;
    }
    return XVal(p);
}

XVal ExactCtx::qbin(long N, long n, long r) const {
    if (n < 0 || n > N) return XVal(0);
    long m = std::min(n, N - n);
    Rational num = 1, den = 1, qr = pow(q_, r);
    for (long i = 1; i <= m; ++i) {
        num *= Rational(1) - pow(qr, N - m + i);
        den *= Rational(1) - pow(qr, i);
    }
    if (den == 0) throw DivisionByZero("q-binomial at a root of unity");
    return XVal(num / den);
}

XVal ExactCtx::phi(const PhiSpec& spec) const {
    if (!spec.terminating_length()) throw ModeMismatch("non-terminating phi in exact point mode");
    return XVal(phi_point(spec, q_, 0).value);
}

// ---- BallCtx

Rational BallCtx::default_tolerance() { return pow(Rational(2), -100); }

BallCtx::BallCtx(Rational q, Rational tolerance) : q_(std::move(q)), tolerance_(std::move(tolerance)) {}

double BallCtx::magnitude_log2(const Ball& b) {
    if (b.mid() != 0) return log2_abs(b.mid());
    return log2_abs(b.rad());
}

Ball BallCtx::poch(const Monomial& x, long n, long r) const {
    Ball p(1);
    if (x.coeff == 0) return p;
    Ball t(x.at(q_)), stepb(pow(q_, r));
    for (long j = 0; j < n; ++j) {
        p *= Ball(1) - t;
        t *= stepb;
    }
    return p;
}

Ball BallCtx::pinf(const Monomial& x, long r) const {
    if (x.coeff == 0) return Ball(1);
    const Rational qr = abs(pow(q_, r));
    if (qr >= 1) throw RatioNotContracting("infinite product needs |q| < 1");
    Ball p(1);
    Ball t(x.at(q_));
    Ball stepb(pow(q_, r));
    const Rational small = pow(Rational(2), -110);
    for (long j = 0; j < 100000; ++j) {
        Rational tail = t.mag() / (Rational(1) - qr);
        if (tail <= small) {
            // |prod (1 + u_k) - 1| <= 2 sum |u_k| when the sum is at most 1
            return p.widened(p.mag() * tail * 2);
        }
        p *= Ball(1) - t;
        t *= stepb;
    }
    throw RatioNotContracting("infinite product did not converge");
}

Ball BallCtx::lin(const Rational& x, const Monomial& y, long n, long r) const {
    Ball p(1);
    Ball t(y.at(q_)), stepb(pow(q_, r)), xb(x);
    for (long j = 0; j < n; ++j) {
        p *= xb - t;
        t *= stepb;
    }
    return p;
}

Ball BallCtx::qbin(long N, long n, long r) const {
    if (n < 0 || n > N) return Ball(0);
    long m = std::min(n, N - n);
    Ball num(1), den(1);
    Rational qr = pow(q_, r);
    for (long i = 1; i <= m; ++i) {
        num *= Ball(Rational(1) - pow(qr, N - m + i));
        den *= Ball(Rational(1) - pow(qr, i));
    }
    return num / den;
}

namespace {

Ball lambert_ball(const Rational& x, const Rational& q, bool weighted) {
    const Rational ratio = abs(x * q);
    if (ratio >= 1 || abs(q) >= 1) throw RatioNotContracting("Lambert series needs |xq| < 1");
    const Rational one_minus_q = Rational(1) - abs(q);
    const Rational small = pow(Rational(2), -110);
    Ball acc;
    Ball xn(1), qn(1), xb(x), qb(q);
    Rational rn = 1;
    for (long n = 1; n < 100000; ++n) {
        xn *= xb;
        qn *= qb;
        rn *= ratio;
        Ball term = xn * qn / (Ball(1) - qn);
        if (weighted) term = term * Rational(n);
        acc += term;
        Rational r1 = rn * ratio;
        const Rational gap = Rational(1) - ratio;
        Rational tail = r1 / (gap * one_minus_q);
        if (weighted) tail = tail * (n + 1) / gap;
        if (tail <= small) return acc.widened(tail);
        if (bit_size(rn) > 2 * Ball::kMidBits) rn = round_up_dyadic(rn, Ball::kRadBits);
    }
    throw RatioNotContracting("Lambert series did not converge");
}

}  // namespace

Ball BallCtx::lambert(const Rational& x) const { return lambert_ball(x, q_, false); }

Ball BallCtx::wlambert(const Rational& x) const { return lambert_ball(x, q_, true); }

Ball BallCtx::phi(const PhiSpec& spec) const {
    PhiValue v = phi_point(spec, q_, kMaxTerms, tolerance_);
    if (v.heuristic) heuristic = true;
    return Ball(v.value, v.tail_bound);
}

}  // namespace qsv
