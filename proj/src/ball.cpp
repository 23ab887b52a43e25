#include "qsv/ball.hpp"
#include "qsv/laurent_series.hpp"

#include <cstdio>

namespace qsv {

Ball::Ball(const Rational& mid, const Rational& rad) : mid_(mid), rad_(abs(rad)) { round(); }

void Ball::round() {
    if (bit_size(mid_) > 2 * kMidBits) {
        Rational err;
        mid_ = round_dyadic(mid_, kMidBits, err);
        rad_ += err;
    }
    if (bit_size(rad_) > 2 * kRadBits) rad_ = round_up_dyadic(rad_, kRadBits);
}

Rational Ball::mag() const { return abs(mid_) + rad_; }

bool Ball::contains_zero() const { return abs(mid_) <= rad_; }

Ball Ball::operator-() const {
    Ball r = *this;
    r.mid_ = -r.mid_;
    return r;
}

Ball operator+(const Ball& x, const Ball& y) {
    Ball r;
    r.mid_ = x.mid_ + y.mid_;
    r.rad_ = x.rad_ + y.rad_;
    r.round();
    return r;
}

Ball operator-(const Ball& x, const Ball& y) { return x + (-y); }

Ball operator*(const Ball& x, const Ball& y) {
    Ball r;
    r.mid_ = x.mid_ * y.mid_;
    if (x.rad_ != 0 || y.rad_ != 0) r.rad_ = abs(x.mid_) * y.rad_ + abs(y.mid_) * x.rad_ + x.rad_ * y.rad_;
    r.round();
    return r;
}

Ball operator/(const Ball& x, const Ball& y) {
    if (y.contains_zero()) throw DivisionByZero("division by a ball containing zero");
    Ball inv;
    Rational m = abs(y.mid_);
    inv.mid_ = Rational(1) / y.mid_;
    if (y.rad_ != 0) inv.rad_ = y.rad_ / (m * (m - y.rad_));
    inv.round();
    return x * inv;
}

Ball Ball::widened(const Rational& extra) const {
    Ball r = *this;
    r.rad_ += abs(extra);
    r.round();
    return r;
}

std::string Ball::to_string() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.20g +/- %.3g", mid_.get_d(), upper_double(rad_));
    return buf;
}

Ball pow(const Ball& x, long n) {
    if (n < 0) return Ball(1) / pow(x, -n);
    Ball r(1), b = x;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

}  // namespace qsv
