#pragma once

#include "qsv/rational.hpp"

#include <string>

namespace qsv {

// Midpoint-radius enclosure with rational endpoints.
// Midpoints are rounded to dyadics once they grow past the working precision.
class Ball {
public:
    static constexpr int kMidBits = 320;
    static constexpr int kRadBits = 64;

    Ball() = default;
    Ball(const Rational& mid) : mid_(mid) {}
    Ball(long v) : mid_(v) {}
    Ball(const Rational& mid, const Rational& rad);

    const Rational& mid() const { return mid_; }
    const Rational& rad() const { return rad_; }
    bool exact() const { return rad_ == 0; }
    // Upper bound on |x| over the ball.
    Rational mag() const;
    bool contains_zero() const;

    Ball operator-() const;
    friend Ball operator+(const Ball& x, const Ball& y);
    friend Ball operator-(const Ball& x, const Ball& y);
    friend Ball operator*(const Ball& x, const Ball& y);
    friend Ball operator/(const Ball& x, const Ball& y);
    Ball& operator+=(const Ball& y) { return *this = *this + y; }
    Ball& operator*=(const Ball& y) { return *this = *this * y; }

    Ball widened(const Rational& extra) const;

    std::string to_string() const;

private:
    void round();

    Rational mid_{0};
    Rational rad_{0};
};

Ball pow(const Ball& x, long n);

}  // namespace qsv
