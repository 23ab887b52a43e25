#pragma once

#include "qsv/rational.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsv {

struct ZeroLeadingCoefficient : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Truncated Laurent series in q with rational coefficients.
// Coefficients of q^e are exact for every e <= valid_through().
// A finite, fully known polynomial carries the exact sentinel instead of a bound.
class LaurentSeries {
public:
    static constexpr long kExact = std::numeric_limits<long>::max() / 4;
    static constexpr long kNoCap = kExact;

    LaurentSeries() = default;  // exact zero

    static LaurentSeries zero(long valid_through = kExact);
    static LaurentSeries constant(const Rational& c);
    static LaurentSeries monomial(const Rational& c, long exp);
    static LaurentSeries from_coeffs(long min_exp, std::vector<Rational> coeffs, long valid_through);

    long min_exp() const { return min_exp_; }
    long valid_through() const { return valid_; }
    bool exact() const { return valid_ >= kExact; }
    bool is_zero() const { return coeffs_.empty(); }
    // Largest stored exponent; min_exp()-1 when empty.
    long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(long e) const;
    const Rational& leading() const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);
    LaurentSeries& operator+=(const LaurentSeries& g);

    LaurentSeries scaled(const Rational& c) const;
    // Multiply by q^k.
    LaurentSeries shifted(long k) const;
    // Drop everything above exponent k; valid_through becomes min(V, k).
    LaurentSeries truncated(long k) const;
    // q -> q^r.
    LaurentSeries rebased(long r) const;
    // Multiplicative inverse; `cap` bounds the window when the input is an exact non-monomial.
    LaurentSeries inverse(long cap = kNoCap) const;

    // In-place multiplication / division by (1 - c q^s); division needs a cap when the result is infinite.
    void mul_binomial(const Rational& c, long s);
    void div_binomial(const Rational& c, long s, long cap = kNoCap);

    // Sum of c_e q^e over stored exponents.
    Rational evaluate(const Rational& q) const;

    std::string to_string() const;

    bool operator==(const LaurentSeries& o) const = default;

private:
    void normalize();

    long min_exp_ = 0;
    std::vector<Rational> coeffs_;
    long valid_ = kExact;
};

// Bound arithmetic that keeps the exact sentinel absorbing.
long valid_add(long v, long d);

LaurentSeries mul_serial(const LaurentSeries& f, const LaurentSeries& g, long cap = LaurentSeries::kNoCap);
// OpenMP kernel over output coefficients; same result as mul_serial.
LaurentSeries mul_parallel(const LaurentSeries& f, const LaurentSeries& g, long cap = LaurentSeries::kNoCap);
// Dispatches on size and available threads.
LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g, long cap = LaurentSeries::kNoCap);

}  // namespace qsv
