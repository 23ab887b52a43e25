#pragma once

#include "qsv/laurent_series.hpp"
#include "qsv/rational.hpp"

#include <optional>
#include <stdexcept>

namespace qsv {

struct NonformalInfiniteProduct : std::domain_error {
    using std::domain_error::domain_error;
};

// coeff * q^exp; zero is always (0, 0).
struct Monomial {
    Rational coeff{0};
    long exp = 0;

    Monomial() = default;
    Monomial(Rational c, long e) : coeff(std::move(c)), exp(e) {
        if (coeff == 0) exp = 0;
    }
    bool operator==(const Monomial& o) const { return coeff == o.coeff && exp == o.exp; }
    Monomial times(const Rational& c, long e = 0) const { return {coeff * c, exp + e}; }
    Rational at(const Rational& q) const { return coeff == 0 ? Rational(0) : coeff * pow(q, exp); }
};

inline constexpr long kInfinity = -1;

// (x; q^r)_n through q^K; n = kInfinity for the infinite product.
LaurentSeries poch_series(const Monomial& x, long n, long K, long r = 1);

// prod_{k<n} (1 - x q^k)
Rational poch_point(const Rational& x, long n, const Rational& q);

// prod_{j=1..n} (x - q^j) through q^K
LaurentSeries poch_reversed(const Rational& x, long n, long K);

// Gaussian binomial [N n] in base q^r through q^K; zero outside 0 <= n <= N.
LaurentSeries qbinom(long N, long n, long r, long K);

// sum_{m>=1} (sum_{d|m} x^d) q^m through q^K
LaurentSeries lambert(const Rational& x, long K);

// sum_{m>=1} (sum_{d|m} d x^d) q^m through q^K
LaurentSeries weighted_lambert(const Rational& x, long K);

}  // namespace qsv
