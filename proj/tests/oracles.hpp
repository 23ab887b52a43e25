#pragma once

// Independent reference computations: plain coefficient vectors, no LaurentSeries arithmetic.

#include "qsv/laurent_series.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using qsv::Rational;
using Poly = std::vector<Rational>;  // coefficients of q^0..q^K

inline Poly one(long K) {
    Poly p(K + 1, Rational(0));
    p[0] = 1;
    return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// multiply by (1 - c q^s), s >= 0
inline Poly mul_binom(const Poly& a, const Rational& c, long s) {
    Poly out = a;
    for (std::size_t i = static_cast<std::size_t>(s); i < a.size(); ++i) out[i] -= c * a[i - s];
    return out;
}

// divide by (1 - c q^s), s >= 1
inline Poly div_binom(const Poly& a, const Rational& c, long s) {
    Poly out = a;
    for (std::size_t i = static_cast<std::size_t>(s); i < a.size(); ++i) out[i] += c * out[i - s];
    return out;
}

inline long divisor_count(long m) {
    long d = 0;
    for (long k = 1; k <= m; ++k) d += (m % k == 0);
    return d;
}

inline Rational divisor_power_sum(long m, const Rational& x, bool weighted) {
    Rational s = 0;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) {
            Rational t = qsv::pow(x, d);
            s += weighted ? t * d : t;
        }
    return s;
}

// Coefficient of q^m in (q;q)_inf by the pentagonal number theorem.
inline long pentagonal(long m) {
    for (long j = -m - 1; j <= m + 1; ++j)
        if (j * (3 * j - 1) / 2 == m) return (j % 2 == 0) ? 1 : -1;
    return 0;
}

inline long binomial(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Coefficient comparison on 0..K.
inline bool same(const qsv::LaurentSeries& f, const Poly& p) {
    for (std::size_t e = 0; e < p.size(); ++e)
        if (f.coeff(static_cast<long>(e)) != p[e]) return false;
    return true;
}

inline Rational random_rational(std::mt19937_64& g, long num_bound, long den_bound, bool nonzero = true) {
    for (;;) {
        std::uniform_int_distribution<long> den(1, den_bound), num(-num_bound, num_bound);
        Rational r = qsv::make_rational(num(g), den(g));
        if (!nonzero || r != 0) return r;
    }
}

}  // namespace oracle
