#include "qsv/qseries.hpp"

#include <vector>

namespace qsv {

LaurentSeries poch_series(const Monomial& x, long n, long K, long r) {
    if (r < 1) throw std::invalid_argument("base exponent must be positive");
    if (n == 0 || x.coeff == 0) return LaurentSeries::constant(1).truncated(K);
    if (n == kInfinity) {
        if (x.exp < 0) throw NonformalInfiniteProduct("infinite product with a negative power of q is not a formal series");
        LaurentSeries f = LaurentSeries::constant(1).truncated(K);
        for (long s = x.exp; s <= K; s += r) f.mul_binomial(x.coeff, s);
        return f;
    }
    if (n < 0) throw std::invalid_argument("negative Pochhammer length");
    // Factors with non-positive exponent first, kept exact; the rest cannot lower the window.
    LaurentSeries f = LaurentSeries::constant(1);
    long k = 0;
    for (; k < n && x.exp + r * k <= 0; ++k) f.mul_binomial(x.coeff, x.exp + r * k);
    f = f.truncated(K);
    for (; k < n && x.exp + r * k <= K - f.min_exp(); ++k) f.mul_binomial(x.coeff, x.exp + r * k);
    return f;
}

Rational poch_point(const Rational& x, long n, const Rational& q) {
    Rational p = 1, qk = 1;
    for (long k = 0; k < n; ++k) {
        p *= Rational(1) - x * qk;
        qk *= q;
    }
    return p;
}

LaurentSeries poch_reversed(const Rational& x, long n, long K) {
    LaurentSeries f = LaurentSeries::constant(1);
    if (x == 0) {
        // prod (-q^j) = (-1)^n q^{n(n+1)/2}
        f = LaurentSeries::monomial(n % 2 ? -1 : 1, n * (n + 1) / 2);
        return f.truncated(K);
    }
    Rational inv = Rational(1) / x;
    f = LaurentSeries::constant(pow(x, n)).truncated(K);
    for (long j = 1; j <= n && j <= K; ++j) f.mul_binomial(inv, j);
    return f;
}

LaurentSeries qbinom(long N, long n, long r, long K) {
    if (n < 0 || n > N || N < 0) return LaurentSeries::zero().truncated(K);
    if (r < 1) throw std::invalid_argument("base exponent must be positive");
    long k = std::min(n, N - n);
    long degree = r * k * (N - k);
    LaurentSeries f = LaurentSeries::constant(1);
    for (long i = 1; i <= k; ++i) f.mul_binomial(1, r * (N - k + i));
    for (long i = 1; i <= k; ++i) f.div_binomial(1, r * i, degree);
    // The quotient is a polynomial of known degree, so it is exact.
    f = LaurentSeries::from_coeffs(f.min_exp(), f.coeffs(), LaurentSeries::kExact);
    return f.truncated(K);
}

namespace {

LaurentSeries divisor_sum(const Rational& x, long K, bool weighted) {
    if (K < 1 || x == 0) return LaurentSeries::zero(K);
    std::vector<Rational> pw(static_cast<std::size_t>(K + 1));
    pw[0] = 1;
    for (long d = 1; d <= K; ++d) pw[static_cast<std::size_t>(d)] = pw[static_cast<std::size_t>(d - 1)] * x;
    std::vector<Rational> c(static_cast<std::size_t>(K));
    for (long d = 1; d <= K; ++d) {
        Rational term = weighted ? pw[static_cast<std::size_t>(d)] * d : pw[static_cast<std::size_t>(d)];
        for (long m = d; m <= K; m += d) c[static_cast<std::size_t>(m - 1)] += term;
    }
    return LaurentSeries::from_coeffs(1, std::move(c), K);
}

}  // namespace

LaurentSeries lambert(const Rational& x, long K) { return divisor_sum(x, K, false); }

LaurentSeries weighted_lambert(const Rational& x, long K) { return divisor_sum(x, K, true); }

}  // namespace qsv
