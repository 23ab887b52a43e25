#include "oracles.hpp"
#include "qsv/laurent_series.hpp"
#include "qsv/qseries.hpp"

#include <doctest.h>

using namespace qsv;
using oracle::Poly;

namespace {

LaurentSeries poly(long min_exp, std::vector<long> cs, long valid = LaurentSeries::kExact) {
    std::vector<Rational> r;
    for (long c : cs) r.emplace_back(c);
    return LaurentSeries::from_coeffs(min_exp, r, valid);
}

LaurentSeries random_series(std::mt19937_64& g, long K) {
    std::uniform_int_distribution<long> lo(-2, 2), len(1, 6);
    long m = lo(g), n = len(g);
    std::vector<Rational> cs;
    for (long i = 0; i < n; ++i) cs.push_back(oracle::random_rational(g, 5, 4, false));
    return LaurentSeries::from_coeffs(m, cs, K);
}

// Same stored coefficients, whatever the validity bound.
bool coeffs_are(const LaurentSeries& f, long min_exp, std::vector<long> cs) {
    LaurentSeries g = poly(min_exp, cs);
    if (f.is_zero() || g.is_zero()) return f.is_zero() == g.is_zero();
    return f.min_exp() == g.min_exp() && f.coeffs() == g.coeffs();
}

bool agree_through(const LaurentSeries& f, const LaurentSeries& g, long K) {
    for (long e = std::min(f.min_exp(), g.min_exp()); e <= K; ++e)
        if (f.coeff(e) != g.coeff(e)) return false;
    return true;
}

}  // namespace

TEST_CASE("addition") {
    CHECK(poly(0, {1, -1}) + poly(1, {1}) == LaurentSeries::constant(1));
    LaurentSeries f = poly(-1, {1, 0, 3}, 7);
    CHECK(f + LaurentSeries() == f);
    CHECK(poly(-1, {1, 1}) + poly(0, {1}) == poly(-1, {1, 2}));
    LaurentSeries g = poly(0, {1, -1}, 5) + poly(1, {1}, 9);
    CHECK(g.valid_through() == 5);
}

TEST_CASE("multiplication") {
    CHECK(poly(0, {1, 1}) * poly(0, {1, -1}) == poly(0, {1, 0, -1}));
    LaurentSeries f = poly(-2, {3, 0, 1}, 6);
    CHECK(f * LaurentSeries::constant(1) == f);
    CHECK(LaurentSeries::monomial(1, -1) * LaurentSeries::monomial(1, 3) == LaurentSeries::monomial(1, 2));
    // valuations shift the window of the other factor
    LaurentSeries a = poly(1, {1, 1}, 10), b = poly(0, {1, 2, 3}, 8);
    CHECK((a * b).valid_through() == 9);
}

TEST_CASE("inversion") {
    LaurentSeries g = poly(0, {1, -1}).inverse(10);
    Poly ones(11, Rational(1));
    CHECK(oracle::same(g, ones));
    CHECK(g.valid_through() == 10);
    CHECK(LaurentSeries::monomial(1, 1).inverse() == LaurentSeries::monomial(1, -1));
    LaurentSeries fib = poly(0, {1, -1, -1}).inverse(4);
    CHECK(coeffs_are(fib, 0, {1, 1, 2, 3, 5}));
    CHECK(fib.valid_through() == 4);
    CHECK_THROWS(LaurentSeries().inverse(3));
}

TEST_CASE("rebase") {
    CHECK(coeffs_are(poly(0, {1, 1}).rebased(2), 0, {1, 0, 1}));
    LaurentSeries f = poly(-1, {2, 0, 5}, 9);
    CHECK(f.rebased(1) == f);
    CHECK(coeffs_are(poly(0, {1, -1, 0, 1}).rebased(3), 0, {1, 0, 0, -1, 0, 0, 0, 0, 0, 1}));
}

TEST_CASE("canonical zero") {
    LaurentSeries z = poly(3, {1}) - poly(3, {1});
    CHECK(z.is_zero());
    CHECK(z.min_exp() == 0);
}

TEST_CASE("q-Pochhammer series") {
    CHECK(coeffs_are(poch_series(Monomial(1, 1), kInfinity, 5).truncated(5), 0, {1, -1, -1, 0, 0, 1}));
    CHECK(coeffs_are(poch_series(Monomial(Rational(7, 3), 2), 0, 8), 0, {1}));
    CHECK(coeffs_are(poch_series(Monomial(2, 0), 2, 2), 0, {-1, 2}));
}

TEST_CASE("Euler pentagonal oracle through q^40") {
    LaurentSeries e = poch_series(Monomial(1, 1), kInfinity, 40);
    CHECK(e.valid_through() >= 40);
    for (long m = 0; m <= 40; ++m) CHECK(e.coeff(m) == oracle::pentagonal(m));
}

TEST_CASE("q-Pochhammer point") {
    CHECK(poch_point(2, 2, 3) == 5);
    CHECK(poch_point(Rational(5, 7), 0, Rational(1, 3)) == 1);
    for (long n = 1; n <= 4; ++n) CHECK(poch_point(1, n, Rational(1, 4)) == 0);
}

TEST_CASE("reversed Pochhammer") {
    CHECK(coeffs_are(poch_reversed(0, 2, 5), 3, {1}));
    CHECK(coeffs_are(poch_reversed(Rational(3), 0, 5), 0, {1}));
    CHECK(coeffs_are(poch_reversed(1, 2, 5), 0, {1, -1, -1, 1}));
    std::mt19937_64 g(7);
    for (int t = 0; t < 20; ++t) {
        Rational x = oracle::random_rational(g, 9, 7), q = oracle::random_rational(g, 3, 9);
        if (abs(q) >= 1) continue;
        for (long n = 0; n <= 5; ++n)
            CHECK(poch_reversed(x, n, 60).evaluate(q) == poch_point(q / x, n, q) * pow(x, n));
    }
}

TEST_CASE("Gaussian binomials") {
    CHECK(coeffs_are(qbinom(4, 2, 1, 4), 0, {1, 1, 2, 1, 1}));
    for (long N = 0; N <= 5; ++N) CHECK(coeffs_are(qbinom(N, 0, 1, 10), 0, {1}));
    CHECK(coeffs_are(qbinom(2, 1, 2, 2), 0, {1, 0, 1}));
    CHECK(qbinom(3, 5, 1, 10).is_zero());
    const long K = 60;
    for (long N = 1; N <= 10; ++N)
        for (long n = 1; n <= N; ++n) {
            LaurentSeries pascal = qbinom(N - 1, n - 1, 1, K) + qbinom(N - 1, n, 1, K).shifted(n);
            CHECK(agree_through(qbinom(N, n, 1, K), pascal, K));
            CHECK(qbinom(N, n, 1, K).coeffs() == qbinom(N, N - n, 1, K).coeffs());
            Rational total = 0;
            const LaurentSeries b = qbinom(N, n, 1, K);
            for (const auto& c : b.coeffs()) total += c;
            CHECK(total == oracle::binomial(N, n));
        }
}

TEST_CASE("Pochhammer splitting") {
    const long K = 30;
    for (auto x : {Monomial(1, 1), Monomial(Rational(-2, 3), 0), Monomial(Rational(5, 2), 2)})
        for (long m = 0; m <= 8; ++m)
            for (long n = 0; n <= 8; ++n) {
                LaurentSeries lhs = poch_series(x, m + n, K);
                LaurentSeries rhs = poch_series(x, m, K) * poch_series(x.times(1, m), n, K);
                CHECK(agree_through(lhs, rhs, K));
            }
}

TEST_CASE("Lambert series") {
    LaurentSeries l = lambert(1, 6);
    for (long m = 1; m <= 6; ++m) CHECK(l.coeff(m) == oracle::divisor_count(m));
    CHECK(l.coeff(0) == 0);
    CHECK(lambert(0, 8).is_zero());
    LaurentSeries h = lambert(Rational(1, 2), 3);
    CHECK(h.coeff(1) == Rational(1, 2));
    CHECK(h.coeff(2) == Rational(3, 4));
    CHECK(h.coeff(3) == Rational(5, 8));
    LaurentSeries w = weighted_lambert(Rational(1, 2), 2);
    CHECK(w.coeff(1) == Rational(1, 2));
    CHECK(w.coeff(2) == 1);
    CHECK(weighted_lambert(0, 6).is_zero());
    LaurentSeries s = weighted_lambert(1, 4);
    CHECK(coeffs_are(s, 1, {1, 3, 4, 7}));

    std::mt19937_64 g(11);
    for (int t = 0; t < 5; ++t) {
        Rational x = oracle::random_rational(g, 5, 5);
        LaurentSeries a = lambert(x, 60), b = weighted_lambert(x, 60);
        for (long m = 1; m <= 60; ++m) {
            CHECK(a.coeff(m) == oracle::divisor_power_sum(m, x, false));
            CHECK(b.coeff(m) == oracle::divisor_power_sum(m, x, true));
        }
    }
}

TEST_CASE("ring axioms on the valid window") {
    std::mt19937_64 g(3);
    for (int t = 0; t < 40; ++t) {
        LaurentSeries f = random_series(g, 12), h = random_series(g, 12), k = random_series(g, 12);
        LaurentSeries s1 = (f + h) + k, s2 = f + (h + k);
        CHECK(s1.valid_through() == s2.valid_through());
        CHECK(agree_through(s1, s2, s1.valid_through()));
        LaurentSeries d1 = f * (h + k), d2 = f * h + f * k;
        long v = std::min(d1.valid_through(), d2.valid_through());
        CHECK(agree_through(d1, d2, v));
        if (!f.is_zero()) {
            LaurentSeries u = f * f.inverse();
            CHECK(agree_through(u, LaurentSeries::constant(1), u.valid_through()));
        }
    }
}

TEST_CASE("serial and parallel multiplication agree") {
    std::mt19937_64 g(5);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rational> a, b;
        for (int i = 0; i < 300; ++i) a.push_back(oracle::random_rational(g, 9, 9, false));
        for (int i = 0; i < 250; ++i) b.push_back(oracle::random_rational(g, 9, 9, false));
        LaurentSeries f = LaurentSeries::from_coeffs(-3, a, 400), h = LaurentSeries::from_coeffs(2, b, 380);
        CHECK(mul_serial(f, h) == mul_parallel(f, h));
        CHECK(mul_serial(f, h, 120) == mul_parallel(f, h, 120));
        CHECK(mul(f, h) == mul_serial(f, h));
    }
}

TEST_CASE("multiplication matches the plain coefficient oracle") {
    std::mt19937_64 g(9);
    const long K = 25;
    for (int t = 0; t < 10; ++t) {
        Poly a(K + 1), b(K + 1);
        for (auto& x : a) x = oracle::random_rational(g, 4, 3, false);
        for (auto& x : b) x = oracle::random_rational(g, 4, 3, false);
        LaurentSeries f = LaurentSeries::from_coeffs(0, a, K), h = LaurentSeries::from_coeffs(0, b, K);
        CHECK(oracle::same(f * h, oracle::mul(a, b)));
    }
}
