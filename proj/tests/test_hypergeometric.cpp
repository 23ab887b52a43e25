#include "oracles.hpp"
#include "qsv/hypergeometric.hpp"
#include "qsv/qseries.hpp"

#include <doctest.h>

using namespace qsv;
using oracle::Poly;

namespace {

PhiSpec spec(std::vector<Monomial> up, std::vector<Monomial> lo, Monomial z, long r = 1) {
    PhiSpec s;
    s.upper = std::move(up);
    s.lower = std::move(lo);
    s.argument = std::move(z);
    s.base_exp = r;
    return s;
}

Rational direct_terminating(const PhiSpec& s, const Rational& q, long terms) {
    Rational total = 0;
    for (long n = 0; n < terms; ++n) {
        Rational t = s.argument.at(q);
        t = pow(t, n);
        for (const auto& a : s.upper) t *= poch_point(a.at(q), n, pow(q, s.base_exp));
        for (const auto& b : s.lower) t /= poch_point(b.at(q), n, pow(q, s.base_exp));
        t /= poch_point(pow(q, s.base_exp), n, pow(q, s.base_exp));
        // balancing factor for r - s != 1
        long extra = static_cast<long>(s.lower.size()) + 1 - static_cast<long>(s.upper.size());
        Rational bal = pow(q, s.base_exp * n * (n - 1) / 2) * (n % 2 ? Rational(-1) : Rational(1));
        t *= pow(bal, extra);
        total += t;
    }
    return total;
}

// Value of (x;q)_inf to well below 1e-40 for |x| <= 3, |q| <= 1/5.
Rational product_to(const Rational& x, const Rational& q) { return poch_point(x, 120, q); }

}  // namespace

TEST_CASE("zero argument gives the constant 1") {
    PhiSpec s = spec({Monomial(Rational(1, 2), 0), Monomial(3, 1)}, {Monomial(Rational(1, 3), 0)}, Monomial());
    CHECK(phi_series(s, 10).coeffs() == std::vector<Rational>{1});
    PhiValue v = phi_point(s, Rational(1, 5), 100);
    CHECK(v.value == 1);
    CHECK(v.tail_bound == 0);
}

TEST_CASE("q-binomial theorem as a 1phi0") {
    const long K = 30;
    PhiSpec s = spec({Monomial(2, 0)}, {}, Monomial(1, 1));
    LaurentSeries lhs = phi_series(s, K);
    Poly rhs = oracle::one(K);
    for (long k = 0; k <= K; ++k) {
        rhs = oracle::mul_binom(rhs, 2, k + 1);
        rhs = oracle::div_binom(rhs, 1, k + 1);
    }
    CHECK(oracle::same(lhs, rhs));
}

TEST_CASE("2phi1(q, q; q^2; q) term by term") {
    const long K = 3;
    LaurentSeries s = phi_series(spec({Monomial(1, 1), Monomial(1, 1)}, {Monomial(1, 2)}, Monomial(1, 1)), K);
    // term n is q^n (1-q)/(1-q^{n+1})
    Poly sum(K + 1, Rational(0));
    for (long n = 0; n <= K; ++n) {
        Poly t(K + 1, Rational(0));
        t[n] = 1;
        t = oracle::div_binom(oracle::mul_binom(t, 1, 1), 1, n + 1);
        for (long e = 0; e <= K; ++e) sum[e] += t[e];
    }
    CHECK(oracle::same(s, sum));
}

TEST_CASE("terminating point value") {
    PhiSpec s = spec({Monomial(1, -1), Monomial(Rational(1, 3), 0)}, {Monomial(Rational(1, 5), 0)}, Monomial(1, 1));
    PhiValue v = phi_point(s, Rational(1, 2), 100);
    CHECK(v.value == Rational(1, 6));
    CHECK(v.tail_bound == 0);
    CHECK_FALSE(v.heuristic);
}

TEST_CASE("terminating sums equal a direct loop") {
    std::mt19937_64 g(21);
    for (int t = 0; t < 30; ++t) {
        long N = 1 + t % 6;
        Rational a = oracle::random_rational(g, 5, 7), b = oracle::random_rational(g, 5, 7),
                 c = oracle::random_rational(g, 5, 7), z = oracle::random_rational(g, 5, 7);
        Rational q = oracle::random_rational(g, 2, 9);
        if (abs(q) >= 1) continue;
        PhiSpec s = spec({Monomial(1, -N), Monomial(a, 1), Monomial(b, 0)}, {Monomial(c, 0), Monomial(z, 2)},
                         Monomial(Rational(1, 2), 1));
        bool pole = false;
        for (long n = 0; n < N; ++n)
            if (c * pow(q, n) == 1 || z * pow(q, n + 2) == 1) pole = true;
        if (pole) continue;
        PhiValue v = phi_point(s, q, 100);
        CHECK(v.tail_bound == 0);
        CHECK(v.value == direct_terminating(s, q, N + 1));
    }
}

TEST_CASE("q-Chu-Vandermonde") {
    std::mt19937_64 g(4);
    for (long N = 1; N <= 6; ++N)
        for (int t = 0; t < 5; ++t) {
            Rational b = oracle::random_rational(g, 7, 5), c = oracle::random_rational(g, 7, 5);
            Rational q = oracle::random_rational(g, 1, 7);
            if (abs(q) >= 1) continue;
            bool pole = false;
            for (long n = 0; n < N; ++n)
                if (c * pow(q, n) == 1) pole = true;
            if (pole) continue;
            // 2phi1(q^-N, b; c; q, c q^N / b) = (c/b)_N / (c)_N
            PhiSpec s = spec({Monomial(1, -N), Monomial(b, 0)}, {Monomial(c, 0)}, Monomial(c / b, N));
            PhiValue v = phi_point(s, q, 100);
            CHECK(v.value == poch_point(c / b, N, q) / poch_point(c, N, q));
        }
}

TEST_CASE("q-Gauss sum at a point") {
    const Rational a(1, 2), b(1, 3), c(1, 7), q(1, 5);
    PhiValue v = phi_point(spec({Monomial(a, 0), Monomial(b, 0)}, {Monomial(c, 0)}, Monomial(c / (a * b), 0)), q, 5000);
    Rational rhs = product_to(c / a, q) * product_to(c / b, q) / (product_to(c, q) * product_to(c / (a * b), q));
    CHECK(v.heuristic);
    CHECK(abs(v.value - rhs) <= v.tail_bound + Rational(1, 1) / pow(Rational(10), 40));
}

TEST_CASE("series and point modes agree") {
    std::mt19937_64 g(8);
    const long K = 60;
    const Rational q(1, 10);
    for (int t = 0; t < 10; ++t) {
        Rational a = oracle::random_rational(g, 1, 3), b = oracle::random_rational(g, 1, 3),
                 c = oracle::random_rational(g, 1, 3);
        PhiSpec s = spec({Monomial(a, 0), Monomial(b, 1)}, {Monomial(c, 1)}, Monomial(1, 1));
        Rational from_series = phi_series(s, K).evaluate(q);
        PhiValue v = phi_point(s, q, 5000);
        // coefficients of this 2phi1 grow at most like (K+1) * 2^K / (1 - 1/3)^2; q^{K+1} swamps that
        Rational trunc = Rational(4) * pow(Rational(2, 10), K + 1) * (K + 2);
        CHECK(abs(from_series - v.value) <= v.tail_bound + trunc);
    }
}

TEST_CASE("shape checks") {
    CHECK_THROWS(phi_series(spec({}, {}, Monomial(1, 1)), 5));
    CHECK_THROWS(phi_series(spec({Monomial(1, 1)}, {Monomial(1, 1)}, Monomial(1, 1)), 5));
}
