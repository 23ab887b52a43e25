#include "qsv/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qsv {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty rational");
    std::string s = text.substr(b, e - b + 1);
    std::size_t slash = s.find('/');
    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return pow(Rational(1) / base, -exp);
    }
    Rational result(1);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
    result = Rational(n, d);
    return result;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

double log2_abs(const Rational& r) {
    if (r == 0) return -std::numeric_limits<double>::infinity();
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, r.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
    return std::log2(std::fabs(mn)) - std::log2(md) + static_cast<double>(en - ed);
}

double upper_double(const Rational& r) {
    double l = log2_abs(r);
    if (std::isinf(l)) return 0.0;
    return std::exp2(l + 1e-9) * (1 + 1e-12);
}

std::size_t bit_size(const Rational& r) {
    return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

namespace {

// floor or ceil of r * 2^k as an integer, k may be negative.
mpz_class scaled(const Rational& r, long k, bool up) {
    mpz_class n = r.get_num(), d = r.get_den();
    if (k >= 0)
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    else
        mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(-k));
    mpz_class q;
    if (up)
        mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Rational unscale(const mpz_class& m, long k) {
    mpz_class n = m, d = 1;
    if (k >= 0)
        mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k));
    else
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(-k));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

long shift_for(const Rational& r, int bits) {
    return static_cast<long>(bits) - static_cast<long>(std::floor(log2_abs(r)));
}

}  // namespace

Rational round_up_dyadic(const Rational& r, int bits) {
    if (r <= 0) return r;
    long k = shift_for(r, bits);
    return unscale(scaled(r, k, true), k);
}

Rational round_dyadic(const Rational& r, int bits, Rational& err) {
    if (r == 0) {
        err = 0;
        return r;
    }
    long k = shift_for(r, bits);
    Rational out = unscale(scaled(r, k, false), k);
    err = unscale(mpz_class(1), k);
    return out;
}

Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite double");
    Rational r(x);
    return r;
}

}  // namespace qsv
