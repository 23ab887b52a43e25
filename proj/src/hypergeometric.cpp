#include "qsv/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qsv {

std::optional<long> PhiSpec::terminating_length() const {
    std::optional<long> best;
    for (const auto& u : upper) {
        if (u.coeff == 1 && u.exp < 0 && (-u.exp) % base_exp == 0) {
            long n = -u.exp / base_exp;
            if (!best || n < *best) best = n;
        }
    }
    return best;
}

void PhiSpec::check_shape() const {
    if (upper.size() != lower.size() + 1) throw std::invalid_argument("phi needs one more upper than lower parameter");
    if (base_exp < 1) throw std::invalid_argument("phi base exponent must be positive");
}

namespace {

// One step factor (1 - c q^e) split into scalar * q^shift * (1 - c' q^s) with s > 0, or a pure scalar.
struct StepFactor {
    Rational scalar{1};
    long shift = 0;
    Rational c{0};
    long s = 0;
};

StepFactor split(const Rational& c, long e) {
    StepFactor f;
    if (c == 0) return f;
    if (e == 0) {
        f.scalar = Rational(1) - c;
        return f;
    }
    if (e > 0) {
        f.c = c;
        f.s = e;
        return f;
    }
    f.scalar = -c;
    f.shift = e;
    f.c = Rational(1) / c;
    f.s = -e;
    return f;
}

}  // namespace

LaurentSeries phi_series(const PhiSpec& spec, long K) {
    spec.check_shape();
    const long r = spec.base_exp;
    const Monomial& z = spec.argument;
    if (z.coeff == 0) return LaurentSeries::constant(1).truncated(K);
    std::optional<long> term_len = spec.terminating_length();
    if (!term_len && z.exp < 1) throw NonconvergentFormal("phi argument must carry a positive power of q");

    // Beyond this index every step factor has a positive exponent.
    long settle = 0;
    for (const auto& p : spec.upper)
        if (p.coeff != 0) settle = std::max(settle, (-p.exp) / r + 1);
    for (const auto& p : spec.lower)
        if (p.coeff != 0) settle = std::max(settle, (-p.exp) / r + 1);

    // First pass: scalar coefficient, exponent and stopping index of every term.
    struct Step {
        std::vector<StepFactor> num, den;
    };
    std::vector<long> E{0};
    std::vector<Step> steps;
    const long guard = 4 * std::max<long>(K, 1) + settle + 16;
    long m = 0;
    bool vanished = false;
    for (;; ++m) {
        if (term_len && m >= *term_len) break;
        if (!term_len && m >= settle && E.back() > K) break;
        if (m > guard) throw NonconvergentFormal("phi term valuation does not grow");
        Step st;
        long e = E.back() + z.exp;
        for (const auto& u : spec.upper) {
            StepFactor f = split(u.coeff, u.exp + r * m);
            if (f.scalar == 0) vanished = true;
            e += f.shift;
            st.num.push_back(f);
        }
        if (vanished) break;
        for (const auto& l : spec.lower) {
            StepFactor f = split(l.coeff, l.exp + r * m);
            if (f.scalar == 0) throw PoleInLowerParameter("lower parameter factor vanishes");
            e -= f.shift;
            st.den.push_back(f);
        }
        st.den.push_back(split(Rational(1), r * (m + 1)));
        E.push_back(e);
        steps.push_back(std::move(st));
    }
    const long terms = static_cast<long>(E.size());
    std::vector<long> need(static_cast<std::size_t>(terms));
    long lowest = std::numeric_limits<long>::max();
    for (long i = terms - 1; i >= 0; --i) {
        lowest = std::min(lowest, E[static_cast<std::size_t>(i)]);
        need[static_cast<std::size_t>(i)] = K - lowest;
    }

    LaurentSeries acc = LaurentSeries::zero(LaurentSeries::kExact);
    LaurentSeries dense = LaurentSeries::constant(1);
    Rational coeff = 1;
    for (long i = 0; i < terms; ++i) {
        long rel = need[static_cast<std::size_t>(i)];
        if (rel < 0) break;
        if (i > 0) {
            const Step& st = steps[static_cast<std::size_t>(i - 1)];
            coeff *= z.coeff;
            for (const auto& f : st.num) {
                coeff *= f.scalar;
                if (f.c != 0 && f.s <= rel) dense.mul_binomial(f.c, f.s);
            }
            for (const auto& f : st.den) {
                coeff /= f.scalar;
                if (f.c != 0 && f.s <= rel) dense.div_binomial(f.c, f.s, rel);
            }
        }
        dense = dense.truncated(rel);
        long e = E[static_cast<std::size_t>(i)];
        if (e <= K) acc += dense.truncated(K - e).scaled(coeff).shifted(e);
    }
    return acc.truncated(K);
}

std::optional<double> RatioTail::rho() const {
    std::size_t n = log2_terms.size();
    if (n < 2) return std::nullopt;
    std::size_t from = n > static_cast<std::size_t>(kRatioWindow) + 1 ? n - kRatioWindow - 1 : 0;
    double best = -std::numeric_limits<double>::infinity();
    bool all_zero = true;
    for (std::size_t i = from; i + 1 < n; ++i) {
        double a = log2_terms[i], b = log2_terms[i + 1];
        if (std::isinf(b) && b < 0) continue;
        all_zero = false;
        if (std::isinf(a) && a < 0) return std::nullopt;
        best = std::max(best, b - a);
    }
    if (all_zero) return 0.0;
    return std::exp2(best);
}

std::optional<Rational> RatioTail::bound() const {
    auto r = rho();
    if (!r || *r >= 1.0) return std::nullopt;
    if (*r == 0.0) return Rational(0);
    double last = log2_terms.back();
    if (std::isinf(last) && last < 0) {
        // last term vanished; use the most recent nonzero one
        for (auto it = log2_terms.rbegin(); it != log2_terms.rend(); ++it)
            if (!std::isinf(*it)) {
                last = *it;
                break;
            }
    }
    double l2 = last + std::log2(*r / (1.0 - *r)) + std::log2(static_cast<double>(kTailSafety));
    l2 = std::ceil(l2 + 1e-6) + 1;
    if (l2 < -1e6) return Rational(0);
    Rational b = pow(Rational(2), static_cast<long>(l2));
    return b;
}

PhiValue phi_point(const PhiSpec& spec, const Rational& q, long tail_guard, const Rational& tolerance) {
    spec.check_shape();
    if (q == 0 || abs(q) >= 1) throw std::domain_error("phi_point needs 0 < |q| < 1");
    const long r = spec.base_exp;
    const Rational qr = pow(q, r);
    PhiValue out;
    out.value = 1;
    if (spec.argument.coeff == 0) return out;
    const Rational z = spec.argument.at(q);
    std::vector<Rational> up, lo;
    for (const auto& u : spec.upper) up.push_back(u.at(q));
    for (const auto& l : spec.lower) lo.push_back(l.at(q));
    std::optional<long> term_len = spec.terminating_length();

    Rational term = 1, qrm = 1;
    RatioTail tail;
    tail.push(0.0);
    for (long m = 0;; ++m) {
        if (term_len && m >= *term_len) return out;
        if (!term_len && m >= tail_guard) {
            auto b = tail.bound();
            if (!b) throw RatioNotContracting("phi terms are not contracting at the guard index");
            out.tail_bound = *b;
            out.heuristic = true;
            return out;
        }
        Rational num = z, den = 1;
        for (const auto& u : up) num *= Rational(1) - u * qrm;
        for (const auto& l : lo) {
            Rational f = Rational(1) - l * qrm;
            if (f == 0) throw DivisionByZero("lower Pochhammer vanishes at this q");
            den *= f;
        }
        qrm *= qr;
        den *= Rational(1) - qrm;
        if (num == 0) return out;  // every later term vanishes
        term *= num / den;
        out.value += term;
        out.terms = m + 2;
        if (!term_len) {
            tail.push(log2_abs(term));
            if (tail.ready()) {
                auto b = tail.bound();
                if (b && *b <= tolerance) {
                    out.tail_bound = *b;
                    out.heuristic = true;
                    return out;
                }
            }
        }
    }
}

}  // namespace qsv
