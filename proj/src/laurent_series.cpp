#include "qsv/laurent_series.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsv {

long valid_add(long v, long d) {
    if (v >= LaurentSeries::kExact) return LaurentSeries::kExact;
    return v + d;
}

LaurentSeries LaurentSeries::zero(long valid_through) {
    LaurentSeries z;
    z.valid_ = std::min(valid_through, kExact);
    return z;
}

LaurentSeries LaurentSeries::constant(const Rational& c) { return monomial(c, 0); }

LaurentSeries LaurentSeries::monomial(const Rational& c, long exp) {
    LaurentSeries m;
    if (c != 0) {
        m.min_exp_ = exp;
        m.coeffs_.push_back(c);
    }
    return m;
}

LaurentSeries LaurentSeries::from_coeffs(long min_exp, std::vector<Rational> coeffs, long valid_through) {
    LaurentSeries f;
    f.min_exp_ = min_exp;
    f.coeffs_ = std::move(coeffs);
    f.valid_ = std::min(valid_through, kExact);
    f.normalize();
    return f;
}

void LaurentSeries::normalize() {
    if (!exact()) {
        long keep = valid_ - min_exp_ + 1;
        if (keep <= 0)
            coeffs_.clear();
        else if (static_cast<long>(coeffs_.size()) > keep)
            coeffs_.resize(static_cast<std::size_t>(keep));
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        min_exp_ += static_cast<long>(lead);
    }
}

Rational LaurentSeries::coeff(long e) const {
    if (e < min_exp_ || e > max_exp()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

const Rational& LaurentSeries::leading() const {
    if (coeffs_.empty()) throw ZeroLeadingCoefficient("series is zero on its window");
    return coeffs_.front();
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& g) {
    long v = std::min(valid_, g.valid_);
    if (g.is_zero()) {
        valid_ = v;
        normalize();
        return *this;
    }
    if (is_zero()) {
        long keep = valid_;
        *this = g;
        valid_ = std::min(keep, g.valid_);
        normalize();
        return *this;
    }
    long lo = std::min(min_exp_, g.min_exp_);
    long hi = std::max(max_exp(), g.max_exp());
    if (v < kExact) hi = std::min(hi, v);
    if (hi < lo) {
        coeffs_.clear();
        min_exp_ = 0;
        valid_ = v;
        return *this;
    }
    if (lo < min_exp_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), Rational(0));
        min_exp_ = lo;
    }
    if (static_cast<long>(coeffs_.size()) < hi - lo + 1) coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    long top = std::min(hi, g.max_exp());
    for (long e = g.min_exp_; e <= top; ++e)
        coeffs_[static_cast<std::size_t>(e - lo)] += g.coeffs_[static_cast<std::size_t>(e - g.min_exp_)];
    valid_ = v;
    normalize();
    return *this;
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
    LaurentSeries r = f;
    r += g;
    return r;
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return f + (-g); }

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return mul(f, g); }

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    if (c == 0) return zero(valid_);
    LaurentSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries r = *this;
    if (!r.is_zero()) r.min_exp_ += k;
    r.valid_ = valid_add(valid_, k);
    return r;
}

LaurentSeries LaurentSeries::truncated(long k) const {
    LaurentSeries r = *this;
    r.valid_ = std::min(valid_, k);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::rebased(long r) const {
    if (r < 1) throw std::invalid_argument("rebase factor must be positive");
    if (r == 1 || is_zero()) {
        LaurentSeries out = *this;
        if (!exact()) out.valid_ = valid_ * r;
        return out;
    }
    LaurentSeries out;
    out.min_exp_ = min_exp_ * r;
    out.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(r) + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * static_cast<std::size_t>(r)] = coeffs_[i];
    out.valid_ = exact() ? kExact : valid_ * r;
    out.normalize();
    return out;
}

LaurentSeries LaurentSeries::inverse(long cap) const {
    if (is_zero()) throw ZeroLeadingCoefficient("cannot invert a series that vanishes on its window");
    const long m = min_exp_;
    const Rational a0 = coeffs_.front();
    if (coeffs_.size() == 1) {
        LaurentSeries r = monomial(Rational(1) / a0, -m);
        if (!exact()) r.valid_ = valid_ - 2 * m;
        return r.truncated(cap);
    }
    long v = exact() ? cap : std::min(valid_ - 2 * m, cap);
    if (v >= kExact) throw std::invalid_argument("inverse of an exact non-monomial needs a cap");
    // u = 1/h with h = f / (a0 q^m), h_0 = 1.
    long len = v + m + 1;
    LaurentSeries r;
    r.min_exp_ = -m;
    r.valid_ = v;
    if (len <= 0) {
        r.coeffs_.clear();
        r.min_exp_ = 0;
        return r;
    }
    std::vector<Rational> h(coeffs_.size());
    Rational inv0 = Rational(1) / a0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) h[i] = coeffs_[i] * inv0;
    std::vector<Rational> u(static_cast<std::size_t>(len));
    u[0] = 1;
    Rational acc, t;
    for (long k = 1; k < len; ++k) {
        acc = 0;
        long jmax = std::min<long>(k, static_cast<long>(h.size()) - 1);
        for (long j = 1; j <= jmax; ++j) {
            if (h[static_cast<std::size_t>(j)] == 0) continue;
            mpq_mul(t.get_mpq_t(), h[static_cast<std::size_t>(j)].get_mpq_t(), u[static_cast<std::size_t>(k - j)].get_mpq_t());
            acc += t;
        }
        u[static_cast<std::size_t>(k)] = -acc;
    }
    for (auto& x : u) x *= inv0;
    r.coeffs_ = std::move(u);
    r.normalize();
    return r;
}

void LaurentSeries::mul_binomial(const Rational& c, long s) {
    if (c == 0 || is_zero()) return;
    if (s == 0) {
        *this = scaled(Rational(1) - c);
        return;
    }
    if (s < 0) {
        // 1 - c q^s = -c q^s (1 - q^{-s}/c)
        *this = scaled(-c).shifted(s);
        mul_binomial(Rational(1) / c, -s);
        return;
    }
    std::size_t n = coeffs_.size();
    std::size_t su = static_cast<std::size_t>(s);
    coeffs_.resize(n + su);
    Rational t;
    for (std::size_t i = n + su; i-- > su;) {
        if (coeffs_[i - su] == 0) continue;
        mpq_mul(t.get_mpq_t(), c.get_mpq_t(), coeffs_[i - su].get_mpq_t());
        coeffs_[i] -= t;
    }
    normalize();
}

void LaurentSeries::div_binomial(const Rational& c, long s, long cap) {
    if (c == 0) return;
    if (s == 0) {
        if (c == 1) throw DivisionByZero("division by the zero factor (1 - q^0)");
        *this = scaled(Rational(1) / (Rational(1) - c));
        return;
    }
    if (s < 0) {
        // 1/(1 - c q^s) = -(1/c) q^{-s} / (1 - q^{-s}/c)
        *this = scaled(-Rational(1) / c).shifted(-s);
        div_binomial(Rational(1) / c, -s, cap);
        return;
    }
    long v = std::min(valid_, cap);
    if (is_zero()) {
        valid_ = v;
        return;
    }
    if (v >= kExact) throw std::invalid_argument("division by a binomial needs a cap");
    valid_ = v;
    long len = v - min_exp_ + 1;
    if (len <= 0) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    coeffs_.resize(static_cast<std::size_t>(len));
    std::size_t su = static_cast<std::size_t>(s);
    Rational t;
    for (std::size_t i = su; i < coeffs_.size(); ++i) {
        if (coeffs_[i - su] == 0) continue;
        mpq_mul(t.get_mpq_t(), c.get_mpq_t(), coeffs_[i - su].get_mpq_t());
        coeffs_[i] += t;
    }
    normalize();
}

Rational LaurentSeries::evaluate(const Rational& q) const {
    Rational acc = 0;
    for (long e = max_exp(); e >= min_exp_; --e) {
        acc = acc * q + coeffs_[static_cast<std::size_t>(e - min_exp_)];
    }
    if (!is_zero()) acc *= pow(q, min_exp_);
    return acc;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        long e = min_exp_ + static_cast<long>(i);
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << qsv::to_string(a);
            continue;
        }
        if (a != 1) os << qsv::to_string(a) << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    if (first) os << "0";
    if (!exact()) os << " + O(q^" << valid_ + 1 << ")";
    return os.str();
}

namespace {

struct Window {
    long lo, hi, v;
};

Window product_window(const LaurentSeries& f, const LaurentSeries& g, long cap) {
    long v = std::min(valid_add(f.valid_through(), g.min_exp()), valid_add(g.valid_through(), f.min_exp()));
    v = std::min(v, cap);
    long lo = f.min_exp() + g.min_exp();
    long hi = f.max_exp() + g.max_exp();
    if (v < LaurentSeries::kExact) hi = std::min(hi, v);
    return {lo, hi, v};
}

void convolve_at(const LaurentSeries& f, const LaurentSeries& g, long e, Rational& out, Rational& t) {
    const auto& fc = f.coeffs();
    const auto& gc = g.coeffs();
    long jlo = std::max(f.min_exp(), e - g.max_exp());
    long jhi = std::min(f.max_exp(), e - g.min_exp());
    out = 0;
    for (long j = jlo; j <= jhi; ++j) {
        const Rational& a = fc[static_cast<std::size_t>(j - f.min_exp())];
        if (a == 0) continue;
        const Rational& b = gc[static_cast<std::size_t>(e - j - g.min_exp())];
        if (b == 0) continue;
        mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        out += t;
    }
}

}  // namespace

LaurentSeries mul_serial(const LaurentSeries& f, const LaurentSeries& g, long cap) {
    Window w = product_window(f, g, cap);
    if (f.is_zero() || g.is_zero() || w.hi < w.lo) return LaurentSeries::zero(w.v);
    std::vector<Rational> out(static_cast<std::size_t>(w.hi - w.lo + 1));
    Rational t;
    for (long e = w.lo; e <= w.hi; ++e) convolve_at(f, g, e, out[static_cast<std::size_t>(e - w.lo)], t);
    return LaurentSeries::from_coeffs(w.lo, std::move(out), w.v);
}

LaurentSeries mul_parallel(const LaurentSeries& f, const LaurentSeries& g, long cap) {
    Window w = product_window(f, g, cap);
    if (f.is_zero() || g.is_zero() || w.hi < w.lo) return LaurentSeries::zero(w.v);
    std::vector<Rational> out(static_cast<std::size_t>(w.hi - w.lo + 1));
    long n = w.hi - w.lo + 1;
#pragma omp parallel
    {
        Rational t;
#pragma omp for schedule(dynamic, 4)
        for (long i = 0; i < n; ++i) convolve_at(f, g, w.lo + i, out[static_cast<std::size_t>(i)], t);
    }
    return LaurentSeries::from_coeffs(w.lo, std::move(out), w.v);
}

LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g, long cap) {
#ifdef _OPENMP
    if (!omp_in_parallel() && omp_get_max_threads() > 1 && f.coeffs().size() * g.coeffs().size() > 40000)
        return mul_parallel(f, g, cap);
#endif
    return mul_serial(f, g, cap);
}

}  // namespace qsv
