#pragma once

#include "qsv/laurent_series.hpp"
#include "qsv/qseries.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qsv {

struct NonconvergentFormal : std::domain_error {
    using std::domain_error::domain_error;
};
struct PoleInLowerParameter : std::domain_error {
    using std::domain_error::domain_error;
};
struct RatioNotContracting : std::domain_error {
    using std::domain_error::domain_error;
};

// r+1 phi r with monomial parameters in base q^{base_exp}.
struct PhiSpec {
    std::vector<Monomial> upper;
    std::vector<Monomial> lower;
    long base_exp = 1;
    Monomial argument;

    // Number of terms when some upper parameter is q^{-N r}; nullopt otherwise.
    std::optional<long> terminating_length() const;
    void check_shape() const;
};

LaurentSeries phi_series(const PhiSpec& spec, long K);

struct PhiValue {
    Rational value;
    Rational tail_bound;
    bool heuristic = false;
    long terms = 0;
};

// Window and safety factor of the ratio-test tail estimate.
inline constexpr int kRatioWindow = 10;
inline constexpr int kTailSafety = 4;

// Exact partial sum plus tail estimate. Stops once the tail estimate is at most `tolerance`
// or after `tail_guard` terms.
PhiValue phi_point(const PhiSpec& spec, const Rational& q, long tail_guard, const Rational& tolerance = Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 1000000));

// Heuristic tail |t_M| * rho/(1-rho) * S from log2 magnitudes of the most recent terms.
// Returns nullopt when the observed ratio is not below one.
struct RatioTail {
    std::vector<double> log2_terms;
    void push(double l2) { log2_terms.push_back(l2); }
    bool ready() const { return log2_terms.size() > static_cast<std::size_t>(kRatioWindow); }
    // rho estimate over the window; 0 if all recent terms vanish.
    std::optional<double> rho() const;
    // Upper bound as a rational, or nullopt if not contracting.
    std::optional<Rational> bound() const;
};

}  // namespace qsv
