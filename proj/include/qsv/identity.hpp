#pragma once

#include "qsv/context.hpp"
#include "qsv/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsv {

enum class Mode { ExactPoint, FormalSeries, Analytic };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct UnboundParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PoleGuardViolation : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParamSpec {
    enum class Kind { Free, PositiveN, IndexUpToN };
    std::string name;
    Kind kind = Kind::Free;
    // Sampling box for free parameters (zero excluded).
    Rational lo = make_rational(-1, 3);
    Rational hi = make_rational(1, 3);
    // Magnitude cap required in analytic mode.
    std::optional<Rational> analytic_bound;
};

struct Binding {
    std::map<std::string, Rational> values;
    std::optional<Rational> q;
    long N = 0;

    const Rational& operator()(const std::string& name) const;
    long index(const std::string& name) const;
    bool has(const std::string& name) const { return values.count(name) > 0; }
    // name -> "p/q", plus "q" when bound.
    std::map<std::string, std::string> to_strings() const;
};

using SeriesForm = std::function<FVal(const FormalCtx&, const Binding&)>;
using ExactForm = std::function<XVal(const ExactCtx&, const Binding&)>;
using BallForm = std::function<Ball(const BallCtx&, const Binding&)>;

struct Form {
    std::string name;
    SeriesForm series;
    ExactForm exact;
    BallForm ball;
};

template <class F>
Form make_form(std::string name, F f) {
    Form form;
    form.name = std::move(name);
    form.series = [f](const FormalCtx& c, const Binding& b) -> FVal { return f(c, b); };
    form.exact = [f](const ExactCtx& c, const Binding& b) -> XVal { return f(c, b); };
    form.ball = [f](const BallCtx& c, const Binding& b) -> Ball { return f(c, b); };
    return form;
}

struct Identity {
    std::string id;
    std::string anchor;
    Mode mode = Mode::ExactPoint;
    std::vector<ParamSpec> params;
    std::vector<Form> forms;
    // Pole exclusions and joint hypotheses; must hold for every evaluated binding.
    std::function<bool(const Binding&)> guard;
    std::vector<std::string> corrections;
    long slack = 0;

    bool has_N() const;
    bool admissible(const Binding& b) const { return !guard || guard(b); }
};

// Fault-injection and literal-transcription switches.
struct Mutations {
    std::set<std::string> keys;
    bool has(const std::string& k) const { return keys.count(k) > 0; }
};

std::vector<std::string> known_mutations();

std::vector<Identity> build_registry(const Mutations& m = {});
const std::vector<Identity>& registry();
const Identity& find_identity(const std::string& id);

// Finite e = 0 targets used only by the specialization lattice.
std::vector<Identity> specialization_targets();
const Identity& find_any(const std::string& id);

struct Specialization {
    std::string general;
    std::string special;
    std::map<std::string, Rational> substitution;
    // general = scale * special; nullptr means 1. q and N come from the binding.
    std::function<Rational(const Binding&)> scale;
    std::string note;
};

std::vector<Specialization> specialization_lattice();

// Single-form evaluation with guard and mode checks.
LaurentSeries evaluate_series(const Identity& id, std::size_t form, const Binding& b, long K);
Rational evaluate_exact(const Identity& id, std::size_t form, const Binding& b);
Ball evaluate_ball(const Identity& id, std::size_t form, const Binding& b, bool* heuristic = nullptr);

}  // namespace qsv
