#include "qsv/identity.hpp"

#include "registry_util.hpp"

#include <algorithm>

namespace qsv {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::ExactPoint: return "exact";
        case Mode::FormalSeries: return "formal";
        case Mode::Analytic: return "analytic";
    }
    return "exact";
}

Mode parse_mode(const std::string& s) {
    if (s == "exact") return Mode::ExactPoint;
    if (s == "formal") return Mode::FormalSeries;
    if (s == "analytic") return Mode::Analytic;
    throw std::invalid_argument("unknown mode: " + s);
}

const Rational& Binding::operator()(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) throw UnboundParameter("unbound parameter: " + name);
    return it->second;
}

long Binding::index(const std::string& name) const {
    const Rational& v = (*this)(name);
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw std::invalid_argument("index parameter is not an integer: " + name);
    return v.get_num().get_si();
}

std::map<std::string, std::string> Binding::to_strings() const {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : values) out[k] = to_string(v);
    if (q) out["q"] = to_string(*q);
    return out;
}

bool Identity::has_N() const {
    return std::any_of(params.begin(), params.end(), [](const ParamSpec& p) { return p.kind == ParamSpec::Kind::PositiveN; });
}

std::vector<std::string> known_mutations() {
    return {"CORTEEL-LOVEJOY.index", "DEMS-COR.literal", "FIN-E1.sign", "FIN-E4.literal",
            "GARVAN.exponent",       "KLUYVER.exponent", "THM-2-9.exponent"};
}

std::vector<Identity> build_registry(const Mutations& m) {
    for (const auto& k : m.keys) {
        auto km = known_mutations();
        if (std::find(km.begin(), km.end(), k) == km.end()) throw std::invalid_argument("unknown mutation: " + k);
    }
    std::vector<Identity> out;
    reg::Builder b{out};
    reg::add_entries(b, m);
    reg::add_generalizations(b, m);
    reg::add_basic(b, m);
    reg::add_finite(b, m);
    reg::add_chains(b, m);
    std::sort(out.begin(), out.end(), [](const Identity& x, const Identity& y) { return x.id < y.id; });
    return out;
}

const std::vector<Identity>& registry() {
    static const std::vector<Identity> r = build_registry();
    return r;
}

const Identity& find_identity(const std::string& id) {
    for (const auto& x : registry())
        if (x.id == id) return x;
    throw std::out_of_range("unknown identity: " + id);
}

std::vector<Identity> specialization_targets() {
    std::vector<Identity> out;
    reg::Builder b{out};
    reg::add_targets(b);
    return out;
}

const Identity& find_any(const std::string& id) {
    static const std::vector<Identity> targets = specialization_targets();
    for (const auto& x : targets)
        if (x.id == id) return x;
    return find_identity(id);
}

std::vector<Specialization> specialization_lattice() {
    using reg::R;
    const auto ad_poch = [](const Binding& b) { return poch_point(b("a") * b("d"), b.N, *b.q); };
    const auto one_minus_c = [](const Binding& b) { return Rational(1 - b("c")); };
    const auto minus_one = [](const Binding&) { return Rational(-1); };
    return {
        {"THM-2-1", "BEM", {{"e", R(1)}}, nullptr, "e = 1"},
        {"THM-2-1", "COR-2-4", {{"d", R(1)}}, one_minus_c, "d = 1"},
        {"THM-2-5", "DP", {{"e", R(1)}}, ad_poch, "e = 1"},
        {"THM-2-5", "COR-2-8", {{"d", R(1)}}, one_minus_c, "d = 1"},
        {"COR-2-2", "BEM-COR", {{"e", R(1)}}, nullptr, "e = 1"},
        {"COR-2-2", "COR-2-3", {{"d", R(0)}}, nullptr, "d = 0"},
        {"COR-2-3", "ANDREWS-QS", {{"e", R(1)}}, nullptr, "e = 1"},
        {"COR-2-6", "COR-2-7", {{"d", R(0)}}, nullptr, "d = 0"},
        {"GARVAN-GEN", "GARVAN", {{"d", R(1)}}, nullptr, "d = 1"},
        {"GEN-E1", "E1", {{"e", R(0)}}, nullptr, "e = 0"},
        {"GEN-E2", "E2", {{"e", R(0)}}, nullptr, "e = 0"},
        {"GEN-E3", "E3", {{"e", R(0)}}, nullptr, "e = 0"},
        {"GEN-E4", "E4", {{"e", R(0)}}, minus_one, "e = 0"},
        {"GEN-E5", "E5", {{"e", R(0)}}, nullptr, "e = 0"},
        {"FIN-E1", "DP-FIN-E1", {{"e", R(0)}}, nullptr, "e = 0"},
        {"FIN-E2", "DP-FIN-E2", {{"e", R(0)}}, minus_one, "e = 0"},
        {"FIN-E3", "DP-FIN-E3", {{"e", R(0)}}, nullptr, "e = 0"},
        {"FIN-E4", "DP-FIN-E4", {{"e", R(0)}}, minus_one, "e = 0"},
        {"FIN-E5", "DP-FIN-E5", {{"e", R(0)}}, nullptr, "e = 0"},
    };
}

namespace {

void check_binding(const Identity& id, const Binding& b) {
    for (const auto& p : id.params) {
        if (p.kind == ParamSpec::Kind::PositiveN) {
            if (b.N < 1) throw UnboundParameter(id.id + ": N must be a positive integer");
        } else if (!b.has(p.name)) {
            throw UnboundParameter(id.id + ": unbound parameter " + p.name);
        }
    }
    if (!id.admissible(b)) throw PoleGuardViolation(id.id + ": binding violates a pole guard");
}

const Form& form_at(const Identity& id, std::size_t form) {
    if (form >= id.forms.size()) throw std::out_of_range(id.id + ": no form " + std::to_string(form));
    return id.forms[form];
}

}  // namespace

LaurentSeries evaluate_series(const Identity& id, std::size_t form, const Binding& b, long K) {
    if (id.mode != Mode::FormalSeries) throw ModeMismatch(id.id + ": series requested from a " + mode_name(id.mode) + " identity");
    check_binding(id, b);
    FormalCtx ctx(K);
    return ctx.series(form_at(id, form).series(ctx, b));
}

Rational evaluate_exact(const Identity& id, std::size_t form, const Binding& b) {
    if (!b.q) throw UnboundParameter(id.id + ": exact evaluation needs q");
    check_binding(id, b);
    ExactCtx ctx(*b.q);
    return form_at(id, form).exact(ctx, b).v;
}

Ball evaluate_ball(const Identity& id, std::size_t form, const Binding& b, bool* heuristic) {
    if (!b.q) throw UnboundParameter(id.id + ": point evaluation needs q");
    check_binding(id, b);
    if (id.mode == Mode::Analytic) {
        for (const auto& p : id.params)
            if (p.analytic_bound && abs(b(p.name)) > *p.analytic_bound)
                throw PoleGuardViolation(id.id + ": " + p.name + " outside its analytic bound");
    }
    BallCtx ctx(*b.q);
    Ball v = form_at(id, form).ball(ctx, b);
    if (heuristic) *heuristic = ctx.heuristic;
    return v;
}

}  // namespace qsv
