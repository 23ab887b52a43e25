// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "oracles.hpp"
#include "qsv/qseries.hpp"
#include "qsv/report.hpp"
#include "qsv/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace qsv;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string counts(const Tally& t) {
    std::ostringstream os;
    os << t.pass << " pass, " << t.fail << " fail, " << t.skipped << " skipped";
    return os.str();
}

Outcome full_suite() {
    auto t0 = std::chrono::steady_clock::now();
    SuitePlan plan;
    std::vector<Report> rs = run_suite(registry(), plan);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Tally t = tally(rs);
    std::ostringstream os;
    os << counts(t) << " over " << registry().size() << " identities in " << static_cast<long>(secs * 10) / 10.0 << " s";
    return {t.fail == 0 && t.skipped == 0 && t.pass > 0 && secs < 300, os.str()};
}

Outcome divisor_oracle() {
    LaurentSeries s = evaluate_series(find_identity("KLUYVER"), 0, {}, 40);
    long bad = 0;
    for (long m = 1; m <= 40; ++m) bad += s.coeff(m) != oracle::divisor_count(m);
    bad += s.coeff(0) != 0 || s.valid_through() < 40;
    return {bad == 0, std::to_string(40 - bad) + "/40 coefficients equal d(m)"};
}

Outcome pentagonal_oracle() {
    LaurentSeries s = poch_series(Monomial(1, 1), kInfinity, 40);
    long bad = 0;
    for (long m = 0; m <= 40; ++m) bad += s.coeff(m) != oracle::pentagonal(m);
    return {bad == 0 && s.valid_through() >= 40, std::to_string(41 - bad) + "/41 coefficients match the pentagonal signs"};
}

Outcome lattice() {
    SpecializationPlan plan;
    plan.count = 10;
    plan.order = 40;
    plan.n_max = 6;
    Tally all;
    long edges = 0;
    for (const auto& s : specialization_lattice()) {
        Tally t = tally(verify_specialization(s, SampleConfig{}, plan));
        all.pass += t.pass;
        all.fail += t.fail;
        all.skipped += t.skipped;
        ++edges;
    }
    return {all.fail == 0 && all.skipped == 0 && all.pass > 0, std::to_string(edges) + " edges, " + counts(all)};
}

Outcome corrections() {
    std::vector<Report> rs = run_corrections(SampleConfig{}, 10);
    long corrected_ok = 0, literal_fail = 0, corrected = 0, literal = 0;
    for (const auto& r : rs) {
        if (r.id.find(".literal") != std::string::npos) {
            ++literal;
            literal_fail += r.status == Status::Fail && r.metric != "0";
        } else {
            ++corrected;
            corrected_ok += r.status == Status::Pass && r.metric == "0";
        }
    }
    std::ostringstream os;
    os << "corrected exact " << corrected_ok << "/" << corrected << ", literal nonzero residual " << literal_fail << "/"
       << literal;
    return {corrected > 0 && literal > 0 && corrected_ok == corrected && literal_fail == literal, os.str()};
}

Outcome fault_injection() {
    SuitePlan plan;
    plan.n_max = 3;
    plan.order = 20;
    plan.exact_samples = 3;
    plan.formal_samples = 3;
    plan.analytic_samples = 3;
    long detected = 0, false_pass = 0, collateral = 0;
    const auto keys = known_mutations();
    for (const auto& key : keys) {
        Mutations m;
        m.keys.insert(key);
        const std::string target = key.substr(0, key.find('.'));
        long fails = 0;
        for (const auto& r : run_suite(build_registry(m), plan)) {
            if (r.id == target) {
                fails += r.status == Status::Fail;
                false_pass += r.status == Status::Pass;
            } else {
                collateral += r.status != Status::Pass;
            }
        }
        detected += fails > 0;
    }
    std::ostringstream os;
    os << detected << "/" << keys.size() << " mutations detected, " << false_pass << " false passes, " << collateral
       << " collateral failures";
    return {keys.size() >= 5 && detected == static_cast<long>(keys.size()) && false_pass == 0 && collateral == 0, os.str()};
}

Outcome coherence() {
    const Rational limit = Rational(1) / pow(Rational(10), 15);
    const Identity& gen = find_identity("GARVAN-GEN");
    Rational worst_delta = 0, worst_tails = 0;
    long ok = 0;
    const long samples = 5;
    for (long i = 0; i < samples; ++i) {
        Binding b = sample_binding(gen, SampleConfig{}, i, 0, false);
        b.q = Rational(1, 5);
        CoherenceResult c = check_coherence("GARVAN-GEN", "THM-2-9", b, 40, limit);
        ok += c.pass;
        if (c.delta > worst_delta) worst_delta = c.delta;
        if (c.tails > worst_tails) worst_tails = c.tails;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%ld/%ld bindings at q=1/5, N=40: max delta %.3e, max tails %.3e", ok, samples,
                  worst_delta.get_d(), worst_tails.get_d());
    return {ok == samples, buf};
}

Outcome determinism() {
    SuitePlan plan;
    const RunInfo run{plan.sample.seed, plan.order, plan.n_max, "fixed"};
    plan.threads = 1;
    const std::string a = emit_json(run, run_suite(registry(), plan));
    const std::string b = emit_json(run, run_suite(registry(), plan));
    plan.threads = 0;
    const std::string c = emit_json(run, run_suite(registry(), plan));
    plan.threads = 3;
    const std::string d = emit_json(run, run_suite(registry(), plan));
    bool same = a == b && a == c && a == d;
    return {same, same ? "serial reruns and 3 worker counts byte-identical (" + std::to_string(a.size()) + " bytes)"
                       : "report documents differ"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"full suite", full_suite},
        {"divisor oracle", divisor_oracle},
        {"pentagonal oracle", pentagonal_oracle},
        {"specialization lattice", lattice},
        {"transcription corrections", corrections},
        {"fault injection", fault_injection},
        {"finite-to-infinite coherence", coherence},
        {"determinism and parallel consistency", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
