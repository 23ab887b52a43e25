#include "qsv/report.hpp"
#include "qsv/verify.hpp"

#include <doctest.h>

using namespace qsv;

namespace {

Binding bind(std::map<std::string, Rational> v, long N = 0, std::optional<Rational> q = std::nullopt) {
    Binding b;
    b.values = std::move(v);
    b.N = N;
    b.q = std::move(q);
    return b;
}

SuitePlan small_plan() {
    SuitePlan p;
    p.n_max = 3;
    p.order = 20;
    p.exact_samples = 3;
    p.formal_samples = 2;
    p.analytic_samples = 2;
    return p;
}

std::string strip(const std::vector<Report>& rs) { return emit_json(RunInfo{}, rs); }

}  // namespace

TEST_CASE("sampling is deterministic and respects hypotheses") {
    SampleConfig cfg;
    const Identity& id = find_identity("GEN-E1");
    for (long i = 0; i < 20; ++i) {
        Binding a = sample_binding(id, cfg, i, 0, true), b = sample_binding(id, cfg, i, 0, true);
        CHECK(a.values == b.values);
        CHECK(*a.q == *b.q);
        CHECK(abs(a("a") * a("e")) < 1);
        CHECK(*a.q > 0);
        CHECK(*a.q <= Rational(1, 3));
    }
    const Identity& e1 = find_identity("E1");
    for (long i = 0; i < 20; ++i) {
        Binding b = sample_binding(e1, cfg, i, 0, false);
        CHECK(abs(b("b")) <= Rational(1, 3));
        CHECK(b("b") != 0);
    }
}

TEST_CASE("exact examples") {
    const Identity& d = find_identity("DEMS-COR");
    Report r = verify_exact(d, bind({{"z", Rational(1, 5)}, {"c", Rational(-1, 7)}}, 1, Rational(1, 3)));
    CHECK(r.status == Status::Pass);
    CHECK(r.metric == "0");
    CHECK(r.n == 1);
    CHECK(r.binding.at("q") == "1/3");
}

TEST_CASE("formal examples") {
    CHECK(verify_formal(find_identity("KLUYVER"), {}, 40).status == Status::Pass);
    Report r = verify_formal(find_identity("ANDREWS-QS"), bind({{"z", Rational(1, 2)}, {"c", Rational(1, 3)}}), 30);
    CHECK(r.status == Status::Pass);
}

TEST_CASE("analytic examples") {
    Report e3 = verify_analytic(find_identity("E3"), bind({{"a", Rational(1, 3)}, {"b", Rational(1, 4)}}, 0, Rational(1, 5)));
    CHECK(e3.status == Status::Pass);
    Report g = verify_analytic(find_identity("QGAUSS"),
                               bind({{"a", Rational(2)}, {"b", Rational(3)}, {"c", Rational(1, 7)}}, 0, Rational(1, 5)));
    CHECK(g.status == Status::Pass);
    Report same = verify_analytic(find_identity("E3"), bind({{"a", Rational(1, 4)}, {"b", Rational(1, 4)}}, 0, Rational(1, 5)));
    CHECK(same.status == Status::Pass);
    CHECK(same.metric.rfind("delta=0", 0) == 0);
}

TEST_CASE("specialization edges") {
    SampleConfig cfg;
    SpecializationPlan plan;
    plan.count = 5;
    plan.n_max = 3;
    for (const auto& s : specialization_lattice()) {
        CAPTURE(s.general);
        CAPTURE(s.special);
        for (const auto& r : verify_specialization(s, cfg, plan)) CHECK(r.status == Status::Pass);
    }
}

TEST_CASE("identity against itself under the empty substitution") {
    Specialization s{"E2", "E2", {}, nullptr, ""};
    SpecializationPlan plan;
    plan.count = 3;
    for (const auto& r : verify_specialization(s, SampleConfig{}, plan)) CHECK(r.status == Status::Pass);
}

TEST_CASE("suite filter semantics") {
    SuitePlan p = small_plan();
    p.modes = {Mode::ExactPoint};
    p.n_max = 1;
    for (const auto& item : plan_items(registry(), p)) {
        CHECK(item.identity->mode == Mode::ExactPoint);
        CHECK(item.n <= 1);
    }
}

TEST_CASE("determinism and parallel consistency") {
    SuitePlan p = small_plan();
    p.threads = 1;
    std::vector<Report> a = run_suite(registry(), p);
    std::vector<Report> b = run_suite_serial(registry(), p);
    p.threads = 4;
    std::vector<Report> c = run_suite(registry(), p);
    std::vector<Report> d = run_suite_parallel(registry(), p);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a == d);
    CHECK(strip(a) == strip(c));
    Tally t = tally(a);
    CHECK(t.fail == 0);
    CHECK(t.skipped == 0);
    CHECK(t.pass == static_cast<long>(a.size()));
}

TEST_CASE("mutations are caught and nothing else flips") {
    SuitePlan p = small_plan();
    for (const auto& key : known_mutations()) {
        CAPTURE(key);
        Mutations m;
        m.keys.insert(key);
        const std::string target = key.substr(0, key.find('.'));
        std::vector<Identity> reg = build_registry(m);
        std::vector<Report> rs = run_suite(reg, p);
        long caught = 0;
        for (const auto& r : rs) {
            if (r.id == target) caught += r.status == Status::Fail;
            else CHECK(r.status == Status::Pass);
        }
        CHECK(caught > 0);
    }
}

TEST_CASE("monotonicity: other seeds and larger K keep passing") {
    for (std::uint64_t seed : {2u, 3u, 4u}) {
        for (long K : {20L, 40L}) {
            SuitePlan p = small_plan();
            p.sample.seed = seed;
            p.order = K;
            p.modes = {Mode::FormalSeries};
            p.formal_samples = 1;
            Tally t = tally(run_suite(registry(), p));
            CHECK(t.fail == 0);
            CHECK(t.skipped == 0);
        }
    }
}

TEST_CASE("literal transcriptions fail, corrected forms pass") {
    std::vector<Report> rs = run_corrections(SampleConfig{}, 4);
    long literal_fail = 0, corrected_pass = 0;
    for (const auto& r : rs) {
        if (r.id.find(".literal") != std::string::npos) literal_fail += r.status == Status::Fail;
        else corrected_pass += r.status == Status::Pass;
    }
    CHECK(literal_fail == 8);
    CHECK(corrected_pass == 8);
}

TEST_CASE("finite and infinite partners agree") {
    Binding b = bind({{"z", Rational(1, 3)}, {"d", Rational(1, 7)}}, 0, Rational(1, 5));
    const Rational limit = Rational(1) / pow(Rational(10), 15);
    CoherenceResult c = check_coherence("GARVAN-GEN", "THM-2-9", b, 40, limit);
    CHECK(c.pass);
    CoherenceResult early = check_coherence("GARVAN-GEN", "THM-2-9", b, 3, limit);
    CHECK_FALSE(early.pass);
    CHECK(early.delta > limit);
}
