#include "oracles.hpp"
#include "qsv/identity.hpp"
#include "qsv/verify.hpp"

#include <doctest.h>

#include <set>

using namespace qsv;

namespace {

Binding bind(std::map<std::string, Rational> v, long N = 0, std::optional<Rational> q = std::nullopt) {
    Binding b;
    b.values = std::move(v);
    b.N = N;
    b.q = std::move(q);
    return b;
}

}  // namespace

TEST_CASE("inventory") {
    const auto& reg = registry();
    CHECK(reg.size() == 57);
    std::set<std::string> ids;
    for (const auto& x : reg) {
        CAPTURE(x.id);
        CHECK(ids.insert(x.id).second);
        CHECK(x.forms.size() >= 2);
        CHECK(x.anchor.rfind("§", 0) == 0);
        for (const auto& f : x.forms) {
            CHECK(!f.name.empty());
            CHECK(f.series);
            CHECK(f.exact);
            CHECK(f.ball);
        }
    }
    CHECK(std::is_sorted(reg.begin(), reg.end(), [](const Identity& a, const Identity& b) { return a.id < b.id; }));
    for (const char* id : {"E1", "E2", "E3", "E4", "E5", "KLUYVER", "GARVAN-GEN", "THM-2-9", "THM-7-3", "GUO-ZHANG",
                           "QGAUSS", "HEINE", "FIN-E4", "DEMS-COR"})
        CHECK_NOTHROW(find_identity(id));
    CHECK_THROWS(find_identity("NOPE"));
}

TEST_CASE("KLUYVER right side is the divisor function") {
    const Identity& k = find_identity("KLUYVER");
    LaurentSeries rhs = evaluate_series(k, 1, {}, 6);
    for (long m = 1; m <= 6; ++m) CHECK(rhs.coeff(m) == oracle::divisor_count(m));
    LaurentSeries lhs = evaluate_series(k, 0, {}, 40);
    CHECK(lhs.valid_through() >= 40);
    CHECK(lhs.coeff(0) == 0);
    for (long m = 1; m <= 40; ++m) CHECK(lhs.coeff(m) == oracle::divisor_count(m));
}

TEST_CASE("E1 at a=1, b=0 counts distinct-part partitions") {
    LaurentSeries s = evaluate_series(find_identity("E1"), 0, bind({{"a", 1}, {"b", 0}}), 5);
    std::vector<long> want = {1, 1, 1, 2, 2, 3};
    for (long m = 0; m <= 5; ++m) CHECK(s.coeff(m) == want[m]);
}

TEST_CASE("FIN-E4 at N=1") {
    const Identity& id = find_identity("FIN-E4");
    const Rational z(2, 7), e(-1, 5), q(1, 3);
    Binding b = bind({{"z", z}, {"e", e}}, 1, q);
    Rational want = z * q * q / ((1 - z * q) * (e - q));
    for (std::size_t i = 0; i < id.forms.size(); ++i) CHECK(evaluate_exact(id, i, b) == want);
    REQUIRE(id.corrections.size() == 1);
    CHECK(id.corrections[0].find("(aq)^n read as (zq)^n") != std::string::npos);
}

TEST_CASE("DEMS-COR at N=1") {
    const Identity& id = find_identity("DEMS-COR");
    const Rational z(1, 4), c(-2, 9), q(2, 7);
    Binding b = bind({{"z", z}, {"c", c}}, 1, q);
    Rational want = z * q * (1 - q) / ((1 - c * q) * (1 - z * q));
    for (std::size_t i = 0; i < id.forms.size(); ++i) CHECK(evaluate_exact(id, i, b) == want);
    CHECK_FALSE(id.corrections.empty());
}

TEST_CASE("GEN-E1 declares its convergence bound") {
    const Identity& id = find_identity("GEN-E1");
    CHECK(id.mode == Mode::Analytic);
    bool found = false;
    for (const auto& p : id.params)
        if (p.name == "a") {
            found = true;
            REQUIRE(p.analytic_bound);
            CHECK(*p.analytic_bound == 1);
        }
    CHECK(found);
}

TEST_CASE("mode errors and missing parameters") {
    const Identity& e1 = find_identity("E1");
    CHECK_THROWS_AS(evaluate_series(e1, 0, bind({{"a", 1}}), 5), UnboundParameter);
    const Identity& dp = find_identity("DP");
    CHECK_THROWS_AS(evaluate_series(dp, 0, bind({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}, 2), 5), ModeMismatch);
    CHECK_THROWS_AS(evaluate_exact(dp, 0, bind({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}, 2)), std::exception);
}

TEST_CASE("guard violations are skipped") {
    const Identity& dp = find_identity("DP");
    Binding b = bind({{"a", Rational(1, 3)}, {"b", Rational(1, 9)}, {"c", Rational(1, 5)}, {"d", Rational(1, 3)}}, 2,
                     Rational(1, 4));
    CHECK_THROWS_AS(evaluate_exact(dp, 0, b), PoleGuardViolation);
    CHECK(verify(dp, b, 10).status == Status::Skipped);
}

TEST_CASE("guards are sufficient: admissible bindings never divide by zero") {
    SampleConfig cfg;
    cfg.q_den_bound = 8;
    cfg.param_den_bound = 6;
    for (const auto& id : registry()) {
        CAPTURE(id.id);
        for (long N = 1; N <= (id.has_N() ? 3 : 1); ++N)
            for (long i = 0; i < 8; ++i) {
                Binding b = sample_binding(id, cfg, i, N, id.mode != Mode::FormalSeries);
                for (std::size_t f = 0; f < id.forms.size(); ++f) {
                    CAPTURE(f);
                    switch (id.mode) {
                        case Mode::ExactPoint: CHECK_NOTHROW(evaluate_exact(id, f, b)); break;
                        case Mode::FormalSeries: CHECK_NOTHROW(evaluate_series(id, f, b, 12)); break;
                        case Mode::Analytic:
                            if (i < 2) CHECK_NOTHROW(evaluate_ball(id, f, b));
                            break;
                    }
                }
            }
    }
}

TEST_CASE("chain forms agree pairwise") {
    SampleConfig cfg;
    for (const char* name : {"COR-6-3", "COR-6-5"}) {
        const Identity& id = find_identity(name);
        CAPTURE(id.id);
        for (long i = 0; i < 20; ++i) {
            Binding b = sample_binding(id, cfg, i, id.has_N() ? 1 + i % 4 : 0, id.mode != Mode::FormalSeries);
            if (id.mode == Mode::FormalSeries) {
                std::vector<LaurentSeries> v;
                for (std::size_t f = 0; f < id.forms.size(); ++f) v.push_back(evaluate_series(id, f, b, 20));
                for (std::size_t x = 0; x < v.size(); ++x)
                    for (std::size_t y = x + 1; y < v.size(); ++y)
                        for (long m = 0; m <= 20; ++m) CHECK(v[x].coeff(m) == v[y].coeff(m));
            } else if (id.mode == Mode::ExactPoint) {
                for (std::size_t x = 1; x < id.forms.size(); ++x) CHECK(evaluate_exact(id, x, b) == evaluate_exact(id, 0, b));
            } else {
                Report r = verify(id, b, 20);
                CHECK(r.status == Status::Pass);
            }
        }
    }
}

TEST_CASE("mutation keys are validated") {
    CHECK(known_mutations().size() >= 5);
    Mutations bad;
    bad.keys.insert("NOT-A-KEY");
    CHECK_THROWS(build_registry(bad));
}
