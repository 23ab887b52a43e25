#include "qsv/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace qsv;

namespace {

Report sample_report() {
    Report r;
    r.id = "DEMS-COR";
    r.mode = Mode::ExactPoint;
    r.binding = {{"c", "-1/7"}, {"q", "1/3"}, {"z", "1/5"}};
    r.n = 3;
    r.status = Status::Pass;
    r.metric = "0";
    return r;
}

}  // namespace

TEST_CASE("empty report list") {
    RunInfo run{1, 40, 6, "2026-01-01T00:00:00Z"};
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(emit_json(run, {}));
    CHECK(j["results"].is_array());
    CHECK(j["results"].empty());
    std::vector<std::string> keys;
    for (auto it = j["run"].begin(); it != j["run"].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"seed", "order", "n_max", "timestamp", "version"});
}

TEST_CASE("schema and key order") {
    nlohmann::ordered_json j = to_json(sample_report());
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"id", "mode", "binding", "n", "status", "metric", "duration_ms", "heuristic_tail"});
    CHECK(j["status"] == "pass");
    CHECK(j["metric"] == "0");
    CHECK(j["binding"]["c"] == "-1/7");
    Report r = sample_report();
    r.n.reset();
    CHECK_FALSE(to_json(r).contains("n"));
}

TEST_CASE("round trip") {
    std::vector<Report> rs = {sample_report()};
    Report f = sample_report();
    f.id = "E3";
    f.mode = Mode::Analytic;
    f.n.reset();
    f.status = Status::Fail;
    f.metric = "delta=1.000e-03 tails=2.000e-40";
    f.heuristic_tail = true;
    f.duration_ms = 17;
    rs.push_back(f);
    Report s = sample_report();
    s.status = Status::Skipped;
    s.mode = Mode::FormalSeries;
    rs.push_back(s);
    RunInfo run{9, 30, 4, "2026-01-01T00:00:00Z"};
    auto [run2, rs2] = parse_report_document(emit_json(run, rs));
    CHECK(run2 == run);
    CHECK(rs2 == rs);
}

TEST_CASE("text format has one line per report") {
    std::string t = emit_text({sample_report(), sample_report()});
    CHECK(std::count(t.begin(), t.end(), '\n') == 3);
    CHECK(t.rfind("pass DEMS-COR", 0) == 0);
}

TEST_CASE("output errors name the path") {
    try {
        write_output("x", "/nonexistent-dir/out.json");
        FAIL("no error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("/nonexistent-dir/out.json") != std::string::npos);
    }
    const std::string path = "qsv_report_test.json";
    write_output("hello\n", path);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "hello");
    std::remove(path.c_str());
}
