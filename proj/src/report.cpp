#include "qsv/report.hpp"

#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace qsv {

using nlohmann::ordered_json;

std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json to_json(const Report& r) {
    ordered_json j;
    j["id"] = r.id;
    j["mode"] = mode_name(r.mode);
    ordered_json b = ordered_json::object();
    for (const auto& [k, v] : r.binding) b[k] = v;
    j["binding"] = b;
    if (r.n) j["n"] = *r.n;
    j["status"] = status_name(r.status);
    j["metric"] = r.metric;
    j["duration_ms"] = r.duration_ms;
    j["heuristic_tail"] = r.heuristic_tail;
    return j;
}

Report report_from_json(const ordered_json& j) {
    Report r;
    r.id = j.at("id").get<std::string>();
    r.mode = parse_mode(j.at("mode").get<std::string>());
    for (const auto& [k, v] : j.at("binding").items()) r.binding[k] = v.get<std::string>();
    if (j.contains("n")) r.n = j.at("n").get<long>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.metric = j.at("metric").get<std::string>();
    r.duration_ms = j.at("duration_ms").get<long>();
    r.heuristic_tail = j.at("heuristic_tail").get<bool>();
    return r;
}

std::string emit_json(const RunInfo& run, const std::vector<Report>& reports) {
    ordered_json doc;
    doc["run"] = ordered_json{{"seed", run.seed},
                              {"order", run.order},
                              {"n_max", run.n_max},
                              {"timestamp", run.timestamp},
                              {"version", run.version}};
    ordered_json results = ordered_json::array();
    for (const auto& r : reports) results.push_back(to_json(r));
    doc["results"] = results;
    return doc.dump(2) + "\n";
}

std::string emit_text(const std::vector<Report>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << status_name(r.status) << ' ' << r.id << ' ' << mode_name(r.mode);
        if (r.n) os << " n=" << *r.n;
        for (const auto& [k, v] : r.binding) os << ' ' << k << '=' << v;
        os << " metric=" << r.metric;
        if (r.heuristic_tail) os << " heuristic";
        if (r.duration_ms) os << ' ' << r.duration_ms << "ms";
        os << '\n';
    }
    Tally t = tally(reports);
    os << "total " << reports.size() << " pass " << t.pass << " fail " << t.fail << " skipped " << t.skipped << '\n';
    return os.str();
}

std::pair<RunInfo, std::vector<Report>> parse_report_document(const std::string& text) {
    ordered_json doc = ordered_json::parse(text);
    RunInfo run;
    const auto& jr = doc.at("run");
    run.seed = jr.at("seed").get<std::uint64_t>();
    run.order = jr.at("order").get<long>();
    run.n_max = jr.at("n_max").get<long>();
    run.timestamp = jr.at("timestamp").get<std::string>();
    run.version = jr.at("version").get<std::string>();
    std::vector<Report> reports;
    for (const auto& j : doc.at("results")) reports.push_back(report_from_json(j));
    return {run, reports};
}

void write_output(const std::string& content, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed writing to standard output");
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
    f.close();
    if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace qsv
