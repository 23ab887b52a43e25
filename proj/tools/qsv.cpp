#include "qsv/dsl.hpp"
#include "qsv/report.hpp"
#include "qsv/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<qsv::Mode> modes_for(const std::string& m) {
    if (m == "all") return {};
    return {qsv::parse_mode(m)};
}

int finish(const std::vector<qsv::Report>& reports, const qsv::RunInfo& run, const std::string& format,
           const std::string& out) {
    qsv::write_output(format == "json" ? qsv::emit_json(run, reports) : qsv::emit_text(reports), out);
    qsv::Tally t = qsv::tally(reports);
    return (t.fail == 0 && t.skipped == 0) ? 0 : kExitFail;
}

qsv::dsl::Bindings parse_binds(const std::vector<std::string>& binds) {
    qsv::dsl::Bindings b;
    for (const auto& s : binds) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("--bind expects name=p/q, got '" + s + "'");
        std::string name = s.substr(0, eq);
        if (name == "q") throw ConfigError("q is the series variable and cannot be bound");
        try {
            b[name] = qsv::parse_rational(s.substr(eq + 1));
        } catch (const std::exception& e) {
            throw ConfigError("--bind " + name + ": " + e.what());
        }
    }
    return b;
}

std::string decimal(const qsv::Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", r.get_d());
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of q-series identities"};
    app.require_subcommand(1);

    qsv::SuitePlan plan;
    std::string mode = "all", format = "json", out;
    std::vector<std::string> ids, mutations;
    long samples = 0;
    auto* suite = app.add_subcommand("suite", "Run the identity suite");
    suite->add_option("--mode", mode, "Verification mode")->check(CLI::IsMember({"exact", "formal", "analytic", "all"}));
    suite->add_option("--id", ids, "Restrict to these identity ids");
    suite->add_option("--order", plan.order, "Formal truncation order K")->check(CLI::Range(1L, 100000L));
    suite->add_option("--n-max", plan.n_max, "Largest N for finite identities")->check(CLI::Range(1L, 100000L));
    suite->add_option("--samples", samples, "Bindings per identity (default: per mode)")->check(CLI::Range(1L, 1000000L));
    suite->add_option("--seed", plan.sample.seed, "Sampling seed");
    suite->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    suite->add_option("--out", out, "Output path ('-' for standard output)");
    suite->add_option("--threads", plan.threads, "Worker threads (0: OpenMP default, 1: serial)")->check(CLI::Range(0, 4096));
    suite->add_flag("--timing", plan.timing, "Record per-item durations");
    suite->add_option("--mutate", mutations, "Inject a named fault into the registry")->group("Testing");

    std::string expr_text;
    long series_order = -1;
    std::string point;
    std::vector<std::string> binds;
    auto* eval = app.add_subcommand("eval", "Evaluate a q-series expression");
    eval->add_option("--expr", expr_text, "Expression")->required();
    auto* series_opt = eval->add_option("--series", series_order, "Expand through q^K")->check(CLI::Range(0L, 100000L));
    auto* point_opt = eval->add_option("--point", point, "Evaluate at rational q with 0 < |q| < 1");
    series_opt->excludes(point_opt);
    eval->add_option("--bind", binds, "Parameter value name=p/q");

    auto* list = app.add_subcommand("list", "List registry identities");

    auto* corrections = app.add_subcommand("corrections", "Compare corrected and literal transcriptions");
    std::string corr_format = "json", corr_out;
    long corr_samples = 5;
    std::uint64_t corr_seed = 1;
    corrections->add_option("--samples", corr_samples, "Bindings per form")->check(CLI::Range(1L, 10000L));
    corrections->add_option("--seed", corr_seed, "Sampling seed");
    corrections->add_option("--format", corr_format, "Report format")->check(CLI::IsMember({"json", "text"}));
    corrections->add_option("--out", corr_out, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*suite) {
            plan.modes = modes_for(mode);
            plan.ids = ids;
            plan.sample.count = samples;
            if (plan.n_max < plan.n_min) throw ConfigError("--n-max must be at least 1");
            qsv::Mutations m;
            for (const auto& k : mutations) m.keys.insert(k);
            std::vector<qsv::Identity> reg = mutations.empty() ? qsv::registry() : qsv::build_registry(m);
            for (const auto& id : ids) {
                bool found = std::any_of(reg.begin(), reg.end(), [&](const qsv::Identity& x) { return x.id == id; });
                if (!found) throw ConfigError("unknown identity id: " + id);
            }
            std::vector<qsv::Report> reports = qsv::run_suite(reg, plan);
            qsv::RunInfo run{plan.sample.seed, plan.order, plan.n_max, qsv::utc_timestamp()};
            return finish(reports, run, format, out);
        }
        if (*eval) {
            if (!*series_opt && !*point_opt) throw ConfigError("eval needs one of --series K or --point Q");
            qsv::dsl::ExprPtr e = qsv::dsl::parse_expression(expr_text);
            qsv::dsl::Bindings b = parse_binds(binds);
            if (*series_opt) {
                std::cout << qsv::dsl::eval_series(*e, series_order, b).to_string() << "\n";
            } else {
                qsv::Rational q;
                try {
                    q = qsv::parse_rational(point);
                } catch (const std::exception& ex) {
                    throw ConfigError(std::string("--point: ") + ex.what());
                }
                qsv::dsl::PointValue v = qsv::dsl::eval_point(*e, q, b);
                std::cout << "value: " << qsv::to_string(v.value) << "\n";
                std::cout << "approx: " << decimal(v.value) << "\n";
                std::cout << "tail_bound: " << (v.tail_bound == 0 ? std::string("0") : decimal(v.tail_bound))
                          << (v.heuristic ? " (ratio heuristic)" : "") << "\n";
            }
            return 0;
        }
        if (*list) {
            for (const auto& x : qsv::registry())
                std::cout << x.id << "\t" << qsv::mode_name(x.mode) << "\t" << x.anchor << "\n";
            return 0;
        }
        if (*corrections) {
            qsv::SampleConfig cfg;
            cfg.seed = corr_seed;
            std::vector<qsv::Report> reports = qsv::run_corrections(cfg, corr_samples);
            qsv::RunInfo run{corr_seed, 0, 1, qsv::utc_timestamp()};
            // Literal transcriptions are expected to fail; only corrected forms decide the exit code.
            std::vector<qsv::Report> corrected;
            for (const auto& r : reports)
                if (r.id.find('.') == std::string::npos) corrected.push_back(r);
            qsv::write_output(corr_format == "json" ? qsv::emit_json(run, reports) : qsv::emit_text(reports), corr_out);
            qsv::Tally t = qsv::tally(corrected);
            return t.fail == 0 && t.skipped == 0 ? 0 : kExitFail;
        }
    } catch (const qsv::dsl::SyntaxError& e) {
        std::cerr << "qsv: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "qsv: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qsv::UnboundParameter& e) {
        std::cerr << "qsv: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qsv: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "qsv: " << e.what() << "\n";
        return kExitFail;
    }
    return 0;
}
