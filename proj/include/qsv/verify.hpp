#pragma once

#include "qsv/identity.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsv {

struct SamplingExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SampleConfig {
    std::uint64_t seed = 1;
    long count = 0;  // 0: per-mode default
    long q_den_bound = 30;
    long param_den_bound = 30;
};

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);
Status parse_status(const std::string& s);

struct Report {
    std::string id;
    Mode mode = Mode::ExactPoint;
    std::map<std::string, std::string> binding;
    std::optional<long> n;
    Status status = Status::Fail;
    std::string metric;
    long duration_ms = 0;
    bool heuristic_tail = false;

    bool operator==(const Report&) const = default;
};

// Deterministic in (seed, id, N, index); q is drawn only when `with_q`.
Binding sample_binding(const Identity& id, const SampleConfig& cfg, long index, long N, bool with_q,
                       const std::map<std::string, Rational>& overrides = {},
                       const std::function<bool(const Binding&)>& extra = nullptr);

Report verify_exact(const Identity& id, const Binding& b);
Report verify_formal(const Identity& id, const Binding& b, long K);
Report verify_analytic(const Identity& id, const Binding& b);
// Dispatch on the identity's mode.
Report verify(const Identity& id, const Binding& b, long K);

// Analytic tolerance on |delta| and on every tail bound.
Rational analytic_tolerance();

struct SpecializationPlan {
    long count = 10;
    long order = 30;
    long n_max = 4;
};
std::vector<Report> verify_specialization(const Specialization& s, const SampleConfig& cfg,
                                          const SpecializationPlan& plan);

// General infinite identity at a point versus its finite partner at large N.
// `limit` caps the tails and absorbs the uncertified remainder of the finite sum.
struct CoherenceResult {
    Rational delta;
    Rational tails;
    bool pass = false;
};
CoherenceResult check_coherence(const std::string& infinite_id, const std::string& finite_id, const Binding& b, long N,
                                const Rational& limit);

struct SuitePlan {
    SampleConfig sample;
    std::vector<Mode> modes;         // empty: all
    std::vector<std::string> ids;    // empty: all
    long order = 40;
    long n_min = 1;
    long n_max = 6;
    long exact_samples = 20;
    long formal_samples = 10;
    long analytic_samples = 10;
    int threads = 0;                 // 0: OpenMP default; 1: serial path
    bool timing = false;
};

struct WorkItem {
    const Identity* identity;
    long n;      // 0 when the identity has no N
    long index;
};

std::vector<WorkItem> plan_items(const std::vector<Identity>& reg, const SuitePlan& plan);
Report run_item(const WorkItem& item, const SuitePlan& plan);
std::vector<Report> run_suite_serial(const std::vector<Identity>& reg, const SuitePlan& plan);
std::vector<Report> run_suite_parallel(const std::vector<Identity>& reg, const SuitePlan& plan);
std::vector<Report> run_suite(const std::vector<Identity>& reg, const SuitePlan& plan);

struct Tally {
    long pass = 0, fail = 0, skipped = 0;
};
Tally tally(const std::vector<Report>& rs);

// Literal transcriptions versus the encoded corrections at N = 1.
std::vector<Report> run_corrections(const SampleConfig& cfg, long count);

}  // namespace qsv
