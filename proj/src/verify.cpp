#include "qsv/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

namespace qsv {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "fail";
}

Status parse_status(const std::string& s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "skipped") return Status::Skipped;
    throw std::invalid_argument("unknown status: " + s);
}

Rational analytic_tolerance() { return pow(Rational(10), -20); }

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

class Draw {
public:
    Draw(std::uint64_t seed, const std::string& id, long N, long index, long attempt) {
        const std::uint64_t h = fnv1a(id);
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                          static_cast<std::uint32_t>(N), static_cast<std::uint32_t>(index),
                          static_cast<std::uint32_t>(attempt)};
        rng_.seed(seq);
    }
    // Uniform-ish integer in [lo, hi].
    long between(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(rng_() % span);
    }

private:
    std::mt19937_64 rng_;
};

long floor_div(const Rational& r) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f.get_si();
}
long ceil_div(const Rational& r) {
    mpz_class f;
    mpz_cdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f.get_si();
}

// Nonzero rational in [lo, hi] with denominator at most den_bound.
Rational draw_in_box(Draw& d, const Rational& lo, const Rational& hi, long den_bound) {
    for (int tries = 0; tries < 64; ++tries) {
        long v = d.between(1, std::max(1L, den_bound));
        long nlo = ceil_div(lo * v), nhi = floor_div(hi * v);
        if (nlo > nhi || (nlo == 0 && nhi == 0)) continue;
        long u = d.between(nlo, nhi);
        if (u == 0) continue;
        return make_rational(u, v);
    }
    return lo != 0 ? lo : hi;
}

Rational draw_q(Draw& d, long den_bound) {
    long v = d.between(3, std::max(3L, den_bound));
    long u = d.between(1, v / 3);
    return make_rational(u, v);
}

Report base_report(const Identity& id, const Binding& b) {
    Report r;
    r.id = id.id;
    r.mode = id.mode;
    r.binding = b.to_strings();
    if (id.has_N()) r.n = b.N;
    return r;
}

std::string sci(const Rational& x) {
    if (x == 0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", upper_double(abs(x)));
    return buf;
}

std::string error_metric(const std::exception& e) { return std::string("error: ") + e.what(); }

// |a - b| <= ra + rb, with both radii under the tolerance.
struct BallCompare {
    Rational delta{0};
    Rational tails{0};
    bool ok = true;
    void add(const Ball& x, const Ball& y) {
        Rational d = abs(x.mid() - y.mid());
        Rational t = x.rad() + y.rad();
        if (d > delta) delta = d;
        if (t > tails) tails = t;
        if (d > t || x.rad() > analytic_tolerance() || y.rad() > analytic_tolerance()) ok = false;
    }
    std::string metric() const { return "delta=" + sci(delta) + " tails=" + sci(tails); }
};

Rational series_gap(const LaurentSeries& f, const LaurentSeries& g, long K, bool& short_window) {
    if (f.valid_through() < K || g.valid_through() < K) short_window = true;
    Rational worst = 0;
    long lo = std::min(f.is_zero() ? K : f.min_exp(), g.is_zero() ? K : g.min_exp());
    for (long e = lo; e <= K; ++e) {
        Rational d = abs(f.coeff(e) - g.coeff(e));
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace

Binding sample_binding(const Identity& id, const SampleConfig& cfg, long index, long N, bool with_q,
                       const std::map<std::string, Rational>& overrides,
                       const std::function<bool(const Binding&)>& extra) {
    for (long attempt = 0; attempt < 1000; ++attempt) {
        Draw d(cfg.seed, id.id, N, index, attempt);
        Binding b;
        b.N = N;
        if (with_q) b.q = draw_q(d, cfg.q_den_bound);
        bool bounded = true;
        for (const auto& p : id.params) {
            switch (p.kind) {
                case ParamSpec::Kind::PositiveN: break;
                case ParamSpec::Kind::IndexUpToN: b.values[p.name] = Rational(d.between(0, std::max(0L, N))); break;
                case ParamSpec::Kind::Free: b.values[p.name] = draw_in_box(d, p.lo, p.hi, cfg.param_den_bound); break;
            }
        }
        for (const auto& [k, v] : overrides) b.values[k] = v;
        for (const auto& p : id.params)
            if (p.analytic_bound && b.has(p.name) && abs(b(p.name)) > *p.analytic_bound) bounded = false;
        if (!bounded || !id.admissible(b)) continue;
        if (extra && !extra(b)) continue;
        return b;
    }
    throw SamplingExhausted(id.id + ": no admissible binding after 1000 attempts");
}

Report verify_exact(const Identity& id, const Binding& b) {
    Report r = base_report(id, b);
    try {
        Rational first = evaluate_exact(id, 0, b);
        Rational worst = 0;
        for (std::size_t i = 1; i < id.forms.size(); ++i) {
            Rational d = abs(evaluate_exact(id, i, b) - first);
            if (d > worst) worst = d;
        }
        r.status = worst == 0 ? Status::Pass : Status::Fail;
        r.metric = to_string(worst);
    } catch (const PoleGuardViolation& e) {
        r.status = Status::Skipped;
        r.metric = std::string("skipped: ") + e.what();
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.metric = error_metric(e);
    }
    return r;
}

Report verify_formal(const Identity& id, const Binding& b, long K) {
    Report r = base_report(id, b);
    try {
        LaurentSeries first = evaluate_series(id, 0, b, K);
        Rational worst = 0;
        bool short_window = first.valid_through() < K;
        for (std::size_t i = 1; i < id.forms.size(); ++i) {
            LaurentSeries s = evaluate_series(id, i, b, K);
            Rational d = series_gap(first, s, K, short_window);
            if (d > worst) worst = d;
        }
        r.metric = to_string(worst);
        r.status = (worst == 0 && !short_window) ? Status::Pass : Status::Fail;
        if (short_window) r.metric = "error: series not valid through order " + std::to_string(K);
    } catch (const PoleGuardViolation& e) {
        r.status = Status::Skipped;
        r.metric = std::string("skipped: ") + e.what();
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.metric = error_metric(e);
    }
    return r;
}

Report verify_analytic(const Identity& id, const Binding& b) {
    Report r = base_report(id, b);
    try {
        bool h = false;
        Ball first = evaluate_ball(id, 0, b, &h);
        r.heuristic_tail = h;
        BallCompare cmp;
        for (std::size_t i = 1; i < id.forms.size(); ++i) {
            Ball v = evaluate_ball(id, i, b, &h);
            r.heuristic_tail = r.heuristic_tail || h;
            cmp.add(first, v);
        }
        r.status = cmp.ok ? Status::Pass : Status::Fail;
        r.metric = cmp.metric();
    } catch (const PoleGuardViolation& e) {
        r.status = Status::Skipped;
        r.metric = std::string("skipped: ") + e.what();
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.metric = error_metric(e);
    }
    return r;
}

Report verify(const Identity& id, const Binding& b, long K) {
    switch (id.mode) {
        case Mode::ExactPoint: return verify_exact(id, b);
        case Mode::FormalSeries: return verify_formal(id, b, K);
        case Mode::Analytic: return verify_analytic(id, b);
    }
    return verify_exact(id, b);
}

std::vector<Report> verify_specialization(const Specialization& s, const SampleConfig& cfg,
                                          const SpecializationPlan& plan) {
    const Identity& gen = find_any(s.general);
    const Identity& spe = find_any(s.special);
    Mode mode = gen.mode;
    if (gen.mode == Mode::Analytic || spe.mode == Mode::Analytic) mode = Mode::Analytic;
    const bool with_q = mode != Mode::FormalSeries;

    std::vector<Report> out;
    for (long index = 0; index < plan.count; ++index) {
        const long N = gen.has_N() ? 1 + index % plan.n_max : 0;
        Report r;
        r.id = s.general + ">" + s.special;
        r.mode = mode;
        if (gen.has_N()) r.n = N;
        try {
            Binding b = sample_binding(gen, cfg, index, N, with_q, s.substitution,
                                       [&](const Binding& x) { return spe.admissible(x); });
            r.binding = b.to_strings();
            const Rational scale = s.scale ? s.scale(b) : Rational(1);
            if (mode == Mode::ExactPoint) {
                Rational g = evaluate_exact(gen, 0, b);
                Rational worst = 0;
                for (std::size_t i = 1; i < gen.forms.size(); ++i) worst = std::max<Rational>(worst, abs(evaluate_exact(gen, i, b) - g));
                for (std::size_t j = 0; j < spe.forms.size(); ++j)
                    worst = std::max<Rational>(worst, abs(scale * evaluate_exact(spe, j, b) - g));
                r.status = worst == 0 ? Status::Pass : Status::Fail;
                r.metric = to_string(worst);
            } else if (mode == Mode::FormalSeries) {
                LaurentSeries g = evaluate_series(gen, 0, b, plan.order);
                bool short_window = false;
                Rational worst = 0;
                for (std::size_t i = 1; i < gen.forms.size(); ++i)
                    worst = std::max<Rational>(worst, series_gap(g, evaluate_series(gen, i, b, plan.order), plan.order, short_window));
                for (std::size_t j = 0; j < spe.forms.size(); ++j)
                    worst = std::max<Rational>(
                        worst, series_gap(g, evaluate_series(spe, j, b, plan.order).scaled(scale), plan.order, short_window));
                r.status = (worst == 0 && !short_window) ? Status::Pass : Status::Fail;
                r.metric = short_window ? "error: series not valid through order" : to_string(worst);
            } else {
                bool h = false;
                Ball g = evaluate_ball(gen, 0, b, &h);
                r.heuristic_tail = h;
                BallCompare cmp;
                for (std::size_t i = 1; i < gen.forms.size(); ++i) {
                    cmp.add(g, evaluate_ball(gen, i, b, &h));
                    r.heuristic_tail = r.heuristic_tail || h;
                }
                for (std::size_t j = 0; j < spe.forms.size(); ++j) {
                    cmp.add(g, evaluate_ball(spe, j, b, &h) * scale);
                    r.heuristic_tail = r.heuristic_tail || h;
                }
                r.status = cmp.ok ? Status::Pass : Status::Fail;
                r.metric = cmp.metric();
            }
        } catch (const PoleGuardViolation& e) {
            r.status = Status::Skipped;
            r.metric = std::string("skipped: ") + e.what();
        } catch (const std::exception& e) {
            r.status = Status::Fail;
            r.metric = error_metric(e);
        }
        out.push_back(std::move(r));
    }
    return out;
}

CoherenceResult check_coherence(const std::string& infinite_id, const std::string& finite_id, const Binding& b, long N,
                                const Rational& limit) {
    const Identity& inf = find_any(infinite_id);
    const Identity& fin = find_any(finite_id);
    Binding bf = b;
    bf.N = N;
    CoherenceResult res;
    for (std::size_t i = 0; i < inf.forms.size(); ++i) {
        Ball x = evaluate_ball(inf, i, b);
        for (std::size_t j = 0; j < fin.forms.size(); ++j) {
            Ball y = evaluate_ball(fin, j, bf);
            Rational d = abs(x.mid() - y.mid());
            Rational t = x.rad() + y.rad();
            if (d > res.delta) res.delta = d;
            if (t > res.tails) res.tails = t;
        }
    }
    res.pass = res.tails <= limit && res.delta <= res.tails + limit;
    return res;
}

std::vector<WorkItem> plan_items(const std::vector<Identity>& reg, const SuitePlan& plan) {
    std::vector<const Identity*> ids;
    for (const auto& x : reg) {
        if (!plan.modes.empty() && std::find(plan.modes.begin(), plan.modes.end(), x.mode) == plan.modes.end()) continue;
        if (!plan.ids.empty() && std::find(plan.ids.begin(), plan.ids.end(), x.id) == plan.ids.end()) continue;
        ids.push_back(&x);
    }
    std::sort(ids.begin(), ids.end(), [](const Identity* a, const Identity* b) { return a->id < b->id; });
    std::vector<WorkItem> items;
    for (const Identity* x : ids) {
        auto count = [&](long dflt) { return plan.sample.count > 0 ? plan.sample.count : dflt; };
        switch (x->mode) {
            case Mode::ExactPoint:
                if (x->has_N()) {
                    for (long n = plan.n_min; n <= plan.n_max; ++n)
                        for (long i = 0; i < count(plan.exact_samples); ++i) items.push_back({x, n, i});
                } else {
                    for (long i = 0; i < count(plan.exact_samples); ++i) items.push_back({x, 0, i});
                }
                break;
            case Mode::FormalSeries: {
                const long span = plan.n_max - plan.n_min + 1;
                for (long i = 0; i < count(plan.formal_samples); ++i)
                    items.push_back({x, x->has_N() ? plan.n_min + i % span : 0, i});
                break;
            }
            case Mode::Analytic:
                for (long i = 0; i < count(plan.analytic_samples); ++i) items.push_back({x, 0, i});
                break;
        }
    }
    return items;
}

Report run_item(const WorkItem& item, const SuitePlan& plan) {
    const Identity& id = *item.identity;
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    try {
        Binding b = sample_binding(id, plan.sample, item.index, item.n, id.mode != Mode::FormalSeries);
        r = verify(id, b, plan.order);
    } catch (const SamplingExhausted& e) {
        r.id = id.id;
        r.mode = id.mode;
        if (id.has_N()) r.n = item.n;
        r.status = Status::Skipped;
        r.metric = std::string("skipped: ") + e.what();
    }
    if (plan.timing)
        r.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<Report> run_suite_serial(const std::vector<Identity>& reg, const SuitePlan& plan) {
    std::vector<Report> out;
    for (const auto& item : plan_items(reg, plan)) out.push_back(run_item(item, plan));
    return out;
}

std::vector<Report> run_suite_parallel(const std::vector<Identity>& reg, const SuitePlan& plan) {
    const auto items = plan_items(reg, plan);
    std::vector<Report> out(items.size());
    const int threads = plan.threads > 0 ? plan.threads : omp_get_max_threads();
    const long count = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long i = 0; i < count; ++i) out[i] = run_item(items[i], plan);
    return out;
}

std::vector<Report> run_suite(const std::vector<Identity>& reg, const SuitePlan& plan) {
    return plan.threads == 1 ? run_suite_serial(reg, plan) : run_suite_parallel(reg, plan);
}

Tally tally(const std::vector<Report>& rs) {
    Tally t;
    for (const auto& r : rs) {
        if (r.status == Status::Pass) ++t.pass;
        else if (r.status == Status::Fail) ++t.fail;
        else ++t.skipped;
    }
    return t;
}

std::vector<Report> run_corrections(const SampleConfig& cfg, long count) {
    struct Case {
        std::string id, mutation;
    };
    const std::vector<Case> cases{{"DEMS-COR", "DEMS-COR.literal"}, {"FIN-E4", "FIN-E4.literal"}};
    std::vector<Report> out;
    for (const auto& c : cases) {
        const auto literal_reg = build_registry(Mutations{{c.mutation}});
        const Identity& literal = *std::find_if(literal_reg.begin(), literal_reg.end(),
                                                [&](const Identity& x) { return x.id == c.id; });
        const Identity& fixed = find_identity(c.id);
        for (long i = 0; i < count; ++i) {
            Binding b = sample_binding(literal, cfg, i, 1, true, {}, [&](const Binding& x) { return fixed.admissible(x); });
            out.push_back(verify_exact(fixed, b));
            Report lit = verify_exact(literal, b);
            lit.id = c.mutation;
            out.push_back(std::move(lit));
        }
    }
    return out;
}

}  // namespace qsv
