#pragma once

// Timed evaluation of a workload by several evaluators. The first evaluator
// is the reference (normally the index); every other one gets a speed-up
// SU = its total / reference total and, given the reference's build time, a
// break-even workload size BEP = ceil(t_build / (t_other_q - t_ref_q)).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/workload.hpp"

namespace rlc {

struct Evaluator {
    std::string name;
    std::function<bool(VertexId, VertexId, const LabelSeq&)> eval;
};

struct EvaluatorTiming {
    std::string name;
    std::vector<double> totals;  // seconds, one per repeat
    double median_total = 0;
    double median_per_query = 0;
    std::optional<double> speed_up;
    std::optional<std::uint64_t> break_even;  // empty with speed_up set: "never"
};

struct BenchReport {
    std::size_t queries = 0;
    std::size_t repeats = 0;
    std::optional<double> build_seconds;
    std::vector<EvaluatorTiming> evaluators;
};

inline double median(std::vector<double> xs) {
    if (xs.empty()) return 0;
    std::sort(xs.begin(), xs.end());
    const std::size_t h = xs.size() / 2;
    return xs.size() % 2 ? xs[h] : (xs[h - 1] + xs[h]) / 2;
}

/// Empty when the baseline is not slower per query.
inline std::optional<std::uint64_t> break_even(double build_seconds, double base_per_query, double index_per_query) {
    const double gain = base_per_query - index_per_query;
    if (!(gain > 0)) return std::nullopt;
    return static_cast<std::uint64_t>(std::ceil(build_seconds / gain));
}

/// Runs each evaluator `repeats` times over the whole workload, in
/// isolation and in order. Any wrong answer aborts with EvaluatorMismatch.
inline BenchReport run_bench(const std::vector<Evaluator>& evaluators, const Workload& w, std::size_t repeats,
                             std::optional<double> build_seconds = std::nullopt) {
    if (repeats == 0) throw Error(Errc::config_rejected, "repeats must be at least 1");
    BenchReport r;
    r.queries = w.queries.size();
    r.repeats = repeats;
    r.build_seconds = build_seconds;
    for (const auto& ev : evaluators) {
        EvaluatorTiming timing{ev.name, {}, 0, 0, std::nullopt, std::nullopt};
        for (std::size_t rep = 0; rep < repeats; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            for (std::size_t i = 0; i < w.queries.size(); ++i) {
                const auto& q = w.queries[i];
                if (ev.eval(q.s, q.t, q.labels) != q.expected) {
                    throw Error(Errc::evaluator_mismatch, "evaluator '" + ev.name + "' answered query " +
                                                              std::to_string(i) + " wrongly (expected " +
                                                              (q.expected ? "true" : "false") + ")");
                }
            }
            const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
            timing.totals.push_back(el.count());
        }
        timing.median_total = median(timing.totals);
        timing.median_per_query = w.queries.empty() ? 0 : timing.median_total / static_cast<double>(w.queries.size());
        r.evaluators.push_back(std::move(timing));
    }
    if (r.evaluators.size() >= 2) {
        const auto& ref = r.evaluators.front();
        for (std::size_t i = 1; i < r.evaluators.size(); ++i) {
            auto& e = r.evaluators[i];
            e.speed_up = ref.median_total > 0 ? e.median_total / ref.median_total : INFINITY;
            if (build_seconds) e.break_even = break_even(*build_seconds, e.median_per_query, ref.median_per_query);
        }
    }
    return r;
}

inline void write_bench_csv(const BenchReport& r, std::ostream& out) {
    out << "evaluator,queries,repeats,median_total_s,median_per_query_s,speed_up,break_even\n";
    for (const auto& e : r.evaluators) {
        out << e.name << ',' << r.queries << ',' << r.repeats << ',' << e.median_total << ',' << e.median_per_query
            << ',';
        if (e.speed_up) out << *e.speed_up;
        out << ',';
        if (e.speed_up && r.build_seconds) {
            if (e.break_even) {
                out << *e.break_even;
            } else {
                out << "never";
            }
        }
        out << '\n';
    }
}

inline void write_bench_table(const BenchReport& r, std::ostream& out) {
    out << r.queries << " queries x " << r.repeats << " repeats";
    if (r.build_seconds) out << ", reference build " << std::fixed << std::setprecision(3) << *r.build_seconds << " s";
    out << '\n';
    out << std::left << std::setw(10) << "evaluator" << std::right << std::setw(16) << "median total s"
        << std::setw(16) << "per query us" << std::setw(12) << "SU" << std::setw(14) << "BEP" << '\n';
    for (const auto& e : r.evaluators) {
        out << std::left << std::setw(10) << e.name << std::right << std::setw(16) << std::setprecision(6)
            << e.median_total << std::setw(16) << std::setprecision(3) << e.median_per_query * 1e6;
        if (e.speed_up) {
            out << std::setw(12) << std::setprecision(1) << *e.speed_up;
        } else {
            out << std::setw(12) << "-";
        }
        if (e.speed_up && r.build_seconds) {
            out << std::setw(14) << (e.break_even ? std::to_string(*e.break_even) : std::string("never"));
        } else {
            out << std::setw(14) << "-";
        }
        out << '\n';
    }
    out.unsetf(std::ios::floatfield);
}

}  // namespace rlc
