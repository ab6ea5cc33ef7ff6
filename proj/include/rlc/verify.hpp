#pragma once

// Randomized equivalence check: on small random graphs, every (s, t, L)
// triple with primitive |L| <= k must get the same answer from the index,
// the ETC, NFA-guided BFS and bidirectional BFS, and every index must be
// condensed.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rlc/baselines.hpp"
#include "rlc/builder.hpp"
#include "rlc/error.hpp"
#include "rlc/generators.hpp"
#include "rlc/index.hpp"
#include "rlc/random.hpp"

namespace rlc {

struct VerifyParams {
    std::size_t graphs = 200;
    std::uint32_t n_min = 5, n_max = 50;
    double deg_min = 1, deg_max = 6;
    std::uint32_t labels_min = 2, labels_max = 4;
    unsigned k_min = 1, k_max = 3;
    double zipf = 1.0;
    std::uint64_t seed = 1;
};

struct VerifyReport {
    std::size_t graphs = 0;
    std::uint64_t triples = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t condensed_violations = 0;
    std::uint64_t index_entries = 0;
    std::vector<std::string> failures;  // first few, human readable
};

namespace detail {

inline void record_failure(VerifyReport& r, std::string what) {
    if (r.failures.size() < 20) r.failures.push_back(std::move(what));
}

}  // namespace detail

/// Checks idx, BiBFS and (if given) the ETC against NFA-guided BFS on every
/// triple of g. Returns the number of disagreeing triples, appending them to r.
inline std::uint64_t verify_index(const Graph& g, const RlcIndex& idx, VerifyReport& r,
                                  const EtcIndex* etc = nullptr) {
    NfaBfs nfa(g);
    BiBfs bi(g);
    std::uint64_t bad = 0;
    const auto n = static_cast<VertexId>(g.num_vertices());
    for_each_primitive(static_cast<std::uint32_t>(g.num_labels()), idx.k(), [&](const LabelSeq& L) {
        for (VertexId s = 0; s < n; ++s) {
            for (VertexId t = 0; t < n; ++t) {
                ++r.triples;
                const bool want = *nfa.run(s, t, L);
                const bool by_index = query(idx, s, t, L);
                const bool by_bibfs = *bi.run(s, t, L);
                const bool by_etc = etc ? etc_query(*etc, s, t, L) : want;
                if (by_index == want && by_bibfs == want && by_etc == want) continue;
                ++bad;
                detail::record_failure(r, "(" + g.vertex_name(s) + ", " + g.vertex_name(t) + ", (" +
                                              g.labels_to_string(L) + ")+): nfa=" + std::to_string(want) +
                                              " index=" + std::to_string(by_index) + " bibfs=" +
                                              std::to_string(by_bibfs) + " etc=" + std::to_string(by_etc));
            }
        }
    });
    r.mismatches += bad;
    return bad;
}

inline void check_verify_params(const VerifyParams& p) {
    auto reject = [](const std::string& why) { throw Error(Errc::config_rejected, why); };
    if (p.n_min < 1 || p.n_min > p.n_max) reject("need 1 <= n_min <= n_max");
    if (p.n_max > 64) reject("n_max must be at most 64 for exhaustive sweeps");
    if (p.labels_min < 1 || p.labels_min > p.labels_max) reject("need 1 <= labels_min <= labels_max");
    if (p.k_min < 1 || p.k_min > p.k_max) reject("need 1 <= k_min <= k_max");
    if (!(p.deg_min >= 0) || !(p.deg_min <= p.deg_max)) reject("need 0 <= deg_min <= deg_max");
    if (std::pow(static_cast<double>(p.labels_max), static_cast<double>(p.k_max)) > 1e4) {
        reject("labels_max^k_max must be at most 10^4");
    }
    if (p.deg_max > static_cast<double>(p.n_min) * p.labels_min) reject("deg_max exceeds n_min * labels_min");
}

/// `on_graph`, when set, sees every sampled graph with its index.
inline VerifyReport verify_equivalence(const VerifyParams& p,
                                       const std::function<void(const Graph&, const RlcIndex&)>& on_graph = {}) {
    check_verify_params(p);
    VerifyReport r;
    for (std::size_t i = 0; i < p.graphs; ++i) {
        Xoshiro256 rng(derive_seed(p.seed, i));
        const auto n = static_cast<std::uint32_t>(p.n_min + rng.below(p.n_max - p.n_min + 1));
        const double deg = p.deg_min + (p.deg_max - p.deg_min) * rng.unit();
        const auto labels = static_cast<std::uint32_t>(p.labels_min + rng.below(p.labels_max - p.labels_min + 1));
        const auto k = static_cast<unsigned>(p.k_min + rng.below(p.k_max - p.k_min + 1));
        const Graph g = generate_er(n, deg, labels, p.zipf, rng());

        const RlcIndex idx = build_index(g, k);
        const EtcIndex etc = build_etc(g, k);
        ++r.graphs;
        r.index_entries += idx.total_entries();
        verify_index(g, idx, r, &etc);
        if (on_graph) on_graph(g, idx);
        for (const auto& v : condensed_violations(idx)) {
            ++r.condensed_violations;
            detail::record_failure(r, "graph " + std::to_string(i) + ": entry of " + g.vertex_name(v.owner) +
                                          " also certified through hub aid " + std::to_string(v.hub_aid));
        }
    }
    return r;
}

}  // namespace rlc
