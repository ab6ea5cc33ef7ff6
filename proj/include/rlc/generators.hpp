#pragma once

// Synthetic graph models: Erdos-Renyi G(n, M) and Barabasi-Albert with a
// seed clique. Edge labels follow a Zipf law over ranks 1..num_labels; the
// label named "l<r>" has rank r.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/graph.hpp"
#include "rlc/random.hpp"

namespace rlc {

/// Inverse-CDF sampler for P(rank r) = r^-s / H_{N,s}, r = 1..N.
class ZipfSampler {
public:
    ZipfSampler(std::uint32_t num_labels, double exponent) : cdf_(num_labels) {
        if (num_labels == 0) throw Error(Errc::infeasible_graph, "num_labels must be positive");
        double acc = 0;
        for (std::uint32_t r = 0; r < num_labels; ++r) {
            acc += std::pow(static_cast<double>(r + 1), -exponent);
            cdf_[r] = acc;
        }
        for (auto& c : cdf_) c /= acc;
        cdf_.back() = 1.0;
    }

    double probability(std::uint32_t rank0) const { return rank0 == 0 ? cdf_[0] : cdf_[rank0] - cdf_[rank0 - 1]; }

    /// Returns a 0-based rank.
    Label operator()(Xoshiro256& rng) const {
        const double u = rng.unit();
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        return static_cast<Label>(std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1));
    }

private:
    std::vector<double> cdf_;
};

namespace detail {

inline GraphBuilder numbered_builder(std::uint32_t n, std::uint32_t num_labels) {
    GraphBuilder b;
    for (std::uint32_t v = 0; v < n; ++v) b.add_vertex(std::to_string(v));
    for (std::uint32_t l = 0; l < num_labels; ++l) b.add_label("l" + std::to_string(l + 1));
    return b;
}

}  // namespace detail

/// round(n * avg_deg) distinct labeled edges over uniformly drawn ordered
/// pairs (self-loops allowed). A duplicate triple redraws the whole triple.
inline Graph generate_er(std::uint32_t n, double avg_deg, std::uint32_t num_labels, double zipf_s, std::uint64_t seed) {
    if (n == 0 || num_labels == 0) throw Error(Errc::infeasible_graph, "n and num_labels must be positive");
    if (!(avg_deg >= 0)) throw Error(Errc::infeasible_graph, "average degree must be non-negative");
    const auto m = static_cast<std::uint64_t>(std::llround(static_cast<double>(n) * avg_deg));
    const auto capacity = static_cast<long double>(n) * n * num_labels;
    if (static_cast<long double>(m) > capacity) {
        throw Error(Errc::infeasible_graph, std::to_string(m) + " edges requested but only n^2*|labels| are possible");
    }

    Xoshiro256 rng(seed);
    ZipfSampler zipf(num_labels, zipf_s);
    GraphBuilder b = detail::numbered_builder(n, num_labels);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m);
    for (std::uint64_t added = 0; added < m;) {
        const auto u = static_cast<VertexId>(rng.below(n));
        const auto v = static_cast<VertexId>(rng.below(n));
        const Label l = zipf(rng);
        const std::uint64_t key = (static_cast<std::uint64_t>(u) * n + v) * num_labels + l;
        if (!seen.insert(key).second) continue;
        b.add_edge(u, v, l);
        ++added;
    }
    return std::move(b).build();
}

/// Complete digraph on attach_m + 1 seed vertices, then every further
/// vertex sends attach_m edges to distinct existing vertices drawn with
/// probability proportional to their total degree.
inline Graph generate_ba(std::uint32_t n, std::uint32_t attach_m, std::uint32_t num_labels, double zipf_s,
                         std::uint64_t seed) {
    if (attach_m == 0 || n <= attach_m) throw Error(Errc::infeasible_graph, "BA requires n > attach_m >= 1");
    if (num_labels == 0) throw Error(Errc::infeasible_graph, "num_labels must be positive");

    Xoshiro256 rng(seed);
    ZipfSampler zipf(num_labels, zipf_s);
    GraphBuilder b = detail::numbered_builder(n, num_labels);

    // One slot per edge endpoint; uniform choice over slots is degree-proportional.
    std::vector<VertexId> endpoints;
    endpoints.reserve(2 * static_cast<std::size_t>(n) * attach_m);
    for (VertexId u = 0; u <= attach_m; ++u) {
        for (VertexId v = 0; v <= attach_m; ++v) {
            if (u == v) continue;
            b.add_edge(u, v, zipf(rng));
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    std::vector<VertexId> targets;
    for (VertexId u = attach_m + 1; u < n; ++u) {
        targets.clear();
        while (targets.size() < attach_m) {
            const VertexId t = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (VertexId t : targets) {
            b.add_edge(u, t, zipf(rng));
            endpoints.push_back(u);
            endpoints.push_back(t);
        }
    }
    return std::move(b).build();
}

}  // namespace rlc
