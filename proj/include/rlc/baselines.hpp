#pragma once

// Index-free evaluators and the extended transitive closure (ETC).
//
// For a primitive L = (l_0 .. l_{m-1}), the automaton of L+ is an m-state
// cycle, so a product state is just (vertex, labels of the current
// repetition consumed).

#include <algorithm>
#include <cstdint>
#include <new>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/graph.hpp"
#include "rlc/index.hpp"
#include "rlc/kbs.hpp"
#include "rlc/label_seq.hpp"

namespace rlc {

namespace detail {

inline void check_query(const Graph& g, VertexId s, VertexId t, const LabelSeq& L) {
    if (s >= g.num_vertices() || t >= g.num_vertices()) throw Error(Errc::not_found, "vertex id out of range");
    if (L.empty()) throw Error(Errc::invalid_sequence, "empty constraint");
    for (Label l : L) {
        if (l >= g.num_labels()) throw Error(Errc::not_found, "label id " + std::to_string(l) + " out of range");
    }
    if (!is_primitive(L)) throw Error(Errc::non_primitive_constraint, "constraint is not a minimum repeat");
}

/// Visited bitmap over (vertex, position) cleared in O(1) by bumping an epoch.
class StateStamps {
public:
    void reset(std::size_t n, std::size_t m) {
        const std::size_t need = n * m;
        if (stamp_.size() < need) stamp_.assign(need, 0);
        stride_ = m;
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
    }
    bool test(VertexId v, std::uint32_t p) const { return stamp_[v * stride_ + p] == epoch_; }
    bool mark(VertexId v, std::uint32_t p) {
        auto& s = stamp_[v * stride_ + p];
        if (s == epoch_) return false;
        s = epoch_;
        return true;
    }

private:
    std::vector<std::uint32_t> stamp_;
    std::size_t stride_ = 1;
    std::uint32_t epoch_ = 0;
};

using State = std::pair<VertexId, std::uint32_t>;

}  // namespace detail

/// Product-automaton BFS from (s, 0). Reusable scratch; not thread-safe.
class NfaBfs {
public:
    explicit NfaBfs(const Graph& g) : g_(g) {}

    /// Empty result means the expansion cap was hit before an answer.
    std::optional<bool> run(VertexId s, VertexId t, const LabelSeq& L, std::uint64_t step_cap = UINT64_MAX) {
        detail::check_query(g_, s, t, L);
        const auto m = static_cast<std::uint32_t>(L.size());
        seen_.reset(g_.num_vertices(), m);
        queue_.clear();
        expansions_ = 0;
        seen_.mark(s, 0);
        queue_.emplace_back(s, 0);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            if (++expansions_ > step_cap) return std::nullopt;
            const auto [v, p] = queue_[head];
            const std::uint32_t p2 = p + 1 == m ? 0 : p + 1;
            for (const Arc& a : g_.out(v)) {
                if (a.label != L[p]) continue;
                // Acceptance before the visited test: (s, 0) is pre-marked.
                if (p2 == 0 && a.vertex == t) return true;
                if (seen_.mark(a.vertex, p2)) queue_.emplace_back(a.vertex, p2);
            }
        }
        return false;
    }

    std::uint64_t last_expansions() const noexcept { return expansions_; }

private:
    const Graph& g_;
    detail::StateStamps seen_;
    std::vector<detail::State> queue_;
    std::uint64_t expansions_ = 0;
};

/// Bidirectional product BFS, expanding the smaller frontier one level at a time.
class BiBfs {
public:
    explicit BiBfs(const Graph& g) : g_(g) {}

    std::optional<bool> run(VertexId s, VertexId t, const LabelSeq& L, std::uint64_t step_cap = UINT64_MAX) {
        detail::check_query(g_, s, t, L);
        const auto m = static_cast<std::uint32_t>(L.size());
        fwd_seen_.reset(g_.num_vertices(), m);
        bwd_seen_.reset(g_.num_vertices(), m);
        fwd_.assign(1, {s, 0});
        bwd_.assign(1, {t, 0});
        fwd_seen_.mark(s, 0);
        bwd_seen_.mark(t, 0);
        expansions_ = 0;

        // A state generated on one side meets the other side at (w, (m - p) % m).
        // Initial states are never tested against each other, which excludes
        // the zero-length pairing when s == t.
        while (!fwd_.empty() && !bwd_.empty()) {
            const bool forward = fwd_.size() <= bwd_.size();
            auto& level = forward ? fwd_ : bwd_;
            auto& mine = forward ? fwd_seen_ : bwd_seen_;
            auto& other = forward ? bwd_seen_ : fwd_seen_;
            next_.clear();
            for (const auto& [v, p] : level) {
                if (++expansions_ > step_cap) return std::nullopt;
                const Label need = forward ? L[p] : L[m - 1 - p];
                const std::uint32_t p2 = p + 1 == m ? 0 : p + 1;
                const auto arcs = forward ? g_.out(v) : g_.in(v);
                for (const Arc& a : arcs) {
                    if (a.label != need) continue;
                    if (other.test(a.vertex, p2 == 0 ? 0 : m - p2)) return true;
                    if (mine.mark(a.vertex, p2)) next_.emplace_back(a.vertex, p2);
                }
            }
            level.swap(next_);
        }
        return false;
    }

    std::uint64_t last_expansions() const noexcept { return expansions_; }

private:
    const Graph& g_;
    detail::StateStamps fwd_seen_, bwd_seen_;
    std::vector<detail::State> fwd_, bwd_, next_;
    std::uint64_t expansions_ = 0;
};

inline bool nfa_bfs(const Graph& g, VertexId s, VertexId t, const LabelSeq& L) {
    NfaBfs bfs(g);
    return *bfs.run(s, t, L);
}

inline bool bibfs(const Graph& g, VertexId s, VertexId t, const LabelSeq& L) {
    BiBfs bfs(g);
    return *bfs.run(s, t, L);
}

/// Per source vertex, every (target, k-MR) pair of any path, sorted.
struct EtcIndex {
    unsigned k = 1;
    std::size_t num_labels = 0;
    MrDictionary dict;
    std::vector<std::vector<std::pair<VertexId, MrId>>> rows;

    std::size_t total_records() const noexcept {
        std::size_t total = 0;
        for (const auto& r : rows) total += r.size();
        return total;
    }
};

/// Forward KBS from every vertex, recording everything, no pruning.
/// Throws IndexBuildFailure once more than max_records pairs are stored.
inline EtcIndex build_etc(const Graph& g, unsigned k, std::size_t max_records = SIZE_MAX) {
    if (k == 0) throw Error(Errc::unsupported_constraint, "k must be at least 1");
    EtcIndex etc;
    etc.k = k;
    etc.num_labels = g.num_labels();
    etc.rows.resize(g.num_vertices());
    GuidedBfs bfs(g.num_vertices(), k);
    std::size_t total = 0;
    VertexId s = 0;
    try {
        for (; s < g.num_vertices(); ++s) {
            auto& row = etc.rows[s];
            const CandidateMap candidates = kernel_search(g, s, k, Direction::forward, [&](VertexId y, const LabelSeq& mr) {
                row.emplace_back(y, etc.dict.intern(mr));
            });
            for (const auto& [kernel, frontier] : candidates) {
                const MrId id = etc.dict.intern(kernel);
                bfs.run(g, kernel, frontier, Direction::forward, [&](VertexId y) {
                    row.emplace_back(y, id);
                    return true;
                });
            }
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
            row.shrink_to_fit();
            total += row.size();
            if (total > max_records) {
                throw Error(Errc::index_build_failure, "ETC exceeded " + std::to_string(max_records) +
                                                           " records after " + std::to_string(s + 1) + " sources");
            }
        }
    } catch (const std::bad_alloc&) {
        throw Error(Errc::index_build_failure, "ETC out of memory after " + std::to_string(s) + " sources");
    }
    return etc;
}

inline bool etc_query(const EtcIndex& etc, VertexId s, VertexId t, const LabelSeq& L) {
    if (s >= etc.rows.size() || t >= etc.rows.size()) throw Error(Errc::not_found, "vertex id out of range");
    if (L.empty()) throw Error(Errc::invalid_sequence, "empty constraint");
    for (Label l : L) {
        if (l >= etc.num_labels) throw Error(Errc::not_found, "label id " + std::to_string(l) + " out of range");
    }
    if (L.size() > etc.k) throw Error(Errc::unsupported_constraint, "constraint longer than ETC k");
    if (!is_primitive(L)) throw Error(Errc::non_primitive_constraint, "constraint is not a minimum repeat");
    const auto id = etc.dict.find(L);
    return id && std::binary_search(etc.rows[s].begin(), etc.rows[s].end(), std::pair{t, *id});
}

inline constexpr std::uint64_t kMaxOracleCandidates = 1'000'000;

/// Every primitive L with |L| <= k that nfa_bfs accepts for (s, t).
inline std::set<LabelSeq> oracle_concise_set(const Graph& g, VertexId s, VertexId t, unsigned k) {
    if (s >= g.num_vertices() || t >= g.num_vertices()) throw Error(Errc::not_found, "vertex id out of range");
    std::set<LabelSeq> out;
    const auto A = static_cast<std::uint64_t>(g.num_labels());
    if (A == 0) return out;
    std::uint64_t space = 0, power = 1;
    for (unsigned i = 1; i <= k; ++i) {
        if (__builtin_mul_overflow(power, A, &power) || (space += power) > kMaxOracleCandidates) {
            throw Error(Errc::candidate_space_too_large, "more than 10^6 candidate constraints");
        }
    }
    NfaBfs bfs(g);
    for_each_primitive(static_cast<std::uint32_t>(A), k, [&](const LabelSeq& L) {
        if (*bfs.run(s, t, L)) out.insert(L);
    });
    return out;
}

}  // namespace rlc
