#pragma once

/**
 * @file kbs.hpp
 * @brief Kernel-based search (KBS), shared by the index builder and the
 *        extended transitive closure.
 *
 * A KBS from an origin has two phases:
 *   1. kernel search: enumerate every label-sequence path of length 1..k
 *      (backward: prepending in-edge labels; forward: appending out-edge
 *      labels). Each endpoint is reported with the minimum repeat of its
 *      sequence, and is recorded as a frontier vertex of that repeat.
 *   2. kernel BFS: for each candidate kernel, a BFS over (vertex, residual)
 *      states guided by (kernel)+, starting from the kernel's frontier at
 *      residual 0. Residual r counts labels of the current repetition that
 *      are already consumed.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rlc/graph.hpp"
#include "rlc/label_seq.hpp"

namespace rlc {

enum class Direction { backward, forward };

/// Candidate kernel -> frontier vertices, in discovery order without repeats.
using CandidateMap = std::map<LabelSeq, std::vector<VertexId>>;

/// Phase 1. `sink(y, mr)` is called for every enumerated path endpoint y
/// with mr = MR(label sequence of the path); its result does not steer the
/// traversal. (vertex, sequence) pairs are expanded once per depth.
template <class Sink>
CandidateMap kernel_search(const Graph& g, VertexId origin, unsigned k, Direction dir, Sink&& sink) {
    struct Path {
        VertexId end;
        LabelSeq seq;
    };
    CandidateMap candidates;
    std::vector<Path> level{{origin, {}}};
    std::vector<Path> next;
    std::set<std::pair<VertexId, LabelSeq>> seen;
    for (unsigned depth = 1; depth <= k && !level.empty(); ++depth) {
        next.clear();
        seen.clear();
        for (const Path& p : level) {
            const auto arcs = dir == Direction::backward ? g.in(p.end) : g.out(p.end);
            for (const Arc& a : arcs) {
                LabelSeq seq = p.seq;
                if (dir == Direction::backward) {
                    seq.push_front(a.label);
                } else {
                    seq.push_back(a.label);
                }
                LabelSeq mr = seq.prefix(minimum_repeat_length(seq.view()));
                sink(a.vertex, std::as_const(mr));
                candidates[std::move(mr)].push_back(a.vertex);
                if (depth < k && seen.emplace(a.vertex, seq).second) next.push_back({a.vertex, std::move(seq)});
            }
        }
        level.swap(next);
    }
    std::unordered_set<VertexId> kept;
    for (auto& [kernel, frontier] : candidates) {
        kept.clear();
        std::erase_if(frontier, [&](VertexId v) { return !kept.insert(v).second; });
    }
    return candidates;
}

/// Phase 2 with reusable visited storage. One instance serves any number of
/// runs over the same graph; each run starts from a clean visited set.
class GuidedBfs {
public:
    GuidedBfs(std::size_t num_vertices, unsigned max_kernel_length)
        : stride_(max_kernel_length), stamp_(num_vertices * max_kernel_length, 0) {}

    /// `on_complete(y)` fires when y is first reached at residual 0, i.e. after
    /// a whole number of kernel repetitions; returning false stops expansion
    /// from y (y stays marked). Frontier vertices start marked at residual 0
    /// and do not trigger `on_complete`.
    template <class OnComplete>
    void run(const Graph& g, const LabelSeq& kernel, std::span<const VertexId> frontier, Direction dir,
             OnComplete&& on_complete) {
        const auto m = static_cast<std::uint32_t>(kernel.size());
        next_epoch();
        queue_.clear();
        for (VertexId x : frontier) {
            if (mark(x, 0)) queue_.emplace_back(x, 0);
        }
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const auto [x, r] = queue_[head];
            ++expansions_;
            const Label need = dir == Direction::backward ? kernel[m - 1 - r] : kernel[r];
            const std::uint32_t r2 = r + 1 == m ? 0 : r + 1;
            const auto arcs = dir == Direction::backward ? g.in(x) : g.out(x);
            for (const Arc& a : arcs) {
                if (a.label != need) continue;
                if (!mark(a.vertex, r2)) continue;
                if (r2 == 0 && !on_complete(a.vertex)) continue;
                queue_.emplace_back(a.vertex, r2);
            }
        }
    }

    std::uint64_t expansions() const noexcept { return expansions_; }

private:
    bool mark(VertexId v, std::uint32_t r) {
        auto& s = stamp_[static_cast<std::size_t>(v) * stride_ + r];
        if (s == epoch_) return false;
        s = epoch_;
        return true;
    }

    void next_epoch() {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
    }

    std::size_t stride_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<std::pair<VertexId, std::uint32_t>> queue_;
    std::uint64_t expansions_ = 0;
};

}  // namespace rlc
