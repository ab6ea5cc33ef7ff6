#pragma once

/**
 * @file builder.hpp
 * @brief Index construction by pruned kernel-based search.
 *
 * Vertices are processed in ascending access id. Each one runs a backward
 * KBS, which writes L_out entries at the vertices it reaches, and then a
 * forward KBS, which writes L_in entries.
 *
 * Pruning:
 *   PR1  skip an entry the current index already answers;
 *   PR2  skip an entry whose hub has a larger access id than its owner;
 *   PR3  in the guided BFS, do not expand past a vertex whose insert was skipped.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <new>
#include <string>

#include "rlc/error.hpp"
#include "rlc/graph.hpp"
#include "rlc/index.hpp"
#include "rlc/kbs.hpp"
#include "rlc/log.hpp"

namespace rlc {

enum class InsertResult { accepted, rejected };

struct BuildCounters {
    std::uint64_t accepted = 0;
    std::uint64_t pruned_pr1 = 0;
    std::uint64_t pruned_pr2 = 0;
    std::uint64_t kernel_bfs_runs = 0;
    std::uint64_t bfs_expansions = 0;
    std::size_t vertices_done = 0;
};

/// What try_insert saw; handed to an optional observer (tests replay these).
struct InsertEvent {
    VertexId owner;
    VertexId hub;
    const LabelSeq* mr;
    Direction dir;
    InsertResult result;
};

class IndexBuilder {
public:
    using Observer = std::function<void(const InsertEvent&, const RlcIndex&)>;

    IndexBuilder(const Graph& g, unsigned k)
        : g_(g), k_(check_k(k)), idx_(k, g, in_out_order(g)), bfs_(g.num_vertices(), k) {}

    void set_observer(Observer obs) { observer_ = std::move(obs); }

    /// Candidate entry (origin, mr) into L_out(y) (backward) or L_in(y) (forward).
    InsertResult try_insert(VertexId y, VertexId origin, const LabelSeq& mr, Direction dir) {
        const auto& order = idx_.order();
        InsertResult res = InsertResult::rejected;
        if (order.aid(origin) > order.aid(y)) {
            ++counters_.pruned_pr2;
        } else {
            const auto id = idx_.dictionary().find(mr);
            const bool known = id && (dir == Direction::backward ? idx_.query_mr(y, origin, *id)
                                                                  : idx_.query_mr(origin, y, *id));
            if (known) {
                ++counters_.pruned_pr1;
            } else {
                const MrId mid = id ? *id : idx_.dictionary().intern(mr);
                EntryList& list = dir == Direction::backward ? idx_.l_out(y) : idx_.l_in(y);
                RlcIndex::insert_sorted(list, {order.aid(origin), mid});
                ++counters_.accepted;
                res = InsertResult::accepted;
            }
        }
        if (observer_) observer_({y, origin, &mr, dir, res}, idx_);
        return res;
    }

    CandidateMap kernel_search(VertexId origin, Direction dir) {
        return rlc::kernel_search(g_, origin, k_, dir, [&](VertexId y, const LabelSeq& mr) {
            try_insert(y, origin, mr, dir);
        });
    }

    void kernel_bfs(VertexId origin, const LabelSeq& kernel, std::span<const VertexId> frontier, Direction dir) {
        ++counters_.kernel_bfs_runs;
        bfs_.run(g_, kernel, frontier, dir,
                 [&](VertexId y) { return try_insert(y, origin, kernel, dir) == InsertResult::accepted; });
    }

    /// Backward then forward KBS from one origin.
    void process(VertexId origin) {
        for (Direction dir : {Direction::backward, Direction::forward}) {
            const CandidateMap candidates = kernel_search(origin, dir);
            for (const auto& [kernel, frontier] : candidates) kernel_bfs(origin, kernel, frontier, dir);
        }
    }

    void run() {
        const auto n = g_.num_vertices();
        const auto start = std::chrono::steady_clock::now();
        try {
            for (std::uint32_t aid = 1; aid <= n; ++aid) {
                process(idx_.order().vertex_at(aid));
                ++counters_.vertices_done;
                if (aid % 10000 == 0) {
                    const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
                    log::info("build: ", aid, "/", n, " vertices, ", counters_.accepted, " entries, ", el.count(), " s");
                }
            }
        } catch (const std::bad_alloc&) {
            throw Error(Errc::index_build_failure, "out of memory after " + std::to_string(counters_.vertices_done) +
                                                       " of " + std::to_string(n) + " vertices (" +
                                                       std::to_string(counters_.accepted) + " entries)");
        }
        counters_.bfs_expansions = bfs_.expansions();
    }

    const RlcIndex& snapshot() const noexcept { return idx_; }
    RlcIndex take() && { return std::move(idx_); }
    const BuildCounters& counters() const noexcept { return counters_; }

private:
    static unsigned check_k(unsigned k) {
        if (k == 0) throw Error(Errc::unsupported_constraint, "k must be at least 1");
        return k;
    }

    const Graph& g_;
    unsigned k_;
    RlcIndex idx_;
    GuidedBfs bfs_;
    BuildCounters counters_;
    Observer observer_;
};

inline RlcIndex build_index(const Graph& g, unsigned k) {
    IndexBuilder b(g, k);
    b.run();
    return std::move(b).take();
}

}  // namespace rlc
