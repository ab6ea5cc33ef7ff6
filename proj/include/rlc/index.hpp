#pragma once

/**
 * @file index.hpp
 * @brief The RLC reachability index and its query algorithm.
 *
 * Every vertex v carries two lists of (hub, minimum repeat) entries:
 *   L_out(v): (w, L) meaning v reaches w along a path whose k-MR is L;
 *   L_in(v):  (u, L) meaning u reaches v along such a path.
 *
 * A query (s, t, L+) is true iff
 *   - (t, L) is in L_out(s) or (s, L) is in L_in(t), or
 *   - some hub x has (x, L) in L_out(s) and (x, L) in L_in(t).
 * Joined entries must carry the same minimum repeat L; concatenating two
 * different repeats is never used.
 *
 * Entries store the hub's access id rather than its vertex id, and every
 * list is kept strictly increasing in (hub aid, mr id) so the hub join is
 * a linear merge.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/graph.hpp"
#include "rlc/label_seq.hpp"

namespace rlc {

using MrId = std::uint32_t;

/// Interns primitive label sequences of bounded length as dense ids,
/// assigned in first-interned order.
class MrDictionary {
public:
    MrId intern(const LabelSeq& mr) {
        if (auto it = ids_.find(mr); it != ids_.end()) return it->second;
        if (mr.empty() || !is_primitive(mr)) {
            throw Error(Errc::non_primitive_constraint, "only primitive sequences can be interned");
        }
        const auto id = static_cast<MrId>(seqs_.size());
        seqs_.push_back(mr);
        ids_.emplace(mr, id);
        return id;
    }

    std::optional<MrId> find(const LabelSeq& mr) const {
        auto it = ids_.find(mr);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    const LabelSeq& at(MrId id) const { return seqs_.at(id); }
    std::size_t size() const noexcept { return seqs_.size(); }
    const std::vector<LabelSeq>& sequences() const noexcept { return seqs_; }

    friend bool operator==(const MrDictionary& a, const MrDictionary& b) { return a.seqs_ == b.seqs_; }

private:
    std::vector<LabelSeq> seqs_;
    std::unordered_map<LabelSeq, MrId, LabelSeqHash> ids_;
};

struct IndexEntry {
    std::uint32_t hub_aid;
    MrId mr;

    friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
    friend auto operator<=>(const IndexEntry&, const IndexEntry&) = default;
};

using EntryList = std::vector<IndexEntry>;

class RlcIndex {
public:
    RlcIndex() = default;

    RlcIndex(unsigned k, VertexOrder order, std::vector<std::string> label_names, std::vector<std::string> vertex_names)
        : k_(k),
          order_(std::move(order)),
          label_names_(std::move(label_names)),
          vertex_names_(std::move(vertex_names)),
          l_in_(order_.size()),
          l_out_(order_.size()) {
        if (vertex_names_.size() != order_.size()) throw Error(Errc::corrupt_index, "vertex name count differs from n");
        for (std::size_t i = 0; i < label_names_.size(); ++i) label_ids_.emplace(label_names_[i], static_cast<Label>(i));
        for (std::size_t i = 0; i < vertex_names_.size(); ++i) vertex_ids_.emplace(vertex_names_[i], static_cast<VertexId>(i));
    }

    /// Empty index over the vertices and labels of g.
    RlcIndex(unsigned k, const Graph& g, VertexOrder order)
        : RlcIndex(k, std::move(order), g.label_names().names(), g.vertex_names().names()) {}

    unsigned k() const noexcept { return k_; }
    std::size_t num_vertices() const noexcept { return order_.size(); }
    std::size_t num_labels() const noexcept { return label_names_.size(); }
    const VertexOrder& order() const noexcept { return order_; }
    const MrDictionary& dictionary() const noexcept { return dict_; }
    MrDictionary& dictionary() noexcept { return dict_; }

    const EntryList& l_in(VertexId v) const { return l_in_[v]; }
    const EntryList& l_out(VertexId v) const { return l_out_[v]; }
    EntryList& l_in(VertexId v) { return l_in_[v]; }
    EntryList& l_out(VertexId v) { return l_out_[v]; }

    const std::vector<std::string>& label_names() const noexcept { return label_names_; }
    const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }

    VertexId vertex(std::string_view name) const {
        if (auto it = vertex_ids_.find(std::string(name)); it != vertex_ids_.end()) return it->second;
        throw Error(Errc::not_found, "unknown vertex '" + std::string(name) + "'");
    }
    Label label(std::string_view name) const {
        if (auto it = label_ids_.find(std::string(name)); it != label_ids_.end()) return it->second;
        throw Error(Errc::not_found, "unknown label '" + std::string(name) + "'");
    }
    LabelSeq labels_from_string(std::string_view text) const {
        LabelSeq seq;
        std::size_t pos = 0;
        while (pos < text.size()) {
            const auto start = text.find_first_not_of(" \t", pos);
            if (start == std::string_view::npos) break;
            auto stop = text.find_first_of(" \t", start);
            if (stop == std::string_view::npos) stop = text.size();
            seq.push_back(label(text.substr(start, stop - start)));
            pos = stop;
        }
        return seq;
    }

    /// Inserts keeping the list sorted; returns false if already present.
    static bool insert_sorted(EntryList& list, IndexEntry e) {
        auto it = std::lower_bound(list.begin(), list.end(), e);
        if (it != list.end() && *it == e) return false;
        list.insert(it, e);
        return true;
    }

    static bool contains(const EntryList& list, IndexEntry e) {
        return std::binary_search(list.begin(), list.end(), e);
    }

    /// Both query cases for an already-interned minimum repeat.
    bool query_mr(VertexId s, VertexId t, MrId mr) const {
        const EntryList& out = l_out_[s];
        const EntryList& in = l_in_[t];
        if (contains(out, {order_.aid(t), mr}) || contains(in, {order_.aid(s), mr})) return true;
        auto a = out.begin();
        auto b = in.begin();
        while (true) {
            while (a != out.end() && a->mr != mr) ++a;
            while (b != in.end() && b->mr != mr) ++b;
            if (a == out.end() || b == in.end()) return false;
            if (a->hub_aid == b->hub_aid) return true;
            if (a->hub_aid < b->hub_aid) {
                ++a;
            } else {
                ++b;
            }
        }
    }

    std::size_t total_entries() const noexcept {
        std::size_t total = 0;
        for (const auto& l : l_in_) total += l.size();
        for (const auto& l : l_out_) total += l.size();
        return total;
    }

    friend bool operator==(const RlcIndex& a, const RlcIndex& b) {
        return a.k_ == b.k_ && a.order_ == b.order_ && a.dict_ == b.dict_ && a.label_names_ == b.label_names_ &&
               a.vertex_names_ == b.vertex_names_ && a.l_in_ == b.l_in_ && a.l_out_ == b.l_out_;
    }

private:
    unsigned k_ = 1;
    VertexOrder order_;
    MrDictionary dict_;
    std::vector<std::string> label_names_;
    std::vector<std::string> vertex_names_;
    std::unordered_map<std::string, Label> label_ids_;
    std::unordered_map<std::string, VertexId> vertex_ids_;
    std::vector<EntryList> l_in_;
    std::vector<EntryList> l_out_;
};

namespace detail {

inline void check_vertex(const RlcIndex& idx, VertexId v) {
    if (v >= idx.num_vertices()) throw Error(Errc::not_found, "vertex id " + std::to_string(v) + " out of range");
}

inline void check_constraint(const RlcIndex& idx, const LabelSeq& L) {
    if (L.empty()) throw Error(Errc::invalid_sequence, "empty constraint");
    for (Label l : L) {
        if (l >= idx.num_labels()) throw Error(Errc::not_found, "label id " + std::to_string(l) + " out of range");
    }
    if (L.size() > idx.k()) {
        throw Error(Errc::unsupported_constraint,
                    "constraint length " + std::to_string(L.size()) + " exceeds index k=" + std::to_string(idx.k()));
    }
    if (!is_primitive(L)) throw Error(Errc::non_primitive_constraint, "constraint is not a minimum repeat");
}

}  // namespace detail

/// Does s reach t along a path labeled L^z for some z >= 1?
inline bool query(const RlcIndex& idx, VertexId s, VertexId t, const LabelSeq& L) {
    detail::check_vertex(idx, s);
    detail::check_vertex(idx, t);
    detail::check_constraint(idx, L);
    const auto mr = idx.dictionary().find(L);
    return mr && idx.query_mr(s, t, *mr);
}

/// Kleene-star variant: the empty path counts when s == t.
inline bool query_star(const RlcIndex& idx, VertexId s, VertexId t, const LabelSeq& L) {
    const bool answer = query(idx, s, t, L);
    return s == t || answer;
}

/// Every primitive L (|L| <= k) with query(idx, s, t, L) true.
inline std::set<LabelSeq> concise_set(const RlcIndex& idx, VertexId s, VertexId t) {
    detail::check_vertex(idx, s);
    detail::check_vertex(idx, t);
    std::set<LabelSeq> out;
    const EntryList& lo = idx.l_out(s);
    const EntryList& li = idx.l_in(t);
    const auto aid_s = idx.order().aid(s);
    const auto aid_t = idx.order().aid(t);
    for (const auto& e : lo) {
        if (e.hub_aid == aid_t) out.insert(idx.dictionary().at(e.mr));
    }
    for (const auto& e : li) {
        if (e.hub_aid == aid_s) out.insert(idx.dictionary().at(e.mr));
    }
    // Both lists are sorted by (hub, mr): intersecting on the full key
    // yields exactly the same-hub, same-repeat pairs.
    auto a = lo.begin();
    auto b = li.begin();
    while (a != lo.end() && b != li.end()) {
        if (*a == *b) {
            out.insert(idx.dictionary().at(a->mr));
            ++a;
            ++b;
        } else if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return out;
}

/// One violation of the condensed property: `entry` on the `in_list` side of
/// `owner` is also certified through `hub_aid`.
struct CondensedViolation {
    VertexId owner;
    bool in_list;
    IndexEntry entry;
    std::uint32_t hub_aid;
};

/// Scans for entries (s, L) in L_in(t) or (t, L) in L_out(s) that are
/// redundant because some hub u has (u, L) in L_out(s) and (u, L) in L_in(t).
/// The entry itself is not counted as its own witness.
inline std::vector<CondensedViolation> condensed_violations(const RlcIndex& idx) {
    std::vector<CondensedViolation> found;
    const auto& order = idx.order();
    auto witness = [&](VertexId s, VertexId t, MrId mr, std::uint32_t exclude_in_hub,
                       std::uint32_t exclude_out_hub) -> std::optional<std::uint32_t> {
        const EntryList& out = idx.l_out(s);
        const EntryList& in = idx.l_in(t);
        auto a = out.begin();
        auto b = in.begin();
        while (a != out.end() && b != in.end()) {
            if (*a == *b) {
                if (a->mr == mr && a->hub_aid != exclude_in_hub && a->hub_aid != exclude_out_hub) return a->hub_aid;
                ++a;
                ++b;
            } else if (*a < *b) {
                ++a;
            } else {
                ++b;
            }
        }
        return std::nullopt;
    };
    for (VertexId t = 0; t < idx.num_vertices(); ++t) {
        for (const auto& e : idx.l_in(t)) {
            const VertexId s = order.vertex_at(e.hub_aid);
            // The pair ((s,L) in L_out(s), (s,L) in L_in(t)) uses the entry itself.
            if (auto w = witness(s, t, e.mr, e.hub_aid, 0)) found.push_back({t, true, e, *w});
        }
    }
    for (VertexId s = 0; s < idx.num_vertices(); ++s) {
        for (const auto& e : idx.l_out(s)) {
            const VertexId t = order.vertex_at(e.hub_aid);
            if (auto w = witness(s, t, e.mr, 0, e.hub_aid)) found.push_back({s, false, e, *w});
        }
    }
    return found;
}

struct IndexStats {
    std::size_t total_entries = 0;
    std::size_t in_entries = 0;
    std::size_t out_entries = 0;
    std::size_t dictionary_size = 0;
    std::size_t serialized_bytes = 0;
};

}  // namespace rlc
