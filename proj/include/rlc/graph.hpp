#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rlc/error.hpp"
#include "rlc/label_seq.hpp"

namespace rlc {

using VertexId = std::uint32_t;

/// One adjacency record: the neighbour on the far side and the edge label.
struct Arc {
    VertexId vertex;
    Label label;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Bidirectional map between external names and dense ids.
class NameTable {
public:
    std::uint32_t intern(std::string_view name) {
        auto it = ids_.find(std::string(name));
        if (it != ids_.end()) return it->second;
        const auto id = static_cast<std::uint32_t>(names_.size());
        names_.emplace_back(name);
        ids_.emplace(names_.back(), id);
        return id;
    }

    std::optional<std::uint32_t> find(std::string_view name) const {
        auto it = ids_.find(std::string(name));
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& name(std::uint32_t id) const { return names_.at(id); }
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> ids_;
};

/// Immutable edge-labeled directed multigraph in CSR form. Both adjacency
/// directions are sorted by (neighbour, label) and hold each edge once.
class Graph {
public:
    Graph() : out_offsets_(1, 0), in_offsets_(1, 0) {}

    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    std::size_t num_edges() const noexcept { return out_arcs_.size(); }
    std::size_t num_labels() const noexcept { return labels_.size(); }

    std::span<const Arc> out(VertexId v) const {
        return {out_arcs_.data() + out_offsets_[v], out_arcs_.data() + out_offsets_[v + 1]};
    }
    std::span<const Arc> in(VertexId v) const {
        return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
    }
    std::size_t out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

    bool has_edge(VertexId u, VertexId v, Label l) const {
        auto arcs = out(u);
        return std::binary_search(arcs.begin(), arcs.end(), Arc{v, l});
    }
    bool has_any_edge(VertexId u, VertexId v) const {
        auto arcs = out(u);
        auto it = std::lower_bound(arcs.begin(), arcs.end(), Arc{v, 0});
        return it != arcs.end() && it->vertex == v;
    }

    const NameTable& vertex_names() const noexcept { return vertices_; }
    const NameTable& label_names() const noexcept { return labels_; }
    const std::string& vertex_name(VertexId v) const { return vertices_.name(v); }
    const std::string& label_name(Label l) const { return labels_.name(l); }

    VertexId vertex(std::string_view name) const {
        if (auto id = vertices_.find(name)) return *id;
        throw Error(Errc::not_found, "unknown vertex '" + std::string(name) + "'");
    }
    Label label(std::string_view name) const {
        if (auto id = labels_.find(name)) return *id;
        throw Error(Errc::not_found, "unknown label '" + std::string(name) + "'");
    }

    /// Parses a whitespace-separated list of label names.
    LabelSeq labels_from_string(std::string_view text) const {
        std::istringstream in{std::string(text)};
        LabelSeq seq;
        for (std::string tok; in >> tok;) seq.push_back(label(tok));
        return seq;
    }

    std::string labels_to_string(const LabelSeq& seq) const {
        std::string out;
        for (Label l : seq) {
            if (!out.empty()) out += ' ';
            out += label_name(l);
        }
        return out;
    }

private:
    friend class GraphBuilder;

    NameTable vertices_;
    NameTable labels_;
    std::vector<std::size_t> out_offsets_;
    std::vector<Arc> out_arcs_;
    std::vector<std::size_t> in_offsets_;
    std::vector<Arc> in_arcs_;
};

class GraphBuilder {
public:
    VertexId add_vertex(std::string_view name) { return vertices_.intern(name); }
    Label add_label(std::string_view name) { return labels_.intern(name); }

    void add_edge(VertexId u, VertexId v, Label l) { edges_.push_back({u, v, l}); }
    void add_edge(std::string_view u, std::string_view v, std::string_view l) {
        const VertexId su = add_vertex(u);
        const VertexId sv = add_vertex(v);
        add_edge(su, sv, add_label(l));
    }

    std::size_t num_vertices() const noexcept { return vertices_.size(); }

    /// Sorts, drops duplicate (src, dst, label) triples, builds both CSR sides.
    Graph build() && {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

        Graph g;
        const std::size_t n = vertices_.size();
        for (const auto& e : edges_) {
            if (e.src >= n || e.dst >= n || e.label >= labels_.size()) {
                throw Error(Errc::not_found, "edge references an undeclared vertex or label");
            }
        }
        g.vertices_ = std::move(vertices_);
        g.labels_ = std::move(labels_);

        g.out_offsets_.assign(n + 1, 0);
        g.in_offsets_.assign(n + 1, 0);
        for (const auto& e : edges_) {
            ++g.out_offsets_[e.src + 1];
            ++g.in_offsets_[e.dst + 1];
        }
        std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
        std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(), g.in_offsets_.begin());

        g.out_arcs_.resize(edges_.size());
        g.in_arcs_.resize(edges_.size());
        std::vector<std::size_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
        std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
        // edges_ is sorted by (src, dst, label): out lists come out sorted and
        // in lists come out sorted by (src, label) for each dst.
        for (const auto& e : edges_) {
            g.out_arcs_[out_fill[e.src]++] = Arc{e.dst, e.label};
            g.in_arcs_[in_fill[e.dst]++] = Arc{e.src, e.label};
        }
        edges_.clear();
        return g;
    }

private:
    struct Edge {
        VertexId src;
        VertexId dst;
        Label label;
        friend auto operator<=>(const Edge&, const Edge&) = default;
    };

    NameTable vertices_;
    NameTable labels_;
    std::vector<Edge> edges_;
};

/// Reads "<src> <dst> <label>" lines. '#' starts a comment line; blank lines
/// are skipped. Vertices and labels get dense ids in first-seen order.
inline Graph load_edge_list(std::istream& in) {
    GraphBuilder b;
    std::string line;
    std::size_t lineno = 0;
    std::size_t edges = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string src, dst, label, extra;
        if (!(fields >> src >> dst >> label)) {
            throw ParseError(lineno, "expected '<src> <dst> <label>'");
        }
        if (fields >> extra) throw ParseError(lineno, "unexpected trailing field '" + extra + "'");
        b.add_edge(src, dst, label);
        ++edges;
    }
    if (edges == 0) throw Error(Errc::empty_graph, "edge list contains no edges");
    return std::move(b).build();
}

/// Writes the graph in the edge-list format, one line per edge in
/// (src, dst, label) internal-id order, preceded by '#' header lines.
inline void write_edge_list(const Graph& g, std::ostream& out, std::span<const std::string> header = {}) {
    out << "# n=" << g.num_vertices() << " edges=" << g.num_edges() << " labels=" << g.num_labels() << '\n';
    for (const auto& h : header) out << "# " << h << '\n';
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (const Arc& a : g.out(u)) {
            out << g.vertex_name(u) << ' ' << g.vertex_name(a.vertex) << ' ' << g.label_name(a.label) << '\n';
        }
    }
}

/// 64-bit FNV-1a over the edges as names, in internal order, as 16 hex
/// digits. Independent of the file the graph came from.
inline std::string graph_fingerprint(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        h ^= 0xff;  // separator, so ("ab","c") and ("a","bc") differ
        h *= 0x100000001b3ULL;
    };
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (const Arc& a : g.out(u)) {
            mix(g.vertex_name(u));
            mix(g.vertex_name(a.vertex));
            mix(g.label_name(a.label));
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Bijection between vertices and access ids 1..n.
class VertexOrder {
public:
    VertexOrder() = default;

    /// `ranked[i]` is the vertex with access id i + 1.
    explicit VertexOrder(std::vector<VertexId> ranked) : by_aid_(std::move(ranked)), aid_(by_aid_.size(), 0) {
        for (std::size_t i = 0; i < by_aid_.size(); ++i) {
            const VertexId v = by_aid_[i];
            if (v >= aid_.size() || aid_[v] != 0) throw Error(Errc::corrupt_index, "vertex order is not a bijection");
            aid_[v] = static_cast<std::uint32_t>(i + 1);
        }
    }

    std::size_t size() const noexcept { return by_aid_.size(); }
    std::uint32_t aid(VertexId v) const { return aid_[v]; }
    VertexId vertex_at(std::uint32_t aid) const { return by_aid_[aid - 1]; }
    const std::vector<VertexId>& ranked() const noexcept { return by_aid_; }

    friend bool operator==(const VertexOrder& a, const VertexOrder& b) { return a.by_aid_ == b.by_aid_; }

private:
    std::vector<VertexId> by_aid_;
    std::vector<std::uint32_t> aid_;
};

/// Descending (out_degree + 1) * (in_degree + 1); ties by ascending id.
inline VertexOrder in_out_order(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::uint64_t> score(n);
    for (VertexId v = 0; v < n; ++v) {
        score[v] = (static_cast<std::uint64_t>(g.out_degree(v)) + 1) * (static_cast<std::uint64_t>(g.in_degree(v)) + 1);
    }
    std::vector<VertexId> ranked(n);
    std::iota(ranked.begin(), ranked.end(), VertexId{0});
    std::sort(ranked.begin(), ranked.end(), [&](VertexId a, VertexId b) {
        return score[a] != score[b] ? score[a] > score[b] : a < b;
    });
    return VertexOrder(std::move(ranked));
}

struct GraphStats {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t labels = 0;
    std::size_t self_loops = 0;
    std::uint64_t triangles = 0;  ///< directed 3-cycles over distinct vertices, labels ignored

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

inline GraphStats graph_stats(const Graph& g) {
    GraphStats s{g.num_vertices(), g.num_edges(), g.num_labels(), 0, 0};
    std::uint64_t cycles = 0;
    for (VertexId a = 0; a < g.num_vertices(); ++a) {
        VertexId prev_b = VertexId(-1);
        for (const Arc& ab : g.out(a)) {
            if (ab.vertex == a) {
                ++s.self_loops;
                continue;
            }
            if (ab.vertex == prev_b) continue;
            prev_b = ab.vertex;
            const VertexId b = ab.vertex;
            VertexId prev_c = VertexId(-1);
            for (const Arc& bc : g.out(b)) {
                const VertexId c = bc.vertex;
                if (c == prev_c || c == a || c == b) continue;
                prev_c = c;
                if (g.has_any_edge(c, a)) ++cycles;
            }
        }
    }
    s.triangles = cycles / 3;
    return s;
}

}  // namespace rlc
