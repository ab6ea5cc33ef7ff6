#pragma once

// Query sets with known answers, and their CSV form:
//
//   # graph=<id>
//   # length=<|L|>
//   # seed=<seed>
//   s,t,labels,expected
//   v3,v6,l2 l1,true
//
// Labels are space separated. Fields holding ',' or '"' are quoted.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rlc/baselines.hpp"
#include "rlc/error.hpp"
#include "rlc/graph.hpp"
#include "rlc/label_seq.hpp"
#include "rlc/log.hpp"
#include "rlc/random.hpp"

namespace rlc {

struct WorkloadQuery {
    VertexId s;
    VertexId t;
    LabelSeq labels;
    bool expected;

    friend bool operator==(const WorkloadQuery&, const WorkloadQuery&) = default;
};

struct Workload {
    std::string graph_id;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    std::vector<WorkloadQuery> queries;  // true queries first

    std::size_t count(bool expected) const {
        std::size_t c = 0;
        for (const auto& q : queries) c += q.expected == expected;
        return c;
    }
};

struct WorkloadParams {
    std::size_t length = 2;
    std::size_t n_true = 1000;
    std::size_t n_false = 1000;
    std::uint64_t seed = 1;
    std::uint64_t step_cap = 10'000'000;  // BiBFS expansions per probe
    std::uint64_t draw_budget = 0;        // 0: 1000 * (n_true + n_false) + 100000
    std::string graph_id;
};

/// Draws (s, t, L) uniformly, L over primitive sequences of the given length,
/// and keeps each draw whose BiBFS class still has room.
inline Workload generate_workload(const Graph& g, const WorkloadParams& p) {
    if (p.length == 0) throw Error(Errc::invalid_sequence, "constraint length must be positive");
    const std::uint64_t budget = p.draw_budget != 0 ? p.draw_budget : 1000 * (p.n_true + p.n_false) + 100000;
    Workload w{p.graph_id, p.length, p.seed, {}};
    const std::size_t wanted = p.n_true + p.n_false;
    if (wanted == 0) return w;
    if (g.num_vertices() == 0 || g.num_labels() == 0) {
        throw Error(Errc::unsatisfiable_workload, "graph has no vertices or no labels");
    }

    Xoshiro256 rng(p.seed);
    BiBfs bfs(g);
    std::vector<WorkloadQuery> yes, no;
    std::vector<Label> buf(p.length);
    std::uint64_t capped = 0;
    for (std::uint64_t draw = 0; yes.size() < p.n_true || no.size() < p.n_false; ++draw) {
        if (draw == budget) {
            throw Error(Errc::unsatisfiable_workload,
                        "draw budget " + std::to_string(budget) + " exhausted with " + std::to_string(yes.size()) +
                            "/" + std::to_string(p.n_true) + " true and " + std::to_string(no.size()) + "/" +
                            std::to_string(p.n_false) + " false queries");
        }
        const auto s = static_cast<VertexId>(rng.below(g.num_vertices()));
        const auto t = static_cast<VertexId>(rng.below(g.num_vertices()));
        for (auto& l : buf) l = static_cast<Label>(rng.below(g.num_labels()));
        LabelSeq L(buf);
        if (!is_primitive(L)) continue;
        const auto answer = bfs.run(s, t, L, p.step_cap);
        if (!answer) {
            ++capped;
            log::debug("workload: probe ", g.vertex_name(s), " -> ", g.vertex_name(t), " hit the step cap");
            continue;
        }
        auto& bucket = *answer ? yes : no;
        if (bucket.size() < (*answer ? p.n_true : p.n_false)) bucket.push_back({s, t, std::move(L), *answer});
    }
    if (capped > 0) log::info("workload: ", capped, " probes discarded at the step cap");
    w.queries = std::move(yes);
    w.queries.insert(w.queries.end(), no.begin(), no.end());
    return w;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline std::vector<std::string> csv_split(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw ParseError(line_no, "unterminated quote");
    return fields;
}

}  // namespace detail

inline void write_workload(const Workload& w, const std::vector<std::string>& vertex_names,
                           const std::vector<std::string>& label_names, std::ostream& out) {
    out << "# graph=" << w.graph_id << '\n';
    out << "# length=" << w.length << '\n';
    out << "# seed=" << w.seed << '\n';
    out << "s,t,labels,expected\n";
    for (const auto& q : w.queries) {
        std::string labels;
        for (Label l : q.labels) {
            if (!labels.empty()) labels += ' ';
            labels += label_names.at(l);
        }
        out << detail::csv_field(vertex_names.at(q.s)) << ',' << detail::csv_field(vertex_names.at(q.t)) << ','
            << detail::csv_field(labels) << ',' << (q.expected ? "true" : "false") << '\n';
    }
}

/// Resolves names through `names.vertex(...)` and `names.labels_from_string(...)`.
template <class Names>
Workload read_workload(std::istream& in, const Names& names) {
    Workload w;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string_view meta = std::string_view(line).substr(1);
            const auto start = meta.find_first_not_of(' ');
            if (start == std::string_view::npos) continue;
            const auto kv = meta.substr(start);
            const auto eq = kv.find('=');
            if (eq == std::string_view::npos) continue;
            const auto key = kv.substr(0, eq);
            const std::string value(kv.substr(eq + 1));
            try {
                if (key == "graph") w.graph_id = value;
                if (key == "length") w.length = std::stoull(value);
                if (key == "seed") w.seed = std::stoull(value);
            } catch (const std::logic_error&) {
                throw ParseError(line_no, "bad metadata value '" + value + "'");
            }
            continue;
        }
        if (!header) {
            if (line != "s,t,labels,expected") throw ParseError(line_no, "expected header s,t,labels,expected");
            header = true;
            continue;
        }
        const auto f = detail::csv_split(line, line_no);
        if (f.size() != 4) throw ParseError(line_no, "expected 4 fields, got " + std::to_string(f.size()));
        if (f[3] != "true" && f[3] != "false") throw ParseError(line_no, "expected must be true or false");
        w.queries.push_back({names.vertex(f[0]), names.vertex(f[1]), names.labels_from_string(f[2]), f[3] == "true"});
    }
    if (!header) throw ParseError(line_no, "missing header line");
    return w;
}

}  // namespace rlc
