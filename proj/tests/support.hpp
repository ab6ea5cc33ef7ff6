#pragma once

// Shared fixtures and brute-force oracles for the test suites.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlc/rlc.hpp"

namespace rlc::test {

inline Graph load_data(const std::string& file) {
    std::ifstream in(std::string(RLC_DATA_DIR) + "/" + file);
    if (!in) throw std::runtime_error("missing data file " + file);
    return load_edge_list(in);
}

inline Graph transfers() { return load_data("transfers.el"); }
inline Graph six() { return load_data("six.el"); }

inline Graph from_text(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

/// Calls fn on every sequence of length 1..max_len over `alphabet` labels.
template <class Fn>
void all_sequences(std::uint32_t alphabet, std::size_t max_len, Fn fn) {
    std::vector<Label> digits;
    for (std::size_t len = 1; len <= max_len; ++len) {
        digits.assign(len, 0);
        while (true) {
            fn(LabelSeq(digits));
            std::size_t pos = len;
            while (pos > 0 && ++digits[pos - 1] == alphabet) digits[--pos] = 0;
            if (pos == 0) break;
        }
    }
}

/// Shortest d dividing n with seq == (prefix d)^(n/d), found by trying every d.
inline LabelSeq brute_mr(const LabelSeq& seq) {
    const std::size_t n = seq.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        if (seq.prefix(d).repeat(n / d) == seq) return seq.prefix(d);
    }
    return seq;
}

struct BruteKernel {
    LabelSeq kernel, tail;
    std::size_t h;
};

/// Every (kernel, h >= 2, tail) split with a primitive kernel and a tail that
/// is a proper prefix of the kernel.
inline std::vector<BruteKernel> brute_kernels(const LabelSeq& seq) {
    std::vector<BruteKernel> out;
    const std::size_t n = seq.size();
    for (std::size_t q = 1; 2 * q <= n; ++q) {
        const LabelSeq kernel = seq.prefix(q);
        if (brute_mr(kernel) != kernel) continue;
        for (std::size_t h = 2; h * q <= n; ++h) {
            const std::size_t rest = n - h * q;
            if (rest >= q) continue;
            const LabelSeq tail = seq.suffix(rest);
            if (tail != kernel.prefix(rest)) continue;
            if (kernel.repeat(h) + tail == seq) out.push_back({kernel, tail, h});
        }
    }
    return out;
}

/// One line per entry: "<owner> in|out <hub> <labels>".
inline std::vector<std::string> entry_lines(const RlcIndex& idx) {
    std::vector<std::string> out;
    auto emit = [&](VertexId owner, const char* side, const EntryList& list) {
        for (const auto& e : list) {
            std::string labels;
            for (Label l : idx.dictionary().at(e.mr)) labels += (labels.empty() ? "" : " ") + idx.label_names()[l];
            out.push_back(idx.vertex_names()[owner] + ' ' + side + ' ' +
                          idx.vertex_names()[idx.order().vertex_at(e.hub_aid)] + ' ' + labels);
        }
    };
    for (VertexId v = 0; v < idx.num_vertices(); ++v) {
        emit(v, "in", idx.l_in(v));
        emit(v, "out", idx.l_out(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Expected k = 2 index of the six-vertex example.
inline std::vector<std::string> six_table() {
    std::vector<std::string> t = {
        "v1 out v1 l2",    "v1 out v1 l1",    "v1 out v1 l2 l1",
        "v2 in v1 l1",     "v2 in v1 l2 l1",  "v2 out v1 l2 l1", "v2 out v1 l1",
        "v3 in v1 l2",     "v3 in v1 l1 l2",  "v3 out v1 l2",    "v3 out v1 l2 l1", "v3 out v1 l1", "v3 out v3 l1 l2",
        "v4 in v1 l2",     "v4 out v1 l1",    "v4 out v3 l1 l2",
        "v5 in v1 l1 l2",  "v5 in v1 l1",     "v5 in v3 l1 l2",  "v5 in v2 l2",
        "v5 out v1 l1",    "v5 out v3 l1 l2",
        "v6 in v1 l2 l1",  "v6 in v3 l1",     "v6 in v3 l2 l3",  "v6 in v4 l3",
    };
    std::sort(t.begin(), t.end());
    return t;
}

/// Random ER graph for property suites.
inline Graph random_graph(Xoshiro256& rng, std::uint32_t n_max, double deg_max, std::uint32_t labels_max) {
    const auto n = static_cast<std::uint32_t>(1 + rng.below(n_max));
    const auto labels = static_cast<std::uint32_t>(1 + rng.below(labels_max));
    const double deg = std::min(deg_max * rng.unit(), static_cast<double>(n) * labels);
    return generate_er(n, deg, labels, 1.0, rng());
}

}  // namespace rlc::test
