// Build an index over the six-vertex example graph and ask a few questions.

#include <fstream>
#include <iostream>

#include "rlc/rlc.hpp"

int main() {
    std::ifstream in(RLC_DATA_DIR "/six.el");
    const rlc::Graph g = rlc::load_edge_list(in);
    const rlc::RlcIndex idx = rlc::build_index(g, 2);

    struct Ask {
        const char *s, *t, *labels;
    };
    for (const Ask& q : {Ask{"v3", "v6", "l2 l1"}, Ask{"v1", "v2", "l2 l1"}, Ask{"v1", "v3", "l1"}}) {
        const bool yes = rlc::query(idx, g.vertex(q.s), g.vertex(q.t), g.labels_from_string(q.labels));
        std::cout << q.s << " -> " << q.t << " under (" << q.labels << ")+ : " << (yes ? "true" : "false") << '\n';
    }

    // Everything v3 can reach v6 with, up to k = 2.
    std::cout << "concise set (v3, v6):";
    for (const auto& L : rlc::concise_set(idx, g.vertex("v3"), g.vertex("v6"))) {
        std::cout << " (" << g.labels_to_string(L) << ")";
    }
    std::cout << '\n' << idx.total_entries() << " index entries\n";
}
