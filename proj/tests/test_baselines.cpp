#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace rlc;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no rlc::Error thrown");
    return Errc::overflow;
}

}  // namespace

TEST_CASE("NFA-BFS on the social network", "[baselines]") {
    const Graph g = test::transfers();
    CHECK(nfa_bfs(g, g.vertex("A14"), g.vertex("A19"), g.labels_from_string("debits credits")));
    CHECK_FALSE(nfa_bfs(g, g.vertex("P10"), g.vertex("P13"), g.labels_from_string("knows knows worksFor")));
    CHECK(bibfs(g, g.vertex("A14"), g.vertex("A19"), g.labels_from_string("debits credits")));
    CHECK_FALSE(bibfs(g, g.vertex("P10"), g.vertex("P13"), g.labels_from_string("knows knows worksFor")));
}

TEST_CASE("zero-length paths do not count", "[baselines]") {
    GraphBuilder b;
    b.add_vertex("x");
    b.add_label("a");
    const Graph g = std::move(b).build();
    CHECK_FALSE(nfa_bfs(g, 0, 0, {0}));
    CHECK_FALSE(bibfs(g, 0, 0, {0}));

    const Graph cycle = test::from_text("x y a\ny x b\n");
    CHECK(nfa_bfs(cycle, 0, 0, {0, 1}));
    CHECK(bibfs(cycle, 0, 0, {0, 1}));
    CHECK_FALSE(nfa_bfs(cycle, 0, 0, {1, 0}));
    CHECK_FALSE(bibfs(cycle, 0, 0, {1, 0}));
    CHECK_FALSE(nfa_bfs(cycle, 0, 0, {0}));
}

TEST_CASE("baseline argument errors", "[baselines]") {
    const Graph g = test::six();
    CHECK(code_of([&] { nfa_bfs(g, 0, 1, {0, 0}); }) == Errc::non_primitive_constraint);
    CHECK(code_of([&] { bibfs(g, 0, 1, {0, 0}); }) == Errc::non_primitive_constraint);
    CHECK(code_of([&] { nfa_bfs(g, 0, 42, {0}); }) == Errc::not_found);
    CHECK(code_of([&] { bibfs(g, 0, 1, {9}); }) == Errc::not_found);
    CHECK(code_of([&] { nfa_bfs(g, 0, 1, {}); }) == Errc::invalid_sequence);
}

TEST_CASE("BiBFS agrees with NFA-BFS exhaustively on the example", "[baselines]") {
    const Graph g = test::six();
    for_each_primitive(3, 2, [&](const LabelSeq& L) {
        for (VertexId s = 0; s < g.num_vertices(); ++s) {
            for (VertexId t = 0; t < g.num_vertices(); ++t) CHECK(bibfs(g, s, t, L) == nfa_bfs(g, s, t, L));
        }
    });
}

TEST_CASE("BiBFS agrees with NFA-BFS on random graphs", "[baselines][property]") {
    Xoshiro256 rng(8);
    for (int i = 0; i < 100; ++i) {
        const Graph g = test::random_graph(rng, 20, 5, 3);
        NfaBfs nfa(g);
        BiBfs bi(g);
        for_each_primitive(static_cast<std::uint32_t>(g.num_labels()), 3, [&](const LabelSeq& L) {
            for (VertexId s = 0; s < g.num_vertices(); ++s) {
                for (VertexId t = 0; t < g.num_vertices(); ++t) {
                    const bool want = *nfa.run(s, t, L);
                    REQUIRE(nfa.last_expansions() <= g.num_vertices() * L.size());
                    REQUIRE(*bi.run(s, t, L) == want);
                }
            }
        });
    }
}

TEST_CASE("step cap", "[baselines]") {
    const Graph g = generate_er(2000, 4, 1, 2.0, 1);
    NfaBfs nfa(g);
    BiBfs bi(g);
    // Five expansions cannot settle a random pair in a 2000-vertex graph.
    CHECK_FALSE(nfa.run(0, 1, {0}, 5).has_value());
    CHECK(nfa.run(0, 1, {0}).has_value());
    CHECK(bi.run(0, 1, {0}).has_value());
}

TEST_CASE("ETC on the example", "[baselines][etc]") {
    const Graph g = test::six();
    const EtcIndex etc = build_etc(g, 2);
    const VertexId v1 = g.vertex("v1"), v3 = g.vertex("v3"), v6 = g.vertex("v6");

    std::set<LabelSeq> s36;
    for (const auto& [t, id] : etc.rows[v3]) {
        if (t == v6) s36.insert(etc.dict.at(id));
    }
    CHECK(s36 == std::set<LabelSeq>{g.labels_from_string("l1"), g.labels_from_string("l2 l1"),
                                    g.labels_from_string("l2 l3")});
    CHECK(s36 == oracle_concise_set(g, v3, v6, 2));

    CHECK(etc_query(etc, v3, v6, g.labels_from_string("l2 l1")));
    CHECK_FALSE(etc_query(etc, v1, v3, g.labels_from_string("l1")));
    CHECK_FALSE(etc_query(etc, v6, v1, g.labels_from_string("l1")));
    CHECK(code_of([&] { etc_query(etc, v1, v3, {0, 1, 2}); }) == Errc::unsupported_constraint);
    CHECK(code_of([&] { etc_query(etc, v1, v3, {1, 1}); }) == Errc::non_primitive_constraint);

    GraphBuilder b;
    b.add_vertex("a");
    b.add_label("x");
    CHECK(build_etc(std::move(b).build(), 2).total_records() == 0);

    CHECK(code_of([&] { build_etc(g, 2, 5); }) == Errc::index_build_failure);
}

TEST_CASE("ETC agrees with NFA-BFS on random 20-vertex graphs", "[baselines][etc][property]") {
    Xoshiro256 rng(21);
    for (int i = 0; i < 50; ++i) {
        const Graph g = generate_er(20, 1 + 3 * rng.unit(), 1 + static_cast<std::uint32_t>(rng.below(3)), 1.0, rng());
        const unsigned k = 1 + static_cast<unsigned>(rng.below(3));
        const EtcIndex etc = build_etc(g, k);
        NfaBfs nfa(g);
        for_each_primitive(static_cast<std::uint32_t>(g.num_labels()), k, [&](const LabelSeq& L) {
            for (VertexId s = 0; s < 20; ++s) {
                for (VertexId t = 0; t < 20; ++t) REQUIRE(etc_query(etc, s, t, L) == *nfa.run(s, t, L));
            }
        });
    }
}

TEST_CASE("oracle concise set", "[baselines]") {
    const Graph g = test::transfers();
    CHECK(oracle_concise_set(g, g.vertex("P12"), g.vertex("P16"), 2) ==
          std::set<LabelSeq>{g.labels_from_string("knows"), g.labels_from_string("knows worksFor")});
    CHECK(oracle_concise_set(g, g.vertex("A19"), g.vertex("P10"), 2).empty());

    const Graph wide = generate_er(10, 1, 40, 1.0, 1);
    CHECK(code_of([&] { oracle_concise_set(wide, 0, 1, 4); }) == Errc::candidate_space_too_large);
}
