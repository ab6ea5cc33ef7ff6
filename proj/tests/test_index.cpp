#include <catch_amalgamated.hpp>

#include <sstream>

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

struct SixGraph {
    Graph g = test::six();
    RlcIndex idx = build_index(g, 2);

    bool q(const char* s, const char* t, const char* labels) const {
        return query(idx, g.vertex(s), g.vertex(t), g.labels_from_string(labels));
    }
};

std::vector<std::uint8_t> corrupt(std::vector<std::uint8_t> bytes, std::size_t at, std::uint8_t value) {
    bytes.at(at) = value;
    return bytes;
}

}  // namespace

TEST_CASE("worked queries", "[index]") {
    const SixGraph f;
    CHECK(f.q("v3", "v6", "l2 l1"));
    CHECK(f.q("v1", "v2", "l2 l1"));
    CHECK_FALSE(f.q("v1", "v3", "l1"));
}

TEST_CASE("query argument errors", "[index]") {
    const SixGraph f;
    const VertexId v1 = f.g.vertex("v1");
    CHECK(code_of([&] { query(f.idx, v1, v1, {}); }) == Errc::invalid_sequence);
    CHECK(code_of([&] { query(f.idx, v1, v1, {0, 1, 2}); }) == Errc::unsupported_constraint);
    CHECK(code_of([&] { query(f.idx, v1, v1, {0, 0}); }) == Errc::non_primitive_constraint);
    CHECK(code_of([&] { query(f.idx, v1, 99, {0}); }) == Errc::not_found);
    CHECK(code_of([&] { query(f.idx, v1, v1, {7}); }) == Errc::not_found);
    CHECK(code_of([&] { f.idx.vertex("v9"); }) == Errc::not_found);
}

TEST_CASE("Kleene star", "[index]") {
    const SixGraph f;
    const VertexId v6 = f.g.vertex("v6");
    const LabelSeq l1 = f.g.labels_from_string("l1");
    CHECK_FALSE(query(f.idx, v6, v6, l1));
    CHECK(query_star(f.idx, v6, v6, l1));
    CHECK_FALSE(query_star(f.idx, f.g.vertex("v1"), f.g.vertex("v3"), l1));
    CHECK(code_of([&] { query_star(f.idx, v6, v6, {0, 0}); }) == Errc::non_primitive_constraint);
}

TEST_CASE("concise set equals the oracle on the example", "[index]") {
    const SixGraph f;
    for (VertexId s = 0; s < f.g.num_vertices(); ++s) {
        for (VertexId t = 0; t < f.g.num_vertices(); ++t) {
            CHECK(concise_set(f.idx, s, t) == oracle_concise_set(f.g, s, t, 2));
        }
    }
    const auto s36 = concise_set(f.idx, f.g.vertex("v3"), f.g.vertex("v6"));
    CHECK(s36 == std::set<LabelSeq>{f.g.labels_from_string("l1"), f.g.labels_from_string("l2 l1"),
                                    f.g.labels_from_string("l2 l3")});
}

TEST_CASE("concise set equals the oracle on random graphs", "[index][property]") {
    Xoshiro256 rng(77);
    for (int i = 0; i < 30; ++i) {
        const Graph g = test::random_graph(rng, 50, 4, 3);
        const unsigned k = 1 + static_cast<unsigned>(rng.below(3));
        const RlcIndex idx = build_index(g, k);
        for (VertexId s = 0; s < g.num_vertices(); ++s) {
            for (VertexId t = 0; t < g.num_vertices(); ++t) {
                REQUIRE(concise_set(idx, s, t) == oracle_concise_set(g, s, t, k));
            }
        }
    }
}

TEST_CASE("MR dictionary admits only primitive sequences", "[index]") {
    MrDictionary d;
    CHECK(d.intern({0, 1}) == 0);
    CHECK(d.intern({1}) == 1);
    CHECK(d.intern({0, 1}) == 0);
    CHECK(d.find({1}) == MrId{1});
    CHECK_FALSE(d.find({2}));
    CHECK(code_of([&] { d.intern({0, 0}); }) == Errc::non_primitive_constraint);
    CHECK(d.at(0) == LabelSeq{0, 1});
}

TEST_CASE("entry lists stay sorted and unique", "[index]") {
    EntryList l;
    CHECK(RlcIndex::insert_sorted(l, {3, 1}));
    CHECK(RlcIndex::insert_sorted(l, {1, 2}));
    CHECK(RlcIndex::insert_sorted(l, {3, 0}));
    CHECK_FALSE(RlcIndex::insert_sorted(l, {1, 2}));
    CHECK(l == EntryList{{1, 2}, {3, 0}, {3, 1}});
}

TEST_CASE("condensed scan", "[index]") {
    SixGraph f;
    CHECK(condensed_violations(f.idx).empty());
    // (v1,l1) in L_out(v4) and (v1,l1) in L_in(v2) already certify v4 -> v2 under l1+.
    const VertexId v2 = f.g.vertex("v2"), v4 = f.g.vertex("v4");
    const MrId l1 = *f.idx.dictionary().find(f.g.labels_from_string("l1"));
    RlcIndex::insert_sorted(f.idx.l_out(v4), {f.idx.order().aid(v2), l1});
    const auto found = condensed_violations(f.idx);
    REQUIRE(found.size() == 1);
    CHECK(found[0].owner == v4);
    CHECK_FALSE(found[0].in_list);
    CHECK(found[0].hub_aid == f.idx.order().aid(f.g.vertex("v1")));
}

TEST_CASE("serialization round trip", "[index][serialize]") {
    const SixGraph f;
    const auto bytes = serialize(f.idx);
    CHECK(index_stats(f.idx).serialized_bytes == bytes.size());
    CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "RLC1");
    const RlcIndex back = deserialize(bytes);
    CHECK(back == f.idx);
    CHECK(serialize(back) == bytes);

    std::stringstream stream;
    write_index(f.idx, stream);
    CHECK(read_index(stream) == f.idx);

    for (VertexId s = 0; s < f.g.num_vertices(); ++s) {
        for (VertexId t = 0; t < f.g.num_vertices(); ++t) {
            for_each_primitive(3, 2, [&](const LabelSeq& L) { CHECK(query(back, s, t, L) == query(f.idx, s, t, L)); });
        }
    }
    CHECK(serialize(f.idx) == bytes);  // queries did not touch the index
}

TEST_CASE("corrupt index streams are rejected", "[index][serialize]") {
    const SixGraph f;
    const auto bytes = serialize(f.idx);
    auto rejects = [](std::span<const std::uint8_t> b) { return code_of([&] { deserialize(b); }) == Errc::corrupt_index; };

    CHECK(rejects(corrupt(bytes, 0, 'X')));                              // magic
    CHECK(rejects(corrupt(bytes, 4, 2)));                                // version
    CHECK(rejects(std::span(bytes).first(bytes.size() - 1)));            // truncated
    auto extra = bytes;
    extra.push_back(0);
    CHECK(rejects(extra));                                               // trailing bytes
    for (std::size_t cut = 0; cut < bytes.size(); cut += 7) CHECK(rejects(std::span(bytes).first(cut)));

    // k = 0
    auto zero_k = corrupt(corrupt(bytes, 8, 0), 9, 0);
    CHECK(rejects(zero_k));
}

TEST_CASE("index stats", "[index]") {
    const SixGraph f;
    const IndexStats s = index_stats(f.idx);
    CHECK(s.total_entries == 26);
    CHECK(s.in_entries + s.out_entries == s.total_entries);
    CHECK(s.dictionary_size == f.idx.dictionary().size());
}
