#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace rlc;
using test::brute_kernels;
using test::all_sequences;
using test::brute_mr;

namespace {

constexpr Label a = 0, b = 1;

void check_against_oracles(const LabelSeq& seq) {
    const LabelSeq mr = minimum_repeat(seq);
    REQUIRE(mr == brute_mr(seq));
    REQUIRE(seq.size() % mr.size() == 0);
    REQUIRE(minimum_repeat(mr) == mr);
    REQUIRE(is_primitive(seq) == (mr == seq));

    const auto found = brute_kernels(seq);
    REQUIRE(found.size() <= 1);
    const auto kd = kernel_decompose(seq);
    REQUIRE(kd.has_value() == !found.empty());
    if (kd) {
        REQUIRE(kd->kernel == found[0].kernel);
        REQUIRE(kd->tail == found[0].tail);
        REQUIRE(kd->repetitions == found[0].h);
        REQUIRE(kd->kernel.repeat(kd->repetitions) + kd->tail == seq);
        REQUIRE(is_primitive(kd->kernel));
        REQUIRE(kd->tail.size() < kd->kernel.size());
    }
}

}  // namespace

TEST_CASE("minimum repeat examples", "[labelseq]") {
    CHECK(minimum_repeat({a, b, a, b}) == LabelSeq{a, b});
    CHECK(minimum_repeat({a}) == LabelSeq{a});
    CHECK(minimum_repeat({a, a, a}) == LabelSeq{a});
    CHECK(minimum_repeat({a, b, a}) == LabelSeq{a, b, a});
    CHECK_THROWS_MATCHES(minimum_repeat({}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::invalid_sequence; }));
}

TEST_CASE("knows/worksFor path has a two-label repeat", "[labelseq]") {
    const Graph g = test::transfers();
    const LabelSeq path = g.labels_from_string("knows worksFor knows worksFor");
    CHECK(minimum_repeat(path) == g.labels_from_string("knows worksFor"));
}

TEST_CASE("primitivity", "[labelseq]") {
    CHECK(is_primitive({a, b}));
    CHECK_FALSE(is_primitive({a, a}));
    CHECK_FALSE(is_primitive({a, b, a, b, a, b}));
    CHECK_THROWS_AS(is_primitive({}), Error);
}

TEST_CASE("k-MR", "[labelseq]") {
    CHECK(k_mr({a, b, a, b}, 2) == LabelSeq{a, b});
    CHECK_FALSE(k_mr({a, b, a, b}, 1).has_value());
    CHECK(k_mr({a, a, a}, 1) == LabelSeq{a});
    CHECK_THROWS_AS(k_mr({}, 2), Error);
}

TEST_CASE("kernel decomposition examples", "[labelseq]") {
    const auto k1 = kernel_decompose({a, a, a, a});
    REQUIRE(k1);
    CHECK(k1->kernel == LabelSeq{a});
    CHECK(k1->tail.empty());
    CHECK(k1->repetitions == 4);

    const auto k2 = kernel_decompose({a, b, a, b, a});
    REQUIRE(k2);
    CHECK(k2->kernel == LabelSeq{a, b});
    CHECK(k2->tail == LabelSeq{a});
    CHECK(k2->repetitions == 2);

    CHECK_FALSE(kernel_decompose({a, b}));
    CHECK_FALSE(kernel_decompose({a, a, b, a}));
    CHECK_THROWS_AS(kernel_decompose({}), Error);
}

TEST_CASE("concatenation identities", "[labelseq]") {
    const LabelSeq x{a, b}, y{b}, z{a, a, b};
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + LabelSeq{} == x);
    CHECK(LabelSeq{} + x == x);
}

TEST_CASE("primitive_count examples and overflow", "[labelseq]") {
    CHECK(primitive_count(2, 1) == 2);
    CHECK(primitive_count(2, 2) == 4);
    CHECK(primitive_count(8, 2) == 64);
    CHECK_THROWS_MATCHES(primitive_count(1u << 20, 4), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::overflow; }));
}

TEST_CASE("primitive_count equals enumeration for A <= 4, k <= 5", "[labelseq][property]") {
    for (std::uint32_t A = 1; A <= 4; ++A) {
        for (std::size_t k = 1; k <= 5; ++k) {
            std::uint64_t counted = 0;
            all_sequences(A, k, [&](const LabelSeq& s) { counted += brute_mr(s) == s; });
            INFO("A=" << A << " k=" << k);
            CHECK(primitive_count(A, k) == counted);

            std::uint64_t visited = 0;
            for_each_primitive(A, k, [&](const LabelSeq&) { ++visited; });
            CHECK(visited == counted);
        }
    }
}

TEST_CASE("MR and kernel match brute force, exhaustive up to length 8", "[labelseq][property]") {
    std::uint64_t checked = 0;
    for (std::uint32_t A = 1; A <= 4; ++A) {
        all_sequences(A, 8, [&](const LabelSeq& s) {
            check_against_oracles(s);
            ++checked;
        });
    }
    CHECK(checked > 80000);
}

TEST_CASE("MR and kernel match brute force on random lengths 9..12", "[labelseq][property]") {
    Xoshiro256 rng(2024);
    std::vector<Label> buf;
    for (int i = 0; i < 100000; ++i) {
        const auto A = static_cast<std::uint32_t>(1 + rng.below(4));
        buf.resize(9 + rng.below(4));
        // Bias towards periodic inputs; uniform draws are almost all primitive.
        const std::size_t period = rng.below(2) ? 1 + rng.below(buf.size()) : buf.size();
        for (std::size_t j = 0; j < buf.size(); ++j) {
            buf[j] = j < period ? static_cast<Label>(rng.below(A)) : buf[j - period];
        }
        check_against_oracles(LabelSeq(buf));
    }
}
