/*
 * Permutation pattern tests. Small frozen counts were verified by hand
 * (inclusion-exclusion on S_3/S_4) or against published closed forms
 * evaluated independently; larger anchors live in the acceptance run.
 */

#include "doctest.h"

#include "invseq/core.hpp"
#include "invseq/perm_patterns.hpp"

#include <vector>

using namespace invseq;

TEST_SUITE("perm_patterns") {

TEST_CASE("classical containment basics") {
    CHECK(contains_classical({3, 1, 2}, {2, 1}));
    CHECK(!contains_classical({1, 2, 3}, {2, 1}));
    CHECK(contains_classical({5, 3, 4, 1, 2}, {3, 1, 2}));
    CHECK(!contains_classical({2, 1, 4, 3}, {3, 2, 1}));
    CHECK(contains_classical({2, 1, 4, 3}, {2, 1, 4, 3}));
    CHECK(!contains_classical({1, 2}, {1, 2, 3}));
    CHECK(contains_classical({1}, {1}));
    CHECK_THROWS(contains_classical({1, 2}, {1, 1}));
}

TEST_CASE("classical avoidance counts") {
    // single length-3 pattern: Catalan
    CHECK(count_classical_avoiders(5, {{1, 3, 2}}) == 42);
    CHECK(count_classical_avoiders(6, {{3, 2, 1}}) == 132);
    // S_3 minus the two forbidden ones
    CHECK(count_classical_avoiders(3, {{3, 2, 1}, {2, 1, 4, 3}}) == 5);
    // at n = 4 exactly the three patterns themselves are excluded
    CHECK(count_classical_avoiders(4, {{4, 1, 2, 3}, {4, 1, 3, 2}, {4, 2, 1, 3}}) == 21);
    CHECK(count_classical_avoiders(4, {{2, 1, 4, 3}, {3, 1, 4, 2}, {4, 1, 3, 2}}) == 21);
    // length-5 companion cannot bite yet at n = 4
    CHECK(count_classical_avoiders(4, {{4, 2, 3, 1}, {4, 2, 5, 1, 3}}) == 23);
    CHECK(count_classical_avoiders(3, {{1, 3, 2}, {4, 3, 1, 2}}) == 5);
    CHECK(count_classical_avoiders(0, {{2, 1}}) == 1);
}

TEST_CASE("vincular parsing") {
    VincularPattern vp = parse_vincular("2[41]3");
    CHECK(vp.word == Perm{2, 4, 1, 3});
    CHECK(vp.glued == std::vector<int>{2});
    VincularPattern w = parse_vincular("1[23]4");
    CHECK(w.word == Perm{1, 2, 3, 4});
    CHECK(w.glued == std::vector<int>{2});
    VincularPattern tri = parse_vincular("[231]4");
    CHECK(tri.word == Perm{2, 3, 1, 4});
    CHECK(tri.glued == std::vector<int>{1, 2});
    CHECK_THROWS(parse_vincular("2[413"));
    CHECK_THROWS(parse_vincular("2]41[3"));
    CHECK_THROWS(parse_vincular("2[44]3"));
}

TEST_CASE("vincular containment needs the adjacency") {
    VincularPattern vp = parse_vincular("2[41]3");
    // 2 4 1 3 itself: the 41 block is adjacent
    CHECK(contains_vincular({2, 4, 1, 3}, vp));
    // 2 4 3 1: letters playing 4 and 1 never adjacent in a 2413 occurrence
    CHECK(!contains_vincular({2, 4, 3, 1}, vp));
    // 3,5,1,4 is a 2413 occurrence with the 5,1 block adjacent
    CHECK(contains_vincular({3, 5, 1, 4, 2}, vp));
}

TEST_CASE("vincular containment refines classical containment") {
    VincularPattern vp = parse_vincular("2[41]3");
    for_each_permutation(5, [&](const Perm& p) {
        if (contains_vincular(p, vp)) REQUIRE(contains_classical(p, vp.word));
    });
    // the glue is strictly weaker: one 5-permutation needs the gap
    CHECK(count_classical_avoiders(5, {{2, 4, 1, 3}}) == 103);
    CHECK(count_vincular_avoiders(5, {vp}) == 104);
}

TEST_CASE("vincular avoidance counts on small n") {
    VincularPattern semi = parse_vincular("2[41]3");
    std::vector<BigInt> expectSemi = {1, 2, 6, 23, 104, 530};
    for (int n = 1; n <= 6; ++n)
        CHECK(count_vincular_avoiders(n, {semi}) == expectSemi[static_cast<size_t>(n - 1)]);

    std::vector<VincularPattern> baxter = {parse_vincular("3[14]2"),
                                           parse_vincular("2[41]3")};
    std::vector<BigInt> expectBaxter = {1, 2, 6, 22, 92, 422};
    for (int n = 1; n <= 6; ++n)
        CHECK(count_vincular_avoiders(n, baxter) == expectBaxter[static_cast<size_t>(n - 1)]);
}

TEST_CASE("extension rules validate their embedding") {
    CHECK_THROWS(make_rule({2, 1}, {1, 2, 3}, {1, 2}));     // 12 block is not 21
    CHECK_THROWS(make_rule({2, 1}, {3, 2, 1}, {2}));        // wrong arity
    CHECK_THROWS(make_rule({2, 1}, {3, 2, 1}, {2, 2}));     // not increasing
    CHECK_THROWS(make_rule({2, 1}, {3, 2, 1}, {2, 4}));     // out of range
    CHECK(make_rule({2, 1}, {3, 2, 1}, {1, 3}).core == Perm{2, 1});
    CHECK_THROWS(named_rule("nope"));
}

TEST_CASE("rule satisfaction on worked examples") {
    ExtensionRule plane = named_rule("plane");
    // 2143 contains its own core but nothing can supply the middle letter
    CHECK(!satisfies_rule({2, 1, 4, 3}, plane));
    // inserting the middle letter fixes it
    CHECK(satisfies_rule({2, 1, 3, 5, 4}, plane));
    CHECK(satisfies_rule({1, 2, 3, 4}, plane));  // no core occurrence at all

    ExtensionRule bell = named_rule("4bar132");
    CHECK(satisfies_rule({4, 1, 3, 2}, bell));
    CHECK(!satisfies_rule({4, 3, 2, 1}, bell));
    CHECK(satisfies_rule({1, 2, 3}, bell));

    ExtensionRule nexus = named_rule("bar3bar1542");
    CHECK(!satisfies_rule({5, 4, 2, 1, 3}, nexus));  // 542 with no 31 prefix
    CHECK(satisfies_rule({3, 1, 5, 4, 2}, nexus));
}

TEST_CASE("plane rule counts follow the semi-Baxter numbers") {
    std::vector<BigInt> expect = {1, 2, 6, 23, 104, 530};
    ExtensionRule plane = named_rule("plane");
    for (int n = 1; n <= 6; ++n)
        CHECK(count_rule_satisfying(n, plane) == expect[static_cast<size_t>(n - 1)]);
}

TEST_CASE("marked point thresholds") {
    QuadrantThresholds q{0, 2, 0, 2};
    // needs two larger letters before and two smaller after some point
    CHECK(contains_marked_point({4, 5, 3, 1, 2}, q));
    CHECK(!contains_marked_point({1, 2, 3, 4, 5}, q));
    CHECK(!contains_marked_point({4, 3, 2, 1}, q));  // one smaller after, never two
    std::vector<BigInt> expect = {1, 2, 6, 24, 116};
    for (int n = 1; n <= 5; ++n)
        CHECK(count_marked_point_avoiders(n, q) == expect[static_cast<size_t>(n - 1)]);
}

}  // TEST_SUITE
