/*
 * Coding tests. Round trips and image coverage are checked exhaustively
 * for small n; the frozen examples were worked by hand.
 */

#include "doctest.h"

#include "invseq/core.hpp"
#include "invseq/encodings.hpp"

#include <set>
#include <vector>

using namespace invseq;

TEST_SUITE("encodings") {

TEST_CASE("theta on worked examples") {
    CHECK(theta({3, 1, 2}) == IntSeq{0, 1, 1});
    CHECK(theta({1, 2, 3, 4}) == IntSeq{0, 0, 0, 0});
    CHECK(theta({4, 3, 2, 1}) == IntSeq{0, 1, 2, 3});
    CHECK(theta_inv({0, 1, 1}) == Perm{3, 1, 2});
    CHECK(theta({}).empty());
}

TEST_CASE("theta is a bijection onto the inversion sequences") {
    for (int n = 0; n <= 6; ++n) {
        std::set<IntSeq> images;
        for_each_permutation(n, [&](const Perm& p) {
            IntSeq e = theta(p);
            REQUIRE(is_inversion_sequence(e));
            REQUIRE(theta_inv(e) == p);
            images.insert(e);
        });
        CHECK(BigInt(images.size()) == factorial(n));
        for_each_inversion_sequence(n, [&](const IntSeq& e) {
            REQUIRE(theta(theta_inv(e)) == e);
        });
    }
}

TEST_CASE("lehmer code") {
    CHECK(lehmer({3, 1, 2}) == IntSeq{2, 0, 0});
    CHECK(lehmer({1, 2, 3}) == IntSeq{0, 0, 0});
    for_each_permutation(6, [&](const Perm& p) {
        REQUIRE(lehmer_inv(lehmer(p)) == p);
    });
    CHECK_THROWS(lehmer_inv({3, 0, 0}));  // entry exceeds remaining choices
}

TEST_CASE("invcode") {
    CHECK(invcode({3, 1, 2}) == IntSeq{0, 0, 2});
    for_each_permutation(6, [&](const Perm& p) {
        IntSeq e = invcode(p);
        REQUIRE(is_inversion_sequence(e));
        REQUIRE(invcode_inv(e) == p);
        // invcode factors through theta after complement and reversal
        REQUIRE(e == theta(reverse_seq(complement(p))));
    });
}

TEST_CASE("phi on worked examples") {
    CHECK(phi({2, 3, 1}) == IntSeq{0, 0, 0});
    CHECK(phi({3, 2, 1}) == IntSeq{0, 1, 0});
    CHECK(phi({1, 3, 2}) == IntSeq{0, 1, 1});
    CHECK(phi({1, 2, 3}) == IntSeq{0, 1, 2});
    CHECK(phi_inv({0, 1, 0}) == Perm{3, 2, 1});
    CHECK(phi_inv({0, 0, 2}) == Perm{2, 1, 3});
}

TEST_CASE("phi is a bijection and carries excedances to repeats") {
    for (int n = 0; n <= 6; ++n) {
        std::set<IntSeq> images;
        for_each_permutation(n, [&](const Perm& p) {
            IntSeq e = phi(p);
            REQUIRE(is_inversion_sequence(e));
            REQUIRE(phi_inv(e) == p);
            if (n > 0) REQUIRE(exc(p) == stats(e).repeats);
            images.insert(e);
        });
        CHECK(BigInt(images.size()) == factorial(n));
    }
}

TEST_CASE("counting statistics on permutations") {
    CHECK(exc({2, 3, 1}) == 2);
    CHECK(exc({1, 2, 3}) == 0);
    CHECK(des({3, 1, 2}) == 1);
    CHECK(descent_positions({3, 1, 2}) == std::vector<int>{1});
    CHECK(descent_positions({2, 1, 4, 3}) == std::vector<int>{1, 3});
    CHECK(ascent_positions({0, 1, 1}) == std::vector<int>{1});
    CHECK(ascent_positions({0, 0, 2, 1}) == std::vector<int>{2});
}

TEST_CASE("ascents of the coding match descents of the permutation") {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Perm& p) {
            REQUIRE(ascent_positions(theta(p)) == descent_positions(p));
        });
}

}  // TEST_SUITE
