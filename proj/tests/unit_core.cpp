/*
 * Core model tests: enumeration order and cardinality of inversion
 * sequences, the basic sequence operations, statistics, and parsing.
 * Expected values are small enough to check by hand.
 */

#include "doctest.h"

#include "invseq/core.hpp"

#include <set>
#include <vector>

using namespace invseq;

namespace {

std::vector<IntSeq> collect(int n) {
    std::vector<IntSeq> out;
    for_each_inversion_sequence(n, [&](const IntSeq& e) { out.push_back(e); });
    return out;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("enumeration is lexicographic and complete for n = 3") {
    std::vector<IntSeq> expected = {
        {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2},
    };
    CHECK(collect(3) == expected);
}

TEST_CASE("enumeration yields n! sequences") {
    for (int n = 0; n <= 8; ++n) {
        long long count = 0;
        for_each_inversion_sequence(n, [&](const IntSeq& e) {
            ++count;
            REQUIRE(static_cast<int>(e.size()) == n);
        });
        CHECK(BigInt(count) == factorial(n));
    }
    // n = 0 contributes exactly one (empty) sequence.
    CHECK(collect(0).size() == 1);
    CHECK(collect(0)[0].empty());
}

TEST_CASE("every emitted sequence is valid") {
    for_each_inversion_sequence(6, [&](const IntSeq& e) {
        REQUIRE(is_inversion_sequence(e));
    });
}

TEST_CASE("extensions of length-2 prefixes partition the full set") {
    std::set<IntSeq> from_prefixes;
    for_each_inversion_sequence(2, [&](const IntSeq& p) {
        for_each_extension(p, 5, [&](const IntSeq& e) {
            REQUIRE(is_inversion_sequence(e));
            bool fresh = from_prefixes.insert(e).second;
            REQUIRE(fresh);  // prefix blocks must be disjoint
        });
    });
    std::set<IntSeq> full;
    for_each_inversion_sequence(5, [&](const IntSeq& e) { full.insert(e); });
    CHECK(from_prefixes == full);
}

TEST_CASE("extension of the empty prefix is plain enumeration") {
    std::vector<IntSeq> out;
    for_each_extension(IntSeq{}, 3, [&](const IntSeq& e) { out.push_back(e); });
    CHECK(out == collect(3));
}

TEST_CASE("permutation enumeration") {
    long long count = 0;
    for_each_permutation(5, [&](const Perm& p) {
        ++count;
        REQUIRE(is_permutation(p));
    });
    CHECK(count == 120);
}

TEST_CASE("sigma shifts nonzero entries only") {
    CHECK(sigma_t({0, 1, 0, 2}, 1) == IntSeq{0, 2, 0, 3});
    CHECK(sigma_t({0, 1, 1}, -1) == IntSeq{0, 0, 0});
    CHECK(sigma_t({0, 2, 1}, -1) == IntSeq{0, 1, 0});
    CHECK(sigma_t({0, 0, 0}, 5) == IntSeq{0, 0, 0});
    CHECK_THROWS(sigma_t({0, 1}, -2));  // 1 - 2 < 0
}

TEST_CASE("concatenation operations") {
    CHECK(concat_front_zero({0, 1}) == IntSeq{0, 0, 1});
    CHECK(concat_front_zero({}) == IntSeq{0});
    // Shifting can legalize a sequence; (1,0) -> (0,1,0) is fine, but an
    // entry too large for its shifted slot is not.
    CHECK(concat_front_zero({1, 0}) == IntSeq{0, 1, 0});
    CHECK_THROWS(concat_front_zero({2, 0}));

    CHECK(concat_back({0, 1}, 2) == IntSeq{0, 1, 2});
    CHECK(concat_back({}, 0) == IntSeq{0});
    CHECK_THROWS(concat_back({0, 1}, 3));  // new entry must be <= old length
    CHECK_THROWS(concat_back({0, 1}, -1));
}

TEST_CASE("statistics on worked examples") {
    Stats s = stats({0, 0, 2, 1});
    CHECK(s.asc == 1);
    CHECK(s.zeros == 2);
    CHECK(s.dist == 3);
    CHECK(s.repeats == 1);
    CHECK(s.maxim == 2);
    CHECK(s.maxx == 2);
    CHECK(s.last == 1);

    Stats t = stats({0});
    CHECK(t.asc == 0);
    CHECK(t.zeros == 1);
    CHECK(t.dist == 1);
    CHECK(t.repeats == 0);
    CHECK(t.maxim == 1);
    CHECK(t.maxx == 0);
    CHECK(t.last == 0);

    Stats u = stats({0, 1, 2, 3});
    CHECK(u.asc == 3);
    CHECK(u.zeros == 1);
    CHECK(u.dist == 4);
    CHECK(u.repeats == 0);
    CHECK(u.maxim == 4);
    CHECK(u.maxx == 3);
    CHECK(u.last == 3);
}

TEST_CASE("statistics by name") {
    IntSeq e = {0, 1, 0, 2, 2};
    CHECK(stat_value(e, "asc") == 2);
    CHECK(stat_value(e, "zeros") == 2);
    CHECK(stat_value(e, "dist") == 3);
    CHECK(stat_value(e, "repeats") == 2);
    CHECK(stat_value(e, "maxim") == 2);
    CHECK(stat_value(e, "maxx") == 2);
    CHECK(stat_value(e, "last") == 2);
    CHECK(stat_value(e, "lr_maxima") == 4);  // 0,1,2,2 are weak maxima
    CHECK(is_stat_name("zeros"));
    CHECK(!is_stat_name("bogus"));
    CHECK_THROWS(stat_value(e, "bogus"));
}

TEST_CASE("reverse and complement") {
    CHECK(reverse_seq({0, 1, 2}) == IntSeq{2, 1, 0});
    CHECK(complement({1, 3, 2}) == Perm{3, 1, 2});
    Perm p = {2, 4, 1, 3};
    CHECK(complement(complement(p)) == p);
    IntSeq w = {0, 2, 1, 1};
    CHECK(reverse_seq(reverse_seq(w)) == w);
}

TEST_CASE("validation") {
    CHECK(is_inversion_sequence({0, 1, 0, 3}));
    CHECK(!is_inversion_sequence({0, 0, 3}));  // e_3 = 3 > 2
    CHECK(!is_inversion_sequence({1, 0}));
    CHECK(!is_inversion_sequence({0, -1}));
    CHECK_THROWS(require_inversion_sequence({0, 2}));
    CHECK(is_permutation({3, 1, 2}));
    CHECK(!is_permutation({1, 1, 2}));
    CHECK(!is_permutation({0, 1, 2}));
    CHECK_THROWS(require_permutation({2, 2, 1}));
}

TEST_CASE("parsing and formatting") {
    CHECK(parse_seq("(0,1,0,2)") == IntSeq{0, 1, 0, 2});
    CHECK(parse_seq("0,1,0,2") == IntSeq{0, 1, 0, 2});
    CHECK(parse_seq("()").empty());
    CHECK(seq_to_string({0, 1, 0, 2}) == "(0,1,0,2)");
    CHECK(parse_seq(seq_to_string({0, 0, 2, 1})) == IntSeq{0, 0, 2, 1});
    CHECK_THROWS(parse_seq("(0,1,x)"));

    CHECK(parse_perm("312") == Perm{3, 1, 2});
    CHECK(parse_perm("3 1 2") == Perm{3, 1, 2});
    CHECK(parse_perm("10 2 3 4 5 6 7 8 9 1") ==
          Perm{10, 2, 3, 4, 5, 6, 7, 8, 9, 1});
    CHECK_THROWS(parse_perm("122"));
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
}

}  // TEST_SUITE
