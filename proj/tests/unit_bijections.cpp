/*
 * Bijection tests. Worked examples were traced by hand; the registry
 * certifications are exhaustive at small n (the acceptance run repeats
 * them at the contract sizes).
 */

#include "doctest.h"

#include "invseq/avoidance.hpp"
#include "invseq/bijections.hpp"
#include "invseq/core.hpp"

using namespace invseq;

TEST_SUITE("bijections") {

TEST_CASE("alpha and beta on worked examples") {
    CHECK(alpha({0, 1, 0, 0}) == IntSeq{0, 1, 1, 0});
    CHECK(beta({0, 1, 1, 0}) == IntSeq{0, 1, 0, 0});
    CHECK(alpha({0, 0, 2}) == IntSeq{0, 0, 2});  // the repeat is raised to 0
    CHECK(alpha({0, 1, 2}) == IntSeq{0, 1, 2});
    CHECK(beta({0, 1, 2}) == IntSeq{0, 1, 2});
}

TEST_CASE("alpha inverts by beta on its domain") {
    WordSet domain = parse_word_set("110,210");
    for (int n = 1; n <= 7; ++n)
        for_each_inversion_sequence(n, [&](const IntSeq& e) {
            if (!avoids_words(e, domain)) return;
            REQUIRE(beta(alpha(e)) == e);
        });
}

TEST_CASE("greedy rearrangement on worked examples") {
    CHECK(greedy_swap({0, 1, 2, 0, 1}) == IntSeq{0, 1, 2, 1, 0});
    CHECK(greedy_swap({0, 1, 1}) == IntSeq{0, 1, 1});
    CHECK(greedy_swap({0, 1, 0, 1}) == IntSeq{0, 1, 1, 0});
    CHECK(greedy_swap({0}) == IntSeq{0});
    CHECK(greedy_swap({0, 0}) == IntSeq{0, 0});
}

TEST_CASE("weak-maxima rearrangement on worked examples") {
    // no ties at the running maximum: agrees with the strict variant
    CHECK(weak_max_swap({0, 1, 2, 0, 1}) == IntSeq{0, 1, 2, 1, 0});
    CHECK(weak_max_swap({0, 1, 2, 2, 0, 1}) == IntSeq{0, 1, 2, 2, 1, 0});
    // position 4 ties the running maximum, so only position 3 is moved
    // (and stays put: 0 is the only value strictly below the maximum)
    CHECK(weak_max_swap({0, 1, 0, 1}) == IntSeq{0, 1, 0, 1});
    CHECK(greedy_swap({0, 1, 0, 1}) != weak_max_swap({0, 1, 0, 1}));
    CHECK(weak_max_swap({0, 1, 1}) == IntSeq{0, 1, 1});
    CHECK(weak_max_swap({0}) == IntSeq{0});

    CHECK(weak_max_swap_inverse({0, 1, 2, 2, 1, 0}) == IntSeq{0, 1, 2, 2, 0, 1});
    CHECK(weak_max_swap_inverse({0, 1, 0, 1}) == IntSeq{0, 1, 0, 1});
}

TEST_CASE("zero_repeats and prefix_zero on worked examples") {
    CHECK(zero_repeats({0, 1, 1, 2, 1}) == IntSeq{0, 1, 0, 2, 0});
    CHECK(zero_repeats({0, 1, 2}) == IntSeq{0, 1, 2});
    CHECK(zero_repeats({0, 0, 0}) == IntSeq{0, 0, 0});

    CHECK(prefix_zero({0, 1, 1, 0}) == IntSeq{0, 0, 1, 0});
    CHECK(prefix_zero({0, 1, 2}) == IntSeq{0, 0, 2});
    CHECK(prefix_zero({0}) == IntSeq{0});
    // descent already at position 2: only position 1 (a zero) precedes it
    CHECK(prefix_zero({0, 1, 0, 2}) == IntSeq{0, 1, 0, 2});
    CHECK(prefix_zero({0, 0, 1, 1}) == IntSeq{0, 0, 0, 1});
}

TEST_CASE("top and bottom decomposition") {
    TopBottom tb = top_bottom({0, 1, 0, 1});
    CHECK(tb.top == std::vector<int>{1, 2, 4});
    CHECK(tb.bottom == std::vector<int>{3});
    CHECK(tb.top_value == 1);
    CHECK(tb.bottom_value == 0);

    TopBottom all = top_bottom({0, 0, 2});
    CHECK(all.top == std::vector<int>{1, 2, 3});
    CHECK(all.bottom.empty());
    CHECK(all.bottom_value == -1);
}

TEST_CASE("bottom strictly increasing characterizes the 210,100 avoiders") {
    WordSet w = parse_word_set("210,100");
    for (int n = 1; n <= 7; ++n)
        for_each_inversion_sequence(n, [&](const IntSeq& e) {
            TopBottom tb = top_bottom(e);
            bool strictly = true;
            for (size_t i = 0; i + 1 < tb.bottom.size(); ++i)
                if (e[static_cast<size_t>(tb.bottom[i] - 1)] >=
                    e[static_cast<size_t>(tb.bottom[i + 1] - 1)])
                    strictly = false;
            REQUIRE(strictly == avoids_words(e, w));
        });
}

TEST_CASE("registry certifies every map at n = 6") {
    for (const std::string& name : bijection_names()) {
        BijectionReport r = verify_bijection(name, 6);
        CAPTURE(name);
        CHECK(r.pass);
    }
    CHECK_THROWS(verify_bijection("nope", 4));
}

TEST_CASE("the rearrangement map preserves five statistics") {
    BijectionReport r = verify_bijection("map_772", 7);
    CHECK(r.pass);
    CHECK(r.preserved_statistics == 5);
}

TEST_CASE("restriction arguments hold at small n") {
    // alpha keeps working after cutting both sides down by the same words
    WordSet dd = parse_word_set("010,101,110,120,201,210");
    WordSet cc = parse_word_set("010,100,101,120,201,210");
    for (int n = 4; n <= 6; ++n) CHECK(maps_avoiders_onto(alpha, dd, cc, n));
    // the strict-maxima greedy also certifies the four-word pair obtained
    // by cutting the weak variant's domain and codomain down equally
    CHECK(maps_avoiders_onto(greedy_swap, parse_word_set("210,110,100,000"),
                             parse_word_set("201,101,100,000"), 6));
}

TEST_CASE("the two maxima conventions are not interchangeable") {
    // strict on the two-word pair collides: (0,1,0,1) and (0,1,1,0) get
    // the same image once position 4's tie is treated as a non-maximum
    CHECK(greedy_swap({0, 1, 0, 1}) == greedy_swap({0, 1, 1, 0}));
    CHECK_FALSE(maps_avoiders_onto(greedy_swap, parse_word_set("210,100"),
                                   parse_word_set("201,100"), 4));
    // weak on the four-word pair leaks: (0,1,0,1) stays fixed yet its
    // positions 2,3,4 step down then back up to an equal value, which the
    // four-word codomain forbids
    CHECK(avoids_words({0, 1, 0, 1}, parse_word_set("210,110,100,000")));
    CHECK_FALSE(avoids_words(weak_max_swap({0, 1, 0, 1}), parse_word_set("201,101,100,000")));
    CHECK_FALSE(maps_avoiders_onto(weak_max_swap, parse_word_set("210,110,100,000"),
                                   parse_word_set("201,101,100,000"), 4));
}

}  // TEST_SUITE
