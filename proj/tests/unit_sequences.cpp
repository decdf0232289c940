/*
 * Sequence and triangle tests. Every registered formula is cross-checked
 * against the independent exhaustive counter for n <= 7, and the a_7
 * values are additionally frozen as literals. Refinement triangles are
 * checked cell-by-cell against brute-force statistic tallies. Power
 * series and succession-rule outputs are pinned to hand-computed
 * prefixes before being compared with enumeration.
 */

#include "doctest.h"

#include "invseq/avoidance.hpp"
#include "invseq/bijections.hpp"
#include "invseq/core.hpp"
#include "invseq/sequences.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

using namespace invseq;

namespace {

std::vector<BigInt> nums(std::initializer_list<long long> xs) {
    return std::vector<BigInt>(xs.begin(), xs.end());
}

// #{e in I_n avoiding w : stat(e) = k} for every k, by enumeration.
std::map<int, BigInt> stat_tally(int n, WordSet w, const std::string& stat) {
    std::map<int, BigInt> tally;
    for_each_inversion_sequence(n, [&](const IntSeq& e) {
        if (avoids_words(e, w)) tally[static_cast<int>(stat_value(e, stat))] += 1;
    });
    return tally;
}

std::string write_temp_json(const char* name, const std::string& body) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << body;
    return p.string();
}

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("binomials, Catalan and Fibonacci helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
    const long long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n < 9; ++n) CHECK(catalan_number(n) == cat[n]);
    const long long fib[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (int n = 0; n <= 10; ++n) CHECK(fibonacci(n) == fib[n]);
}

TEST_CASE("registry is consistent with the lookup functions") {
    const auto& reg = sequence_registry();
    CHECK(reg.size() == 33);
    for (const SequenceSpec& spec : reg) {
        CAPTURE(spec.name);
        CHECK(is_known_sequence(spec.name));
        // every registered name must evaluate; baxter is the only short one
        int n = spec.kind == SequenceKind::BundledPrefix ? 12 : 15;
        CHECK(known_sequence(spec.name, n).size() == static_cast<size_t>(n));
    }
    CHECK(!is_known_sequence("no_such_sequence"));
    CHECK_THROWS_AS(known_sequence("no_such_sequence", 5), std::invalid_argument);
    CHECK_THROWS_AS(known_sequence("catalan", 0), std::invalid_argument);
    CHECK_THROWS_AS(known_sequence("baxter", 13), std::out_of_range);
    CHECK(known_sequence("baxter", 12).back() == 11140560);
}

TEST_CASE("every formula agrees with exhaustive counting through n = 7") {
    // name -> a representative pattern of the class it certifies
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"class7", "(-,<,-)"},      {"class12", "(!=,-,!=)"},
        {"class21", "(=,<=,-)"},    {"class22", "(<,!=,-)"},
        {"class33", "(!=,<=,-)"},   {"class64", "(=,<,-)"},
        {"class121", "(!=,<,-)"},   {"class151", "(!=,<,<=)"},
        {"class185", "(!=,<,!=)"},  {"class187", "(-,-,>=)"},
        {"class193", "(<=,>=,!=)"}, {"class233", "(<,<,-)"},
        {"class304", "(-,-,=)"},    {"catalan", "(-,>,-)"},
        {"class523", "(!=,=,-)"},   {"class805", "(<=,>,!=)"},
        {"bell", "(<,=,-)"},        {"class924", "(>,-,-)"},
        {"class1016", "(>,-,!=)"},  {"class1064", "(>,<=,-)"},
        {"class1079A", "(>,!=,-)"}, {"euler", "(=,=,-)"},
        {"class1694", "(>,-,<)"},   {"schroder", "(-,>,<)"},
        {"baxter", "(>=,>=,>)"},    {"class2549", "(>,-,>)"},
        {"semi_baxter", "(-,<,>=)"}, {"class3207", "(-,<,=)"},
        {"const_1200", "(-,-,-)"},  {"const_1210", "(<=,<=,-)"},
        {"const_12211", "(-,-,!=)"}, {"const_1222", "(-,-,<)"},
        {"const_1233", "(-,!=,!=)"},
    };
    std::vector<WordSet> patterns;
    for (const auto& [name, triple] : pairs)
        patterns.push_back(triple_words(parse_triple(triple)));
    const auto counted = count_avoiders_batch_lengths(7, patterns);
    for (size_t i = 0; i < pairs.size(); ++i) {
        CAPTURE(pairs[i].first);
        CHECK(known_sequence(pairs[i].first, 7) == counted[i]);
    }
    // the second pattern sharing the constant profile 1,2,2,2,...
    CHECK(known_sequence("const_1222", 7) ==
          count_avoiders_lengths(7, triple_words(parse_triple("(-,!=,-)"))));
}

TEST_CASE("length-7 values match the class labels") {
    const std::vector<std::pair<std::string, long long>> a7 = {
        {"class7", 7},        {"class12", 12},      {"class21", 21},
        {"class22", 22},      {"class33", 33},      {"class64", 64},
        {"class121", 121},    {"class151", 151},    {"class185", 185},
        {"class187", 187},    {"class193", 193},    {"class233", 233},
        {"class304", 304},    {"catalan", 429},     {"class523", 523},
        {"class805", 805},    {"bell", 877},        {"class924", 924},
        {"class1016", 1016},  {"class1064", 1064},  {"class1079A", 1079},
        {"euler", 1385},      {"class1694", 1694},  {"schroder", 1806},
        {"baxter", 2074},     {"class2549", 2549},  {"semi_baxter", 2958},
        {"class3207", 3207},
    };
    for (const auto& [name, value] : a7) {
        CAPTURE(name);
        CHECK(known_sequence(name, 7).back() == value);
    }
}

TEST_CASE("hand-checked prefixes of the non-trivial formulas") {
    CHECK(known_sequence("class304", 7) == nums({1, 2, 4, 10, 28, 88, 304}));
    CHECK(known_sequence("class3207", 7) == nums({1, 2, 6, 23, 105, 549, 3207}));
    CHECK(known_sequence("class805", 7) == nums({1, 2, 6, 20, 68, 233, 805}));
    CHECK(known_sequence("class1016", 7) == nums({1, 2, 6, 21, 76, 277, 1016}));
    CHECK(known_sequence("class1064", 7) == nums({1, 2, 6, 20, 72, 272, 1064}));
    CHECK(known_sequence("class1079A", 7) == nums({1, 2, 6, 21, 77, 287, 1079}));
    CHECK(known_sequence("class2549", 7) == nums({1, 2, 6, 23, 102, 495, 2549}));
    CHECK(known_sequence("euler", 9) == nums({1, 2, 5, 16, 61, 272, 1385, 7936, 50521}));
    CHECK(known_sequence("schroder", 7) == nums({1, 2, 6, 22, 90, 394, 1806}));
    CHECK(known_sequence("semi_baxter", 7) == nums({1, 2, 6, 23, 104, 530, 2958}));
    CHECK(known_sequence("class187", 7) == nums({1, 2, 4, 10, 25, 68, 187}));
}

TEST_CASE("distinct-entry refinement of the adjacent-equal class") {
    // cells of the two-term recurrence vs the dist statistic on (-,-,=)
    const WordSet w = triple_words(parse_triple("(-,-,=)"));
    for (int n = 1; n <= 7; ++n) {
        auto tally = stat_tally(n, w, "dist");
        for (int k = 1; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            BigInt brute = tally.count(k) ? tally[k] : BigInt(0);
            CHECK(s_triangle_304(n, k) == brute);
        }
    }
    CHECK(s_triangle_304(0, 1) == 0);
    CHECK(s_triangle_304(3, 4) == 0);
}

TEST_CASE("distinct-entry refinement of the nexus-difference class") {
    const WordSet w = triple_words(parse_triple("(!=,=,-)"));
    for (int n = 1; n <= 7; ++n) {
        auto tally = stat_tally(n, w, "dist");
        for (int k = 1; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            BigInt brute = tally.count(k) ? tally[k] : BigInt(0);
            CHECK(nexus_T(n, k) == brute);
        }
    }
    // printed row for n = 7
    const long long row7[] = {1, 11, 61, 175, 211, 63, 1};
    for (int k = 1; k <= 7; ++k) CHECK(nexus_T(7, k) == row7[k - 1]);
}

TEST_CASE("zero-count refinements: root-children triangle and Stirling") {
    const WordSet w101 = parse_word_set("101");
    const WordSet w110 = parse_word_set("110");
    const WordSet w011 = parse_word_set("011");
    for (int n = 1; n <= 7; ++n) {
        auto z101 = stat_tally(n, w101, "zeros");
        auto z110 = stat_tally(n, w110, "zeros");
        auto z011 = stat_tally(n, w011, "zeros");
        for (int k = 1; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            BigInt b101 = z101.count(k) ? z101[k] : BigInt(0);
            BigInt b110 = z110.count(k) ? z110[k] : BigInt(0);
            BigInt b011 = z011.count(k) ? z011[k] : BigInt(0);
            CHECK(callan_u(n, k) == b101);
            CHECK(callan_u(n, k) == b110);
            CHECK(stirling2(n, k) == b011);
        }
    }
    CHECK(callan_u(0, 0) == 1);
    CHECK(callan_u(4, 0) == 0);
    CHECK(callan_u(3, 4) == 0);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(7, 3) == 301);
}

TEST_CASE("top/bottom refinement of the weak-maxima class") {
    // The recurrence cells match the (top, bottom) joint tally over
    // I_n(210,100) exactly; the sibling family I_n(201,100), despite
    // having the same totals, has a different joint distribution, so the
    // cells must not be read as counting it.
    const WordSet w210 = parse_word_set("210,100");
    const WordSet w201 = parse_word_set("201,100");
    bool family_201_matches = true;
    for (int n = 1; n <= 7; ++n) {
        std::map<std::pair<int, int>, BigInt> t210, t201;
        for_each_inversion_sequence(n, [&](const IntSeq& e) {
            if (avoids_words(e, w210)) {
                TopBottom tb = top_bottom(e);
                t210[{tb.top_value, tb.bottom_value}] += 1;
            }
            if (avoids_words(e, w201)) {
                TopBottom tb = top_bottom(e);
                t201[{tb.top_value, tb.bottom_value}] += 1;
            }
        });
        for (int a = 0; a < n; ++a)
            for (int b = -1; b < a; ++b) {
                CAPTURE(n);
                CAPTURE(a);
                CAPTURE(b);
                BigInt brute = t210.count({a, b}) ? t210[{a, b}] : BigInt(0);
                CHECK(snab_2958(n, a, b) == brute);
                BigInt other = t201.count({a, b}) ? t201[{a, b}] : BigInt(0);
                if (other != snab_2958(n, a, b)) family_201_matches = false;
            }
    }
    CHECK(!family_201_matches);

    // no-bottom column is the ballot number ((n-a)/n) C(n-1+a, a); the
    // column sums to the Catalan number
    for (int n = 1; n <= 8; ++n) {
        BigInt col = 0;
        for (int a = 0; a < n; ++a) col += snab_2958(n, a, -1);
        CHECK(col == catalan_number(n));
    }

    // grand totals equal the succession-rule level counts
    auto levels = omega_semi_level_counts(7);
    for (int n = 1; n <= 7; ++n) CHECK(snab_total(n) == levels[static_cast<size_t>(n - 1)]);
    CHECK(snab_2958(3, 3, 0) == 0);  // top out of range
}

TEST_CASE("succession rule levels match the active-site labels") {
    CHECK(omega_semi_level_counts(7) == nums({1, 2, 6, 23, 104, 530, 2958}));
    CHECK_THROWS_AS(omega_semi_level_counts(0), std::invalid_argument);
    CHECK_THROWS_AS(omega_semi_level_labels(0), std::invalid_argument);

    // label multiset of level n = labels computed from the sequences themselves
    const WordSet w = parse_word_set("101,201");
    for (int n = 1; n <= 7; ++n) {
        std::map<std::pair<int, int>, BigInt> observed;
        for_each_inversion_sequence(n, [&](const IntSeq& e) {
            if (!avoids_words(e, w)) return;
            auto [sites, label] = active_sites_101_201(e);
            CHECK(static_cast<int>(sites.size()) == label.h + label.k);
            observed[{label.h, label.k}] += 1;
        });
        CAPTURE(n);
        CHECK(observed == omega_semi_level_labels(n));
    }

    auto [sites, label] = active_sites_101_201({0});
    CHECK(sites == std::vector<int>{0, 1});
    CHECK(label == SuccessionLabel{1, 1});
    CHECK_THROWS_AS(active_sites_101_201({0, 1, 0, 1}), std::domain_error);  // has 101
    CHECK_THROWS_AS(active_sites_101_201({0, 0, 2, 0, 1}), std::domain_error);  // has 201
}

TEST_CASE("power series fixed points reproduce the catalogued equations") {
    PowerSeries cat = series_solve("I_catalan", 8);
    for (int n = 0; n <= 8; ++n) CHECK(cat.c[static_cast<size_t>(n)] == catalan_number(n));

    CHECK(series_solve("A200753", 7).c[7] == 1694);
    CHECK(series_solve("E_1806C", 7).c ==
          nums({0, 1, 2, 6, 22, 90, 394, 1806}));
    CHECK(series_solve("Q1064", 6).c == nums({1, 2, 6, 20, 72, 272, 1064}));

    // the rational form and the Catalan partial-sum closed form agree
    PowerSeries lhs = series_solve("A805", 20);
    auto rhs = known_sequence("class805", 20);
    CHECK(lhs.c[0] == 1);
    for (int n = 1; n <= 20; ++n)
        CHECK(lhs.c[static_cast<size_t>(n)] == rhs[static_cast<size_t>(n - 1)]);

    // the ordered-tree system and the prefix-maximum recurrence agree
    PowerSeries trees = series_solve("R049125", 12);
    auto dp = known_sequence("class187", 12);
    CHECK(trees.c[0] == 1);
    for (int n = 1; n <= 12; ++n)
        CHECK(trees.c[static_cast<size_t>(n)] == dp[static_cast<size_t>(n - 1)]);

    CHECK(series_solve("I_catalan").c.size() == 31);  // default order 30
    CHECK_THROWS_AS(series_solve("noncontracting_demo", 6), std::runtime_error);
    CHECK_THROWS_AS(series_solve("no_such_equation", 6), std::invalid_argument);
    CHECK_THROWS_AS(series_solve("I_catalan", -1), std::invalid_argument);
}

TEST_CASE("sequence database loads and fingerprints") {
    std::string good = write_temp_json("invseq_db_good.json", R"([
      {"id": "A000108", "description": "Catalan numbers",
       "offset": 0, "provenance": "test fixture",
       "terms": [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]},
      {"id": "A000045", "description": "Fibonacci numbers",
       "offset": 0, "provenance": "test fixture",
       "terms": ["0", "1", "1", "2", "3", "5", "8", "13", "21", "34"]}
    ])");
    auto db = load_sequence_db(good);
    REQUIRE(db.size() == 2);
    CHECK(db[0].id == "A000108");
    CHECK(db[0].terms[3] == 5);
    CHECK(db[1].terms[9] == 34);  // string-encoded terms parse too
    CHECK(db[1].provenance == "test fixture");

    auto hits = fingerprint(nums({1, 2, 5, 14, 42, 132}), db);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].id == "A000108");
    // containment at any offset: Fibonacci tail
    CHECK(fingerprint(nums({2, 3, 5, 8, 13}), db).size() == 1);
    CHECK(fingerprint(nums({9, 9, 9, 9, 9}), db).empty());
    CHECK_THROWS_AS(fingerprint(nums({1, 2, 5}), db), std::invalid_argument);

    std::string bad = write_temp_json("invseq_db_bad.json", "{ not json ]");
    CHECK_THROWS_AS(load_sequence_db(bad), std::runtime_error);
    std::string notarray = write_temp_json("invseq_db_obj.json", R"({"id": "x"})");
    CHECK_THROWS_AS(load_sequence_db(notarray), std::runtime_error);
    CHECK_THROWS_AS(load_sequence_db("/nonexistent/dir/db.json"), std::runtime_error);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
    std::filesystem::remove(notarray);
}

}  // TEST_SUITE
