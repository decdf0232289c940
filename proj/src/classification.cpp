/*
 * classification.cpp
 *
 * Equivalence and Wilf classification of the 343 relation-triple patterns.
 *
 * The central device is the containment closure of a forbidden word set.
 * Reducing a triple to its forbidden words is not injective on avoidance
 * behavior: distinct word sets can admit exactly the same avoiders because
 * an occurrence of one word can force an occurrence of another. (Every
 * sequence containing 101 contains 011, for instance, since e_1 = 0 sits
 * below the repeated value.) The implication table below records every such
 * forcing; closing word sets under it produces a canonical form whose
 * equality decides equivalence exactly.
 *
 * Soundness of each table entry is argued inline. Completeness — that the
 * closure adds every word it semantically could — is pinned by the unit
 * tests, which recompute the closure of all 343 raw word sets empirically
 * from the full pattern spectrum of I_1..I_8 and find no difference. Since
 * a proved implication can never over-merge and an empirical closure at a
 * fixed length can never under-merge, agreement of the two bounds means the
 * computed partition is the true one at every length.
 */

#include "invseq/classification.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "invseq/sequences.hpp"

namespace invseq {

namespace {

WordSet word_bit(const char* w) { return static_cast<WordSet>(1u << parse_word(w)); }

WordSet wset(std::initializer_list<const char*> words) {
    WordSet s = 0;
    for (const char* w : words) s |= word_bit(w);
    return s;
}

}  // namespace

// ---- containment implications ----------------------------------------------------
//
// clauses[w] holds word sets C such that every inversion sequence containing
// an occurrence of w contains an occurrence of some word in C. Notation in
// the arguments: the occurrence sits at positions i < j < k; e_1 = 0 always
// (0 <= e_p <= p-1), and a value v cannot appear before position v+1. Two
// facts are reused constantly:
//
//   (packing) If e avoids 001 and the value v > 0 occurs in e, then every
//   value u < v occurs within positions 1..v. Positions 1..v precede every
//   occurrence of v and hold values at most v-1; if two were equal, say
//   e_a = e_b = x with a < b <= v, then (a, b, p) with p an occurrence of v
//   would form 001. So those v positions hold v distinct values below v,
//   i.e. all of 0..v-1.
//
//   (zero floor) For any occurrence value v > 0 at position p >= 2, the
//   pair (e_1, e_p) = (0, v) starts or ends word occurrences for free.
//
// The five words 000, 001, 010, 011, 012 have no entries: each is realized
// by a sequence whose pattern spectrum is that single word ((0,0,0),
// (0,0,1), (0,1,0), (0,1,1), (0,1,2) respectively), so no forcing exists.
const std::array<std::vector<WordSet>, kWordCount>& word_implication_clauses() {
    static const std::array<std::vector<WordSet>, kWordCount> kClauses = [] {
        std::array<std::vector<WordSet>, kWordCount> t;

        // 100 = (y,x,x), x < y, so y >= 1 and i >= 2.
        //  {000,001}: x = 0 gives (1,j,k) = (0,0,0). x > 0 avoiding 001:
        //             packing puts x at some q <= y < i, so (q,j,k) = (x,x,x).
        //  {000,011}: x = 0 as above; x > 0 gives (1,j,k) = (0,x,x).
        //  {000,021}: x = 0 as above; x > 0 gives (1,i,j) = (0,y,x).
        //  {001,010}: x = 0 gives (1,i,j) = (0,y,0); x > 0 avoiding 001 puts
        //             x at q <= y < i, so (q,i,j) = (x,y,x).
        //  {010,011}: x = 0 gives 010 as above; x > 0 gives (1,j,k) = (0,x,x).
        //  {010,021}: x = 0 gives 010; x > 0 gives (1,i,j) = (0,y,x).
        t[static_cast<size_t>(parse_word("100"))] = {
            wset({"000", "001"}), wset({"000", "011"}), wset({"000", "021"}),
            wset({"001", "010"}), wset({"010", "011"}), wset({"010", "021"})};

        // 101 = (v,u,v), u < v, so v >= 1 and i >= 2.
        //  {001}:     avoiding 001, packing puts u at q <= v < i < j and
        //             (q,j,k) = (u,u,v) forms 001 anyway — impossible.
        //  {011}:     (1,i,k) = (0,v,v).
        //  {010,012}: u = 0 gives (1,i,j) = (0,v,0); u > 0 gives
        //             (1,j,k) = (0,u,v).
        //  {010,021}: u = 0 gives 010; u > 0 gives (1,i,j) = (0,v,u).
        t[static_cast<size_t>(parse_word("101"))] = {
            wset({"001"}), wset({"011"}), wset({"010", "012"}), wset({"010", "021"})};

        // 110 = (v,v,u), u < v.
        //  {011}:     (1,i,j) = (0,v,v).
        //  {001,010}: u = 0 gives (1,i,k) = (0,v,0); u > 0 avoiding 001 puts
        //             u at q <= v < i, so (q,i,k) = (u,v,u).
        //  {010,021}: u = 0 gives 010; u > 0 gives (1,i,k) = (0,v,u).
        t[static_cast<size_t>(parse_word("110"))] = {
            wset({"011"}), wset({"001", "010"}), wset({"010", "021"})};

        // 102 = (v,u,x), u < v < x.
        //  {001}:     avoiding 001 puts u at q <= v < i < j (packing), and
        //             (q,j,k) = (u,u,x) forms 001 — impossible.
        //  {012}:     u = 0 gives (1,i,k) = (0,v,x); u > 0 gives
        //             (1,j,k) = (0,u,x).
        //  {010,021}: u = 0 gives (1,i,j) = (0,v,0); u > 0 gives
        //             (1,i,j) = (0,v,u).
        t[static_cast<size_t>(parse_word("102"))] = {
            wset({"001"}), wset({"012"}), wset({"010", "021"})};

        // 120 = (y,z,x), x < y < z, so y >= 1 and i >= 2.
        //  {012}:     (1,i,j) = (0,y,z).
        //  {001,010}: x = 0 gives (1,i,k) = (0,y,0); x > 0 avoiding 001 puts
        //             x at q <= y < i, so (q,i,k) = (x,y,x).
        //  {010,021}: x = 0 gives 010; x > 0 gives (1,i,k) = (0,y,x).
        t[static_cast<size_t>(parse_word("120"))] = {
            wset({"012"}), wset({"001", "010"}), wset({"010", "021"})};

        // 021 = (x,z,y), x < y < z, so y >= 1 and z occurs at j >= z+1.
        //  {001,010}: avoiding 001 puts y at q <= z < j, so (q,j,k) = (y,z,y).
        //  {001,011}: avoiding 001 puts y at q <= z with q >= 2 (y >= 1), so
        //             (1,q,k) = (0,y,y).
        //  {001,012}: same q gives (1,q,j) = (0,y,z).
        t[static_cast<size_t>(parse_word("021"))] = {
            wset({"001", "010"}), wset({"001", "011"}), wset({"001", "012"})};

        // 201 = (z,x,y), x < y < z, so z >= 2 and i >= 3.
        //  {001}:     avoiding 001 puts x at q <= z < i (packing, x < z), and
        //             (q,j,k) = (x,x,y) forms 001 — impossible.
        //  {021}:     (1,i,k) = (0,z,y), 0 < y < z.
        //  {000,011}: avoiding 011 makes all positive values pairwise distinct
        //             (a repeat at q < r gives (1,q,r) = (0,v,v)), and
        //             avoiding 000 caps zeros at two. Positions 2..i-1 then
        //             hold distinct positives from {1..i-2} plus at most one
        //             zero, so at most one value of {1..i-2} is missing
        //             before i. If x = 0, zeros at 1 and j force every value
        //             of {1..i-2} to appear before i, in particular y <= z-1
        //             <= i-2, which then repeats at k. If x > 0, at most one
        //             of the distinct positives x, y <= i-2 can be missing
        //             before i, and the present one repeats at j or k.
        //  {000,012}: avoiding 012 forces e_2 = ... = e_z = 0 (a positive
        //             e_p with p <= z would give (1,p,i) = (0,e_p,z)). If
        //             z >= 3 that is three zeros; if z = 2 then x = 0 and
        //             positions 1, 2, j hold three zeros.
        //  {010,012}: x = 0 gives (1,i,j) = (0,z,0); x > 0 gives
        //             (1,j,k) = (0,x,y).
        t[static_cast<size_t>(parse_word("201"))] = {
            wset({"001"}), wset({"021"}), wset({"000", "011"}),
            wset({"000", "012"}), wset({"010", "012"})};

        // 210 = (z,y,x), x < y < z, so z >= 2 and i >= 3.
        //  {021}:     (1,i,j) = (0,z,y), 0 < y < z.
        //  {000,011}: as for 201: distinct positives, at most two zeros, so
        //             at most one value of {1..i-2} is missing before i.
        //             If x = 0 (zeros at 1 and k) nothing is missing and
        //             y <= i-2 repeats at j; if x > 0, one of x, y appears
        //             before i and repeats at k or j.
        //  {000,012}: avoiding 012 forces e_2 = ... = e_z = 0; z >= 3 gives
        //             three zeros, and z = 2 means x = 0 with zeros at
        //             positions 1, 2, k.
        //  {001,010}: avoiding 001 puts y at q <= z < i, so (q,i,j) = (y,z,y).
        //  {001,011}: the same q has q >= 2, so (1,q,j) = (0,y,y).
        //  {001,110}: (q,j,k) = (y,y,x).
        //  {001,012}: (1,q,i) = (0,y,z).
        //  {001,120}: (q,i,k) = (y,z,x).
        t[static_cast<size_t>(parse_word("210"))] = {
            wset({"021"}),        wset({"000", "011"}), wset({"000", "012"}),
            wset({"001", "010"}), wset({"001", "011"}), wset({"001", "110"}),
            wset({"001", "012"}), wset({"001", "120"})};

        return t;
    }();
    return kClauses;
}

WordSet closed_word_set(WordSet w) {
    const auto& clauses = word_implication_clauses();
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < kWordCount; ++i) {
            const WordSet bit = static_cast<WordSet>(1u << i);
            if (w & bit) continue;
            for (WordSet c : clauses[static_cast<size_t>(i)]) {
                // every occurrence of word i forces a word of c; with all of
                // c forbidden, forbidding i as well changes nothing
                if ((c & w) == c) {
                    w |= bit;
                    grew = true;
                    break;
                }
            }
        }
    }
    return w;
}

WordSet closed_triple_words(const Triple& t) { return closed_word_set(triple_words(t)); }

// ---- class names ------------------------------------------------------------------

// One entry per class: curated label and a representative pattern, ordered
// by label (count value, then letter). Letters distinguish classes sharing
// a length-7 count; the six ultimately constant classes are named by their
// stable value, and the unsatisfiable class by 7! = 5040.
const std::vector<std::pair<std::string, std::string>>& class_label_table() {
    static const std::vector<std::pair<std::string, std::string>> kTable = {
        {"0A", "(-,-,-)"},      {"0B", "(<=,<=,-)"},    {"1", "(-,-,!=)"},
        {"2A", "(-,-,<)"},      {"2B", "(-,!=,-)"},     {"3", "(-,!=,!=)"},
        {"7A", "(-,<,-)"},      {"7B", "(-,>=,-)"},     {"7C", "(=,-,-)"},
        {"7D", "(!=,-,-)"},     {"12A", "(!=,-,!=)"},   {"12B", "(>=,-,!=)"},
        {"21", "(=,<=,-)"},     {"22A", "(<,!=,-)"},    {"22B", "(<,-,<)"},
        {"22C", "(>=,!=,-)"},   {"33A", "(!=,<=,-)"},   {"33B", "(>=,<=,!=)"},
        {"64A", "(=,<,-)"},     {"64B", "(<,<=,-)"},    {"64C", "(<,>=,-)"},
        {"64D", "(<=,=,-)"},    {"121A", "(!=,<,-)"},   {"121B", "(!=,!=,!=)"},
        {"121C", "(-,>=,!=)"},  {"151", "(!=,<,<=)"},   {"185", "(!=,<,!=)"},
        {"187", "(-,-,>=)"},    {"193", "(<=,>=,!=)"},  {"214", "(-,>=,>=)"},
        {"233", "(<,<,-)"},     {"247", "(<=,-,>=)"},   {"304", "(-,-,=)"},
        {"345", "(-,>=,=)"},    {"429A", "(-,>,-)"},    {"429B", "(-,>=,<)"},
        {"429C", "(>=,-,>=)"},  {"523", "(!=,=,-)"},    {"663A", "(-,!=,>=)"},
        {"663B", "(!=,-,>=)"},  {"733", "(!=,!=,>=)"},  {"746A", "(-,>,>=)"},
        {"746B", "(!=,>=,>=)"}, {"759", "(<=,!=,>=)"},  {"772A", "(-,<=,>=)"},
        {"772B", "(>=,>=,-)"},  {"805", "(<=,>,!=)"},   {"830", "(!=,>,>=)"},
        {"845", "(<,-,>=)"},    {"877A", "(<,=,-)"},    {"877B", "(=,>=,-)"},
        {"877C", "(-,!=,=)"},   {"877D", "(>=,-,=)"},   {"924", "(>,-,-)"},
        {"979", "(-,>,=)"},     {"1016", "(>,-,!=)"},   {"1064", "(>,<=,-)"},
        {"1079A", "(>,!=,-)"},  {"1079B", "(<,>,!=)"},  {"1176", "(>,<=,!=)"},
        {"1253", "(>,!=,!=)"},  {"1265", "(>,<,-)"},    {"1267", "(>=,=,-)"},
        {"1347", "(>,-,<=)"},   {"1385", "(=,=,-)"},    {"1420", "(-,-,>)"},
        {"1465", "(>,<,!=)"},   {"1509", "(-,>=,>)"},   {"1694", "(>,-,<)"},
        {"1806A", "(-,>,<)"},   {"1806B", "(>,-,>=)"},  {"1806C", "(>=,-,>)"},
        {"1806D", "(>=,!=,>=)"}, {"1833A", "(-,!=,>)"}, {"1833B", "(!=,-,>)"},
        {"1953A", "(-,>,>)"},   {"1953B", "(!=,>=,>)"}, {"2074", "(>=,>=,>)"},
        {"2091", "(<=,>,>)"},   {"2106", "(>,<=,>=)"},  {"2468", "(!=,!=,>)"},
        {"2549A", "(>,-,>)"},   {"2549B", "(>,!=,>=)"}, {"2549C", "(>=,!=,>)"},
        {"2625", "(!=,>,>)"},   {"2803", "(<,-,>)"},    {"2958A", "(-,<,>=)"},
        {"2958B", "(>,>=,-)"},  {"2958C", "(>=,>,-)"},  {"2958D", "(-,<=,>)"},
        {"3207A", "(-,<,=)"},   {"3207B", "(=,>,-)"},   {"3399", "(>,=,-)"},
        {"3720", "(>,!=,>)"},   {"4306A", "(-,<,>)"},   {"4306B", "(>,>,-)"},
        {"5040", "(=,=,!=)"},
    };
    return kTable;
}

// ---- equivalence and Wilf partitions ----------------------------------------------

int ClassificationReport::class_index(const Triple& t) const {
    const WordSet c = closed_triple_words(t);
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].closure == c) return static_cast<int>(i);
    return -1;
}

const EquivalenceClass& ClassificationReport::class_of(const Triple& t) const {
    const int i = class_index(t);
    if (i < 0) throw std::logic_error("pattern outside every class: " + triple_name(t));
    return classes[static_cast<size_t>(i)];
}

ClassificationReport equivalence_classes() {
    ClassificationReport rep;
    std::map<WordSet, int> index_of;
    for (const auto& [label, rep_triple] : class_label_table()) {
        EquivalenceClass c;
        c.label = label;
        c.closure = closed_triple_words(parse_triple(rep_triple));
        if (!index_of.emplace(c.closure, static_cast<int>(rep.classes.size())).second)
            throw std::logic_error("two curated labels name the same class: " + label);
        rep.classes.push_back(std::move(c));
    }
    // Fallback for a class no curated label covers: name it after its first
    // member. The unit tests pin the curated table as exhaustive, so this
    // only matters if the table is edited.
    std::map<WordSet, std::vector<Triple>> unlabeled;
    for (const Triple& t : all_triples()) {
        const WordSet c = closed_triple_words(t);
        const auto it = index_of.find(c);
        if (it != index_of.end())
            rep.classes[static_cast<size_t>(it->second)].members.push_back(t);
        else
            unlabeled[c].push_back(t);
    }
    for (auto& [closure, members] : unlabeled) {
        EquivalenceClass c;
        c.closure = closure;
        c.label = triple_name(members.front());
        c.members = std::move(members);
        rep.classes.push_back(std::move(c));
    }
    for (const EquivalenceClass& c : rep.classes)
        if (c.members.empty())
            throw std::logic_error("curated class lost all members: " + c.label);
    return rep;
}

ClassificationReport wilf_classes(int horizon, int jobs) {
    if (horizon < 1) throw std::invalid_argument("Wilf horizon must be at least 1");
    ClassificationReport rep = equivalence_classes();
    rep.horizon = horizon;
    if (horizon != 9)
        rep.warning = "Wilf grouping computed on lengths 1.." + std::to_string(horizon) +
                      "; the reference grouping uses 9, so blocks may merge or split";
    std::vector<WordSet> sets;
    sets.reserve(rep.classes.size());
    for (const EquivalenceClass& c : rep.classes) sets.push_back(c.closure);
    const auto counts = count_avoiders_batch_lengths(horizon, sets, jobs);
    std::map<std::vector<BigInt>, std::vector<int>> blocks;
    for (size_t i = 0; i < rep.classes.size(); ++i) {
        rep.classes[i].counts = counts[i];
        blocks[counts[i]].push_back(static_cast<int>(i));
    }
    for (auto& [shared, indices] : blocks) {
        WilfClass w;
        w.counts = shared;
        w.class_indices = indices;  // ascending by construction
        rep.wilf.push_back(std::move(w));
    }
    return rep;
}

std::string class_label(const Triple& t) {
    static const ClassificationReport kPartition = equivalence_classes();
    return kPartition.class_of(t).label;
}

// ---- structural predicates ---------------------------------------------------------

namespace {

// rel holds between every adjacent pair inside the 0-based inclusive
// position range [from, to]; empty and single-element ranges pass.
bool run_rel(const IntSeq& e, int from, int to, Rel r) {
    for (int p = from; p < to; ++p)
        if (!rel_holds(e[static_cast<size_t>(p)], e[static_cast<size_t>(p + 1)], r)) return false;
    return true;
}

IntSeq positive_entries(const IntSeq& e) {
    IntSeq out;
    for (int v : e)
        if (v > 0) out.push_back(v);
    return out;
}

bool positives_run(const IntSeq& e, Rel r) {
    const IntSeq p = positive_entries(e);
    return run_rel(p, 0, static_cast<int>(p.size()) - 1, r);
}

// prefix satisfying `head` through position t, then a boundary step, then a
// tail satisfying `tail` — existentially over the split point.
bool split_shape(const IntSeq& e, Rel head, Rel boundary, Rel tail) {
    const int n = static_cast<int>(e.size());
    for (int t = 1; t <= n; ++t) {
        if (!run_rel(e, 0, t - 1, head)) continue;  // larger t only gets harder
        if (t == n) return true;
        if (rel_holds(e[static_cast<size_t>(t - 1)], e[static_cast<size_t>(t)], boundary) &&
            run_rel(e, t, n - 1, tail))
            return true;
    }
    return false;
}

// all-zero prefix, then a tail satisfying `tail` from the first positive on.
bool zeros_then(const IntSeq& e, Rel tail) {
    const int n = static_cast<int>(e.size());
    int f = 0;
    while (f < n && e[static_cast<size_t>(f)] == 0) ++f;
    return run_rel(e, f, n - 1, tail);
}

bool all_distinct(IntSeq v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

int distinct_count(IntSeq v) {
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

bool p_all_but_last_equal(const IntSeq& e) {
    return run_rel(e, 0, static_cast<int>(e.size()) - 2, Rel::EQ);
}
bool p_two_constant_blocks(const IntSeq& e) { return split_shape(e, Rel::EQ, Rel::LE, Rel::EQ); }
bool p_const_then_sinc(const IntSeq& e) { return split_shape(e, Rel::EQ, Rel::LT, Rel::LT); }
bool p_all_but_last_winc(const IntSeq& e) {
    return run_rel(e, 0, static_cast<int>(e.size()) - 2, Rel::LE);
}
bool p_weakly_increasing(const IntSeq& e) {
    return run_rel(e, 0, static_cast<int>(e.size()) - 1, Rel::LE);
}
bool p_wstep_then_sinc(const IntSeq& e) {
    const int n = static_cast<int>(e.size());
    if (n <= 1) return true;
    return e[0] <= e[1] && run_rel(e, 1, n - 1, Rel::LT);
}
bool p_all_but_last_sinc(const IntSeq& e) {
    return run_rel(e, 0, static_cast<int>(e.size()) - 2, Rel::LT);
}
bool p_wdec_from_second(const IntSeq& e) {
    return run_rel(e, 1, static_cast<int>(e.size()) - 1, Rel::GE);
}
bool p_at_most_one_positive(const IntSeq& e) {
    int pos = 0;
    for (int v : e) pos += v > 0;
    return pos <= 1;
}
bool p_zeros_then_wdec(const IntSeq& e) { return zeros_then(e, Rel::GE); }
bool p_zeros_then_sdec(const IntSeq& e) { return zeros_then(e, Rel::GT); }
bool p_winc_sdrop_wdec(const IntSeq& e) { return split_shape(e, Rel::LE, Rel::GT, Rel::GE); }
bool p_winc_sdrop_sdec(const IntSeq& e) { return split_shape(e, Rel::LE, Rel::GT, Rel::GT); }
bool p_winc_wdrop_const(const IntSeq& e) { return split_shape(e, Rel::LE, Rel::GE, Rel::EQ); }
bool p_sinc_wdrop_const(const IntSeq& e) { return split_shape(e, Rel::LT, Rel::GE, Rel::EQ); }
bool p_sinc_wdrop_wdec(const IntSeq& e) { return split_shape(e, Rel::LT, Rel::GE, Rel::GE); }
bool p_sinc_wdrop_sdec(const IntSeq& e) { return split_shape(e, Rel::LT, Rel::GE, Rel::GT); }
bool p_sinc_plateau_sdec(const IntSeq& e) {
    const int n = static_cast<int>(e.size());
    for (int t = 1; t <= n; ++t) {
        if (!run_rel(e, 0, t - 1, Rel::LT)) break;
        for (int s = t; s <= n; ++s) {
            if (!run_rel(e, t - 1, s - 1, Rel::EQ)) break;
            if (run_rel(e, s - 1, n - 1, Rel::GT)) return true;
        }
    }
    return false;
}
bool p_positives_sdec(const IntSeq& e) { return positives_run(e, Rel::GT); }
bool p_positives_wdec(const IntSeq& e) { return positives_run(e, Rel::GE); }
bool p_positives_sinc(const IntSeq& e) { return positives_run(e, Rel::LT); }
bool p_positives_winc(const IntSeq& e) { return positives_run(e, Rel::LE); }
bool p_all_but_first_distinct(const IntSeq& e) {
    if (e.empty()) return true;
    return all_distinct(IntSeq(e.begin() + 1, e.end()));
}
bool p_at_most_two_distinct(const IntSeq& e) { return distinct_count(e) <= 2; }
bool p_positives_distinct(const IntSeq& e) { return all_distinct(positive_entries(e)); }
bool p_no_value_thrice(const IntSeq& e) {
    IntSeq v = e;
    std::sort(v.begin(), v.end());
    for (size_t i = 2; i < v.size(); ++i)
        if (v[i] == v[i - 2]) return false;
    return true;
}
bool p_equal_values_contiguous(const IntSeq& e) {
    const int n = static_cast<int>(e.size());
    for (int p = 0; p < n; ++p)
        for (int q = p + 2; q < n; ++q)
            if (e[static_cast<size_t>(p)] == e[static_cast<size_t>(q)])
                for (int r = p + 1; r < q; ++r)
                    if (e[static_cast<size_t>(r)] != e[static_cast<size_t>(p)]) return false;
    return true;
}
bool p_equal_values_adjacent(const IntSeq& e) {
    const int n = static_cast<int>(e.size());
    for (int p = 0; p < n; ++p)
        for (int q = p + 2; q < n; ++q)
            if (e[static_cast<size_t>(p)] == e[static_cast<size_t>(q)]) return false;
    return true;
}

const std::map<std::string, bool (*)(const IntSeq&)>& predicate_registry() {
    static const std::map<std::string, bool (*)(const IntSeq&)> kRegistry = {
        {"all-but-last-equal", p_all_but_last_equal},
        {"two-constant-blocks", p_two_constant_blocks},
        {"const-then-sinc", p_const_then_sinc},
        {"all-but-last-winc", p_all_but_last_winc},
        {"weakly-increasing", p_weakly_increasing},
        {"wstep-then-sinc", p_wstep_then_sinc},
        {"all-but-last-sinc", p_all_but_last_sinc},
        {"wdec-from-second", p_wdec_from_second},
        {"at-most-one-positive", p_at_most_one_positive},
        {"zeros-then-wdec", p_zeros_then_wdec},
        {"zeros-then-sdec", p_zeros_then_sdec},
        {"winc-sdrop-wdec", p_winc_sdrop_wdec},
        {"winc-sdrop-sdec", p_winc_sdrop_sdec},
        {"winc-wdrop-const", p_winc_wdrop_const},
        {"sinc-wdrop-const", p_sinc_wdrop_const},
        {"sinc-wdrop-wdec", p_sinc_wdrop_wdec},
        {"sinc-wdrop-sdec", p_sinc_wdrop_sdec},
        {"sinc-plateau-sdec", p_sinc_plateau_sdec},
        {"positives-sdec", p_positives_sdec},
        {"positives-wdec", p_positives_wdec},
        {"positives-sinc", p_positives_sinc},
        {"positives-winc", p_positives_winc},
        {"all-but-first-distinct", p_all_but_first_distinct},
        {"at-most-two-distinct-values", p_at_most_two_distinct},
        {"positives-distinct", p_positives_distinct},
        {"no-value-thrice", p_no_value_thrice},
        {"equal-values-contiguous", p_equal_values_contiguous},
        {"equal-values-adjacent", p_equal_values_adjacent},
    };
    return kRegistry;
}

}  // namespace

bool structural_predicate(const std::string& name, const IntSeq& e) {
    const auto& reg = predicate_registry();
    const auto it = reg.find(name);
    if (it == reg.end()) throw std::invalid_argument("unknown structural predicate: " + name);
    require_inversion_sequence(e);
    return it->second(e);
}

bool is_structural_predicate(const std::string& name) {
    return predicate_registry().count(name) > 0;
}

// ---- table reproduction -------------------------------------------------------------

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& ex) {
        throw std::runtime_error("malformed JSON in " + path + ": " + ex.what());
    }
    return doc;
}

std::string opt_string(const json& row, const char* key) {
    if (!row.contains(key) || row.at(key).is_null()) return {};
    return row.at(key).get<std::string>();
}

void check_cell(TableDiff& diff, const std::string& row, const std::string& field,
                const std::string& expected, const std::string& actual,
                const std::string& note = {}) {
    if (expected != actual) diff.mismatches.push_back({row, field, expected, actual, note});
}

// numeric prefix of a label ("429A" -> 429, "5040" -> 5040)
long long label_value(const std::string& label) {
    size_t pos = 0;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
    if (pos == 0) throw std::invalid_argument("label has no numeric prefix: " + label);
    return std::stoll(label.substr(0, pos));
}

std::string terms_to_string(const std::vector<BigInt>& t, size_t count) {
    std::string out;
    for (size_t i = 0; i < count && i < t.size(); ++i) {
        if (i) out += ",";
        out += t[i].str();
    }
    return out;
}

// A recorded erratum: the printed value must still disagree with the
// computed one, else the record is stale and surfaces as a mismatch.
void record_erratum(TableDiff& diff, const std::string& row, const std::string& field,
                    const std::string& printed, const std::string& computed,
                    const std::string& note) {
    if (printed == computed)
        diff.mismatches.push_back(
            {row, field, printed, computed, "stale erratum: printed value now matches"});
    else
        diff.errata.push_back({row, field, printed, computed, note});
}

TableDiff reproduce_table1(const std::string& data_dir, int jobs) {
    TableDiff diff;
    diff.table = 1;
    const json doc = load_json(data_dir + "/tables/table1.json");
    struct RowData {
        std::string label, triple_text, predicate, listed_triple, counted_by;
        WordSet words = 0;
        WordSet listed_words = 0;
        bool listed_differs = false;
        bool predicate_ok = true;
    };
    std::vector<RowData> rows;
    for (const json& r : doc.at("rows")) {
        RowData d;
        d.label = r.at("label").get<std::string>();
        d.triple_text = r.at("triple").get<std::string>();
        d.predicate = r.at("predicate").get<std::string>();
        d.listed_triple = opt_string(r, "listed_triple");
        d.counted_by = opt_string(r, "counted_by");
        d.words = triple_words(parse_triple(d.triple_text));
        if (!d.listed_triple.empty())
            d.listed_words = triple_words(parse_triple(d.listed_triple));
        if (!is_structural_predicate(d.predicate)) {
            diff.mismatches.push_back({d.label, "predicate", d.predicate, "",
                                       "unknown structural predicate"});
            return diff;
        }
        rows.push_back(std::move(d));
    }
    // One shared scan of I_1..I_7: each predicate must agree with avoidance
    // of the row's pattern on every sequence, and a listed (printed) triple
    // that differs from the corrected one must be seen to disagree.
    const auto& reg = predicate_registry();
    for (int n = 1; n <= 7; ++n) {
        for_each_inversion_sequence(n, [&](const IntSeq& e) {
            const WordSet mask = pattern_mask(e);
            for (RowData& d : rows) {
                if (d.predicate_ok && reg.at(d.predicate)(e) != ((mask & d.words) == 0))
                    d.predicate_ok = false;
                if (!d.listed_triple.empty() &&
                    ((mask & d.words) == 0) != ((mask & d.listed_words) == 0))
                    d.listed_differs = true;
            }
        });
    }
    std::vector<WordSet> sets;
    for (const RowData& d : rows) sets.push_back(d.words);
    const auto counts = count_avoiders_batch_lengths(8, sets, jobs);
    for (size_t i = 0; i < rows.size(); ++i) {
        const RowData& d = rows[i];
        ++diff.rows_checked;
        check_cell(diff, d.label, "label", d.label, class_label(parse_triple(d.triple_text)));
        check_cell(diff, d.label, "a7", std::to_string(label_value(d.label)),
                   counts[i][6].str());
        if (!d.predicate_ok)
            diff.mismatches.push_back({d.label, "characterization", d.predicate, "",
                                       "predicate disagrees with avoidance on some sequence"});
        if (!d.listed_triple.empty()) {
            record_erratum(diff, d.label, "triple", d.listed_triple, d.triple_text,
                           "printed pattern duplicates another row and contradicts the "
                           "characterization");
            if (!d.listed_differs)
                diff.mismatches.push_back({d.label, "triple", d.listed_triple, d.triple_text,
                                           "printed and corrected pattern agree on I_1..I_7"});
        }
        if (!d.counted_by.empty()) {
            if (!is_known_sequence(d.counted_by)) {
                diff.mismatches.push_back(
                    {d.label, "counted_by", d.counted_by, "", "not a registered sequence"});
            } else {
                check_cell(diff, d.label, "counted_by",
                           terms_to_string(known_sequence(d.counted_by, 8), 8),
                           terms_to_string(counts[i], 8));
            }
        }
    }
    return diff;
}

// Shared by tables 2 and 3; table 3 rows also carry the printed a_1..a_9.
TableDiff reproduce_table23(int which, const std::string& data_dir, int jobs) {
    TableDiff diff;
    diff.table = which;
    const json doc = load_json(data_dir + "/tables/table" + std::to_string(which) + ".json");
    const auto db = load_sequence_db(data_dir + "/sequences.json");
    struct RowData {
        std::string label, triple_text, words, listed_words, oeis, note;
        std::vector<BigInt> printed;
    };
    std::vector<RowData> rows;
    for (const json& r : doc.at("rows")) {
        RowData d;
        d.label = r.at("label").get<std::string>();
        d.triple_text = r.at("triple").get<std::string>();
        d.words = opt_string(r, "words");
        d.listed_words = opt_string(r, "listed_words");
        d.oeis = opt_string(r, "oeis");
        d.note = opt_string(r, "note");
        if (r.contains("terms"))
            for (const json& t : r.at("terms")) d.printed.emplace_back(t.get<long long>());
        rows.push_back(std::move(d));
    }
    std::vector<WordSet> sets;
    for (const RowData& d : rows) sets.push_back(triple_words(parse_triple(d.triple_text)));
    const auto counts = count_avoiders_batch_lengths(9, sets, jobs);
    for (size_t i = 0; i < rows.size(); ++i) {
        const RowData& d = rows[i];
        ++diff.rows_checked;
        check_cell(diff, d.label, "label", d.label, class_label(parse_triple(d.triple_text)));
        check_cell(diff, d.label, "a7", std::to_string(label_value(d.label)),
                   counts[i][6].str());
        if (!d.printed.empty())
            check_cell(diff, d.label, "terms", terms_to_string(d.printed, 9),
                       terms_to_string(counts[i], 9));
        if (!d.words.empty()) {
            const std::string computed = word_set_to_string(sets[i]);
            check_cell(diff, d.label, "words", word_set_to_string(parse_word_set(d.words)),
                       computed);
            if (!d.listed_words.empty())
                record_erratum(diff, d.label, "words",
                               word_set_to_string(parse_word_set(d.listed_words)), computed,
                               d.note.empty() ? "printed word set disagrees with the row pattern"
                                              : d.note);
        }
        if (!d.oeis.empty()) {
            std::vector<KnownSequenceEntry> entry;
            for (const KnownSequenceEntry& k : db)
                if (k.id == d.oeis) entry.push_back(k);
            if (entry.empty()) {
                diff.mismatches.push_back(
                    {d.label, "oeis", d.oeis, "", "identifier missing from bundled database"});
            } else if (fingerprint(counts[i], entry).empty()) {
                diff.mismatches.push_back({d.label, "oeis", d.oeis,
                                           terms_to_string(counts[i], 9),
                                           "counts not found inside the bundled prefix"});
            }
        }
    }
    return diff;
}

}  // namespace

TableDiff reproduce_table(int which, const std::string& data_dir, int jobs) {
    if (which == 1) return reproduce_table1(data_dir, jobs);
    if (which == 2 || which == 3) return reproduce_table23(which, data_dir, jobs);
    throw std::invalid_argument("no such table: " + std::to_string(which));
}

// ---- ultimately constant classes ----------------------------------------------------

std::vector<ConstantClassReport> ultimately_constant_report(int horizon, int jobs) {
    if (horizon < 11) throw std::invalid_argument("constancy horizon must be at least 11");
    const ClassificationReport rep = wilf_classes(9, jobs);
    const auto& table = class_label_table();
    std::vector<ConstantClassReport> out;
    for (size_t ci = 0; ci < rep.classes.size(); ++ci) {
        const EquivalenceClass& c = rep.classes[ci];
        // every class with a growing sequence grows strictly by length 9,
        // so a flat or falling step there singles out the candidates cheaply
        if (c.counts[8] > c.counts[7]) continue;
        ConstantClassReport r;
        r.label = c.label;
        // classes come in curated order, so the display representative is
        // the one from the label table rather than the first member found
        r.representative =
            ci < table.size() ? parse_triple(table[ci].second) : c.members.front();
        r.terms = count_avoiders_lengths(horizon, c.closure, 1);
        int s = horizon;
        while (s >= 2 && r.terms[static_cast<size_t>(s - 2)] == r.terms.back()) --s;
        r.stable_from = s;
        r.stable_value = r.terms.back();
        if (s <= horizon - 2) out.push_back(std::move(r));
    }
    return out;
}

// ---- label map file ------------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> load_label_map(const std::string& path) {
    const json doc = load_json(path);
    const auto& table = class_label_table();
    if (doc.size() != table.size())
        throw std::runtime_error(path + ": expected " + std::to_string(table.size()) +
                                 " label entries, found " + std::to_string(doc.size()));
    std::vector<std::pair<std::string, std::string>> out;
    for (size_t i = 0; i < table.size(); ++i) {
        const json& row = doc.at(i);
        const std::string label = row.at("label").get<std::string>();
        const std::string rep = row.at("representative").get<std::string>();
        const std::string closure = row.at("closure").get<std::string>();
        if (label != table[i].first || rep != table[i].second)
            throw std::runtime_error(path + ": entry " + std::to_string(i) +
                                     " disagrees with the built-in label table");
        const std::string computed = word_set_to_string(closed_triple_words(parse_triple(rep)));
        if (closure != computed)
            throw std::runtime_error(path + ": stored closure for " + label +
                                     " is not the closed word set of its representative");
        out.emplace_back(closure, label);
    }
    return out;
}

}  // namespace invseq
