/*
 * avoidance.cpp
 *
 * Pattern parsing, the triple -> word-set reduction, and the exhaustive
 * counting engines. The single-pattern counter prunes a branch as soon as
 * the appended entry completes a forbidden order type; the batch counter
 * walks the full prefix tree once, carrying the realized-word mask
 * incrementally, and serves every requested pattern from the same pass.
 * Counts are kept in uint64 internally (lengths are capped far below
 * overflow) and widened at the API boundary.
 */

#include "invseq/avoidance.hpp"

#include <array>
#include <stdexcept>
#include <thread>

namespace invseq {

const std::array<std::array<int, 3>, 13> kWordDigits = {{{0, 0, 0},
                                                         {0, 0, 1},
                                                         {0, 1, 0},
                                                         {1, 0, 0},
                                                         {0, 1, 1},
                                                         {1, 0, 1},
                                                         {1, 1, 0},
                                                         {0, 1, 2},
                                                         {0, 2, 1},
                                                         {1, 0, 2},
                                                         {1, 2, 0},
                                                         {2, 0, 1},
                                                         {2, 1, 0}}};

namespace {

// 0 = less, 1 = equal, 2 = greater
inline int cmp3(int a, int b) { return a < b ? 0 : (a == b ? 1 : 2); }

const std::array<int8_t, 27>& sign_table() {
    static const std::array<int8_t, 27> table = [] {
        std::array<int8_t, 27> t{};
        t.fill(-1);
        for (int w = 0; w < kWordCount; ++w) {
            const auto& d = kWordDigits[static_cast<size_t>(w)];
            t[static_cast<size_t>(cmp3(d[0], d[1]) * 9 + cmp3(d[1], d[2]) * 3 +
                                  cmp3(d[0], d[2]))] = static_cast<int8_t>(w);
        }
        return t;
    }();
    return table;
}

// hard cap keeping per-length tallies inside uint64 (20! < 2^64)
constexpr int kMaxEngineLength = 20;

void require_engine_length(int n) {
    if (n < 0) throw std::invalid_argument("counting needs length >= 0");
    if (n > kMaxEngineLength)
        throw std::invalid_argument("length " + std::to_string(n) +
                                    " exceeds the exhaustive-engine cap of " +
                                    std::to_string(kMaxEngineLength));
}

uint64_t factorial_u64(int n) {
    uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<uint64_t>(i);
    return r;
}

// Pruned DFS for one pattern: counts[d] accumulates avoiders of length d.
// e has valid avoiding entries for positions < d; appending c at 0-based
// position d is legal when no pair i<j<d completes a forbidden word.
void count_one_rec(IntSeq& e, int d, int n, WordSet w, std::vector<uint64_t>& counts) {
    if (d > 0) ++counts[static_cast<size_t>(d)];
    if (d == n) return;
    for (int c = 0; c <= d; ++c) {
        bool ok = true;
        for (int j = 1; j < d && ok; ++j)
            for (int i = 0; i < j; ++i)
                if (w & (1u << order_type(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)], c))) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        e[static_cast<size_t>(d)] = c;
        count_one_rec(e, d + 1, n, w, counts);
    }
}

struct PrefixTask {
    IntSeq e;
    WordSet mask;  // realized order types of e (batch engine only)
};

// Batch walk below one prefix: full tree, incremental realized-word mask,
// every pattern disjoint from the node mask gains one avoider at that
// length. A node whose mask covers all 13 words counts for nothing below.
void batch_rec(IntSeq& e, WordSet mask, int d, int n, const std::vector<WordSet>& patterns,
               std::vector<std::vector<uint64_t>>& counts) {
    if (d > 0)
        for (size_t p = 0; p < patterns.size(); ++p)
            if ((mask & patterns[p]) == 0) ++counts[p][static_cast<size_t>(d)];
    if (d == n || mask == kAllWords) return;
    for (int c = 0; c <= d; ++c) {
        WordSet m2 = mask;
        for (int j = 1; j < d; ++j)
            for (int i = 0; i < j; ++i)
                m2 |= static_cast<WordSet>(
                    1u << order_type(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)], c));
        e[static_cast<size_t>(d)] = c;
        batch_rec(e, m2, d + 1, n, patterns, counts);
    }
}

// Collects the depth-P frontier (used to split work across threads) while
// counting every node of depth <= P exactly once.
void frontier_rec(IntSeq& e, WordSet mask, int d, int split,
                  const std::vector<WordSet>& patterns,
                  std::vector<std::vector<uint64_t>>& counts, std::vector<PrefixTask>& out) {
    if (d > 0)
        for (size_t p = 0; p < patterns.size(); ++p)
            if ((mask & patterns[p]) == 0) ++counts[p][static_cast<size_t>(d)];
    if (d == split) {
        if (mask != kAllWords) out.push_back(PrefixTask{IntSeq(e.begin(), e.begin() + d), mask});
        return;
    }
    for (int c = 0; c <= d; ++c) {
        WordSet m2 = mask;
        for (int j = 1; j < d; ++j)
            for (int i = 0; i < j; ++i)
                m2 |= static_cast<WordSet>(
                    1u << order_type(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)], c));
        e[static_cast<size_t>(d)] = c;
        frontier_rec(e, m2, d + 1, split, patterns, counts, out);
    }
}

// Shared implementation: per-pattern per-length tallies, optionally split
// over threads at a fixed prefix depth. Integer sums make the result
// independent of the split.
std::vector<std::vector<uint64_t>> batch_counts_u64(int n, const std::vector<WordSet>& patterns,
                                                    int jobs) {
    require_engine_length(n);
    if (jobs < 1) jobs = 1;
    std::vector<std::vector<uint64_t>> counts(patterns.size(),
                                              std::vector<uint64_t>(static_cast<size_t>(n) + 1, 0));
    // the empty sequence avoids everything
    for (auto& row : counts) row[0] = 1;
    if (n == 0) return counts;
    // patterns with no forbidden word admit everything: analytic fill, and
    // they must not suppress the saturation prune
    std::vector<size_t> live;
    std::vector<WordSet> liveMasks;
    for (size_t p = 0; p < patterns.size(); ++p) {
        if (patterns[p] == 0)
            for (int d = 1; d <= n; ++d) counts[p][static_cast<size_t>(d)] = factorial_u64(d);
        else
            live.push_back(p), liveMasks.push_back(patterns[p]);
    }
    if (live.empty()) return counts;

    std::vector<std::vector<uint64_t>> liveCounts(liveMasks.size(),
                                                  std::vector<uint64_t>(static_cast<size_t>(n) + 1, 0));
    for (auto& row : liveCounts) row[0] = 1;
    IntSeq buf(static_cast<size_t>(n), 0);
    if (jobs == 1 || n <= 3) {
        batch_rec(buf, 0, 0, n, liveMasks, liveCounts);
    } else {
        const int split = std::min(n - 1, 5);
        std::vector<PrefixTask> tasks;
        frontier_rec(buf, 0, 0, split, liveMasks, liveCounts, tasks);
        std::vector<std::vector<std::vector<uint64_t>>> local(
            static_cast<size_t>(jobs),
            std::vector<std::vector<uint64_t>>(liveMasks.size(),
                                               std::vector<uint64_t>(static_cast<size_t>(n) + 1, 0)));
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                IntSeq e(static_cast<size_t>(n), 0);
                for (size_t idx = static_cast<size_t>(t); idx < tasks.size();
                     idx += static_cast<size_t>(jobs)) {
                    const PrefixTask& task = tasks[idx];
                    std::copy(task.e.begin(), task.e.end(), e.begin());
                    // re-enter below the frontier without recounting depth <= split
                    const int d = static_cast<int>(task.e.size());
                    for (int c = 0; c <= d; ++c) {
                        WordSet m2 = task.mask;
                        for (int j = 1; j < d; ++j)
                            for (int i = 0; i < j; ++i)
                                m2 |= static_cast<WordSet>(
                                    1u << order_type(e[static_cast<size_t>(i)],
                                                     e[static_cast<size_t>(j)], c));
                        e[static_cast<size_t>(d)] = c;
                        batch_rec(e, m2, d + 1, n, liveMasks, local[static_cast<size_t>(t)]);
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        for (int t = 0; t < jobs; ++t)
            for (size_t p = 0; p < liveMasks.size(); ++p)
                for (int d = 0; d <= n; ++d)
                    liveCounts[p][static_cast<size_t>(d)] +=
                        local[static_cast<size_t>(t)][p][static_cast<size_t>(d)];
    }
    for (size_t q = 0; q < live.size(); ++q) counts[live[q]] = liveCounts[q];
    return counts;
}

// Single-pattern tallies with branch pruning (and the same split scheme).
std::vector<uint64_t> one_counts_u64(int n, WordSet w, int jobs) {
    require_engine_length(n);
    if (jobs < 1) jobs = 1;
    std::vector<uint64_t> counts(static_cast<size_t>(n) + 1, 0);
    counts[0] = 1;
    if (n == 0) return counts;
    if (w == 0) {
        for (int d = 1; d <= n; ++d) counts[static_cast<size_t>(d)] = factorial_u64(d);
        return counts;
    }
    IntSeq buf(static_cast<size_t>(n), 0);
    if (jobs == 1 || n <= 3) {
        count_one_rec(buf, 0, n, w, counts);
        return counts;
    }
    // enumerate the avoiding frontier serially, then extend in parallel
    const int split = std::min(n - 1, 5);
    std::vector<IntSeq> tasks;
    {
        std::vector<uint64_t> shallow(static_cast<size_t>(split) + 1, 0);
        IntSeq e(static_cast<size_t>(split), 0);
        count_one_rec(e, 0, split, w, shallow);
        for (int d = 1; d <= split; ++d) counts[static_cast<size_t>(d)] = shallow[static_cast<size_t>(d)];
        for_each_inversion_sequence(split, [&](const IntSeq& p) {
            if (avoids_words(p, w)) tasks.push_back(p);
        });
    }
    std::vector<std::vector<uint64_t>> local(
        static_cast<size_t>(jobs), std::vector<uint64_t>(static_cast<size_t>(n) + 1, 0));
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
            IntSeq e(static_cast<size_t>(n), 0);
            auto& mine = local[static_cast<size_t>(t)];
            for (size_t idx = static_cast<size_t>(t); idx < tasks.size();
                 idx += static_cast<size_t>(jobs)) {
                const IntSeq& prefix = tasks[idx];
                std::copy(prefix.begin(), prefix.end(), e.begin());
                const int d = static_cast<int>(prefix.size());
                // count_one_rec entered at depth d+1 touches depths > d only,
                // so the shallow tallies are never duplicated
                for (int c = 0; c <= d; ++c) {
                    bool ok = true;
                    for (int j = 1; j < d && ok; ++j)
                        for (int i = 0; i < j; ++i)
                            if (w & (1u << order_type(e[static_cast<size_t>(i)],
                                                      e[static_cast<size_t>(j)], c))) {
                                ok = false;
                                break;
                            }
                    if (!ok) continue;
                    e[static_cast<size_t>(d)] = c;
                    count_one_rec(e, d + 1, n, w, mine);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (int t = 0; t < jobs; ++t)
        for (int d = split + 1; d <= n; ++d)
            counts[static_cast<size_t>(d)] += local[static_cast<size_t>(t)][static_cast<size_t>(d)];
    return counts;
}

}  // namespace

bool rel_holds(long long x, long long y, Rel r) {
    switch (r) {
        case Rel::LT: return x < y;
        case Rel::GT: return x > y;
        case Rel::LE: return x <= y;
        case Rel::GE: return x >= y;
        case Rel::EQ: return x == y;
        case Rel::NE: return x != y;
        case Rel::ANY: return true;
    }
    return false;
}

Rel parse_rel(const std::string& token) {
    if (token == "<") return Rel::LT;
    if (token == ">") return Rel::GT;
    if (token == "<=") return Rel::LE;
    if (token == ">=") return Rel::GE;
    if (token == "=") return Rel::EQ;
    if (token == "!=") return Rel::NE;
    if (token == "-") return Rel::ANY;
    throw std::invalid_argument("bad relation token: '" + token + "'");
}

std::string rel_name(Rel r) {
    switch (r) {
        case Rel::LT: return "<";
        case Rel::GT: return ">";
        case Rel::LE: return "<=";
        case Rel::GE: return ">=";
        case Rel::EQ: return "=";
        case Rel::NE: return "!=";
        case Rel::ANY: return "-";
    }
    return "?";
}

Triple parse_triple(const std::string& text) {
    std::string body;
    body.reserve(text.size());
    for (char c : text)
        if (c != ' ') body += c;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::array<std::string, 3> tok;
    size_t field = 0;
    for (char c : body) {
        if (c == ',') {
            ++field;
            if (field > 2) throw std::invalid_argument("pattern needs exactly 3 relations: " + text);
            continue;
        }
        tok[field] += c;
    }
    if (field != 2) throw std::invalid_argument("pattern needs exactly 3 relations: " + text);
    return Triple{parse_rel(tok[0]), parse_rel(tok[1]), parse_rel(tok[2])};
}

std::string triple_name(const Triple& t) {
    return "(" + rel_name(t.r1) + "," + rel_name(t.r2) + "," + rel_name(t.r3) + ")";
}

std::vector<Triple> all_triples() {
    static const std::array<Rel, 7> rels = {Rel::LT, Rel::GT, Rel::LE, Rel::GE,
                                            Rel::EQ, Rel::NE, Rel::ANY};
    std::vector<Triple> out;
    out.reserve(343);
    for (Rel a : rels)
        for (Rel b : rels)
            for (Rel c : rels) out.push_back(Triple{a, b, c});
    return out;
}

int parse_word(const std::string& word) {
    if (word.size() != 3) throw std::invalid_argument("bad word pattern: '" + word + "'");
    std::array<int, 3> d{};
    bool strictAlias = true;
    for (size_t i = 0; i < 3; ++i) {
        if (word[i] < '0' || word[i] > '3')
            throw std::invalid_argument("bad word pattern: '" + word + "'");
        d[i] = word[i] - '0';
        if (d[i] < 1) strictAlias = false;
    }
    if (strictAlias && d[0] != d[1] && d[1] != d[2] && d[0] != d[2]) {
        // permutation-style alias for the strict words, e.g. 132 -> 021
        for (int& v : d) --v;
    }
    for (int w = 0; w < kWordCount; ++w)
        if (kWordDigits[static_cast<size_t>(w)] == d) return w;
    throw std::invalid_argument("bad word pattern: '" + word + "'");
}

std::string word_name(int index) {
    if (index < 0 || index >= kWordCount) throw std::invalid_argument("word index out of range");
    const auto& d = kWordDigits[static_cast<size_t>(index)];
    return std::to_string(d[0]) + std::to_string(d[1]) + std::to_string(d[2]);
}

WordSet parse_word_set(const std::string& text) {
    WordSet w = 0;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) {
            w |= static_cast<WordSet>(1u << parse_word(tok));
            tok.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ' ') {
            flush();
            continue;
        }
        tok += c;
    }
    flush();
    return w;
}

std::string word_set_to_string(WordSet w) {
    std::string out;
    for (int i = 0; i < kWordCount; ++i) {
        if (!(w & (1u << i))) continue;
        if (!out.empty()) out += ",";
        out += word_name(i);
    }
    return out;
}

int order_type(int x, int y, int z) {
    return sign_table()[static_cast<size_t>(cmp3(x, y) * 9 + cmp3(y, z) * 3 + cmp3(x, z))];
}

WordSet triple_words(const Triple& t) {
    WordSet w = 0;
    for (int i = 0; i < kWordCount; ++i) {
        const auto& d = kWordDigits[static_cast<size_t>(i)];
        if (rel_holds(d[0], d[1], t.r1) && rel_holds(d[1], d[2], t.r2) &&
            rel_holds(d[0], d[2], t.r3))
            w |= static_cast<WordSet>(1u << i);
    }
    return w;
}

WordSet pattern_mask(const IntSeq& e) {
    WordSet m = 0;
    const int n = static_cast<int>(e.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                m |= static_cast<WordSet>(
                    1u << order_type(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)],
                                     e[static_cast<size_t>(k)]));
    return m;
}

bool contains_triple(const IntSeq& e, const Triple& t) {
    const WordSet w = triple_words(t);
    if (w == 0) return false;
    return !avoids_words(e, w);
}

bool avoids_words(const IntSeq& e, WordSet w) {
    if (w == 0) return true;
    const int n = static_cast<int>(e.size());
    for (int j = 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            for (int i = 0; i < j; ++i)
                if (w & (1u << order_type(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)],
                                          e[static_cast<size_t>(k)])))
                    return false;
    return true;
}

BigInt count_avoiders(int n, const Triple& t, int jobs) {
    return count_avoiders_words(n, triple_words(t), jobs);
}

BigInt count_avoiders_words(int n, WordSet w, int jobs) {
    return BigInt(one_counts_u64(n, w, jobs)[static_cast<size_t>(n)]);
}

std::vector<BigInt> count_avoiders_lengths(int n, WordSet w, int jobs) {
    const auto u = one_counts_u64(n, w, jobs);
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(n));
    for (int d = 1; d <= n; ++d) out.emplace_back(u[static_cast<size_t>(d)]);
    return out;
}

std::vector<std::vector<BigInt>> count_avoiders_batch_lengths(int n,
                                                              const std::vector<WordSet>& patterns,
                                                              int jobs) {
    const auto u = batch_counts_u64(n, patterns, jobs);
    std::vector<std::vector<BigInt>> out(patterns.size());
    for (size_t p = 0; p < patterns.size(); ++p) {
        out[p].reserve(static_cast<size_t>(n));
        for (int d = 1; d <= n; ++d) out[p].emplace_back(u[p][static_cast<size_t>(d)]);
    }
    return out;
}

std::vector<BigInt> count_avoiders_batch(int n, const std::vector<WordSet>& patterns, int jobs) {
    const auto u = batch_counts_u64(n, patterns, jobs);
    std::vector<BigInt> out;
    out.reserve(patterns.size());
    for (size_t p = 0; p < patterns.size(); ++p) out.emplace_back(u[p][static_cast<size_t>(n)]);
    return out;
}

}  // namespace invseq
