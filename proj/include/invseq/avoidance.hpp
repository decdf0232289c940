/*
 * avoidance.hpp
 *
 * The pattern formalism. A pattern is a triple of binary relations
 * (rho1,rho2,rho3) over {<,>,<=,>=,=,!=,-}; an occurrence in e is a triple
 * of positions i<j<k with e_i rho1 e_j, e_j rho2 e_k, e_i rho3 e_k. Every
 * pattern reduces canonically to a set of forbidden length-3 order-type
 * words over {0,1,2}; there are 13 such words and the set is kept as a
 * 13-bit mask. Counting is exhaustive: a pruned DFS for one pattern, a
 * single shared pass for many.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invseq/core.hpp"

namespace invseq {

enum class Rel : uint8_t { LT, GT, LE, GE, EQ, NE, ANY };

struct Triple {
    Rel r1, r2, r3;
    bool operator==(const Triple&) const = default;
};

// Forbidden word set as a 13-bit mask; bit i refers to kWordOrder[i].
using WordSet = uint16_t;

inline constexpr int kWordCount = 13;
inline constexpr WordSet kAllWords = (1u << kWordCount) - 1;

// Canonical listing order of the 13 order-type words.
extern const std::array<std::array<int, 3>, 13> kWordDigits;

bool rel_holds(long long x, long long y, Rel r);
Rel parse_rel(const std::string& token);
std::string rel_name(Rel r);

Triple parse_triple(const std::string& text);  // "(>=,>=,-)"
std::string triple_name(const Triple& t);
std::vector<Triple> all_triples();  // all 343, in r1-major order

// Word index 0..12 for a text form; accepts 0-based words ("021") and the
// strict-order permutation aliases ("132" for 021).
int parse_word(const std::string& word);
std::string word_name(int index);
WordSet parse_word_set(const std::string& text);  // "210,100"
std::string word_set_to_string(WordSet w);        // canonical order, comma-separated

// The unique word over {0,1,2} order-isomorphic (equalities preserved) to
// (x,y,z), returned as its index.
int order_type(int x, int y, int z);

WordSet triple_words(const Triple& t);

// Set of order types realized by index triples of e. e avoids word set w
// iff pattern_mask(e) & w == 0.
WordSet pattern_mask(const IntSeq& e);

bool contains_triple(const IntSeq& e, const Triple& t);
bool avoids_words(const IntSeq& e, WordSet w);

// |I_n(pattern)| by exhaustive enumeration. jobs >= 1 selects the number of
// worker threads; results are identical for every jobs value.
BigInt count_avoiders(int n, const Triple& t, int jobs = 1);
BigInt count_avoiders_words(int n, WordSet w, int jobs = 1);

// a_1..a_n for one pattern.
std::vector<BigInt> count_avoiders_lengths(int n, WordSet w, int jobs = 1);

// One shared pass over I_n serving many patterns at once. Returns, for each
// input word set, the avoider counts a_1..a_n.
std::vector<std::vector<BigInt>> count_avoiders_batch_lengths(int n,
                                                              const std::vector<WordSet>& patterns,
                                                              int jobs = 1);

// Convenience: the length-n counts only, pattern for pattern.
std::vector<BigInt> count_avoiders_batch(int n, const std::vector<WordSet>& patterns,
                                         int jobs = 1);

}  // namespace invseq
