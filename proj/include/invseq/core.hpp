/*
 * core.hpp
 *
 * Inversion sequences and permutations: the base types, validity checks,
 * streaming lexicographic enumeration, the elementary operators (value
 * shift, concatenation, reverse, complement) and the seven per-sequence
 * statistics. Everything downstream builds on this header.
 *
 * Conventions: sequences are stored 0-indexed but all definitions, error
 * messages and external text use 1-indexed positions. An inversion sequence
 * of length n satisfies 0 <= e_i <= i-1 at every position i.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace invseq {

using BigInt = boost::multiprecision::cpp_int;
using IntSeq = std::vector<int>;  // inversion sequences and plain value lists
using Perm = std::vector<int>;    // one-line notation, values 1..n

bool is_inversion_sequence(const IntSeq& e);
void require_inversion_sequence(const IntSeq& e);

bool is_permutation(const Perm& p);
void require_permutation(const Perm& p);

BigInt factorial(int n);

// Streaming enumeration of all inversion sequences of length n in
// lexicographic order. fn receives each sequence by const reference; the
// buffer is reused between calls. n = 0 yields the single empty sequence.
template <class Fn>
void for_each_inversion_sequence(int n, Fn&& fn) {
    if (n < 0) throw std::invalid_argument("length must be non-negative");
    IntSeq e(static_cast<size_t>(n), 0);
    // odometer: position i (0-based) ranges over 0..i
    while (true) {
        fn(static_cast<const IntSeq&>(e));
        int i = n - 1;
        while (i >= 0 && e[static_cast<size_t>(i)] == i) --i;
        if (i < 0) return;
        ++e[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) e[static_cast<size_t>(j)] = 0;
    }
}

// Extensions of a fixed valid prefix, lexicographic. The streams over all
// prefixes of one length partition the full space.
template <class Fn>
void for_each_extension(const IntSeq& prefix, int n, Fn&& fn) {
    require_inversion_sequence(prefix);
    if (static_cast<int>(prefix.size()) > n)
        throw std::invalid_argument("prefix longer than requested length");
    IntSeq e = prefix;
    e.resize(static_cast<size_t>(n), 0);
    const int base = static_cast<int>(prefix.size());
    while (true) {
        fn(static_cast<const IntSeq&>(e));
        int i = n - 1;
        while (i >= base && e[static_cast<size_t>(i)] == i) --i;
        if (i < base) return;
        ++e[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) e[static_cast<size_t>(j)] = 0;
    }
}

// Streaming enumeration of S_n in lexicographic one-line order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
    if (n < 0) throw std::invalid_argument("length must be non-negative");
    Perm p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
    if (n == 0) {
        fn(static_cast<const Perm&>(p));
        return;
    }
    while (true) {
        fn(static_cast<const Perm&>(p));
        if (!std::next_permutation(p.begin(), p.end())) return;
    }
}

// Value shift: adds t to every nonzero entry, zeros stay put. The result is
// a plain integer sequence; inversion-sequence validity is the caller's
// problem (the usual composition is front-zero after sigma_1).
IntSeq sigma_t(const IntSeq& e, int t);

// 0 . e = (0, e_1, ..., e_n); validates the shifted positions.
IntSeq concat_front_zero(const IntSeq& e);

// e . v = (e_1, ..., e_n, v) with 0 <= v <= n.
IntSeq concat_back(const IntSeq& e, int v);

IntSeq reverse_seq(const IntSeq& s);
Perm complement(const Perm& p);  // pi_i -> n+1-pi_i

// The seven statistics. asc counts i with e_i < e_{i+1}; zeros counts
// entries equal to 0; dist counts distinct values; repeats = n - dist;
// maxim counts positions with e_i = i-1; maxx = max entry; last = e_n.
struct Stats {
    int asc = 0;
    int zeros = 0;
    int dist = 0;
    int repeats = 0;
    int maxim = 0;
    int maxx = 0;
    int last = 0;
};

Stats stats(const IntSeq& e);

// Value of a single named statistic; names: asc zeros dist repeats maxim
// maxx last lr_maxima (the last one counts weak left-to-right maxima).
int stat_value(const IntSeq& e, const std::string& name);
bool is_stat_name(const std::string& name);

// Text forms: "(0,1,0,2)" for sequences; permutations accept "3 1 2" and
// the compact "312" (single-digit entries only).
std::string seq_to_string(const IntSeq& e);
IntSeq parse_seq(const std::string& text);
std::string perm_to_string(const Perm& p);
Perm parse_perm(const std::string& text);

}  // namespace invseq
