/*
 * sequences.hpp
 *
 * Counting targets as first-class objects: every closed form, linear
 * recurrence, triangle, power-series equation and succession rule that a
 * pattern class is counted by, plus a bundled database of known integer
 * sequences for fingerprinting empirical counts.
 *
 * All term lists are 1-indexed by sequence length: known_sequence(name, N)
 * returns a_1..a_N. Triangles expose single entries; their row sums
 * reproduce the corresponding class counts. Everything is pure and
 * allocates its own working tables, so all functions are thread-safe.
 */

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "invseq/core.hpp"

namespace invseq {

// How a registered sequence is produced.
enum class SequenceKind {
    ClosedForm,
    LinearRecurrence,
    TriangleSum,
    Series,
    SuccessionRule,
    BundledPrefix,
};

struct SequenceSpec {
    std::string name;
    SequenceKind kind;
    std::string certifies;  // class labels (by their a_7 value) this sequence counts
};

// Immutable registry of every named counting sequence.
const std::vector<SequenceSpec>& sequence_registry();
bool is_known_sequence(const std::string& name);

// a_1..a_N of a registered sequence. Throws std::invalid_argument for an
// unregistered name and std::out_of_range when a bundled prefix is shorter
// than N.
std::vector<BigInt> known_sequence(const std::string& name, int N);

BigInt binomial(long long n, long long k);
BigInt catalan_number(int n);
BigInt fibonacci(int n);  // F_0 = 0, F_1 = 1

// Triangle refining |I_n(-,-,=)| by number of distinct values:
// s(n,k) = (n-k+1) s(n-1,k-1) + (n-k) s(n-2,k-1), s(1,1)=s(2,1)=s(2,2)=1,
// s(n,1)=0 for n >= 3; zero outside 1 <= k <= n.
BigInt s_triangle_304(int n, int k);

// Triangle refining |I_n(!=,=,-)| by number of distinct values:
// T(n,k) = (n+1-k)^k - (n-k)^k.
BigInt nexus_T(int n, int k);

// Triangle refining both |I_n(101)| and |I_n(110)| by number of zeros:
// u(n,k) = u(n-1,k-1) + k * sum_{j=k}^{n-1} u(n-1,j), u(0,0) = 1,
// u(n,k) = 0 when k > n or (n > 0 and k = 0).
BigInt callan_u(int n, int k);

// Triangle refining |I_n(210,100)| by (top value a, last bottom value b):
// S(n,a,b) = sum_{i=-1}^{b-1} S(n-1,a,i) + sum_{j=b+1}^{a} S(n-1,j,b),
// S(n,a,-1) = ((n-a)/n) C(n-1+a, a), S(n,a,b) = 0 when a >= n.
BigInt snab_2958(int n, int a, int b);

// C_n + sum over b >= 0 of S(n,a,b); equals |I_n(210,100)|.
BigInt snab_total(int n);

// Stirling subset numbers: zeros-refinement of |I_n(011)|.
BigInt stirling2(int n, int k);

// Truncated power series; c[i] is the coefficient of x^i.
struct PowerSeries {
    std::vector<BigInt> c;
};

// Solves a registered functional equation by fixed-point iteration to order
// N (coefficients stabilize in at most N+2 passes). Registered names:
//   I_catalan   I = 1 + x I^2
//   A200753     A = 1 + (x - x^2) A^3
//   E_1806C     E = x + x E + E^2
//   Q1064       Q = 1 + 2x Q + 2x^2 Q^2
//   A805        A = (1 - 2x) / ((1 - x)(1 - x - x C)), C the Catalan series
//   R049125     ordered trees whose non-root internal vertices have at most
//               one leaf child: R = 1/(1 - x W), W = S + x S^2,
//               S = 1/(1 - x (W - 1))
//   noncontracting_demo   S = 1 + S; never stabilizes (exercises the
//                         iteration-limit error path)
// Throws std::invalid_argument for unknown names and std::runtime_error when
// iteration fails to stabilize.
PowerSeries series_solve(const std::string& name, int N = 30);

// Label of a node in the generating tree with root (1,1) and rule
// (h,k) -> (1,k+1), ..., (h,k+1), (h+k,1), ..., (h+1,k).
struct SuccessionLabel {
    int h = 1;
    int k = 1;
    bool operator==(const SuccessionLabel&) const = default;
};

// Level sizes 1..N of that tree (the semi-Baxter numbers), computed by
// propagating label multiplicities level by level; the tree itself is never
// materialized.
std::vector<BigInt> omega_semi_level_counts(int N);

// Multiset of labels at one level, as (h,k) -> multiplicity.
std::map<std::pair<int, int>, BigInt> omega_semi_level_labels(int level);

// For e in I_n(101,201): the values c with (e_1,...,e_n,c) still avoiding
// {101,201}, and the label (h,k) = (#sites <= maxx(e), #sites > maxx(e)).
// Throws std::domain_error if e contains 101 or 201.
std::pair<std::vector<int>, SuccessionLabel> active_sites_101_201(const IntSeq& e);

// One bundled known sequence: identifier, free-text description, index of
// the first term, the term prefix, and where the terms came from.
struct KnownSequenceEntry {
    std::string id;
    std::string description;
    int offset = 0;
    std::vector<BigInt> terms;
    std::string provenance;
};

// Reads the bundled JSON database (array of entries as above; terms are
// strings or numbers). Throws std::runtime_error on unreadable/malformed
// files.
std::vector<KnownSequenceEntry> load_sequence_db(const std::string& path);

// Entries whose term prefix contains seq contiguously (at any offset).
// Requires at least 5 terms; throws std::invalid_argument otherwise.
std::vector<KnownSequenceEntry> fingerprint(const std::vector<BigInt>& seq,
                                            const std::vector<KnownSequenceEntry>& db);

}  // namespace invseq
