/*
 * Pattern containment on permutations, in the four flavors needed for
 * cross-checking the sequence-side counts:
 *
 *  - classical patterns (order-isomorphic subsequence)
 *  - vincular patterns (bracketed letters must sit adjacently), written
 *    in the usual inline notation, e.g. "2[41]3"
 *  - extension rules, the operational form of barred patterns: a
 *    permutation complies when every occurrence of the core pattern
 *    extends to an occurrence of the larger pattern at the embedded
 *    positions
 *  - marked points with quadrant thresholds: some position must see at
 *    least the given number of points in each of the four quadrants
 *    around it (ne = after/larger, nw = before/larger, sw =
 *    before/smaller, se = after/smaller)
 *
 * Counting helpers enumerate S_n exhaustively; they are meant for the
 * small n where the factorial is affordable.
 */

#ifndef INVSEQ_PERM_PATTERNS_HPP
#define INVSEQ_PERM_PATTERNS_HPP

#include <string>
#include <vector>

#include "invseq/core.hpp"

namespace invseq {

bool contains_classical(const Perm& p, const Perm& pattern);
bool avoids_all_classical(const Perm& p, const std::vector<Perm>& patterns);

struct VincularPattern {
    Perm word;
    std::vector<int> glued;  // 1-based t: letters t and t+1 must be adjacent
};

VincularPattern parse_vincular(const std::string& text);
bool contains_vincular(const Perm& p, const VincularPattern& pattern);

struct ExtensionRule {
    Perm core;
    Perm extension;
    std::vector<int> embedding;  // 1-based positions of core's letters inside extension
};

// validates that the extension restricted to the embedding reduces to the core
ExtensionRule make_rule(Perm core, Perm extension, std::vector<int> embedding);
// "plane", "bar3bar1542", "4bar132"
ExtensionRule named_rule(const std::string& name);
bool satisfies_rule(const Perm& p, const ExtensionRule& rule);

struct QuadrantThresholds {
    int ne = 0;
    int nw = 0;
    int sw = 0;
    int se = 0;
};

bool contains_marked_point(const Perm& p, const QuadrantThresholds& q);

BigInt count_classical_avoiders(int n, const std::vector<Perm>& patterns);
BigInt count_vincular_avoiders(int n, const std::vector<VincularPattern>& patterns);
BigInt count_rule_satisfying(int n, const ExtensionRule& rule);
BigInt count_marked_point_avoiders(int n, const QuadrantThresholds& q);

}  // namespace invseq

#endif  // INVSEQ_PERM_PATTERNS_HPP
