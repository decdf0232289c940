/*
 * Structure-preserving maps between avoidance classes of inversion
 * sequences, plus a registry that certifies each map on its domain:
 * bijectivity onto the stated codomain and the number of basic
 * statistics (asc, zeros, dist, repeats, maxim, maxx, last) it
 * preserves on every domain element.
 *
 * alpha          raise every value that recurs later to the prefix maximum
 * beta           inverse of alpha: lower every repeat to the suffix minimum
 * greedy_swap    keep strict left-to-right maxima, hand each remaining
 *                position the largest unused leftover value that does not
 *                exceed the running maximum (registered as map_772)
 * weak_max_swap  keep weak left-to-right maxima, hand each remaining
 *                position the largest unused leftover value strictly
 *                below the running maximum (registered as map_2958D)
 * zero_repeats   replace every repeated value by zero
 * prefix_zero    zero everything before the first descent
 *
 * greedy_swap and weak_max_swap differ exactly on inputs whose running
 * maximum is attained again later, e.g. (0,1,0,1): the strict variant
 * rearranges positions 3 and 4 into (0,1,1,0), the weak variant fixes
 * the sequence.  Each convention is total and injective on the domain
 * it is registered for, and neither works on the other's.
 */

#ifndef INVSEQ_BIJECTIONS_HPP
#define INVSEQ_BIJECTIONS_HPP

#include <string>
#include <vector>

#include "invseq/avoidance.hpp"
#include "invseq/core.hpp"

namespace invseq {

IntSeq alpha(const IntSeq& e);
IntSeq beta(const IntSeq& e);
IntSeq greedy_swap(const IntSeq& e);
IntSeq weak_max_swap(const IntSeq& e);
// inverse of weak_max_swap: sorts the non-maximum values increasingly
// back into the non-maximum positions (they are pairwise distinct on
// the codomain, so the result is unambiguous)
IntSeq weak_max_swap_inverse(const IntSeq& e);
IntSeq zero_repeats(const IntSeq& e);
IntSeq prefix_zero(const IntSeq& e);

// weak left-to-right maxima and the complementary positions
struct TopBottom {
    std::vector<int> top;     // 1-based positions
    std::vector<int> bottom;  // 1-based positions
    int top_value;            // entry at the last top position
    int bottom_value;         // entry at the last bottom position, -1 if none
};

TopBottom top_bottom(const IntSeq& e);

struct BijectionReport {
    std::string name;
    int n;
    bool pass = false;
    int preserved_statistics = 0;  // of the seven basic statistics
    std::string detail;
};

// names: theta, invcode, phi, alpha, beta, map_772, map_2958D,
// zero_repeats, prefix_zero
std::vector<std::string> bijection_names();
BijectionReport verify_bijection(const std::string& name, int n);

// checks that applying `map` to the avoiders of `domain` yields exactly
// the avoiders of `codomain`, injectively; used for the certified pairs
// and for restriction arguments on augmented word sets
bool maps_avoiders_onto(IntSeq (*map)(const IntSeq&), WordSet domain, WordSet codomain, int n);

}  // namespace invseq

#endif  // INVSEQ_BIJECTIONS_HPP
