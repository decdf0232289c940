/*
 * Bijective codings between permutations of [n] and integer sequences.
 *
 * theta    e_i = #{j < i : p_j > p_i}   (left inversion table)
 * lehmer   L_i = #{j > i : p_j < p_i}   (right inversion table)
 * invcode  lehmer read right to left; always an inversion sequence
 * phi      recursive coding whose repeat count equals the excedance
 *          count of the permutation
 *
 * Each map comes with its inverse; inverses validate their input and
 * throw std::invalid_argument when it is not in the domain.
 */

#ifndef INVSEQ_ENCODINGS_HPP
#define INVSEQ_ENCODINGS_HPP

#include <vector>

#include "invseq/core.hpp"

namespace invseq {

IntSeq theta(const Perm& p);
Perm theta_inv(const IntSeq& e);

IntSeq lehmer(const Perm& p);
Perm lehmer_inv(const IntSeq& code);

IntSeq invcode(const Perm& p);
Perm invcode_inv(const IntSeq& e);

IntSeq phi(const Perm& p);
Perm phi_inv(const IntSeq& e);

// excedances: positions with p_i > i
int exc(const Perm& p);
// descents: positions with p_i > p_{i+1}
int des(const Perm& p);
std::vector<int> descent_positions(const Perm& p);   // 1-based
std::vector<int> ascent_positions(const IntSeq& e);  // 1-based

}  // namespace invseq

#endif  // INVSEQ_ENCODINGS_HPP
