/*
 * Permutation codings. Everything here is quadratic in n, which is fine:
 * callers enumerate S_n exhaustively, so n stays small and the coding
 * cost is dwarfed by the n! factor.
 */

#include "invseq/encodings.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace invseq {

namespace {

// values 1..n not yet consumed, kept sorted ascending
std::vector<int> fresh_values(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return v;
}

int take_kth_smallest(std::vector<int>& avail, int k) {
    if (k < 1 || k > static_cast<int>(avail.size()))
        throw std::invalid_argument("code entry out of range");
    int v = avail[static_cast<size_t>(k - 1)];
    avail.erase(avail.begin() + (k - 1));
    return v;
}

int take_kth_largest(std::vector<int>& avail, int k) {
    return take_kth_smallest(avail, static_cast<int>(avail.size()) - k + 1);
}

// sorted distinct values of e[i..n-1]
std::vector<int> suffix_values(const IntSeq& e, size_t from) {
    std::set<int> s(e.begin() + static_cast<std::ptrdiff_t>(from), e.end());
    return std::vector<int>(s.begin(), s.end());
}

}  // namespace

IntSeq theta(const Perm& p) {
    require_permutation(p);
    const int n = static_cast<int>(p.size());
    IntSeq e(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (p[static_cast<size_t>(j)] > p[static_cast<size_t>(i)]) ++e[static_cast<size_t>(i)];
    return e;
}

Perm theta_inv(const IntSeq& e) {
    require_inversion_sequence(e);
    const int n = static_cast<int>(e.size());
    Perm p(static_cast<size_t>(n), 0);
    std::vector<int> avail = fresh_values(n);
    // all remaining values larger than p_i sit to its left, so p_i is the
    // (e_i + 1)-th largest value still unplaced
    for (int i = n - 1; i >= 0; --i)
        p[static_cast<size_t>(i)] = take_kth_largest(avail, e[static_cast<size_t>(i)] + 1);
    return p;
}

IntSeq lehmer(const Perm& p) {
    require_permutation(p);
    const int n = static_cast<int>(p.size());
    IntSeq code(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[static_cast<size_t>(j)] < p[static_cast<size_t>(i)]) ++code[static_cast<size_t>(i)];
    return code;
}

Perm lehmer_inv(const IntSeq& code) {
    const int n = static_cast<int>(code.size());
    Perm p(static_cast<size_t>(n), 0);
    std::vector<int> avail = fresh_values(n);
    for (int i = 0; i < n; ++i)
        p[static_cast<size_t>(i)] = take_kth_smallest(avail, code[static_cast<size_t>(i)] + 1);
    return p;
}

IntSeq invcode(const Perm& p) {
    return reverse_seq(lehmer(p));
}

Perm invcode_inv(const IntSeq& e) {
    require_inversion_sequence(e);
    return lehmer_inv(reverse_seq(e));
}

IntSeq phi(const Perm& p) {
    require_permutation(p);
    const int n = static_cast<int>(p.size());
    IntSeq e(static_cast<size_t>(n), 0);
    if (n == 0) return e;
    e[static_cast<size_t>(n - 1)] = p[static_cast<size_t>(n - 1)] - 1;
    for (int i = n - 2; i >= 0; --i) {
        if (p[static_cast<size_t>(i)] <= i + 1) {
            e[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] - 1;
            continue;
        }
        // p_i exceeds its position: recycle the k-th smallest distinct
        // value already present to the right, k = #{j <= i : p_j >= p_i}
        int k = 0;
        for (int j = 0; j <= i; ++j)
            if (p[static_cast<size_t>(j)] >= p[static_cast<size_t>(i)]) ++k;
        std::vector<int> vals = suffix_values(e, static_cast<size_t>(i) + 1);
        if (k > static_cast<int>(vals.size()))
            throw std::logic_error("coding invariant violated");
        e[static_cast<size_t>(i)] = vals[static_cast<size_t>(k - 1)];
    }
    return e;
}

Perm phi_inv(const IntSeq& e) {
    require_inversion_sequence(e);
    const int n = static_cast<int>(e.size());
    Perm p(static_cast<size_t>(n), 0);
    if (n == 0) return p;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    p[static_cast<size_t>(n - 1)] = e[static_cast<size_t>(n - 1)] + 1;
    used[static_cast<size_t>(e[static_cast<size_t>(n - 1)] + 1)] = true;
    for (int i = n - 2; i >= 0; --i) {
        std::vector<int> vals = suffix_values(e, static_cast<size_t>(i) + 1);
        auto it = std::lower_bound(vals.begin(), vals.end(), e[static_cast<size_t>(i)]);
        int v;
        if (it == vals.end() || *it != e[static_cast<size_t>(i)]) {
            v = e[static_cast<size_t>(i)] + 1;  // value appears here first
        } else {
            // repeated value: its rank among the suffix values picks which
            // unused value (counting from the top) the permutation takes
            int k = static_cast<int>(it - vals.begin()) + 1;
            v = n;
            while (true) {
                while (v >= 1 && used[static_cast<size_t>(v)]) --v;
                if (v < 1) throw std::invalid_argument("not in the coding image");
                if (--k == 0) break;
                --v;
            }
        }
        if (v < 1 || v > n || used[static_cast<size_t>(v)])
            throw std::invalid_argument("not in the coding image");
        p[static_cast<size_t>(i)] = v;
        used[static_cast<size_t>(v)] = true;
    }
    return p;
}

int exc(const Perm& p) {
    require_permutation(p);
    int c = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] > static_cast<int>(i) + 1) ++c;
    return c;
}

int des(const Perm& p) {
    require_permutation(p);
    int c = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1]) ++c;
    return c;
}

std::vector<int> descent_positions(const Perm& p) {
    require_permutation(p);
    std::vector<int> out;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::vector<int> ascent_positions(const IntSeq& e) {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] < e[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

}  // namespace invseq
