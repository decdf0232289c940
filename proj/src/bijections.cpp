/*
 * Map implementations and the certification machinery. Certification is
 * exhaustive over I_n, so callers keep n small; bijectivity is decided
 * by set comparison, and maps registered with an inverse are also
 * round-tripped element by element.
 */

#include "invseq/bijections.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "invseq/encodings.hpp"

namespace invseq {

namespace {

// flags the left-to-right maxima (strict or weak) and collects the
// multiset of values at the remaining positions
struct MaximaSplit {
    std::vector<bool> isMax;
    std::vector<int> rest;
};

MaximaSplit maxima_split(const IntSeq& e, bool weak) {
    MaximaSplit s;
    s.isMax.assign(e.size(), false);
    int best = -1;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] > best || (weak && e[i] == best)) {
            best = e[i];
            s.isMax[i] = true;
        } else {
            s.rest.push_back(e[i]);
        }
    }
    return s;
}

}  // namespace

IntSeq alpha(const IntSeq& e) {
    require_inversion_sequence(e);
    const size_t n = e.size();
    IntSeq out(e);
    int prefixMax = -1;
    for (size_t j = 0; j < n; ++j) {
        prefixMax = std::max(prefixMax, e[j]);
        bool recurs = false;
        for (size_t k = j + 1; k < n && !recurs; ++k) recurs = e[k] == e[j];
        if (recurs) out[j] = prefixMax;
    }
    return out;
}

IntSeq beta(const IntSeq& e) {
    require_inversion_sequence(e);
    const size_t n = e.size();
    IntSeq out(e);
    for (size_t j = 0; j < n; ++j) {
        bool seen = false;
        for (size_t i = 0; i < j && !seen; ++i) seen = e[i] == e[j];
        if (!seen) continue;
        int m = e[j];
        for (size_t k = j + 1; k < n; ++k) m = std::min(m, e[k]);
        out[j] = m;
    }
    return out;
}

IntSeq greedy_swap(const IntSeq& e) {
    require_inversion_sequence(e);
    MaximaSplit s = maxima_split(e, /*weak=*/false);
    std::multiset<int> pool(s.rest.begin(), s.rest.end());
    IntSeq out(e);
    int prefixMax = -1;
    for (size_t j = 0; j < e.size(); ++j) {
        if (s.isMax[j]) {
            prefixMax = e[j];
            continue;
        }
        // largest leftover value not above the prefix maximum
        auto it = pool.upper_bound(prefixMax);
        if (it == pool.begin()) throw std::logic_error("rearrangement ran dry");
        --it;
        out[j] = *it;
        pool.erase(it);
    }
    return out;
}

IntSeq weak_max_swap(const IntSeq& e) {
    require_inversion_sequence(e);
    MaximaSplit s = maxima_split(e, /*weak=*/true);
    std::multiset<int> pool(s.rest.begin(), s.rest.end());
    IntSeq out(e);
    int prefixMax = -1;
    for (size_t j = 0; j < e.size(); ++j) {
        if (s.isMax[j]) {
            prefixMax = e[j];
            continue;
        }
        // largest leftover value strictly below the prefix maximum; one
        // always exists because at most j-1 values below e's own entry
        // here have been handed out so far
        auto it = pool.lower_bound(prefixMax);
        if (it == pool.begin()) throw std::logic_error("rearrangement ran dry");
        --it;
        out[j] = *it;
        pool.erase(it);
    }
    return out;
}

IntSeq weak_max_swap_inverse(const IntSeq& e) {
    require_inversion_sequence(e);
    MaximaSplit s = maxima_split(e, /*weak=*/true);
    std::sort(s.rest.begin(), s.rest.end());
    IntSeq out(e);
    size_t next = 0;
    for (size_t j = 0; j < e.size(); ++j)
        if (!s.isMax[j]) out[j] = s.rest[next++];
    return out;
}

IntSeq zero_repeats(const IntSeq& e) {
    require_inversion_sequence(e);
    IntSeq out(e);
    std::set<int> seen;
    for (size_t j = 0; j < e.size(); ++j) {
        if (!seen.insert(e[j]).second) out[j] = 0;
    }
    return out;
}

IntSeq prefix_zero(const IntSeq& e) {
    require_inversion_sequence(e);
    const size_t n = e.size();
    size_t s = n;  // weakly increasing: everything before the end is zeroed
    for (size_t i = 0; i + 1 < n; ++i) {
        if (e[i] > e[i + 1]) {
            s = i + 1;  // 1-based index of the first descent top
            break;
        }
    }
    IntSeq out(e);
    for (size_t i = 0; i + 1 < s; ++i) out[i] = 0;
    return out;
}

TopBottom top_bottom(const IntSeq& e) {
    require_inversion_sequence(e);
    TopBottom tb;
    tb.top_value = -1;
    tb.bottom_value = -1;
    int best = -1;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= best) {
            best = e[i];
            tb.top.push_back(static_cast<int>(i) + 1);
            tb.top_value = e[i];
        } else {
            tb.bottom.push_back(static_cast<int>(i) + 1);
            tb.bottom_value = e[i];
        }
    }
    return tb;
}

bool maps_avoiders_onto(IntSeq (*map)(const IntSeq&), WordSet domain, WordSet codomain, int n) {
    std::set<IntSeq> images;
    bool ok = true;
    for_each_inversion_sequence(n, [&](const IntSeq& e) {
        if (!ok || !avoids_words(e, domain)) return;
        IntSeq img = map(e);
        if (!is_inversion_sequence(img) || !avoids_words(img, codomain) ||
            !images.insert(img).second)
            ok = false;
    });
    if (!ok) return false;
    size_t codomainSize = 0;
    for_each_inversion_sequence(n, [&](const IntSeq& e) {
        if (avoids_words(e, codomain)) ++codomainSize;
    });
    return images.size() == codomainSize;
}

namespace {

std::array<int, 7> stat_vector(const IntSeq& e) {
    Stats s = stats(e);
    return {s.asc, s.zeros, s.dist, s.repeats, s.maxim, s.maxx, s.last};
}

// how many of the seven basic statistics survive the map on every
// domain element
int count_preserved(IntSeq (*map)(const IntSeq&), WordSet domain, int n) {
    std::array<bool, 7> keep;
    keep.fill(true);
    for_each_inversion_sequence(n, [&](const IntSeq& e) {
        if (!avoids_words(e, domain)) return;
        std::array<int, 7> a = stat_vector(e);
        std::array<int, 7> b = stat_vector(map(e));
        for (size_t i = 0; i < 7; ++i)
            if (a[i] != b[i]) keep[i] = false;
    });
    int c = 0;
    for (bool k : keep)
        if (k) ++c;
    return c;
}

BijectionReport verify_seq_map(const std::string& name, int n, IntSeq (*map)(const IntSeq&),
                               WordSet domain, WordSet codomain,
                               IntSeq (*inverse)(const IntSeq&) = nullptr) {
    BijectionReport r;
    r.name = name;
    r.n = n;
    r.pass = maps_avoiders_onto(map, domain, codomain, n);
    if (r.pass && inverse != nullptr) {
        for_each_inversion_sequence(n, [&](const IntSeq& e) {
            if (!avoids_words(e, domain)) return;
            if (inverse(map(e)) != e) r.pass = false;
        });
    }
    if (!r.pass) {
        r.detail = "image mismatch on length " + std::to_string(n);
        return r;
    }
    r.preserved_statistics = count_preserved(map, domain, n);
    r.detail = "avoiders of {" + word_set_to_string(domain) + "} onto avoiders of {" +
               word_set_to_string(codomain) + "}";
    return r;
}

BijectionReport verify_perm_coding(const std::string& name, int n) {
    BijectionReport r;
    r.name = name;
    r.n = n;
    std::set<IntSeq> images;
    bool ok = true;
    long long total = 0;
    for_each_permutation(n, [&](const Perm& p) {
        ++total;
        IntSeq e;
        Perm back;
        if (name == "theta") {
            e = theta(p);
            back = theta_inv(e);
        } else if (name == "invcode") {
            e = invcode(p);
            back = invcode_inv(e);
        } else {
            e = phi(p);
            back = phi_inv(e);
        }
        if (!is_inversion_sequence(e) || back != p || !images.insert(e).second) ok = false;
        if (name == "theta" && ascent_positions(e) != descent_positions(p)) ok = false;
        if (name == "phi" && n > 0 && exc(p) != stats(e).repeats) ok = false;
    });
    r.pass = ok && static_cast<long long>(images.size()) == total;
    if (name == "theta")
        r.detail = "permutations onto inversion sequences; ascent set tracks the descent set";
    else if (name == "invcode")
        r.detail = "permutations onto inversion sequences";
    else
        r.detail = "permutations onto inversion sequences; excedances become repeats";
    return r;
}

}  // namespace

std::vector<std::string> bijection_names() {
    return {"theta",   "invcode",      "phi",         "alpha", "beta",
            "map_772", "map_2958D",    "zero_repeats", "prefix_zero"};
}

BijectionReport verify_bijection(const std::string& name, int n) {
    if (n < 0) throw std::invalid_argument("length must be non-negative");
    if (name == "theta" || name == "invcode" || name == "phi")
        return verify_perm_coding(name, n);
    if (name == "alpha")
        return verify_seq_map(name, n, alpha, parse_word_set("110,210"),
                              parse_word_set("100,210"), beta);
    if (name == "beta")
        return verify_seq_map(name, n, beta, parse_word_set("100,210"),
                              parse_word_set("110,210"), alpha);
    if (name == "map_772")
        return verify_seq_map(name, n, greedy_swap, parse_word_set("000,100,110,210"),
                              parse_word_set("000,100,101,201"));
    if (name == "map_2958D")
        return verify_seq_map(name, n, weak_max_swap, parse_word_set("210,100"),
                              parse_word_set("201,100"), weak_max_swap_inverse);
    if (name == "zero_repeats")
        return verify_seq_map(name, n, zero_repeats, parse_word_set("010,101"),
                              parse_word_set("011"));
    if (name == "prefix_zero")
        return verify_seq_map(name, n, prefix_zero, parse_word_set("001,100,101,102,201"),
                              parse_word_set("011,012,100,101,102,201"));
    throw std::invalid_argument("unknown bijection: '" + name + "'");
}

}  // namespace invseq
