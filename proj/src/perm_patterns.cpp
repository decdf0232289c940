/*
 * Pattern containment engines. All searches are depth-first over
 * candidate positions with pairwise order consistency checked against
 * the part already placed, which prunes hard enough for the pattern
 * lengths (<= 5) and permutation sizes (<= 10) used here.
 */

#include "invseq/perm_patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace invseq {

namespace {

void require_pattern(const Perm& pattern) {
    if (!is_permutation(pattern))
        throw std::invalid_argument("pattern must be a permutation of 1..m");
}

// relative order of placed letters must match the pattern's
bool consistent(const Perm& p, const Perm& pattern, const std::vector<int>& pos, int t,
                int candidate) {
    for (int s = 0; s < t; ++s) {
        bool patLess = pattern[static_cast<size_t>(s)] < pattern[static_cast<size_t>(t)];
        bool valLess = p[static_cast<size_t>(pos[static_cast<size_t>(s)])] <
                       p[static_cast<size_t>(candidate)];
        if (patLess != valLess) return false;
    }
    return true;
}

bool classical_rec(const Perm& p, const Perm& pattern, std::vector<int>& pos, int t) {
    const int n = static_cast<int>(p.size());
    const int m = static_cast<int>(pattern.size());
    if (t == m) return true;
    int lo = (t == 0) ? 0 : pos[static_cast<size_t>(t - 1)] + 1;
    for (int c = lo; c <= n - (m - t); ++c) {
        if (!consistent(p, pattern, pos, t, c)) continue;
        pos[static_cast<size_t>(t)] = c;
        if (classical_rec(p, pattern, pos, t + 1)) return true;
    }
    return false;
}

bool vincular_rec(const Perm& p, const VincularPattern& vp, std::vector<int>& pos, int t) {
    const int n = static_cast<int>(p.size());
    const int m = static_cast<int>(vp.word.size());
    if (t == m) return true;
    bool glued = t > 0 && std::find(vp.glued.begin(), vp.glued.end(), t) != vp.glued.end();
    int lo = (t == 0) ? 0 : pos[static_cast<size_t>(t - 1)] + 1;
    int hi = glued ? lo : n - (m - t);
    for (int c = lo; c <= hi; ++c) {
        if (!consistent(p, vp.word, pos, t, c)) continue;
        pos[static_cast<size_t>(t)] = c;
        if (vincular_rec(p, vp, pos, t + 1)) return true;
    }
    return false;
}

// can the fixed core positions be completed to a full occurrence of the
// extension pattern?
bool extend_rec(const Perm& p, const ExtensionRule& r, const std::vector<int>& fixedPos,
                std::vector<int>& pos, int t) {
    const int n = static_cast<int>(p.size());
    const int m = static_cast<int>(r.extension.size());
    if (t == m) return true;
    int lo = (t == 0) ? 0 : pos[static_cast<size_t>(t - 1)] + 1;
    if (fixedPos[static_cast<size_t>(t)] >= 0) {
        int c = fixedPos[static_cast<size_t>(t)];
        if (c < lo || !consistent(p, r.extension, pos, t, c)) return false;
        pos[static_cast<size_t>(t)] = c;
        return extend_rec(p, r, fixedPos, pos, t + 1);
    }
    for (int c = lo; c <= n - (m - t); ++c) {
        if (!consistent(p, r.extension, pos, t, c)) continue;
        pos[static_cast<size_t>(t)] = c;
        if (extend_rec(p, r, fixedPos, pos, t + 1)) return true;
    }
    return false;
}

// walk every occurrence of the core; fail as soon as one does not extend
bool rule_rec(const Perm& p, const ExtensionRule& r, std::vector<int>& pos, int t) {
    const int n = static_cast<int>(p.size());
    const int m = static_cast<int>(r.core.size());
    if (t == m) {
        std::vector<int> fixedPos(r.extension.size(), -1);
        for (size_t s = 0; s < r.embedding.size(); ++s)
            fixedPos[static_cast<size_t>(r.embedding[s] - 1)] = pos[s];
        std::vector<int> extPos(r.extension.size(), 0);
        return extend_rec(p, r, fixedPos, extPos, 0);
    }
    int lo = (t == 0) ? 0 : pos[static_cast<size_t>(t - 1)] + 1;
    for (int c = lo; c <= n - (m - t); ++c) {
        if (!consistent(p, r.core, pos, t, c)) continue;
        pos[static_cast<size_t>(t)] = c;
        if (!rule_rec(p, r, pos, t + 1)) return false;
    }
    return true;
}

Perm reduce_to_pattern(const std::vector<int>& vals) {
    Perm out(vals.size(), 0);
    for (size_t i = 0; i < vals.size(); ++i) {
        int rank = 1;
        for (size_t j = 0; j < vals.size(); ++j)
            if (vals[j] < vals[i]) ++rank;
        out[i] = rank;
    }
    return out;
}

}  // namespace

bool contains_classical(const Perm& p, const Perm& pattern) {
    require_permutation(p);
    require_pattern(pattern);
    if (pattern.size() > p.size()) return false;
    std::vector<int> pos(pattern.size(), 0);
    return classical_rec(p, pattern, pos, 0);
}

bool avoids_all_classical(const Perm& p, const std::vector<Perm>& patterns) {
    for (const Perm& pat : patterns)
        if (contains_classical(p, pat)) return false;
    return true;
}

VincularPattern parse_vincular(const std::string& text) {
    VincularPattern vp;
    bool inGroup = false;
    int groupStart = 0;
    for (char ch : text) {
        if (ch == '[') {
            if (inGroup) throw std::invalid_argument("nested brackets in '" + text + "'");
            inGroup = true;
            groupStart = static_cast<int>(vp.word.size()) + 1;
            continue;
        }
        if (ch == ']') {
            if (!inGroup) throw std::invalid_argument("stray bracket in '" + text + "'");
            inGroup = false;
            for (int t = groupStart; t < static_cast<int>(vp.word.size()); ++t)
                vp.glued.push_back(t);
            continue;
        }
        if (ch >= '1' && ch <= '9') {
            vp.word.push_back(ch - '0');
            continue;
        }
        throw std::invalid_argument("bad vincular pattern: '" + text + "'");
    }
    if (inGroup) throw std::invalid_argument("unclosed bracket in '" + text + "'");
    require_pattern(vp.word);
    return vp;
}

bool contains_vincular(const Perm& p, const VincularPattern& pattern) {
    require_permutation(p);
    require_pattern(pattern.word);
    if (pattern.word.size() > p.size()) return false;
    std::vector<int> pos(pattern.word.size(), 0);
    return vincular_rec(p, pattern, pos, 0);
}

ExtensionRule make_rule(Perm core, Perm extension, std::vector<int> embedding) {
    require_pattern(core);
    require_pattern(extension);
    if (embedding.size() != core.size() || core.size() > extension.size())
        throw std::invalid_argument("embedding must place every core letter");
    for (size_t s = 0; s + 1 < embedding.size(); ++s)
        if (embedding[s] >= embedding[s + 1])
            throw std::invalid_argument("embedding positions must increase");
    if (embedding.front() < 1 || embedding.back() > static_cast<int>(extension.size()))
        throw std::invalid_argument("embedding position out of range");
    std::vector<int> sub;
    for (int t : embedding) sub.push_back(extension[static_cast<size_t>(t - 1)]);
    if (reduce_to_pattern(sub) != core)
        throw std::invalid_argument("embedded letters do not match the core");
    return ExtensionRule{std::move(core), std::move(extension), std::move(embedding)};
}

ExtensionRule named_rule(const std::string& name) {
    if (name == "plane")
        return make_rule({2, 1, 4, 3}, {2, 1, 3, 5, 4}, {1, 2, 4, 5});
    if (name == "bar3bar1542")
        return make_rule({3, 2, 1}, {3, 1, 5, 4, 2}, {3, 4, 5});
    if (name == "4bar132")
        return make_rule({3, 2, 1}, {4, 1, 3, 2}, {1, 3, 4});
    throw std::invalid_argument("unknown rule: '" + name + "'");
}

bool satisfies_rule(const Perm& p, const ExtensionRule& rule) {
    require_permutation(p);
    std::vector<int> pos(rule.core.size(), 0);
    return rule_rec(p, rule, pos, 0);
}

bool contains_marked_point(const Perm& p, const QuadrantThresholds& q) {
    require_permutation(p);
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) {
        int ne = 0, nw = 0, sw = 0, se = 0;
        for (int j = 0; j < n; ++j) {
            if (j < i)
                (p[static_cast<size_t>(j)] > p[static_cast<size_t>(i)] ? nw : sw)++;
            else if (j > i)
                (p[static_cast<size_t>(j)] > p[static_cast<size_t>(i)] ? ne : se)++;
        }
        if (ne >= q.ne && nw >= q.nw && sw >= q.sw && se >= q.se) return true;
    }
    return false;
}

BigInt count_classical_avoiders(int n, const std::vector<Perm>& patterns) {
    long long c = 0;
    for_each_permutation(n, [&](const Perm& p) {
        if (avoids_all_classical(p, patterns)) ++c;
    });
    return BigInt(c);
}

BigInt count_vincular_avoiders(int n, const std::vector<VincularPattern>& patterns) {
    long long c = 0;
    for_each_permutation(n, [&](const Perm& p) {
        for (const VincularPattern& vp : patterns)
            if (contains_vincular(p, vp)) return;
        ++c;
    });
    return BigInt(c);
}

BigInt count_rule_satisfying(int n, const ExtensionRule& rule) {
    long long c = 0;
    for_each_permutation(n, [&](const Perm& p) {
        if (satisfies_rule(p, rule)) ++c;
    });
    return BigInt(c);
}

BigInt count_marked_point_avoiders(int n, const QuadrantThresholds& q) {
    long long c = 0;
    for_each_permutation(n, [&](const Perm& p) {
        if (!contains_marked_point(p, q)) ++c;
    });
    return BigInt(c);
}

}  // namespace invseq
