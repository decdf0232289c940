/*
 * core.cpp
 *
 * Validity checks, elementary operators, statistics and the text forms for
 * inversion sequences and permutations.
 */

#include "invseq/core.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

namespace invseq {

bool is_inversion_sequence(const IntSeq& e) {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > static_cast<int>(i)) return false;
    return true;
}

void require_inversion_sequence(const IntSeq& e) {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] > static_cast<int>(i))
            throw std::invalid_argument("entry at position " + std::to_string(i + 1) +
                                        " violates 0 <= e_i <= i-1: " + std::to_string(e[i]));
}

bool is_permutation(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : p) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

void require_permutation(const Perm& p) {
    if (!is_permutation(p)) throw std::invalid_argument("not a permutation of 1..n");
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative length");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

IntSeq sigma_t(const IntSeq& e, int t) {
    IntSeq r = e;
    for (int& v : r) {
        if (v == 0) continue;
        if (v + t < 0)
            throw std::invalid_argument("sigma_t would push entry " + std::to_string(v) +
                                        " below zero");
        v += t;
    }
    return r;
}

IntSeq concat_front_zero(const IntSeq& e) {
    IntSeq r;
    r.reserve(e.size() + 1);
    r.push_back(0);
    r.insert(r.end(), e.begin(), e.end());
    require_inversion_sequence(r);  // old e_i sits at position i+1, needs e_i <= i
    return r;
}

IntSeq concat_back(const IntSeq& e, int v) {
    if (v < 0 || v > static_cast<int>(e.size()))
        throw std::invalid_argument("appended value " + std::to_string(v) +
                                    " out of range 0.." + std::to_string(e.size()));
    IntSeq r = e;
    r.push_back(v);
    return r;
}

IntSeq reverse_seq(const IntSeq& s) { return IntSeq(s.rbegin(), s.rend()); }

Perm complement(const Perm& p) {
    const int n = static_cast<int>(p.size());
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = n + 1 - p[i];
    return r;
}

Stats stats(const IntSeq& e) {
    require_inversion_sequence(e);
    if (e.empty()) throw std::invalid_argument("statistics undefined on the empty sequence");
    const int n = static_cast<int>(e.size());
    Stats s;
    std::unordered_set<int> values;
    for (int i = 0; i < n; ++i) {
        const int v = e[static_cast<size_t>(i)];
        if (i + 1 < n && v < e[static_cast<size_t>(i) + 1]) ++s.asc;
        if (v == 0) ++s.zeros;
        if (v == i) ++s.maxim;
        if (v > s.maxx) s.maxx = v;
        values.insert(v);
    }
    s.dist = static_cast<int>(values.size());
    s.repeats = n - s.dist;
    s.last = e.back();
    return s;
}

static int count_weak_lr_maxima(const IntSeq& e) {
    int count = 0, best = -1;
    for (int v : e) {
        if (v >= best) {
            ++count;
            best = v;
        }
    }
    return count;
}

bool is_stat_name(const std::string& name) {
    return name == "asc" || name == "zeros" || name == "dist" || name == "repeats" ||
           name == "maxim" || name == "maxx" || name == "last" || name == "lr_maxima";
}

int stat_value(const IntSeq& e, const std::string& name) {
    if (name == "lr_maxima") return count_weak_lr_maxima(e);
    const Stats s = stats(e);
    if (name == "asc") return s.asc;
    if (name == "zeros") return s.zeros;
    if (name == "dist") return s.dist;
    if (name == "repeats") return s.repeats;
    if (name == "maxim") return s.maxim;
    if (name == "maxx") return s.maxx;
    if (name == "last") return s.last;
    throw std::invalid_argument("unknown statistic: " + name);
}

std::string seq_to_string(const IntSeq& e) {
    std::string out = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    out += ")";
    return out;
}

IntSeq parse_seq(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    IntSeq r;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("bad sequence token: " + tok);
        r.push_back(v);
    }
    return r;
}

std::string perm_to_string(const Perm& p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(p[i]);
    }
    return out;
}

Perm parse_perm(const std::string& text) {
    Perm p;
    if (text.find(' ') == std::string::npos && text.find(',') == std::string::npos) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument(std::string("bad permutation character: ") + c);
            p.push_back(c - '0');
        }
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (ss >> tok) {
            if (!tok.empty() && tok.back() == ',') tok.pop_back();
            p.push_back(std::stoi(tok));
        }
    }
    require_permutation(p);
    return p;
}

}  // namespace invseq
