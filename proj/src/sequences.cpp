/*
 * sequences.cpp
 *
 * Implementations of the registered counting sequences, the refinement
 * triangles, the power-series fixed-point solver, the (h,k) succession
 * rule, and the bundled-database fingerprint. Comments state the formula
 * or recurrence being evaluated; each one is exercised against exhaustive
 * enumeration in the test suite.
 */

#include "invseq/sequences.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "invseq/avoidance.hpp"

namespace invseq {

namespace {

// Exact division with a loud failure: every quotient taken in this file is
// provably integral, so a nonzero remainder means a formula was mistyped.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error(std::string("non-integral division in ") + what);
    return q;
}

BigInt bigpow(BigInt base, int exp) {
    BigInt out = 1;
    while (exp > 0) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

// ---- closed forms and simple recurrences ---------------------------------

std::vector<BigInt> seq_class7(int N) {
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(n);
    return a;
}

std::vector<BigInt> seq_class12(int N) {  // 1, then 2(n-1)
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(n == 1 ? BigInt(1) : BigInt(2 * (n - 1)));
    return a;
}

std::vector<BigInt> seq_class21(int N) {  // F_{n+1}
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(fibonacci(n + 1));
    return a;
}

std::vector<BigInt> seq_class22(int N) {  // C(n,2) + 1
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(binomial(n, 2) + 1);
    return a;
}

std::vector<BigInt> seq_class33(int N) {  // F_{n+2} - 1
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(fibonacci(n + 2) - 1);
    return a;
}

std::vector<BigInt> seq_class64(int N) {  // 2^{n-1}
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(bigpow(2, n - 1));
    return a;
}

std::vector<BigInt> seq_class121(int N) {  // 2^n - n
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(bigpow(2, n) - n);
    return a;
}

std::vector<BigInt> seq_class151(int N) {  // a_n = 3a_{n-1} - 2a_{n-2} + a_{n-3}
    std::vector<BigInt> a = {1, 2, 5};
    for (int n = 4; n <= N; ++n) {
        size_t m = a.size();
        a.push_back(3 * a[m - 1] - 2 * a[m - 2] + a[m - 3]);
    }
    a.resize(static_cast<size_t>(N));  // shrinks when N < 3
    return a;
}

std::vector<BigInt> seq_class185(int N) {  // 2^{n+1} - C(n+1,3) - 2n - 1
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n)
        a.push_back(bigpow(2, n + 1) - binomial(n + 1, 3) - 2 * n - 1);
    return a;
}

std::vector<BigInt> seq_class193(int N) {  // (n-1) 2^{n-2} + 1
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n)
        a.push_back(n == 1 ? BigInt(1) : BigInt((n - 1) * bigpow(2, n - 2) + 1));
    return a;
}

std::vector<BigInt> seq_class233(int N) {  // F_{2n-1}
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(fibonacci(2 * n - 1));
    return a;
}

std::vector<BigInt> seq_catalan(int N) {
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(catalan_number(n));
    return a;
}

std::vector<BigInt> seq_class924(int N) {  // C(2n-2, n-1)
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(binomial(2 * (n - 1), n - 1));
    return a;
}

// Bell numbers B_1..B_N via the Bell triangle: each row starts with the
// previous row's last entry and adds the neighbor above-left.
std::vector<BigInt> seq_bell(int N) {
    std::vector<BigInt> row = {1};  // row for B_1
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) {
        a.push_back(row.back());
        std::vector<BigInt> next = {row.back()};
        for (const BigInt& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return a;
}

// Zigzag numbers Z_m (1,1,1,2,5,16,61,...) by the boustrophedon triangle:
// T(m,0)=0 for m>=1, T(m,j)=T(m,j-1)+T(m-1,m-j), Z_m=T(m,m). The class
// value is a_n = Z_{n+1}.
std::vector<BigInt> seq_euler(int N) {
    std::vector<BigInt> prev = {1};  // row 0
    std::vector<BigInt> z = {1};     // Z_0
    for (int m = 1; m <= N + 1; ++m) {
        std::vector<BigInt> row(static_cast<size_t>(m) + 1, 0);
        for (int j = 1; j <= m; ++j)
            row[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j - 1)] + prev[static_cast<size_t>(m - j)];
        z.push_back(row.back());
        prev = std::move(row);
    }
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(z[static_cast<size_t>(n + 1)]);
    return a;
}

// Large Schroeder numbers R_0=1, R_1=2, (m+1) R_m = 3(2m-1) R_{m-1} - (m-2) R_{m-2};
// the class value is a_n = R_{n-1}.
std::vector<BigInt> seq_schroder(int N) {
    std::vector<BigInt> r = {1, 2};
    for (int m = 2; m < N; ++m)
        r.push_back(exact_div(3 * (2 * m - 1) * r[static_cast<size_t>(m - 1)] -
                                  (m - 2) * r[static_cast<size_t>(m - 2)],
                              m + 1, "schroder recurrence"));
    std::vector<BigInt> a(r.begin(), r.begin() + N);
    return a;
}

// Baxter numbers ship as a fixed prefix: no counting formula accompanies
// the class, so the terms are bundled and cross-checked elsewhere against
// exhaustive inversion-sequence and vincular-permutation counts.
const std::vector<BigInt>& baxter_prefix() {
    static const std::vector<BigInt> kPrefix = {
        1, 2, 6, 22, 92, 422, 2074, 10754, 58202, 326240, 1882960, 11140560};
    return kPrefix;
}

std::vector<BigInt> seq_class2549(int N) {
    // a_n = sum_{i=0}^{n} ((n-i)/(2i+n)) C(2i+n, i); each term is integral.
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) {
        BigInt total = 0;
        for (int i = 0; i < n; ++i)
            total += exact_div(BigInt(n - i) * binomial(2 * i + n, i), 2 * i + n,
                               "class2549 term");
        a.push_back(total);
    }
    return a;
}

std::vector<BigInt> seq_class805(int N) {  // C_{n+1} - sum_{i=1}^{n} C_i
    std::vector<BigInt> a;
    BigInt partial = 0;
    for (int n = 1; n <= N; ++n) {
        partial += catalan_number(n);
        a.push_back(catalan_number(n + 1) - partial);
    }
    return a;
}

std::vector<BigInt> seq_class1016(int N) {
    // a_n = C(2(n-1), n-1)
    //       + sum_{k=2}^{n-2} sum_{i=1}^{k-1} sum_{u=1}^{i} sum_{d=0}^{u-1}
    //         ((i-d+1)/(i+1)) C(i+d, d)
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) {
        BigInt total = binomial(2 * (n - 1), n - 1);
        for (int k = 2; k <= n - 2; ++k)
            for (int i = 1; i <= k - 1; ++i)
                for (int u = 1; u <= i; ++u)
                    for (int d = 0; d <= u - 1; ++d)
                        total += exact_div(BigInt(i - d + 1) * binomial(i + d, d), i + 1,
                                           "class1016 term");
        a.push_back(total);
    }
    return a;
}

std::vector<BigInt> seq_class1079A(int N) {  // 1 + sum_{i=1}^{n-1} C(2i, i-1)
    std::vector<BigInt> a;
    BigInt acc = 1;
    for (int n = 1; n <= N; ++n) {
        a.push_back(acc);
        acc += binomial(2 * n, n - 1);
    }
    return a;
}

// Sequences with e_1 = 0 and e_i > max(e_1..e_{i-2}) for every i >= 3.
// State after placing position i: (p, v) with p = max of the first i-1
// entries and v = e_i; the next entry w must satisfy w > p, w <= i.
std::vector<BigInt> seq_class187(int N) {
    std::vector<BigInt> a;
    if (N >= 1) a.push_back(1);
    if (N >= 2) a.push_back(2);
    std::map<std::pair<int, int>, BigInt> state;
    state[{0, 0}] = 1;  // e = (0,0)
    state[{0, 1}] = 1;  // e = (0,1)
    for (int i = 3; i <= N; ++i) {
        std::map<std::pair<int, int>, BigInt> next;
        BigInt count = 0;
        for (const auto& [pv, mult] : state) {
            auto [p, v] = pv;
            for (int w = p + 1; w <= i - 1; ++w) {
                next[{std::max(p, v), w}] += mult;
                count += mult;
            }
        }
        a.push_back(count);
        state = std::move(next);
    }
    return a;
}

std::vector<BigInt> triangle_row_sums(BigInt (*entry)(int, int), int N) {
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) {
        BigInt total = 0;
        for (int k = 1; k <= n; ++k) total += entry(n, k);
        a.push_back(total);
    }
    return a;
}

std::vector<BigInt> seq_from_series(const std::string& series, int N, int shift) {
    // a_n = coefficient of x^{n+shift}
    PowerSeries s = series_solve(series, N + shift);
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n) a.push_back(s.c[static_cast<size_t>(n + shift)]);
    return a;
}

std::vector<BigInt> seq_constant_profile(std::vector<BigInt> head, int N) {
    std::vector<BigInt> a;
    for (int n = 1; n <= N; ++n)
        a.push_back(n <= static_cast<int>(head.size()) ? head[static_cast<size_t>(n - 1)]
                                                       : head.back());
    return a;
}

// ---- power series helpers -------------------------------------------------

using Ser = std::vector<BigInt>;  // index = exponent, fixed size N+1

Ser ser_zero(int N) { return Ser(static_cast<size_t>(N) + 1, BigInt(0)); }

Ser ser_const(int N, const BigInt& v) {
    Ser s = ser_zero(N);
    s[0] = v;
    return s;
}

Ser ser_x(int N, int power = 1) {
    Ser s = ser_zero(N);
    if (power <= N) s[static_cast<size_t>(power)] = 1;
    return s;
}

Ser ser_monomial(int N, const BigInt& coeff, int power) {
    Ser s = ser_zero(N);
    if (power <= N) s[static_cast<size_t>(power)] = coeff;
    return s;
}

Ser ser_add(const Ser& a, const Ser& b) {
    Ser out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Ser ser_sub(const Ser& a, const Ser& b) {
    Ser out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Ser ser_mul(const Ser& a, const Ser& b) {
    Ser out = ser_zero(static_cast<int>(a.size()) - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < out.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Multiplicative inverse of a series with constant term 1.
Ser ser_inv_unit(const Ser& d) {
    if (d[0] != 1) throw std::logic_error("series inverse requires constant term 1");
    Ser out = ser_zero(static_cast<int>(d.size()) - 1);
    out[0] = 1;
    for (size_t n = 1; n < out.size(); ++n) {
        BigInt acc = 0;
        for (size_t i = 1; i <= n; ++i) acc += d[i] * out[n - i];
        out[n] = -acc;
    }
    return out;
}

Ser iterate_fixed_point(const std::string& name, int N,
                        const std::function<Ser(const Ser&)>& step) {
    Ser cur = ser_zero(N);
    for (int pass = 0; pass <= N + 2; ++pass) {
        Ser next = step(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw std::runtime_error("series iteration for '" + name + "' did not stabilize after " +
                             std::to_string(N + 3) + " passes");
}

}  // namespace

// ---- public arithmetic helpers --------------------------------------------

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out = exact_div(out, i, "binomial");
    }
    return out;
}

BigInt catalan_number(int n) {
    if (n < 0) return 0;
    return exact_div(binomial(2LL * n, n), n + 1, "catalan");
}

BigInt fibonacci(int n) {
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

// ---- triangles -------------------------------------------------------------

BigInt s_triangle_304(int n, int k) {
    if (n < 1 || k < 1 || k > n) return 0;
    // rows[m][j] = s(m, j+1); built bottom-up with the two-back recurrence
    std::vector<std::vector<BigInt>> rows;
    rows.push_back({1});     // s(1,1)
    rows.push_back({1, 1});  // s(2,1), s(2,2)
    for (int m = 3; m <= n; ++m) {
        std::vector<BigInt> row(static_cast<size_t>(m), 0);
        for (int j = 2; j <= m; ++j) {
            BigInt one_back = (j - 1 <= m - 1) ? rows[static_cast<size_t>(m - 2)][static_cast<size_t>(j - 2)]
                                               : BigInt(0);
            BigInt two_back = (j - 1 <= m - 2) ? rows[static_cast<size_t>(m - 3)][static_cast<size_t>(j - 2)]
                                               : BigInt(0);
            row[static_cast<size_t>(j - 1)] = BigInt(m - j + 1) * one_back + BigInt(m - j) * two_back;
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)];
}

BigInt nexus_T(int n, int k) {
    if (n < 1 || k < 1 || k > n) return 0;
    return bigpow(n + 1 - k, k) - bigpow(n - k, k);
}

BigInt callan_u(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0) return 0;
    // rows[m][j] = u(m, j); suffix sums make each row linear time
    std::vector<std::vector<BigInt>> rows;
    rows.push_back({1});
    for (int m = 1; m <= n; ++m) {
        const std::vector<BigInt>& prev = rows.back();
        std::vector<BigInt> suffix(prev.size() + 1, 0);  // suffix[j] = sum_{t>=j} prev[t]
        for (int j = static_cast<int>(prev.size()) - 1; j >= 0; --j)
            suffix[static_cast<size_t>(j)] = suffix[static_cast<size_t>(j + 1)] + prev[static_cast<size_t>(j)];
        std::vector<BigInt> row(static_cast<size_t>(m) + 1, 0);
        for (int j = 1; j <= m; ++j) {
            BigInt carried = (j - 1 < static_cast<int>(prev.size())) ? prev[static_cast<size_t>(j - 1)] : BigInt(0);
            BigInt spawned = (j < static_cast<int>(suffix.size())) ? suffix[static_cast<size_t>(j)] : BigInt(0);
            row[static_cast<size_t>(j)] = carried + j * spawned;
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

namespace {

// Full S(m,a,b) table for m = 1..n; cell [m][a][b+1].
std::vector<std::vector<std::vector<BigInt>>> snab_table(int n) {
    std::vector<std::vector<std::vector<BigInt>>> S(static_cast<size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        S[static_cast<size_t>(m)].assign(static_cast<size_t>(m),
                                         std::vector<BigInt>());
        for (int a = 0; a <= m - 1; ++a) {
            std::vector<BigInt>& cell = S[static_cast<size_t>(m)][static_cast<size_t>(a)];
            cell.assign(static_cast<size_t>(a) + 1, 0);  // b = -1 .. a-1
            cell[0] = exact_div(BigInt(m - a) * binomial(m - 1 + a, a), m, "snab base");
            for (int b = 0; b <= a - 1; ++b) {
                BigInt total = 0;
                // appended-entry cases with a smaller bottom: sum over i < b
                for (int i = -1; i <= b - 1; ++i)
                    if (a <= m - 2) total += S[static_cast<size_t>(m - 1)][static_cast<size_t>(a)][static_cast<size_t>(i + 1)];
                // cases lowering the top from j to a while keeping bottom b
                for (int j = b + 1; j <= a; ++j)
                    if (j <= m - 2) total += S[static_cast<size_t>(m - 1)][static_cast<size_t>(j)][static_cast<size_t>(b + 1)];
                cell[static_cast<size_t>(b) + 1] = total;
            }
        }
    }
    return S;
}

}  // namespace

BigInt snab_2958(int n, int a, int b) {
    if (n < 1 || a < 0 || a >= n || b < -1 || b >= a) return 0;
    auto S = snab_table(n);
    return S[static_cast<size_t>(n)][static_cast<size_t>(a)][static_cast<size_t>(b + 1)];
}

BigInt snab_total(int n) {
    if (n < 1) return n == 0 ? 1 : 0;
    auto S = snab_table(n);
    BigInt total = catalan_number(n);
    for (int a = 0; a <= n - 1; ++a)
        for (int b = 0; b <= a - 1; ++b)
            total += S[static_cast<size_t>(n)][static_cast<size_t>(a)][static_cast<size_t>(b + 1)];
    return total;
}

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == 0) return 1;
    std::vector<BigInt> row = {1};  // row n=0
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<size_t>(m) + 1, 0);
        for (int j = 1; j <= m; ++j) {
            BigInt above = (j < static_cast<int>(row.size())) ? row[static_cast<size_t>(j)] : BigInt(0);
            BigInt left = row[static_cast<size_t>(j - 1)];
            next[static_cast<size_t>(j)] = j * above + left;
        }
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

// ---- power series -----------------------------------------------------------

PowerSeries series_solve(const std::string& name, int N) {
    if (N < 0) throw std::invalid_argument("series order must be non-negative");
    Ser result;
    if (name == "I_catalan") {
        result = iterate_fixed_point(name, N, [N](const Ser& s) {
            return ser_add(ser_const(N, 1), ser_mul(ser_x(N), ser_mul(s, s)));
        });
    } else if (name == "A200753") {
        result = iterate_fixed_point(name, N, [N](const Ser& s) {
            Ser xmx2 = ser_sub(ser_x(N), ser_x(N, 2));
            return ser_add(ser_const(N, 1), ser_mul(xmx2, ser_mul(s, ser_mul(s, s))));
        });
    } else if (name == "E_1806C") {
        result = iterate_fixed_point(name, N, [N](const Ser& s) {
            return ser_add(ser_x(N), ser_add(ser_mul(ser_x(N), s), ser_mul(s, s)));
        });
    } else if (name == "Q1064") {
        result = iterate_fixed_point(name, N, [N](const Ser& s) {
            return ser_add(ser_const(N, 1),
                           ser_add(ser_mul(ser_monomial(N, 2, 1), s),
                                   ser_mul(ser_monomial(N, 2, 2), ser_mul(s, s))));
        });
    } else if (name == "A805") {
        // A = (1 - 2x) / ((1 - x)(1 - x - x C)); equivalently the series of
        // C_{n+1} - sum_{i<=n} C_i. Solved as the fixed point of
        // X = (1 - 2x) + (1 - D) X with D the (unit-constant) denominator.
        Ser c = series_solve("I_catalan", N).c;
        Ser one_minus_x = ser_sub(ser_const(N, 1), ser_x(N));
        Ser d = ser_mul(one_minus_x,
                        ser_sub(one_minus_x, ser_mul(ser_x(N), c)));
        Ser numer = ser_sub(ser_const(N, 1), ser_mul(ser_const(N, 2), ser_x(N)));
        Ser gap = ser_sub(ser_const(N, 1), d);  // valuation >= 1
        result = iterate_fixed_point(name, N, [&](const Ser& s) {
            return ser_add(numer, ser_mul(gap, s));
        });
    } else if (name == "R049125") {
        // W = S + x S^2 with S = 1/(1 - x(W-1)): branches below a non-root
        // vertex, at most one leaf child. R = 1/(1 - x W): the root is free.
        Ser w = iterate_fixed_point(name, N, [N](const Ser& wcur) {
            Ser shifted = ser_mul(ser_x(N), ser_sub(wcur, ser_const(N, 1)));
            Ser s = ser_inv_unit(ser_sub(ser_const(N, 1), shifted));
            return ser_add(s, ser_mul(ser_x(N), ser_mul(s, s)));
        });
        result = ser_inv_unit(ser_sub(ser_const(N, 1), ser_mul(ser_x(N), w)));
    } else if (name == "noncontracting_demo") {
        result = iterate_fixed_point(name, N, [N](const Ser& s) {
            return ser_add(ser_const(N, 1), s);
        });
    } else {
        throw std::invalid_argument("unknown series equation: " + name);
    }
    PowerSeries out;
    out.c = std::move(result);
    return out;
}

// ---- succession rule ---------------------------------------------------------

namespace {

using LabelMap = std::map<std::pair<int, int>, BigInt>;

LabelMap omega_semi_step(const LabelMap& level) {
    LabelMap next;
    for (const auto& [hk, mult] : level) {
        auto [h, k] = hk;
        for (int c = 1; c <= h; ++c) next[{c, k + 1}] += mult;        // (1,k+1)..(h,k+1)
        for (int d = 1; d <= k; ++d) next[{h + k + 1 - d, d}] += mult;  // (h+k,1)..(h+1,k)
    }
    return next;
}

}  // namespace

std::vector<BigInt> omega_semi_level_counts(int N) {
    if (N < 1) throw std::invalid_argument("level count must be at least 1");
    std::vector<BigInt> totals;
    LabelMap level = {{{1, 1}, 1}};
    for (int n = 1; n <= N; ++n) {
        BigInt total = 0;
        for (const auto& [hk, mult] : level) total += mult;
        totals.push_back(total);
        if (n < N) level = omega_semi_step(level);
    }
    return totals;
}

std::map<std::pair<int, int>, BigInt> omega_semi_level_labels(int level) {
    if (level < 1) throw std::invalid_argument("level must be at least 1");
    LabelMap cur = {{{1, 1}, 1}};
    for (int n = 1; n < level; ++n) cur = omega_semi_step(cur);
    return cur;
}

std::pair<std::vector<int>, SuccessionLabel> active_sites_101_201(const IntSeq& e) {
    require_inversion_sequence(e);
    static const WordSet kDomain = parse_word_set("101,201");
    if (!avoids_words(e, kDomain))
        throw std::domain_error("sequence contains a 101 or 201 order type");
    const int n = static_cast<int>(e.size());
    int maxx = 0;
    for (int v : e) maxx = std::max(maxx, v);
    std::vector<int> sites;
    SuccessionLabel label{0, 0};
    for (int c = 0; c <= n; ++c) {
        if (!avoids_words(concat_back(e, c), kDomain)) continue;
        sites.push_back(c);
        if (c <= maxx)
            ++label.h;
        else
            ++label.k;
    }
    return {sites, label};
}

// ---- registry ------------------------------------------------------------------

const std::vector<SequenceSpec>& sequence_registry() {
    static const std::vector<SequenceSpec> kRegistry = {
        {"class7", SequenceKind::ClosedForm, "7"},
        {"class12", SequenceKind::ClosedForm, "12"},
        {"class21", SequenceKind::ClosedForm, "21"},
        {"class22", SequenceKind::ClosedForm, "22"},
        {"class33", SequenceKind::ClosedForm, "33"},
        {"class64", SequenceKind::ClosedForm, "64"},
        {"class121", SequenceKind::ClosedForm, "121"},
        {"class151", SequenceKind::LinearRecurrence, "151"},
        {"class185", SequenceKind::ClosedForm, "185"},
        {"class187", SequenceKind::TriangleSum, "187"},
        {"class193", SequenceKind::ClosedForm, "193"},
        {"class233", SequenceKind::ClosedForm, "233"},
        {"class304", SequenceKind::TriangleSum, "304"},
        {"catalan", SequenceKind::ClosedForm, "429"},
        {"class523", SequenceKind::TriangleSum, "523"},
        {"class805", SequenceKind::ClosedForm, "805"},
        {"bell", SequenceKind::TriangleSum, "877"},
        {"class924", SequenceKind::ClosedForm, "924"},
        {"class1016", SequenceKind::ClosedForm, "1016"},
        {"class1064", SequenceKind::Series, "1064"},
        {"class1079A", SequenceKind::ClosedForm, "1079"},
        {"euler", SequenceKind::TriangleSum, "1385"},
        {"class1694", SequenceKind::Series, "1694"},
        {"schroder", SequenceKind::LinearRecurrence, "1806"},
        {"baxter", SequenceKind::BundledPrefix, "2074"},
        {"class2549", SequenceKind::ClosedForm, "2549"},
        {"semi_baxter", SequenceKind::SuccessionRule, "2958"},
        {"class3207", SequenceKind::TriangleSum, "3207"},
        {"const_1200", SequenceKind::ClosedForm, "(-,-,-)"},
        {"const_1210", SequenceKind::ClosedForm, "(<=,<=,-)"},
        {"const_12211", SequenceKind::ClosedForm, "(-,-,!=)"},
        {"const_1222", SequenceKind::ClosedForm, "(-,-,<) (-,!=,-)"},
        {"const_1233", SequenceKind::ClosedForm, "(-,!=,!=)"},
    };
    return kRegistry;
}

bool is_known_sequence(const std::string& name) {
    for (const SequenceSpec& s : sequence_registry())
        if (s.name == name) return true;
    return false;
}

std::vector<BigInt> known_sequence(const std::string& name, int N) {
    if (N < 1) throw std::invalid_argument("term count must be at least 1");
    if (name == "class7") return seq_class7(N);
    if (name == "class12") return seq_class12(N);
    if (name == "class21") return seq_class21(N);
    if (name == "class22") return seq_class22(N);
    if (name == "class33") return seq_class33(N);
    if (name == "class64") return seq_class64(N);
    if (name == "class121") return seq_class121(N);
    if (name == "class151") return seq_class151(N);
    if (name == "class185") return seq_class185(N);
    if (name == "class187") return seq_class187(N);
    if (name == "class193") return seq_class193(N);
    if (name == "class233") return seq_class233(N);
    if (name == "class304") return triangle_row_sums(&s_triangle_304, N);
    if (name == "catalan") return seq_catalan(N);
    if (name == "class523") return triangle_row_sums(&nexus_T, N);
    if (name == "class805") return seq_class805(N);
    if (name == "bell") return seq_bell(N);
    if (name == "class924") return seq_class924(N);
    if (name == "class1016") return seq_class1016(N);
    if (name == "class1064") return seq_from_series("Q1064", N, -1);
    if (name == "class1079A") return seq_class1079A(N);
    if (name == "euler") return seq_euler(N);
    if (name == "class1694") return seq_from_series("A200753", N, 0);
    if (name == "schroder") return seq_schroder(N);
    if (name == "baxter") {
        const std::vector<BigInt>& p = baxter_prefix();
        if (N > static_cast<int>(p.size()))
            throw std::out_of_range("bundled prefix for 'baxter' has only " +
                                    std::to_string(p.size()) + " terms");
        return std::vector<BigInt>(p.begin(), p.begin() + N);
    }
    if (name == "class2549") return seq_class2549(N);
    if (name == "semi_baxter") return omega_semi_level_counts(N);
    if (name == "class3207") return triangle_row_sums(&callan_u, N);
    if (name == "const_1200") return seq_constant_profile({1, 2, 0}, N);
    if (name == "const_1210") return seq_constant_profile({1, 2, 1, 0}, N);
    if (name == "const_12211") return seq_constant_profile({1, 2, 2, 1}, N);
    if (name == "const_1222") return seq_constant_profile({1, 2, 2}, N);
    if (name == "const_1233") return seq_constant_profile({1, 2, 3}, N);
    throw std::invalid_argument("unknown sequence name: " + name);
}

// ---- bundled database -------------------------------------------------------------

std::vector<KnownSequenceEntry> load_sequence_db(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence database: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error("malformed sequence database " + path + ": " + ex.what());
    }
    if (!doc.is_array()) throw std::runtime_error("sequence database must be a JSON array");
    std::vector<KnownSequenceEntry> db;
    for (const nlohmann::json& item : doc) {
        KnownSequenceEntry entry;
        entry.id = item.at("id").get<std::string>();
        entry.description = item.value("description", std::string());
        entry.offset = item.value("offset", 0);
        entry.provenance = item.value("provenance", std::string());
        for (const nlohmann::json& t : item.at("terms")) {
            if (t.is_string())
                entry.terms.emplace_back(t.get<std::string>());
            else
                entry.terms.emplace_back(t.get<long long>());
        }
        db.push_back(std::move(entry));
    }
    return db;
}

std::vector<KnownSequenceEntry> fingerprint(const std::vector<BigInt>& seq,
                                            const std::vector<KnownSequenceEntry>& db) {
    if (seq.size() < 5)
        throw std::invalid_argument("fingerprint needs at least 5 terms");
    std::vector<KnownSequenceEntry> hits;
    for (const KnownSequenceEntry& entry : db) {
        if (entry.terms.size() < seq.size()) continue;
        bool found = false;
        for (size_t start = 0; start + seq.size() <= entry.terms.size() && !found; ++start) {
            found = std::equal(seq.begin(), seq.end(), entry.terms.begin() + static_cast<long>(start));
        }
        if (found) hits.push_back(entry);
    }
    return hits;
}

}  // namespace invseq
