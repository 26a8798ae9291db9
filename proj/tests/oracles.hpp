#pragma once

// Independent brute-force oracles. These work on raw int tables and maps,
// never through the library's predicates or enumerators, so they can check
// the library path rather than restate it.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Table = std::vector<int>;  // n*n row-major, 0-based

inline int at(const Table& t, int n, int i, int j) { return t[i * n + j]; }

inline bool assoc(const Table& t, int n) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(t, n, at(t, n, a, b), c) != at(t, n, a, at(t, n, b, c)))
                    return false;
    return true;
}

inline long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// plain odometer over all n^(n*n) tables, counting the associative ones
inline long long count_labelled_semigroups(int n) {
    const int cells = n * n;
    const long long total = ipow(n, cells);
    Table t(cells, 0);
    long long count = 0;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < cells; ++i) {
            t[i] = int(c % n);
            c /= n;
        }
        if (assoc(t, n)) ++count;
    }
    return count;
}

inline std::vector<Table> labelled_semigroups(int n) {
    const int cells = n * n;
    const long long total = ipow(n, cells);
    Table t(cells, 0);
    std::vector<Table> out;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < cells; ++i) {
            t[i] = int(c % n);
            c /= n;
        }
        if (assoc(t, n)) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_hom(const std::vector<int>& f, const Table& src, int ns, const Table& dst,
                   int nd) {
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < ns; ++b)
            if (f[at(src, ns, a, b)] != at(dst, nd, f[a], f[b])) return false;
    return true;
}

struct SbpTuple {
    Table A;
    std::vector<int> k, p, q, s;
    auto operator<=>(const SbpTuple&) const = default;
};

// every (A,k,p,q,s) with order-2 ends passing the three equations plus the
// two homomorphism conditions, by full scan over order-3 middles
inline std::vector<SbpTuple> solutions_order3(const Table& X, const Table& B,
                                              const std::vector<Table>& middles) {
    std::vector<SbpTuple> out;
    const int nx = 2, nb = 2, na = 3;
    for (const Table& A : middles)
        for (int k0 = 0; k0 < na; ++k0)
            for (int k1 = 0; k1 < na; ++k1) {
                if (k0 == k1) continue;
                std::vector<int> k{k0, k1};
                if (!is_hom(k, X, nx, A, na)) continue;
                for (int pc = 0; pc < 8; ++pc) {
                    std::vector<int> p{pc & 1, (pc >> 1) & 1, (pc >> 2) & 1};
                    if (!std::count(p.begin(), p.end(), 0) ||
                        !std::count(p.begin(), p.end(), 1))
                        continue;
                    if (!is_hom(p, A, na, B, nb)) continue;
                    for (int qc = 0; qc < 8; ++qc) {
                        std::vector<int> q{qc & 1, (qc >> 1) & 1, (qc >> 2) & 1};
                        if (q[k[0]] != 0 || q[k[1]] != 1) continue;
                        for (int s0 = 0; s0 < na; ++s0)
                            for (int s1 = 0; s1 < na; ++s1) {
                                if (p[s0] != 0 || p[s1] != 1) continue;
                                std::vector<int> s{s0, s1};
                                bool ok = true;
                                for (int a = 0; a < na && ok; ++a)
                                    if (at(A, na, k[q[a]], s[p[a]]) != a) ok = false;
                                if (ok) out.push_back({A, k, p, q, s});
                            }
                    }
                }
            }
    return out;
}

inline SbpTuple transport(const SbpTuple& sb, const std::vector<int>& pi) {
    const int na = 3;
    SbpTuple r;
    r.A.assign(9, 0);
    std::vector<int> inv(na);
    for (int i = 0; i < na; ++i) inv[pi[i]] = i;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            r.A[i * na + j] = pi[at(sb.A, na, inv[i], inv[j])];
    r.k = {pi[sb.k[0]], pi[sb.k[1]]};
    r.p = {sb.p[inv[0]], sb.p[inv[1]], sb.p[inv[2]]};
    r.q = {sb.q[inv[0]], sb.q[inv[1]], sb.q[inv[2]]};
    r.s = {pi[sb.s[0]], pi[sb.s[1]]};
    return r;
}

// middle-iso class count: orbits under relabeling the middle object
inline long long class_count(const Table& X, const Table& B,
                             const std::vector<Table>& middles) {
    auto sols = solutions_order3(X, B, middles);
    std::vector<int> base{0, 1, 2};
    std::set<SbpTuple> orbit_mins;
    for (const auto& sb : sols) {
        SbpTuple best = sb;
        std::vector<int> pi = base;
        do {
            SbpTuple cand = transport(sb, pi);
            if (cand < best) best = cand;
        } while (std::next_permutation(pi.begin(), pi.end()));
        orbit_mins.insert(best);
    }
    return (long long)orbit_mins.size();
}

} // namespace oracle
