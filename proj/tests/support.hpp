#pragma once

// Shared fixtures: the order-2 semigroups M1..M4, the order-3 middle tables
// of the fixed-ends enumeration, the representable-but-not-associative
// 2x2 action worked out in full, and small group builders. Tables are
// written 1-based as in the reference data and converted here.

#include <sbp/action.hpp>
#include <sbp/magma.hpp>
#include <sbp/semibiproduct.hpp>

#include <cstdint>
#include <vector>

namespace fixtures {

inline sbp::Magma tbl(const std::vector<std::vector<int>>& rows_1based) {
    sbp::Magma m;
    m.order = (int)rows_1based.size();
    m.table.clear();
    for (const auto& row : rows_1based)
        for (int v : row) m.table.push_back(v - 1);
    return m;
}

inline sbp::Map mp(const std::vector<int>& values_1based, int cod) {
    sbp::Map f;
    f.dom = (int)values_1based.size();
    f.cod = cod;
    f.values.clear();
    for (int v : values_1based) f.values.push_back(v - 1);
    return f;
}

inline sbp::Magma m1() { return tbl({{1, 1}, {1, 2}}); }
inline sbp::Magma m2() { return tbl({{1, 1}, {2, 2}}); }
inline sbp::Magma m3() { return tbl({{1, 2}, {2, 1}}); }
inline sbp::Magma m4() { return tbl({{1, 1}, {1, 1}}); }

inline sbp::Magma a1() { return tbl({{1, 1, 1}, {1, 2, 3}, {1, 3, 1}}); }
inline sbp::Magma a2() { return tbl({{1, 1, 1}, {1, 2, 3}, {3, 3, 3}}); }

// The two solutions with ends (M1,M1) share these maps.
inline sbp::Semibiproduct case1(const sbp::Magma& middle) {
    return {m1(), middle, m1(), mp({1, 2}, 3), mp({1, 2, 1}, 2), mp({1, 2, 2}, 2),
            mp({3, 2}, 3)};
}

// Ends (M1,M3). The recorded middle repeats the case-(1) table by mistake;
// this one is the unique completion of the recorded maps.
inline sbp::Magma case2_middle() { return tbl({{1, 1, 3}, {1, 2, 3}, {3, 3, 1}}); }
inline sbp::Semibiproduct case2(const sbp::Map& q) {
    return {m1(), case2_middle(), m3(), mp({1, 2}, 3), mp({1, 1, 2}, 2), q,
            mp({2, 3}, 3)};
}

// Ends (M2,M1); again the unique completion of the recorded maps.
inline sbp::Magma case3_middle() { return tbl({{1, 1, 3}, {2, 2, 3}, {3, 3, 3}}); }
inline sbp::Semibiproduct case3(const sbp::Map& q, const sbp::Map& s) {
    return {m2(), case3_middle(), m1(), mp({1, 2}, 3), mp({2, 2, 1}, 2), q, s};
}

// Ends (M3,M1), exactly as recorded.
inline sbp::Magma case4_middle() { return tbl({{1, 2, 3}, {2, 1, 3}, {3, 3, 3}}); }
inline sbp::Semibiproduct case4(const sbp::Map& q) {
    return {m3(), case4_middle(), m1(), mp({1, 2}, 3), mp({2, 2, 1}, 2), q,
            mp({3, 1}, 3)};
}

// The representable non-associative action on X = B = {1,2}:
// theta(1,2) = 2, theta = 1 elsewhere, h = t = constant 1, phi as tabulated.
inline sbp::MagmaAction rep_nonassoc_action() {
    sbp::MagmaAction a;
    a.x_order = 2;
    a.b_order = 2;
    a.theta = tbl({{1, 2}, {1, 1}});
    a.h = mp({1, 1}, 2);
    a.t = mp({1, 1}, 2);
    a.phi.assign(16, 0);
    const int rows[16][5] = {
        {1, 1, 1, 1, 1}, {2, 1, 1, 1, 2}, {1, 2, 1, 1, 1}, {2, 2, 1, 1, 2},
        {1, 1, 2, 1, 2}, {2, 1, 2, 1, 1}, {1, 2, 2, 1, 1}, {2, 2, 2, 1, 2},
        {1, 1, 1, 2, 1}, {2, 1, 1, 2, 2}, {1, 2, 1, 2, 1}, {2, 2, 1, 2, 2},
        {1, 1, 2, 2, 2}, {2, 1, 2, 2, 1}, {1, 2, 2, 2, 1}, {2, 2, 2, 2, 2}};
    for (const auto& r : rows) {
        int x = r[0] - 1, b = r[1] - 1, x2 = r[2] - 1, b2 = r[3] - 1;
        a.phi[((x * 2 + b) * 2 + x2) * 2 + b2] = r[4] - 1;
    }
    return a;
}

// Expected operation table on R = {11,21,12,22}, in that order.
inline std::vector<std::vector<sbp::RPair>> rep_nonassoc_r_table() {
    auto pr = [](int x, int b) { return sbp::RPair{x - 1, b - 1}; };
    std::vector<sbp::RPair> order = {pr(1, 1), pr(2, 1), pr(1, 2), pr(2, 2)};
    const int expected[4][4] = {{11, 21, 12, 22},
                               {21, 11, 22, 12},
                               {11, 11, 11, 11},
                               {21, 21, 21, 21}};
    std::vector<std::vector<sbp::RPair>> out(5);
    out[4] = order;  // last row carries the header order
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out[i].push_back(pr(expected[i][j] / 10, expected[i][j] % 10));
    return out;
}

// X = B, h = t = identity, phi(x,b,x',b') = theta(x,b'); a magma-action iff
// theta is idempotent, with R the diagonal.
inline sbp::MagmaAction idempotent_diagonal(const sbp::Magma& theta) {
    sbp::MagmaAction a;
    a.x_order = theta.order;
    a.b_order = theta.order;
    a.theta = theta;
    a.h = sbp::identity_map(theta.order);
    a.t = sbp::identity_map(theta.order);
    int n = theta.order;
    a.phi.assign(std::size_t(n) * n * n * n, 0);
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < n; ++b)
            for (int x2 = 0; x2 < n; ++x2)
                for (int b2 = 0; b2 < n; ++b2)
                    a.phi[((x * n + b) * n + x2) * n + b2] = theta.at(x, b2);
    return a;
}

inline sbp::Magma cyclic(int n) {
    sbp::Magma m{n, std::vector<int>(std::size_t(n) * n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.table[i * n + j] = (i + j) % n;
    return m;
}

// Z2 x Z2 with element (a,b) at index 2a+b.
inline sbp::Magma klein() {
    sbp::Magma m{4, std::vector<int>(16)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.table[i * 4 + j] = i ^ j;
    return m;
}

// S3 as permutations of {0,1,2}: id, (01), (02), (12), (012), (021) where
// (012) sends 0->1,1->2,2->0; product fg applies g first.
struct S3 {
    sbp::Magma table;
    sbp::Map sign;                 // to Z2
    std::vector<int> transpositions;  // indices of the three transpositions
};

inline S3 s3() {
    const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                             {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto find = [&](const int* p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
                return i;
        return -1;
    };
    S3 g;
    g.table = sbp::Magma{6, std::vector<int>(36)};
    for (int f = 0; f < 6; ++f)
        for (int h = 0; h < 6; ++h) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[f][perms[h][x]];
            g.table.table[f * 6 + h] = find(comp);
        }
    g.sign = sbp::Map{6, 2, {0, 1, 1, 1, 0, 0}};
    g.transpositions = {1, 2, 3};
    return g;
}

// deterministic sampler for property-style tests
struct Lcg {
    std::uint64_t state = 0x243f6a8885a308d3ull;
    int next(int bound) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return int((state >> 33) % std::uint64_t(bound));
    }
};

} // namespace fixtures
