#pragma once

/**
 * @file action.hpp
 * @brief Magma-actions: six-tuples (X,B,theta,phi,h,t), the induced set R
 *        with its magma operation, the four derived partial operations, and
 *        the representability/associativity predicates.
 *
 * A magma-action consists of carriers X, B, a table theta: BxB -> B, a
 * 4-index table phi: XxBxXxB -> X, and plain maps h: X -> B, t: B -> X,
 * subject to
 *
 *   (3) h(phi(x,h(x),x',h(x'))) = theta(h(x),h(x'))
 *
 * and, with R = {(x,b) : phi(x,h(x),t(b),b) = x and theta(h(x),b) = b},
 *
 *   (5) (x,h(x)) in R, (6) (t(b),b) in R,
 *   (7) R closed under (x,b)+(x',b') = (phi(x,b,x',b'), theta(b,b')).
 *
 * The phi table is stored flattened in (x,b,x',b') row-major order.
 */

#include "magma.hpp"

#include <array>
#include <optional>
#include <vector>

namespace sbp {

struct MagmaAction {
    int x_order = 1;
    int b_order = 1;
    Magma theta;          // operation on B
    std::vector<int> phi; // x_order*b_order*x_order*b_order values in X
    Map h;                // X -> B
    Map t;                // B -> X

    int phi_at(int x, int b, int x2, int b2) const {
        return phi[((x * b_order + b) * x_order + x2) * b_order + b2];
    }
};

inline bool well_formed(const MagmaAction& a) {
    if (a.x_order < 1 || a.b_order < 1) return false;
    if (a.theta.order != a.b_order || !well_formed(a.theta)) return false;
    const std::size_t want =
        std::size_t(a.x_order) * a.b_order * a.x_order * a.b_order;
    if (a.phi.size() != want) return false;
    for (int v : a.phi)
        if (v < 0 || v >= a.x_order) return false;
    return well_formed(a.h) && a.h.dom == a.x_order && a.h.cod == a.b_order &&
           well_formed(a.t) && a.t.dom == a.b_order && a.t.cod == a.x_order;
}

inline bool in_R(const MagmaAction& a, int x, int b) {
    return a.phi_at(x, a.h(x), a.t(b), b) == x && a.theta.at(a.h(x), b) == b;
}

struct RPair {
    int x, b;
    bool operator==(const RPair&) const = default;
    auto operator<=>(const RPair&) const = default;
};

/// R as an ordered member list plus its operation table (indices into pairs).
struct RMagma {
    std::vector<RPair> pairs;  // lexicographic (x,b) order
    std::vector<int> op;       // |R| x |R| row-major

    int size() const { return (int)pairs.size(); }
    int op_at(int i, int j) const { return op[i * pairs.size() + j]; }

    int index_of(int x, int b) const {
        for (int i = 0; i < (int)pairs.size(); ++i)
            if (pairs[i].x == x && pairs[i].b == b) return i;
        return -1;
    }

    Magma magma() const {
        if (pairs.empty()) throw dimension_error("RMagma::magma: R is empty");
        return Magma{(int)pairs.size(), op};
    }
};

/// Members of R in lexicographic (x,b) order with the induced operation.
/// Throws not_closed_error if the operation leaves R (possible only when
/// the six-tuple is not a valid action).
inline RMagma compute_R(const MagmaAction& a) {
    RMagma r;
    for (int x = 0; x < a.x_order; ++x)
        for (int b = 0; b < a.b_order; ++b)
            if (in_R(a, x, b)) r.pairs.push_back({x, b});
    const int n = r.size();
    r.op.assign(std::size_t(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int x = a.phi_at(r.pairs[i].x, r.pairs[i].b, r.pairs[j].x, r.pairs[j].b);
            int b = a.theta.at(r.pairs[i].b, r.pairs[j].b);
            int idx = r.index_of(x, b);
            if (idx < 0)
                throw not_closed_error(
                    "compute_R: induced operation leaves R",
                    {r.pairs[i].x, r.pairs[i].b, r.pairs[j].x, r.pairs[j].b});
            r.op[i * n + j] = idx;
        }
    return r;
}

enum class ActionFailure { hom_compat, h_in_R, t_in_R, R_closure };

struct ActionReport {
    bool is_action = true;
    std::optional<ActionFailure> failed_condition;
    // hom_compat: {x,x'}; h_in_R: {x}; t_in_R: {b}; R_closure: {x,b,x',b'}
    std::array<int, 4> witness{-1, -1, -1, -1};
};

/// Checks condition (3), then memberships (5),(6), then closure (7).
/// Stops at the first failure with the smallest witness.
inline ActionReport verify_action(const MagmaAction& a) {
    ActionReport rep;
    for (int x = 0; x < a.x_order; ++x)
        for (int x2 = 0; x2 < a.x_order; ++x2)
            if (a.h(a.phi_at(x, a.h(x), x2, a.h(x2))) != a.theta.at(a.h(x), a.h(x2))) {
                rep.is_action = false;
                rep.failed_condition = ActionFailure::hom_compat;
                rep.witness = {x, x2, -1, -1};
                return rep;
            }
    for (int x = 0; x < a.x_order; ++x)
        if (!in_R(a, x, a.h(x))) {
            rep.is_action = false;
            rep.failed_condition = ActionFailure::h_in_R;
            rep.witness = {x, -1, -1, -1};
            return rep;
        }
    for (int b = 0; b < a.b_order; ++b)
        if (!in_R(a, a.t(b), b)) {
            rep.is_action = false;
            rep.failed_condition = ActionFailure::t_in_R;
            rep.witness = {b, -1, -1, -1};
            return rep;
        }
    for (int x = 0; x < a.x_order; ++x)
        for (int b = 0; b < a.b_order; ++b) {
            if (!in_R(a, x, b)) continue;
            for (int x2 = 0; x2 < a.x_order; ++x2)
                for (int b2 = 0; b2 < a.b_order; ++b2) {
                    if (!in_R(a, x2, b2)) continue;
                    if (!in_R(a, a.phi_at(x, b, x2, b2), a.theta.at(b, b2))) {
                        rep.is_action = false;
                        rep.failed_condition = ActionFailure::R_closure;
                        rep.witness = {x, b, x2, b2};
                        return rep;
                    }
                }
        }
    return rep;
}

/// The four partial operations cut out of phi:
///   x + x'  = phi(x,h(x),x',h(x'))     (a magma structure on X)
///   x ^ b   = phi(x,h(x),t(b),b)
///   b . x   = phi(t(b),b,x,h(x))
///   b x b'  = phi(t(b),b,t(b'),b')
struct DerivedOps {
    Magma xplus;              // X x X -> X
    std::vector<int> xpow;    // X x B -> X
    std::vector<int> bdot;    // B x X -> X
    std::vector<int> btimes;  // B x B -> X
    int x_order = 1, b_order = 1;

    int xpow_at(int x, int b) const { return xpow[x * b_order + b]; }
    int bdot_at(int b, int x) const { return bdot[b * x_order + x]; }
    int btimes_at(int b, int b2) const { return btimes[b * b_order + b2]; }
};

inline DerivedOps derived_ops(const MagmaAction& a) {
    DerivedOps d;
    d.x_order = a.x_order;
    d.b_order = a.b_order;
    d.xplus.order = a.x_order;
    d.xplus.table.assign(std::size_t(a.x_order) * a.x_order, 0);
    for (int x = 0; x < a.x_order; ++x)
        for (int x2 = 0; x2 < a.x_order; ++x2)
            d.xplus.table[x * a.x_order + x2] = a.phi_at(x, a.h(x), x2, a.h(x2));
    d.xpow.assign(std::size_t(a.x_order) * a.b_order, 0);
    for (int x = 0; x < a.x_order; ++x)
        for (int b = 0; b < a.b_order; ++b)
            d.xpow[x * a.b_order + b] = a.phi_at(x, a.h(x), a.t(b), b);
    d.bdot.assign(std::size_t(a.b_order) * a.x_order, 0);
    for (int b = 0; b < a.b_order; ++b)
        for (int x = 0; x < a.x_order; ++x)
            d.bdot[b * a.x_order + x] = a.phi_at(a.t(b), b, x, a.h(x));
    d.btimes.assign(std::size_t(a.b_order) * a.b_order, 0);
    for (int b = 0; b < a.b_order; ++b)
        for (int b2 = 0; b2 < a.b_order; ++b2)
            d.btimes[b * a.b_order + b2] = a.phi_at(a.t(b), b, a.t(b2), b2);
    return d;
}

struct RPairPair {
    RPair first, second;
    bool operator==(const RPairPair&) const = default;
};

/// A magma-action is representable when phi is determined by its four
/// partial operations:
///
///   phi(x,b,x',b') = ((x + b.x') + theta(b,h(x')) x b') ^ theta(b,b')
///
/// quantified over pairs in R (the definition), or over all of XxB when
/// all_pairs is set (the stronger form the worked example satisfies).
inline std::optional<RPairPair> representability_witness(const MagmaAction& a,
                                                         bool all_pairs = false) {
    DerivedOps d = derived_ops(a);
    for (int x = 0; x < a.x_order; ++x)
        for (int b = 0; b < a.b_order; ++b) {
            if (!all_pairs && !in_R(a, x, b)) continue;
            for (int x2 = 0; x2 < a.x_order; ++x2)
                for (int b2 = 0; b2 < a.b_order; ++b2) {
                    if (!all_pairs && !in_R(a, x2, b2)) continue;
                    int u = d.xplus.at(x, d.bdot_at(b, x2));
                    int v = d.xplus.at(u, d.btimes_at(a.theta.at(b, a.h(x2)), b2));
                    int w = d.xpow_at(v, a.theta.at(b, b2));
                    if (w != a.phi_at(x, b, x2, b2))
                        return RPairPair{{x, b}, {x2, b2}};
                }
        }
    return std::nullopt;
}

inline bool is_representable(const MagmaAction& a, bool all_pairs = false) {
    return !representability_witness(a, all_pairs);
}

/// Smallest failing triple of R-indices (pairs in lexicographic order), if
/// (R,+) is not a semigroup.
inline std::optional<Triple> action_associativity_witness(const MagmaAction& a) {
    RMagma r = compute_R(a);
    if (r.pairs.empty()) return std::nullopt;
    return associativity_witness(r.magma());
}

inline bool is_associative_action(const MagmaAction& a) {
    return !action_associativity_witness(a);
}

} // namespace sbp
