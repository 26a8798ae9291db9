#pragma once

/**
 * @file magma.hpp
 * @brief Finite magmas as Cayley tables, finite maps, and the predicates
 *        (associativity, identity, homomorphism, isomorphism) everything
 *        else is built on.
 *
 * Elements are 0-based indices into {0..order-1} everywhere in memory.
 * File formats and reports are 1-based; the translation happens at the
 * JSON/CLI boundary only.
 *
 * Witness conventions: every predicate that can fail on concrete data
 * returns the lexicographically smallest counterexample, so tests and
 * reports are deterministic.
 */

#include "errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace sbp {

/// A binary operation on {0..order-1} stored as a row-major table:
/// table[a*order + b] is the product a+b.
struct Magma {
    int order = 1;
    std::vector<int> table = {0};

    int at(int a, int b) const { return table[a * order + b]; }

    bool operator==(const Magma&) const = default;
    auto operator<=>(const Magma&) const = default;
};

/// Total function {0..dom-1} -> {0..cod-1} as a value table.
struct Map {
    int dom = 1;
    int cod = 1;
    std::vector<int> values = {0};

    int operator()(int x) const { return values[x]; }

    bool operator==(const Map&) const = default;
    auto operator<=>(const Map&) const = default;
};

inline Map identity_map(int n) {
    Map f{n, n, std::vector<int>(n)};
    std::iota(f.values.begin(), f.values.end(), 0);
    return f;
}

inline Map constant_map(int dom, int cod, int value) {
    return Map{dom, cod, std::vector<int>(dom, value)};
}

/// g after f.
inline Map compose(const Map& g, const Map& f) {
    if (f.cod != g.dom)
        throw dimension_error("compose: codomain/domain mismatch");
    Map r{f.dom, g.cod, std::vector<int>(f.dom)};
    for (int x = 0; x < f.dom; ++x) r.values[x] = g(f(x));
    return r;
}

inline bool well_formed(const Magma& m) {
    if (m.order < 1 || (int)m.table.size() != m.order * m.order) return false;
    for (int v : m.table)
        if (v < 0 || v >= m.order) return false;
    return true;
}

inline bool well_formed(const Map& f) {
    if (f.dom < 1 || f.cod < 1 || (int)f.values.size() != f.dom) return false;
    for (int v : f.values)
        if (v < 0 || v >= f.cod) return false;
    return true;
}

struct Triple {
    int a, b, c;
    bool operator==(const Triple&) const = default;
};

/// Smallest (a,b,c) with (a+b)+c != a+(b+c), if any.
inline std::optional<Triple> associativity_witness(const Magma& m) {
    for (int a = 0; a < m.order; ++a)
        for (int b = 0; b < m.order; ++b)
            for (int c = 0; c < m.order; ++c)
                if (m.at(m.at(a, b), c) != m.at(a, m.at(b, c)))
                    return Triple{a, b, c};
    return std::nullopt;
}

inline bool is_associative(const Magma& m) { return !associativity_witness(m); }

/// The unique two-sided identity, if one exists.
inline std::optional<int> identity_element(const Magma& m) {
    for (int e = 0; e < m.order; ++e) {
        bool ok = true;
        for (int a = 0; a < m.order && ok; ++a)
            if (m.at(e, a) != a || m.at(a, e) != a) ok = false;
        if (ok) return e;
    }
    return std::nullopt;
}

inline bool is_commutative(const Magma& m) {
    for (int a = 0; a < m.order; ++a)
        for (int b = 0; b < a; ++b)
            if (m.at(a, b) != m.at(b, a)) return false;
    return true;
}

/// Associative, unital, and every row and column a permutation.
inline bool is_group(const Magma& m) {
    if (!is_associative(m) || !identity_element(m)) return false;
    std::vector<bool> seen(m.order);
    for (int a = 0; a < m.order; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (int b = 0; b < m.order; ++b) seen[m.at(a, b)] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
        std::fill(seen.begin(), seen.end(), false);
        for (int b = 0; b < m.order; ++b) seen[m.at(b, a)] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
    }
    return true;
}

struct StructureClass {
    bool associative = false;
    std::optional<int> unit;
    bool commutative = false;
    bool group = false;
};

inline StructureClass classify(const Magma& m) {
    StructureClass c;
    c.associative = is_associative(m);
    c.unit = identity_element(m);
    c.commutative = is_commutative(m);
    c.group = c.associative && c.unit && is_group(m);
    return c;
}

inline int group_inverse(const Magma& g, int a) {
    auto e = identity_element(g);
    if (!e) throw not_a_group_error("group_inverse: no identity element");
    for (int x = 0; x < g.order; ++x)
        if (g.at(a, x) == *e && g.at(x, a) == *e) return x;
    throw not_a_group_error("group_inverse: element has no inverse");
}

struct HomWitness {
    int a, b;
    bool operator==(const HomWitness&) const = default;
};

/// Smallest (a,b) with f(a+b) != f(a)+f(b), if any.
inline std::optional<HomWitness> homomorphism_witness(const Map& f, const Magma& src,
                                                      const Magma& dst) {
    if (f.dom != src.order || f.cod != dst.order)
        throw dimension_error("homomorphism_witness: map does not fit the magmas");
    for (int a = 0; a < src.order; ++a)
        for (int b = 0; b < src.order; ++b)
            if (f(src.at(a, b)) != dst.at(f(a), f(b))) return HomWitness{a, b};
    return std::nullopt;
}

inline bool is_homomorphism(const Map& f, const Magma& src, const Magma& dst) {
    return !homomorphism_witness(f, src, dst);
}

/// Lazily yields all cod^dom maps in lexicographic order of value sequences.
class MapEnumerator {
public:
    MapEnumerator(int dom_order, int cod_order)
        : dom_(dom_order), cod_(cod_order), current_(dom_order, 0) {
        if (dom_order < 1 || cod_order < 1)
            throw dimension_error("MapEnumerator: orders must be positive");
    }

    std::optional<Map> next() {
        if (done_) return std::nullopt;
        Map out{dom_, cod_, current_};
        // odometer, rightmost position fastest
        int i = dom_ - 1;
        while (i >= 0 && ++current_[i] == cod_) current_[i--] = 0;
        if (i < 0) done_ = true;
        return out;
    }

private:
    int dom_, cod_;
    std::vector<int> current_;
    bool done_ = false;
};

inline std::vector<Map> all_maps(int dom_order, int cod_order) {
    std::vector<Map> out;
    MapEnumerator en(dom_order, cod_order);
    while (auto f = en.next()) out.push_back(std::move(*f));
    return out;
}

/// enumerate_maps filtered by is_homomorphism, same ordering.
inline std::vector<Map> homomorphisms(const Magma& src, const Magma& dst) {
    std::vector<Map> out;
    MapEnumerator en(src.order, dst.order);
    while (auto f = en.next())
        if (is_homomorphism(*f, src, dst)) out.push_back(std::move(*f));
    return out;
}

using Perm = std::vector<int>;

/// relabel(m,pi)(pi(a),pi(b)) = pi(m(a,b))
inline Magma relabel(const Magma& m, const Perm& pi) {
    Magma r{m.order, std::vector<int>(m.order * m.order)};
    Perm inv(m.order);
    for (int i = 0; i < m.order; ++i) inv[pi[i]] = i;
    for (int i = 0; i < m.order; ++i)
        for (int j = 0; j < m.order; ++j)
            r.table[i * m.order + j] = pi[m.at(inv[i], inv[j])];
    return r;
}

inline Magma opposite(const Magma& m) {
    Magma r{m.order, std::vector<int>(m.order * m.order)};
    for (int i = 0; i < m.order; ++i)
        for (int j = 0; j < m.order; ++j) r.table[i * m.order + j] = m.at(j, i);
    return r;
}

struct Equivalence {
    Perm perm;
    bool anti = false;  // operation order reversed
};

/// First permutation (lexicographic) carrying m1 onto m2, as an isomorphism
/// or, when allow_anti, an anti-isomorphism. Absent if orders differ or no
/// permutation works.
inline std::optional<Equivalence> are_equivalent(const Magma& m1, const Magma& m2,
                                                 bool allow_anti) {
    if (m1.order != m2.order) return std::nullopt;
    Perm pi(m1.order);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        bool iso = true, anti = allow_anti;
        for (int a = 0; a < m1.order && (iso || anti); ++a)
            for (int b = 0; b < m1.order && (iso || anti); ++b) {
                int lhs = pi[m1.at(a, b)];
                if (lhs != m2.at(pi[a], pi[b])) iso = false;
                if (anti && lhs != m2.at(pi[b], pi[a])) anti = false;
            }
        if (iso) return Equivalence{pi, false};
        if (anti) return Equivalence{pi, true};
    } while (std::next_permutation(pi.begin(), pi.end()));
    return std::nullopt;
}

/// Lexicographically smallest table among all permutation relabelings.
/// Equal canonical forms iff are_equivalent(...) with allow_anti=false.
inline Magma canonical_form(const Magma& m) {
    Perm pi(m.order);
    std::iota(pi.begin(), pi.end(), 0);
    Magma best = m;
    do {
        Magma r = relabel(m, pi);
        if (r.table < best.table) best = r;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return best;
}

/// Canonical form of the iso-or-anti-iso class ("equivalence" in the sense
/// used for the order-2 semigroup classification).
inline Magma canonical_form_anti(const Magma& m) {
    Magma a = canonical_form(m), b = canonical_form(opposite(m));
    return a.table <= b.table ? a : b;
}

} // namespace sbp
