#pragma once

/**
 * @file extension.hpp
 * @brief Cokernel-like and kernel-like universal properties of a semigroup
 *        semibiproduct, checked exhaustively over all semigroups Z up to a
 *        size bound (one representative per isomorphism class).
 *
 * Cokernel side: for every homomorphism f: A -> Z with f = fsp there is a
 * unique fbar: B -> Z with fbar p = f, namely fbar = fs.
 * Kernel side: for every homomorphism f: Z -> A with pf = hqf there is a
 * unique fbar: Z -> X with k fbar = f, namely fbar = qf.
 *
 * These are theorems for genuine semibiproducts; the bounded check is a
 * test bed, not a proof, and every report records the bound it used.
 */

#include "enumeration.hpp"
#include "magma.hpp"
#include "semibiproduct.hpp"

#include <optional>
#include <vector>

namespace sbp {

enum class UniversalProperty { cokernel_like, kernel_like };
enum class UniversalFailure { no_factorization, non_unique };

struct UniversalReport {
    UniversalProperty property = UniversalProperty::cokernel_like;
    int z_bound = 1;
    long long tested_homs = 0;     // homs satisfying the hypothesis
    bool holds = true;
    bool construction_ok = true;   // the proof's candidate (fs resp. qf) worked
    std::optional<Magma> witness_z;
    std::optional<Map> witness_f;
    std::optional<UniversalFailure> failure;
};

inline std::vector<Magma> canonical_semigroups_up_to(int max_order) {
    std::vector<Magma> out;
    for (int n = 1; n <= max_order; ++n) {
        auto reps = enumerate_structures(n, StructureFilter::semigroup, DedupMode::iso);
        out.insert(out.end(), reps.begin(), reps.end());
    }
    return out;
}

inline UniversalReport cokernel_property(const Semibiproduct& sb, int z_bound) {
    if (z_bound < 1) throw dimension_error("cokernel_property: z_bound must be >= 1");
    UniversalReport rep;
    rep.property = UniversalProperty::cokernel_like;
    rep.z_bound = z_bound;
    for (const Magma& z : canonical_semigroups_up_to(z_bound)) {
        for (const Map& f : homomorphisms(sb.A, z)) {
            bool hyp = true;  // f = f s p
            for (int a = 0; a < sb.A.order && hyp; ++a)
                if (f(a) != f(sb.s(sb.p(a)))) hyp = false;
            if (!hyp) continue;
            ++rep.tested_homs;
            std::vector<Map> factorizations;
            for (const Map& g : homomorphisms(sb.B, z)) {
                bool matches = true;
                for (int a = 0; a < sb.A.order && matches; ++a)
                    if (g(sb.p(a)) != f(a)) matches = false;
                if (matches) factorizations.push_back(g);
            }
            if (factorizations.size() != 1) {
                rep.holds = false;
                rep.failure = factorizations.empty() ? UniversalFailure::no_factorization
                                                     : UniversalFailure::non_unique;
                rep.witness_z = z;
                rep.witness_f = f;
                return rep;
            }
            for (int b = 0; b < sb.B.order; ++b)
                if (factorizations[0](b) != f(sb.s(b))) rep.construction_ok = false;
        }
    }
    return rep;
}

inline UniversalReport kernel_property(const Semibiproduct& sb, int z_bound) {
    if (z_bound < 1) throw dimension_error("kernel_property: z_bound must be >= 1");
    UniversalReport rep;
    rep.property = UniversalProperty::kernel_like;
    rep.z_bound = z_bound;
    Map h = compose(sb.p, sb.k);
    for (const Magma& z : canonical_semigroups_up_to(z_bound)) {
        for (const Map& f : homomorphisms(z, sb.A)) {
            bool hyp = true;  // p f = h q f
            for (int w = 0; w < z.order && hyp; ++w)
                if (sb.p(f(w)) != h(sb.q(f(w)))) hyp = false;
            if (!hyp) continue;
            ++rep.tested_homs;
            // the proof's first step: the hypothesis forces f = k q f
            for (int w = 0; w < z.order; ++w)
                if (f(w) != sb.k(sb.q(f(w)))) rep.construction_ok = false;
            std::vector<Map> factorizations;
            for (const Map& g : homomorphisms(z, sb.X)) {
                bool matches = true;
                for (int w = 0; w < z.order && matches; ++w)
                    if (sb.k(g(w)) != f(w)) matches = false;
                if (matches) factorizations.push_back(g);
            }
            if (factorizations.size() != 1) {
                rep.holds = false;
                rep.failure = factorizations.empty() ? UniversalFailure::no_factorization
                                                     : UniversalFailure::non_unique;
                rep.witness_z = z;
                rep.witness_f = f;
                return rep;
            }
            for (int w = 0; w < z.order; ++w)
                if (factorizations[0](w) != sb.q(f(w))) rep.construction_ok = false;
        }
    }
    return rep;
}

} // namespace sbp
