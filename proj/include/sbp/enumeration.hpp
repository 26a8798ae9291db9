#pragma once

/**
 * @file enumeration.hpp
 * @brief Exhaustive generation: all magmas/semigroups of a given order with
 *        canonical deduplication, all semibiproducts with fixed ends, the
 *        semibiproduct isomorphism test, and the 2x2 magma-action census.
 *
 * Everything here is deterministic: parallel and sequential runs produce
 * identical output. Work is partitioned statically and merged in partition
 * order; no result depends on scheduling.
 */

#include "action.hpp"
#include "magma.hpp"
#include "semibiproduct.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <thread>
#include <vector>

namespace sbp {

enum class StructureFilter { magma, semigroup, monoid, group };
enum class DedupMode { none, iso, iso_anti };

namespace detail {

// Backtracking over table cells in row-major order; with prune_assoc the
// partially filled table is kept consistent with associativity, which cuts
// the order-4 search from 4^16 candidates to a few hundred thousand nodes.
template <typename F>
inline void gen_tables(int n, bool prune_assoc, F&& emit) {
    std::vector<int> t(std::size_t(n) * n, -1);
    auto consistent = [&]() {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int ab = t[a * n + b];
                if (ab < 0) continue;
                for (int c = 0; c < n; ++c) {
                    int bc = t[b * n + c];
                    if (bc < 0) continue;
                    int l = t[ab * n + c], r = t[a * n + bc];
                    if (l >= 0 && r >= 0 && l != r) return false;
                }
            }
        return true;
    };
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n * n) {
            emit(Magma{n, t});
            return;
        }
        for (int v = 0; v < n; ++v) {
            t[pos] = v;
            if (!prune_assoc || consistent()) self(self, pos + 1);
        }
        t[pos] = -1;
    };
    rec(rec, 0);
}

} // namespace detail

/// All tables of the given order passing the filter, deduplicated per mode,
/// in lexicographic table order (of the canonical representatives for the
/// iso modes).
inline std::vector<Magma> enumerate_structures(int order, StructureFilter filter,
                                               DedupMode dedup) {
    if (order < 1) throw dimension_error("enumerate_structures: order must be >= 1");
    const bool assoc = filter != StructureFilter::magma;
    if ((assoc && order > 5) || (!assoc && order > 3))
        throw order_too_large_error("enumerate_structures: order beyond desk scale");
    std::vector<Magma> out;
    detail::gen_tables(order, assoc, [&](const Magma& m) {
        if (filter == StructureFilter::monoid && !identity_element(m)) return;
        if (filter == StructureFilter::group && !is_group(m)) return;
        out.push_back(m);
    });
    if (dedup == DedupMode::none) return out;
    std::vector<Magma> reps;
    for (const Magma& m : out)
        reps.push_back(dedup == DedupMode::iso ? canonical_form(m) : canonical_form_anti(m));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

struct EnumSpec {
    Magma x_end, b_end;
    int middle_order = 3;
    StructureFilter structure_filter = StructureFilter::semigroup;
    DedupMode dedup_mode = DedupMode::iso;  // iso = "middle-iso", none = labelled
};

namespace detail {

inline std::vector<int> encode_sbp(const Semibiproduct& sb) {
    std::vector<int> e;
    e.reserve(sb.A.table.size() + sb.k.values.size() + sb.p.values.size() +
              sb.q.values.size() + sb.s.values.size());
    e.insert(e.end(), sb.A.table.begin(), sb.A.table.end());
    e.insert(e.end(), sb.k.values.begin(), sb.k.values.end());
    e.insert(e.end(), sb.p.values.begin(), sb.p.values.end());
    e.insert(e.end(), sb.q.values.begin(), sb.q.values.end());
    e.insert(e.end(), sb.s.values.begin(), sb.s.values.end());
    return e;
}

// Relabel the middle object by pi, transporting all four maps.
inline Semibiproduct transport_middle(const Semibiproduct& sb, const Perm& pi) {
    Semibiproduct r = sb;
    r.A = relabel(sb.A, pi);
    for (int x = 0; x < sb.k.dom; ++x) r.k.values[x] = pi[sb.k(x)];
    Perm inv(sb.A.order);
    for (int i = 0; i < sb.A.order; ++i) inv[pi[i]] = i;
    for (int a = 0; a < sb.A.order; ++a) {
        r.p.values[a] = sb.p(inv[a]);
        r.q.values[a] = sb.q(inv[a]);
    }
    for (int b = 0; b < sb.s.dom; ++b) r.s.values[b] = pi[sb.s(b)];
    return r;
}

// Orbit-minimal representative under relabelings of the middle object; this
// is the dedup key for middle-iso counting (ends stay fixed pointwise).
inline Semibiproduct middle_canonical(const Semibiproduct& sb) {
    Perm pi(sb.A.order);
    std::iota(pi.begin(), pi.end(), 0);
    Semibiproduct best = sb;
    std::vector<int> best_key = encode_sbp(sb);
    do {
        Semibiproduct cand = transport_middle(sb, pi);
        std::vector<int> key = encode_sbp(cand);
        if (key < best_key) {
            best = std::move(cand);
            best_key = std::move(key);
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return best;
}

// All (k,p,q,s) completions for a fixed middle table. qk = 1_X pins q on
// the image of k and ps = 1_B restricts s to sections of p; both are
// exploited before the kq+sp filter.
inline void complete_middle(const Magma& X, const Magma& B, const Magma& A,
                            std::vector<Semibiproduct>& out) {
    const int nx = X.order, nb = B.order, na = A.order;
    for (const Map& k : homomorphisms(X, A)) {
        bool injective = true;
        for (int i = 0; i < nx && injective; ++i)
            for (int j = 0; j < i; ++j)
                if (k(i) == k(j)) { injective = false; break; }
        if (!injective) continue;
        std::vector<int> q_fixed(na, -1);
        for (int x = 0; x < nx; ++x) q_fixed[k(x)] = x;
        std::vector<int> free_pos;
        for (int a = 0; a < na; ++a)
            if (q_fixed[a] < 0) free_pos.push_back(a);

        for (const Map& p : homomorphisms(A, B)) {
            std::vector<std::vector<int>> fibers(nb);
            for (int a = 0; a < na; ++a) fibers[p(a)].push_back(a);
            bool surjective = true;
            for (int b = 0; b < nb; ++b)
                if (fibers[b].empty()) { surjective = false; break; }
            if (!surjective) continue;

            // odometer over q values on the free positions
            std::vector<int> qa(free_pos.size(), 0);
            while (true) {
                Map q{na, nx, q_fixed};
                for (std::size_t i = 0; i < free_pos.size(); ++i)
                    q.values[free_pos[i]] = qa[i];
                // odometer over sections s
                std::vector<std::size_t> si(nb, 0);
                while (true) {
                    Map s{nb, na, std::vector<int>(nb)};
                    for (int b = 0; b < nb; ++b) s.values[b] = fibers[b][si[b]];
                    bool ok = true;
                    for (int a = 0; a < na && ok; ++a)
                        if (A.at(k(q(a)), s(p(a))) != a) ok = false;
                    if (ok) out.push_back(Semibiproduct{X, A, B, k, p, q, s});
                    int pos = nb - 1;
                    while (pos >= 0 && ++si[pos] == fibers[pos].size()) si[pos--] = 0;
                    if (pos < 0) break;
                }
                if (free_pos.empty()) break;
                int pos = (int)free_pos.size() - 1;
                while (pos >= 0 && ++qa[pos] == nx) qa[pos--] = 0;
                if (pos < 0) break;
            }
        }
    }
}

} // namespace detail

/// All semibiproducts with the given ends and middle order, deduplicated per
/// mode (DedupMode::iso identifies solutions that differ by a relabeling of
/// the middle object with ends fixed pointwise), sorted by
/// (A table, k, p, q, s).
inline std::vector<Semibiproduct> enumerate_semibiproducts(const EnumSpec& spec,
                                                           int workers = 1) {
    if (!well_formed(spec.x_end) || !well_formed(spec.b_end))
        throw dimension_error("enumerate_semibiproducts: malformed ends");
    if (spec.middle_order < 1 || spec.middle_order > 4)
        throw order_too_large_error("enumerate_semibiproducts: middle order must be 1..4");
    if (spec.dedup_mode == DedupMode::iso_anti)
        throw dimension_error("enumerate_semibiproducts: iso-anti dedup is not defined "
                              "for semibiproducts");
    std::vector<Magma> middles =
        enumerate_structures(spec.middle_order, spec.structure_filter, DedupMode::none);

    std::vector<std::vector<Semibiproduct>> per_middle(middles.size());
    int nthreads = std::max(1, workers);
    if (nthreads == 1 || middles.size() <= 1) {
        for (std::size_t i = 0; i < middles.size(); ++i)
            detail::complete_middle(spec.x_end, spec.b_end, middles[i], per_middle[i]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back([&, w]() {
                for (std::size_t i = w; i < middles.size(); i += nthreads)
                    detail::complete_middle(spec.x_end, spec.b_end, middles[i],
                                            per_middle[i]);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<Semibiproduct> all;
    for (auto& v : per_middle)
        for (auto& sb : v) all.push_back(std::move(sb));

    std::vector<Semibiproduct> out;
    if (spec.dedup_mode == DedupMode::none) {
        out = std::move(all);
    } else {
        std::map<std::vector<int>, Semibiproduct> reps;
        for (const Semibiproduct& sb : all) {
            Semibiproduct canon = detail::middle_canonical(sb);
            reps.emplace(detail::encode_sbp(canon), std::move(canon));
        }
        for (auto& [key, sb] : reps) out.push_back(std::move(sb));
    }
    std::sort(out.begin(), out.end(),
              [](const Semibiproduct& a, const Semibiproduct& b) {
                  return detail::encode_sbp(a) < detail::encode_sbp(b);
              });
    return out;
}

struct IsoTriple {
    Perm f1, f2, f3;  // X1 -> X2, A1 -> A2, B1 -> B2
};

/// First triple of magma isomorphisms (lexicographic in (f1,f2,f3), ends
/// forced to identities when fix_ends) making the whole diagram commute,
/// dotted arrows included.
inline std::optional<IsoTriple> sbp_isomorphic(const Semibiproduct& sb1,
                                               const Semibiproduct& sb2, bool fix_ends) {
    if (sb1.X.order != sb2.X.order || sb1.A.order != sb2.A.order ||
        sb1.B.order != sb2.B.order)
        return std::nullopt;
    auto is_iso = [](const Perm& f, const Magma& m1, const Magma& m2) {
        for (int a = 0; a < m1.order; ++a)
            for (int b = 0; b < m1.order; ++b)
                if (f[m1.at(a, b)] != m2.at(f[a], f[b])) return false;
        return true;
    };
    std::vector<Perm> f1s, f3s;
    Perm id1(sb1.X.order), id3(sb1.B.order);
    std::iota(id1.begin(), id1.end(), 0);
    std::iota(id3.begin(), id3.end(), 0);
    if (fix_ends) {
        f1s = {id1};
        f3s = {id3};
    } else {
        Perm f = id1;
        do f1s.push_back(f); while (std::next_permutation(f.begin(), f.end()));
        f = id3;
        do f3s.push_back(f); while (std::next_permutation(f.begin(), f.end()));
    }
    for (const Perm& f1 : f1s) {
        if (!is_iso(f1, sb1.X, sb2.X)) continue;
        Perm f2(sb1.A.order);
        std::iota(f2.begin(), f2.end(), 0);
        do {
            if (!is_iso(f2, sb1.A, sb2.A)) continue;
            bool k_ok = true, q_ok = true;
            for (int x = 0; x < sb1.X.order && k_ok; ++x)
                if (f2[sb1.k(x)] != sb2.k(f1[x])) k_ok = false;
            if (!k_ok) continue;
            for (int a = 0; a < sb1.A.order && q_ok; ++a)
                if (f1[sb1.q(a)] != sb2.q(f2[a])) q_ok = false;
            if (!q_ok) continue;
            for (const Perm& f3 : f3s) {
                if (!is_iso(f3, sb1.B, sb2.B)) continue;
                bool ok = true;
                for (int a = 0; a < sb1.A.order && ok; ++a)
                    if (sb2.p(f2[a]) != f3[sb1.p(a)]) ok = false;
                for (int b = 0; b < sb1.B.order && ok; ++b)
                    if (f2[sb1.s(b)] != sb2.s(f3[b])) ok = false;
                if (ok) return IsoTriple{f1, f2, f3};
            }
        } while (std::next_permutation(f2.begin(), f2.end()));
    }
    return std::nullopt;
}

struct CensusSummary {
    long long total = 0;
    long long valid = 0;
    long long representable = 0;
    long long associative = 0;
    long long representable_not_associative = 0;
};

struct CensusFlags {
    bool representable = false;
    bool associative = false;
};

namespace detail {

inline long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline void decode_digits(long long code, int base, std::vector<int>& out) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = int(code % base);
        code /= base;
    }
}

struct CensusPartitionResult {
    CensusSummary summary;
    // (theta_code, h_code, t_code, phi_code, flags) of valid actions
    std::vector<std::array<long long, 4>> valid_codes;
    std::vector<CensusFlags> valid_flags;
};

} // namespace detail

/// Classifies every six-tuple over carriers of the given (small) orders.
/// on_valid, when provided, is invoked for each valid action in a fixed
/// enumeration order (theta, h, t outer, phi inner; tables decoded
/// little-endian over row-major cells), independent of the worker count.
inline CensusSummary action_census(
    int x_order, int b_order, int workers = 1,
    const std::function<void(const MagmaAction&, CensusFlags)>& on_valid = {}) {
    if (x_order < 1 || b_order < 1 || x_order > 2 || b_order > 2)
        throw order_too_large_error("action_census: only carriers of order <= 2");
    const int n = x_order, m = b_order;
    const long long theta_count = detail::ipow(m, m * m);
    const long long h_count = detail::ipow(m, n);
    const long long t_count = detail::ipow(n, m);
    const long long phi_count = detail::ipow(n, n * m * n * m);
    const long long partitions = theta_count * h_count * t_count;

    std::vector<detail::CensusPartitionResult> results(partitions);
    auto run_partition = [&](long long part) {
        detail::CensusPartitionResult& res = results[part];
        long long rest = part;
        const long long theta_code = rest % theta_count;
        rest /= theta_count;
        const long long h_code = rest % h_count;
        const long long t_code = rest / h_count;

        MagmaAction a;
        a.x_order = n;
        a.b_order = m;
        a.theta = Magma{m, std::vector<int>(std::size_t(m) * m)};
        a.h = Map{n, m, std::vector<int>(n)};
        a.t = Map{m, n, std::vector<int>(m)};
        a.phi.assign(std::size_t(n) * m * n * m, 0);
        detail::decode_digits(theta_code, m, a.theta.table);
        detail::decode_digits(h_code, m, a.h.values);
        detail::decode_digits(t_code, n, a.t.values);

        for (long long phi_code = 0; phi_code < phi_count; ++phi_code) {
            detail::decode_digits(phi_code, n, a.phi);
            ++res.summary.total;
            if (!verify_action(a).is_action) continue;
            ++res.summary.valid;
            CensusFlags flags;
            flags.representable = is_representable(a);
            flags.associative = is_associative_action(a);
            if (flags.representable) ++res.summary.representable;
            if (flags.associative) ++res.summary.associative;
            if (flags.representable && !flags.associative)
                ++res.summary.representable_not_associative;
            if (on_valid) {
                res.valid_codes.push_back({theta_code, h_code, t_code, phi_code});
                res.valid_flags.push_back(flags);
            }
        }
    };

    int nthreads = std::max(1, workers);
    if (nthreads == 1) {
        for (long long part = 0; part < partitions; ++part) run_partition(part);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back([&, w]() {
                for (long long part = w; part < partitions; part += nthreads)
                    run_partition(part);
            });
        for (auto& th : pool) th.join();
    }

    CensusSummary summary;
    MagmaAction a;
    a.x_order = n;
    a.b_order = m;
    a.theta = Magma{m, std::vector<int>(std::size_t(m) * m)};
    a.h = Map{n, m, std::vector<int>(n)};
    a.t = Map{m, n, std::vector<int>(m)};
    a.phi.assign(std::size_t(n) * m * n * m, 0);
    for (long long part = 0; part < partitions; ++part) {
        const auto& res = results[part];
        summary.total += res.summary.total;
        summary.valid += res.summary.valid;
        summary.representable += res.summary.representable;
        summary.associative += res.summary.associative;
        summary.representable_not_associative += res.summary.representable_not_associative;
        if (on_valid)
            for (std::size_t i = 0; i < res.valid_codes.size(); ++i) {
                const auto& c = res.valid_codes[i];
                detail::decode_digits(c[0], m, a.theta.table);
                detail::decode_digits(c[1], m, a.h.values);
                detail::decode_digits(c[2], n, a.t.values);
                detail::decode_digits(c[3], n, a.phi);
                on_valid(a, res.valid_flags[i]);
            }
    }
    return summary;
}

} // namespace sbp
