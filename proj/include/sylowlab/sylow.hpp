#pragma once

// Sylow p-subgroups and the counting statistics built on them:
// n_p(G), the p-element set U_p(G), lambda_G(x), alpha_G(x).

#include <algorithm>
#include <cstdint>
#include <vector>

#include "subgroup_algebra.hpp"

namespace sylowlab {

inline std::uint64_t p_part(std::uint64_t n, unsigned p) {
    std::uint64_t part = 1;
    while (n % p == 0) {
        n /= p;
        part *= p;
    }
    return part;
}

// A Sylow p-subgroup, grown from a cyclic seed: while Q is not yet full,
// N_G(Q) \ Q contains a p-element (Q < P forces Q < N_P(Q)), and any such
// element extends Q to a strictly larger p-subgroup.
inline Subgroup sylow_subgroup(const FiniteGroup& G, unsigned p) {
    const std::uint64_t target = p_part(G.order(), p);
    if (target == 1) throw DomainError("prime " + std::to_string(p) + " does not divide the group order");

    std::uint32_t seed = UINT32_MAX;
    for (std::uint32_t i = 1; i < G.order(); ++i) {
        if (detail::is_prime_power(G.element_order(i), p) && G.element_order(i) > 1) {
            seed = i;
            break;
        }
    }
    Subgroup Q = Subgroup::generated_by(G, {seed});
    while (Q.order() < target) {
        Subgroup N = normalizer(G, Q);
        std::uint32_t next = UINT32_MAX;
        for (auto g : N.indices()) {
            if (Q.contains_index(g)) continue;
            std::uint64_t ord = G.element_order(g);
            if (ord > 1 && detail::is_prime_power(ord, p)) {
                next = g;
                break;
            }
        }
        if (next == UINT32_MAX)
            throw IdentityViolation("sylow growth stalled below the p-part");
        auto gens = Q.generator_indices();
        gens.push_back(next);
        Q = Subgroup::generated_by(G, gens);
    }
    return Q;
}

// All conjugates of P, via the least representatives of the right cosets of
// N_G(P); deterministic order, P itself first.
inline std::vector<Subgroup> all_sylows(const FiniteGroup& G, const Subgroup& P) {
    Subgroup N = normalizer(G, P);
    std::vector<Subgroup> out;
    for_each_right_coset_rep(G, N.indices(), [&](std::uint32_t g) {
        out.push_back(P.conjugated_by(g));
    });
    return out;
}

struct SylowData {
    unsigned p = 0;
    Subgroup rep;                  // the representative Sylow subgroup
    std::vector<Subgroup> all;     // all conjugates, rep first
    std::uint64_t normalizer_order = 0;

    std::uint64_t n_p() const { return all.size(); }
};

inline SylowData sylow_data(const FiniteGroup& G, unsigned p) {
    Subgroup P = sylow_subgroup(G, p);
    Subgroup N = normalizer(G, P);
    SylowData d{p, P, {}, N.order()};
    for_each_right_coset_rep(G, N.indices(), [&](std::uint32_t g) {
        d.all.push_back(P.conjugated_by(g));
    });
    if (d.all.size() != G.order() / N.order())
        throw IdentityViolation("Sylow conjugate count differs from the normalizer index");
    if (d.all.size() % p != 1)
        throw IdentityViolation("Sylow count violates n_p = 1 (mod p)");
    return d;
}

// U_p(G) by direct order scan: indices of all elements of p-power order.
inline std::vector<std::uint32_t> p_element_indices(const FiniteGroup& G, unsigned p) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < G.order(); ++i)
        if (detail::is_prime_power(G.element_order(i), p)) out.push_back(i);
    return out;
}

// U_p(G) as the union of all Sylow p-subgroups: the independent second route.
inline std::vector<std::uint32_t> p_element_indices_via_sylows(const FiniteGroup& G,
                                                               const SylowData& syl) {
    std::vector<bool> in(G.order(), false);
    for (const auto& Q : syl.all)
        for (auto i : Q.indices()) in[i] = true;
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < G.order(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

// Number of Sylow p-subgroups containing x. Direct containment scan; above
// the work budget an equivalent normalizer-coset count avoids materialized
// subgroup lookups staying with the representative only.
inline std::uint64_t lambda_element(const SylowData& syl, std::uint32_t x) {
    const FiniteGroup& G = syl.rep.parent();
    if (!detail::is_prime_power(G.element_order(x), syl.p))
        throw DomainError("lambda: element is not a p-element");
    std::uint64_t count = 0;
    for (const auto& Q : syl.all)
        if (Q.contains_index(x)) ++count;
    return count;
}

// The coset-walk form: counts transversal reps g with x in P^g, i.e.
// g x g^-1 in P. Agrees with lambda_element; used as its cross-check and as
// the big-n_p fallback.
inline std::uint64_t lambda_element_via_transversal(const FiniteGroup& G, const Subgroup& P,
                                                    const Subgroup& normalizer_P, std::uint32_t x) {
    std::uint64_t count = 0;
    for_each_right_coset_rep(G, normalizer_P.indices(), [&](std::uint32_t g) {
        if (P.contains_index(G.conj(x, G.inv(g)))) ++count;
    });
    return count;
}

inline std::uint64_t lambda_subgroup(const SylowData& syl, const Subgroup& H) {
    std::uint64_t count = 0;
    for (const auto& Q : syl.all)
        if (H.is_subset_of(Q)) ++count;
    return count;
}

struct PElementStats {
    std::uint32_t x = 0;
    std::uint64_t lambda = 0;        // Sylow subgroups containing x
    std::uint64_t alpha = 0;         // |x^G n P|
    std::uint64_t alpha_cyclic = 0;  // G-conjugates of <x> inside P
};

namespace detail {

inline std::uint64_t alpha_element_in(const FiniteGroup& G, const Subgroup& P, std::uint32_t x) {
    std::uint64_t count = 0;
    for (auto y : G.conjugacy_class_of(x))
        if (P.contains_index(y)) ++count;
    return count;
}

inline std::uint64_t alpha_cyclic_in(const FiniteGroup& G, const Subgroup& P, std::uint32_t x,
                                     const Subgroup& norm_cyclic) {
    // conjugates of <x> are in bijection with cosets of N_G(<x>); for cyclic
    // <x>, containment of <x>^g in P is containment of x^g.
    std::uint64_t count = 0;
    for_each_right_coset_rep(G, norm_cyclic.indices(), [&](std::uint32_t g) {
        if (P.contains_index(G.conj(x, g))) ++count;
    });
    return count;
}

}  // namespace detail

// alpha = |x^G n P| and the count of conjugate cyclic subgroups <x>^g inside
// P. Both are independent of the Sylow representative; when n_p > 1 they are
// recomputed against a second Sylow subgroup and must agree.
inline PElementStats alpha(const FiniteGroup& G, const SylowData& syl, std::uint32_t x) {
    if (!detail::is_prime_power(G.element_order(x), syl.p))
        throw DomainError("alpha: element is not a p-element");
    Subgroup norm_cyc = normalizer(G, Subgroup::generated_by(G, {x}));
    PElementStats s;
    s.x = x;
    s.lambda = lambda_element(syl, x);
    s.alpha = detail::alpha_element_in(G, syl.rep, x);
    s.alpha_cyclic = detail::alpha_cyclic_in(G, syl.rep, x, norm_cyc);
    if (syl.all.size() > 1) {
        const Subgroup& second = syl.all[1];
        if (detail::alpha_element_in(G, second, x) != s.alpha ||
            detail::alpha_cyclic_in(G, second, x, norm_cyc) != s.alpha_cyclic)
            throw IdentityViolation("alpha depends on the Sylow representative");
    }
    return s;
}

}  // namespace sylowlab
