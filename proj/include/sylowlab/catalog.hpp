#pragma once

// Group catalog and builders: named small groups, block semidirect products,
// direct powers with a factor-permuting actor, and the extremal family G_n.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"

namespace sylowlab {

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t pow_u64_checked(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (a * b) % m;  // block sizes stay far below 2^32
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// least unit of multiplicative order exactly p (prime) modulo q: any s != 1
// with s^p = 1 qualifies
inline std::uint64_t least_unit_of_order(unsigned p, std::uint64_t q) {
    for (std::uint64_t s = 2; s < q; ++s)
        if (pow_mod(s, p, q) == 1) return s;
    throw DomainError("no unit of order " + std::to_string(p) + " mod " + std::to_string(q));
}

}  // namespace detail

inline FiniteGroup cyclic_group(unsigned m, std::size_t cap = kDefaultEnumerationCap) {
    std::vector<Point> img(m);
    for (unsigned i = 0; i < m; ++i) img[i] = static_cast<Point>((i + 1) % m);
    return FiniteGroup::from_generators("C" + std::to_string(m), m,
                                        {Permutation::from_images(std::move(img))}, cap);
}

// (Z_p)^k as k disjoint p-cycles
inline FiniteGroup elementary_abelian(unsigned p, unsigned k, std::size_t cap = kDefaultEnumerationCap) {
    unsigned degree = p * k;
    std::vector<Permutation> gens;
    for (unsigned b = 0; b < k; ++b) {
        std::vector<Point> img(degree);
        for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
        for (unsigned i = 0; i < p; ++i) img[b * p + i] = static_cast<Point>(b * p + (i + 1) % p);
        gens.push_back(Permutation::from_images(std::move(img)));
    }
    std::string name = "C" + std::to_string(p) + "^" + std::to_string(k);
    return FiniteGroup::from_generators(std::move(name), degree, std::move(gens), cap);
}

// order 2m on m points
inline FiniteGroup dihedral_group(unsigned m, std::size_t cap = kDefaultEnumerationCap) {
    if (m < 3) throw DomainError("dihedral group needs m >= 3");
    std::vector<Point> rot(m), refl(m);
    for (unsigned i = 0; i < m; ++i) {
        rot[i] = static_cast<Point>((i + 1) % m);
        refl[i] = static_cast<Point>((m - i) % m);
    }
    return FiniteGroup::from_generators("D" + std::to_string(2 * m), m,
                                        {Permutation::from_images(std::move(rot)),
                                         Permutation::from_images(std::move(refl))},
                                        cap);
}

inline FiniteGroup symmetric_group(unsigned n, std::size_t cap = kDefaultEnumerationCap) {
    std::vector<Permutation> gens;
    if (n >= 2) gens.push_back(parse_permutation("(1 2)", n));
    if (n >= 3) {
        std::string cyc = "(1";
        for (unsigned i = 2; i <= n; ++i) cyc += " " + std::to_string(i);
        cyc += ")";
        gens.push_back(parse_permutation(cyc, n));
    }
    return FiniteGroup::from_generators("S" + std::to_string(n), n, std::move(gens), cap);
}

inline FiniteGroup alternating_group(unsigned n, std::size_t cap = kDefaultEnumerationCap) {
    if (n < 3) throw DomainError("alternating group needs n >= 3");
    std::vector<Permutation> gens;
    for (unsigned k = 3; k <= n; ++k)
        gens.push_back(parse_permutation("(1 2 " + std::to_string(k) + ")", n));
    return FiniteGroup::from_generators("A" + std::to_string(n), n, std::move(gens), cap);
}

// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
inline FiniteGroup sl_2_3(std::size_t cap = kDefaultEnumerationCap) {
    auto vec_index = [](unsigned a, unsigned b) -> unsigned {
        unsigned raw = a * 3 + b;  // (0,0) excluded
        return raw - 1;
    };
    auto matrix_perm = [&](unsigned m00, unsigned m01, unsigned m10, unsigned m11) {
        std::vector<Point> img(8);
        for (unsigned a = 0; a < 3; ++a) {
            for (unsigned b = 0; b < 3; ++b) {
                if (a == 0 && b == 0) continue;
                unsigned a2 = (m00 * a + m01 * b) % 3;
                unsigned b2 = (m10 * a + m11 * b) % 3;
                img[vec_index(a, b)] = static_cast<Point>(vec_index(a2, b2));
            }
        }
        return Permutation::from_images(std::move(img));
    };
    return FiniteGroup::from_generators("SL(2,3)", 8,
                                        {matrix_perm(0, 2, 1, 0), matrix_perm(1, 1, 0, 1)}, cap);
}

// PSL(2,7) on the projective line over F_7: points 1..7 are 0..6, point 8 is
// infinity; generators z -> z+1 and z -> -1/z.
inline FiniteGroup psl_2_7(std::size_t cap = kDefaultEnumerationCap) {
    return FiniteGroup::from_generators(
        "PSL(2,7)", 8,
        {parse_permutation("(1 2 3 4 5 6 7)", 8), parse_permutation("(1 8)(2 7)(3 4)(5 6)", 8)}, cap);
}

// One cyclic block per entry of block_sizes, acted on by commuting cyclic
// actors through per-block multipliers. Degree is the disjoint block union;
// the translations meet the actor image trivially, so the order is always
// (product of block sizes) * |image of the acting group|.
struct BlockActor {
    std::uint64_t order = 1;
    std::vector<std::uint64_t> multipliers;  // one unit per block
};

struct BlockActionSpec {
    std::vector<std::uint64_t> block_sizes;
    std::vector<BlockActor> actors;
};

inline FiniteGroup semidirect_by_blocks(std::string name, const BlockActionSpec& spec,
                                        std::size_t cap = kDefaultEnumerationCap) {
    std::uint64_t degree = 0;
    for (auto s : spec.block_sizes) {
        if (s < 2) throw DomainError("block size must be at least 2");
        degree += s;
    }
    if (degree == 0 || degree > 60000) throw DomainError("degenerate block structure");

    std::vector<unsigned> offset;
    unsigned at = 0;
    for (auto s : spec.block_sizes) {
        offset.push_back(at);
        at += static_cast<unsigned>(s);
    }

    std::vector<Permutation> gens;
    std::uint64_t block_product = 1;
    for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) {
        std::vector<Point> img(degree);
        for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
        std::uint64_t s = spec.block_sizes[b];
        for (std::uint64_t j = 0; j < s; ++j)
            img[offset[b] + j] = static_cast<Point>(offset[b] + (j + 1) % s);
        gens.push_back(Permutation::from_images(std::move(img)));
        block_product *= s;
    }

    std::vector<Permutation> actor_perms;
    for (const auto& actor : spec.actors) {
        if (actor.multipliers.size() != spec.block_sizes.size())
            throw DomainError("action table must assign one multiplier per block");
        if (actor.order < 1) throw DomainError("actor order must be positive");
        std::vector<Point> img(degree);
        for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
        for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) {
            std::uint64_t s = spec.block_sizes[b];
            std::uint64_t t = actor.multipliers[b] % s;
            if (std::gcd(t, s) != 1)
                throw DomainError("multiplier " + std::to_string(actor.multipliers[b]) +
                                  " is not a unit mod " + std::to_string(s));
            if (detail::pow_mod(t, actor.order, s) != 1)
                throw DomainError("action relation violated: multiplier order does not divide " +
                                  std::to_string(actor.order));
            for (std::uint64_t j = 0; j < s; ++j)
                img[offset[b] + j] = static_cast<Point>(offset[b] + detail::mul_mod(j, t, s));
        }
        actor_perms.push_back(Permutation::from_images(std::move(img)));
    }

    std::uint64_t actor_image = closure(actor_perms, static_cast<unsigned>(degree), cap).size();
    std::uint64_t expected = block_product * actor_image;
    if (expected > cap) throw CapExceeded(cap);

    for (auto& a : actor_perms) gens.push_back(std::move(a));
    auto G = FiniteGroup::from_generators(std::move(name), static_cast<unsigned>(degree),
                                          std::move(gens), cap);
    if (G.order() != expected)
        throw IdentityViolation("block semidirect product order " + std::to_string(G.order()) +
                                " differs from expected " + std::to_string(expected));
    return G;
}

// Frobenius group C_q : C_p for primes p | q-1, realized on q points.
inline FiniteGroup frobenius_group(unsigned q, unsigned p, std::size_t cap = kDefaultEnumerationCap) {
    if (!detail::is_prime(p) || !detail::is_prime(q)) throw DomainError("p, q must be prime");
    if ((q - 1) % p != 0) throw DomainError("need p | q-1");
    BlockActionSpec spec;
    spec.block_sizes = {q};
    spec.actors = {{p, {detail::least_unit_of_order(p, q)}}};
    return semidirect_by_blocks("F" + std::to_string(p * q), spec, cap);
}

// Parameters of the extremal family: P elementary abelian of order p^n acting
// on a product of cyclic q-groups indexed by the maximal subgroups of P.
struct GnParams {
    unsigned p = 2;
    unsigned n = 1;
    std::uint64_t q = 3;
};

inline std::string gn_name(const GnParams& params) {
    return "Gn(" + std::to_string(params.p) + "," + std::to_string(params.n) + "," +
           std::to_string(params.q) + ")";
}

// Expected order q^((p^n-1)/(p-1)) * p^n, or cap+1 on overflow.
inline std::uint64_t gn_expected_order(const GnParams& params, std::uint64_t limit) {
    std::uint64_t blocks =
        (detail::pow_u64_checked(params.p, params.n, UINT64_MAX / 2) - 1) / (params.p - 1);
    std::uint64_t nq = detail::pow_u64_checked(params.q, blocks, limit);
    if (nq > limit) return limit + 1;
    std::uint64_t pp = detail::pow_u64_checked(params.p, params.n, limit);
    if (pp > limit || nq > limit / pp) return limit + 1;
    return nq * pp;
}

// The group G_n = N : P on q * (p^n-1)/(p-1) points: one block of q points
// per maximal subgroup M of P (enumerated as kernels of the canonical nonzero
// functionals chi_M), the block's cyclic factor acting by translation mod q,
// and each x in P acting on block M by multiplication with s^{chi_M(x)},
// where s is the least unit of multiplicative order p mod q.
inline FiniteGroup build_gn(const GnParams& params, std::size_t cap = kDefaultEnumerationCap) {
    const unsigned p = params.p;
    const unsigned n = params.n;
    const std::uint64_t q = params.q;
    if (!detail::is_prime(p) || !detail::is_prime(q)) throw DomainError("p and q must be prime");
    if (n < 1) throw DomainError("n must be positive");
    if (q % p != 1) throw DomainError("need p | q-1 (q = 1 mod p)");

    std::uint64_t expected = gn_expected_order(params, cap);
    if (expected > cap) throw CapExceeded(cap);

    // canonical functionals: nonzero vectors of (Z_p)^n with first nonzero
    // coordinate 1, in lexicographic order
    std::vector<std::vector<unsigned>> functionals;
    std::vector<unsigned> v(n, 0);
    while (true) {
        unsigned first = 0;
        while (first < n && v[first] == 0) ++first;
        if (first < n && v[first] == 1) functionals.push_back(v);
        int i = static_cast<int>(n) - 1;
        while (i >= 0 && v[i] == p - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    const std::size_t blocks = functionals.size();
    const unsigned degree = static_cast<unsigned>(q * blocks);
    const std::uint64_t s = detail::least_unit_of_order(p, q);

    std::vector<Permutation> gens;
    for (std::size_t b = 0; b < blocks; ++b) {  // translations: the factors of N
        std::vector<Point> img(degree);
        for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
        for (std::uint64_t j = 0; j < q; ++j)
            img[b * q + j] = static_cast<Point>(b * q + (j + 1) % q);
        gens.push_back(Permutation::from_images(std::move(img)));
    }
    for (unsigned basis = 0; basis < n; ++basis) {  // the basis of P
        std::vector<Point> img(degree);
        for (std::size_t b = 0; b < blocks; ++b) {
            std::uint64_t t = detail::pow_mod(s, functionals[b][basis], q);
            for (std::uint64_t j = 0; j < q; ++j)
                img[b * q + j] = static_cast<Point>(b * q + detail::mul_mod(j, t, q));
        }
        gens.push_back(Permutation::from_images(std::move(img)));
    }

    auto G = FiniteGroup::from_generators(gn_name(params), degree, std::move(gens), cap);
    if (G.order() != expected)
        throw IdentityViolation("G_n order " + std::to_string(G.order()) +
                                " differs from expected " + std::to_string(expected));
    return G;
}

// Direct product of k copies of L on k disjoint point blocks, with a cyclic
// actor rotating the first m factor labels (m = 1 means no actor at all).
// The factor decomposition is exported for the invariant-Sylow bound check.
struct DirectPowerFixture {
    FiniteGroup group;
    FiniteGroup base_factor;                  // L, as built
    std::vector<std::uint32_t> product_idx;   // the subgroup L^k inside group
    std::vector<std::uint32_t> product_gens;  // embedded generators of L^k
    unsigned k = 0;
    unsigned m = 0;
    unsigned block_degree = 0;
    Permutation actor;  // identity when m == 1
};

inline DirectPowerFixture direct_power_with_swap(const FiniteGroup& L, unsigned k, unsigned m,
                                                 std::size_t cap = kDefaultEnumerationCap) {
    if (k < 1 || m < 1 || (m > 1 && m > k)) throw DomainError("need 1 <= m <= k");
    const unsigned d = L.degree();
    const unsigned degree = d * k;

    auto embed = [&](const Permutation& g, unsigned block) {
        std::vector<Point> img(degree);
        for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
        for (unsigned i = 0; i < d; ++i) img[block * d + i] = static_cast<Point>(block * d + g[i]);
        return Permutation::from_images(std::move(img));
    };

    std::vector<Permutation> gens;
    for (unsigned b = 0; b < k; ++b)
        for (const auto& g : L.generators()) gens.push_back(embed(g, b));

    Permutation actor{degree};
    if (m > 1) {
        std::vector<Point> img(degree);
        for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
        for (unsigned b = 0; b < m; ++b) {
            unsigned to = (b + 1) % m;
            for (unsigned i = 0; i < d; ++i) img[b * d + i] = static_cast<Point>(to * d + i);
        }
        actor = Permutation::from_images(std::move(img));
    }

    std::uint64_t base_order = 1;
    for (unsigned b = 0; b < k; ++b) {
        if (base_order > cap / L.order()) throw CapExceeded(cap);
        base_order *= L.order();
    }
    std::uint64_t expected = base_order * (m > 1 ? m : 1);
    if (expected > cap) throw CapExceeded(cap);

    auto all_gens = gens;
    if (m > 1) all_gens.push_back(actor);
    std::string name = L.name() + (m > 1 ? "wrC" + std::to_string(m) : "^" + std::to_string(k));
    auto G = FiniteGroup::from_generators(std::move(name), degree, std::move(all_gens), cap);
    if (G.order() != expected)
        throw IdentityViolation("direct power order " + std::to_string(G.order()) +
                                " differs from expected " + std::to_string(expected));

    std::vector<std::uint32_t> base_gen_idx;
    for (const auto& g : gens) base_gen_idx.push_back(*G.index_of(g));
    auto product_idx = G.closure_indices(base_gen_idx);
    if (product_idx.size() != base_order)
        throw IdentityViolation("direct power base subgroup has wrong order");

    return DirectPowerFixture{std::move(G), L,  std::move(product_idx), std::move(base_gen_idx),
                              k,            m,  d,                      std::move(actor)};
}

// The verification corpus. Stable names are the CLI's public identifiers.
inline std::vector<FiniteGroup> build_catalog(std::size_t cap = kDefaultEnumerationCap) {
    std::vector<FiniteGroup> out;
    out.push_back(cyclic_group(2, cap));
    out.push_back(cyclic_group(3, cap));
    out.push_back(cyclic_group(4, cap));
    out.push_back(cyclic_group(5, cap));
    out.push_back(cyclic_group(6, cap));
    out.push_back(cyclic_group(8, cap));
    out.push_back(cyclic_group(12, cap));
    out.push_back(elementary_abelian(2, 2, cap));
    out.push_back(elementary_abelian(2, 3, cap));
    out.push_back(elementary_abelian(3, 2, cap));
    out.push_back(dihedral_group(4, cap));
    out.push_back(dihedral_group(5, cap));
    out.push_back(dihedral_group(6, cap));
    out.push_back(dihedral_group(7, cap));
    out.push_back(symmetric_group(3, cap));
    out.push_back(symmetric_group(4, cap));
    out.push_back(symmetric_group(5, cap));
    out.push_back(symmetric_group(6, cap));
    out.push_back(alternating_group(4, cap));
    out.push_back(alternating_group(5, cap));
    out.push_back(alternating_group(6, cap));
    out.push_back(sl_2_3(cap));
    out.push_back(psl_2_7(cap));
    out.push_back(direct_power_with_swap(symmetric_group(3, cap), 2, 2, cap).group);
    out.push_back(frobenius_group(7, 3, cap));
    out.push_back(frobenius_group(11, 5, cap));
    out.push_back(build_gn({2, 1, 3}, cap));
    out.push_back(build_gn({2, 2, 3}, cap));
    out.push_back(build_gn({3, 1, 7}, cap));
    return out;
}

}  // namespace sylowlab
