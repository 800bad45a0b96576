#pragma once

// Wielandt subnormalizers S_G(H) = {g : H subnormal in <H,g>}, three ways:
// the brute-force definition (the oracle), the lambda/alpha product formula
// (the production path), and the p'-factor fixed-point product on p-solvable
// groups. The three must agree; disagreement aborts loudly because it would
// falsify the implementation, not the mathematics.

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sylow.hpp"

namespace sylowlab {

inline constexpr std::size_t kBruteBudgetCyclic = 20000;
inline constexpr std::size_t kBruteBudgetSubgroup = 5000;

// True iff the normal-closure descent K >= ncl_K(H) >= ... stabilizes at H.
inline bool is_subnormal(const Subgroup& H, const Subgroup& K) {
    if (!H.is_subset_of(K)) throw DomainError("is_subnormal: H is not inside K");
    Subgroup cur = K;
    while (true) {
        if (cur.order() == H.order()) return true;
        Subgroup next = normal_closure(cur, H);
        if (next.order() == cur.order()) return false;
        cur = std::move(next);
    }
}

// Memo for the brute-force scan: g and g' often generate the same subgroup
// <H,g>, so descent results are cached on the generated element set's hash.
// Insert-or-get is coarsely locked; safe for concurrent scans.
class SubnormalizerCache {
public:
    std::optional<bool> get(std::uint64_t key) const {
        std::lock_guard<std::mutex> lock(m_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void put(std::uint64_t key, bool value) {
        std::lock_guard<std::mutex> lock(m_);
        map_.emplace(key, value);
    }

private:
    mutable std::mutex m_;
    std::unordered_map<std::uint64_t, bool> map_;
};

namespace detail {

inline std::uint64_t index_set_hash(const std::vector<std::uint32_t>& idx) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto i : idx) {
        h ^= i;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

// S_G(H) by definition. The result is a set of elements, not generally a
// subgroup. H must be a p-subgroup for the theorems to apply, but the scan
// itself only needs a subgroup.
inline std::vector<std::uint32_t> subnormalizer_brute(const FiniteGroup& G, const Subgroup& H,
                                                      std::size_t budget,
                                                      SubnormalizerCache* cache = nullptr) {
    if (G.order() > budget) throw BudgetExceeded(G.order(), budget);
    const std::uint64_t h_key = H.set_hash();
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> gens = H.generator_indices();
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        gens.push_back(g);
        auto generated = G.closure_indices(gens);
        bool subnormal;
        std::uint64_t key =
            h_key ^ (detail::index_set_hash(generated) * 0x9e3779b97f4a7c15ull) ^ generated.size();
        std::optional<bool> hit = cache ? cache->get(key) : std::optional<bool>{};
        if (hit) {
            subnormal = *hit;
        } else {
            Subgroup K = Subgroup::from_indices_with_gens(G, std::move(generated), gens);
            subnormal = is_subnormal(H, K);
            if (cache) cache->put(key, subnormal);
        }
        gens.pop_back();
        if (subnormal) members.push_back(g);
    }
    return members;
}

struct SubnormalizerSizeA {
    std::uint64_t size = 0;          // |S_G(H)|
    std::uint64_t lambda = 0;        // Sylow subgroups containing H
    std::uint64_t normalizer_p = 0;  // |N_G(P)|
    std::uint64_t alpha = 0;         // G-conjugates of H inside P
    std::uint64_t normalizer_h = 0;  // |N_G(H)|
};

// |S_G(H)| = lambda_G(H) |N_G(P)| = alpha_G(H) |N_G(H)|. Both products are
// computed and must match.
inline SubnormalizerSizeA subnormalizer_size_a(const FiniteGroup& G, const SylowData& syl,
                                               const Subgroup& H) {
    if (!detail::is_prime_power(H.order(), syl.p))
        throw DomainError("subnormalizer formulas require a p-subgroup");
    SubnormalizerSizeA r;
    r.lambda = lambda_subgroup(syl, H);
    r.normalizer_p = syl.normalizer_order;
    Subgroup NH = normalizer(G, H);
    r.normalizer_h = NH.order();
    std::uint64_t alpha = 0;
    for_each_right_coset_rep(G, NH.indices(), [&](std::uint32_t g) {
        for (auto s : H.generator_indices())
            if (!syl.rep.contains_index(G.conj(s, g))) return;
        ++alpha;
    });
    r.alpha = alpha;
    r.size = r.lambda * r.normalizer_p;
    if (r.size != r.alpha * r.normalizer_h)
        throw IdentityViolation(
            "subnormalizer products disagree on " + G.name() + ": lambda*|N(P)|=" +
            std::to_string(r.size) + " vs alpha*|N(H)|=" + std::to_string(r.alpha * r.normalizer_h));
    return r;
}

// |S_G(<x>)| = |P| * prod over p'-factors U/V of |C_{U/V}(xV)|; p-solvable only.
inline std::uint64_t subnormalizer_size_b(const FiniteGroup& G, const PSeries& series, unsigned p,
                                          std::uint32_t x) {
    if (!series.p_solvable) throw NotPSolvableError(p);
    if (!detail::is_prime_power(G.element_order(x), p))
        throw DomainError("subnormalizer formulas require a p-element");
    std::uint64_t result = p_part(G.order(), p);
    std::vector<std::uint32_t> actor{x};
    for (const auto& factor : series.pprime_factors) result *= factor.fixed_order(actor);
    return result;
}

inline std::uint64_t subnormalizer_size_b(const FiniteGroup& G, unsigned p, std::uint32_t x) {
    return subnormalizer_size_b(G, upper_p_series(G, p), p, x);
}

}  // namespace sylowlab
