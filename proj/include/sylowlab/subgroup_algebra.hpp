#pragma once

// Subgroup-level vocabulary: centralizers, normalizers, normal closures,
// quotient groups, cores and the alternating p/p' normal series.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "group.hpp"

namespace sylowlab {

inline Subgroup centralizer(const FiniteGroup& G, std::uint32_t x) {
    if (x == G.identity_index()) return Subgroup::whole(G);
    std::vector<std::uint32_t> idx;
    for (std::uint32_t g = 0; g < G.order(); ++g)
        if (G.mul(g, x) == G.mul(x, g)) idx.push_back(g);
    if (idx.size() == G.order()) return Subgroup::whole(G);
    return Subgroup::from_indices(G, std::move(idx));
}

inline Subgroup centralizer(const FiniteGroup& G, const Permutation& x) {
    auto i = G.index_of(x);
    if (!i) throw DomainError("element not in group");
    return centralizer(G, *i);
}

// Elements of H commuting with x.
inline std::uint64_t centralizer_order_in(const Subgroup& H, std::uint32_t x) {
    const FiniteGroup& G = H.parent();
    std::uint64_t count = 0;
    for (auto h : H.indices())
        if (G.mul(h, x) == G.mul(x, h)) ++count;
    return count;
}

inline Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
    if (&H.parent() != &G) throw DomainError("subgroup belongs to a different group");
    std::vector<std::uint32_t> idx;
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (auto s : H.generator_indices()) {
            if (!H.contains_index(G.conj(s, g))) {
                ok = false;
                break;
            }
        }
        if (ok) idx.push_back(g);
    }
    if (idx.size() == G.order()) return Subgroup::whole(G);
    return Subgroup::from_indices(G, std::move(idx));
}

inline bool is_normal_in(const FiniteGroup& G, const Subgroup& H) {
    for (auto g : G.generator_indices())
        for (auto s : H.generator_indices())
            if (!H.contains_index(G.conj(s, g))) return false;
    return true;
}

// Smallest normal subgroup of K containing H (as subgroups of the same
// parent); pre: H <= K.
inline Subgroup normal_closure(const Subgroup& K, const Subgroup& H) {
    const FiniteGroup& G = K.parent();
    if (!H.is_subset_of(K)) throw DomainError("normal_closure: H is not inside K");
    std::vector<std::uint32_t> gens = H.generator_indices();
    std::vector<std::uint32_t> elems = H.indices();
    std::vector<std::uint32_t> work = gens;
    while (!work.empty()) {
        std::uint32_t s = work.back();
        work.pop_back();
        for (auto k : K.generator_indices()) {
            std::uint32_t t = G.conj(s, k);
            if (!std::binary_search(elems.begin(), elems.end(), t)) {
                gens.push_back(t);
                elems = G.closure_indices(gens);
                work.push_back(t);
            }
        }
    }
    return Subgroup::from_indices_with_gens(G, std::move(elems), std::move(gens));
}

// G acting on the right cosets of a normal subgroup. Coset representatives
// are the lexicographically least member of each coset, so coset ids and the
// quotient's element order are reproducible.
class QuotientGroup {
public:
    QuotientGroup(const FiniteGroup& G, Subgroup N, std::string name)
        : parent_(&G), kernel_(std::move(N)) {
        for (auto n : kernel_.generator_indices()) {
            for (auto g : G.generator_indices()) {
                if (!kernel_.contains_index(G.conj(n, g)))
                    throw NotNormalError(format_permutation(G.element(g)));
            }
        }
        coset_of_.assign(G.order(), UINT32_MAX);
        for (std::uint32_t g = 0; g < G.order(); ++g) {
            if (coset_of_[g] != UINT32_MAX) continue;
            std::uint32_t cid = static_cast<std::uint32_t>(coset_rep_.size());
            coset_rep_.push_back(g);
            for (auto n : kernel_.indices()) coset_of_[G.mul(n, g)] = cid;
        }
        if (coset_rep_.size() * kernel_.order() != G.order())
            throw IdentityViolation("coset partition does not tile the group");

        std::vector<Permutation> gens;
        for (auto g : G.generator_indices()) gens.push_back(project_perm(g));
        group_.emplace(FiniteGroup::from_generators(std::move(name),
                                                    static_cast<unsigned>(coset_rep_.size()),
                                                    std::move(gens), G.order()));
        if (group_->order() != coset_rep_.size())
            throw IdentityViolation("quotient order differs from subgroup index");
    }

    const FiniteGroup& parent() const { return *parent_; }
    const Subgroup& kernel() const { return kernel_; }
    const FiniteGroup& group() const { return *group_; }
    std::uint64_t index() const { return coset_rep_.size(); }
    const std::vector<std::uint32_t>& coset_reps() const { return coset_rep_; }

    // the permutation of cosets induced by right multiplication with g
    Permutation project_perm(std::uint32_t g) const {
        std::vector<Point> images(coset_rep_.size());
        for (std::uint32_t c = 0; c < coset_rep_.size(); ++c)
            images[c] = static_cast<Point>(coset_of_[parent_->mul(coset_rep_[c], g)]);
        return Permutation::from_images(std::move(images));
    }

    std::uint32_t project_index(std::uint32_t g) const {
        auto i = group_->index_of(project_perm(g));
        if (!i) throw IdentityViolation("projection left the quotient group");
        return *i;
    }

private:
    const FiniteGroup* parent_;
    Subgroup kernel_;
    std::vector<std::uint32_t> coset_rep_;
    std::vector<std::uint32_t> coset_of_;
    std::optional<FiniteGroup> group_;
};

inline QuotientGroup quotient(const FiniteGroup& G, const Subgroup& N, std::string name = "") {
    if (name.empty()) name = G.name() + "/N" + std::to_string(N.order());
    return QuotientGroup(G, N, std::move(name));
}

namespace detail {

inline bool is_prime_power(std::uint64_t n, unsigned p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

// Join of the normal closures ncl_G(<x>) over class representatives x whose
// closure lands in the wanted class of groups (p-group / p'-group).
inline Subgroup core_by_closures(const FiniteGroup& G, unsigned p, bool p_part) {
    Subgroup whole = Subgroup::whole(G);
    std::vector<std::uint32_t> collected;
    for (const auto& cls : G.conjugacy_classes()) {
        std::uint32_t x = cls.front();
        if (x == G.identity_index()) continue;
        std::uint64_t ord = G.element_order(x);
        bool eligible = p_part ? is_prime_power(ord, p) : (ord % p != 0);
        if (!eligible) continue;
        Subgroup ncl = normal_closure(whole, Subgroup::generated_by(G, {x}));
        bool keep = p_part ? is_prime_power(ncl.order(), p) : (ncl.order() % p != 0);
        if (keep)
            collected.insert(collected.end(), ncl.generator_indices().begin(),
                             ncl.generator_indices().end());
    }
    if (collected.empty()) return Subgroup::trivial(G);
    return Subgroup::generated_by(G, std::move(collected));
}

}  // namespace detail

// Largest normal p-subgroup O_p(G); trivial when p does not divide |G|.
inline Subgroup p_core(const FiniteGroup& G, unsigned p) {
    return detail::core_by_closures(G, p, true);
}

// Largest normal subgroup of order coprime to p, O_{p'}(G).
inline Subgroup p_prime_core(const FiniteGroup& G, unsigned p) {
    return detail::core_by_closures(G, p, false);
}

// One p'-factor U/V of a normal {p,p'}-series, with V <= U both normal in G.
struct PPrimeFactor {
    Subgroup lower;   // V
    Subgroup upper;   // U
    std::vector<std::uint32_t> coset_reps;  // least-index reps of the V-cosets in U
    std::uint64_t order = 0;                // |U/V|

    // Order of the fixed-point subgroup of the conjugation action of the
    // given elements on U/V: cosets uV with u^a in uV for every actor a.
    std::uint64_t fixed_order(const std::vector<std::uint32_t>& actors) const {
        const FiniteGroup& G = lower.parent();
        std::uint64_t count = 0;
        for (auto u : coset_reps) {
            bool fixed = true;
            for (auto a : actors) {
                std::uint32_t moved = G.conj(u, a);
                if (!lower.contains_index(G.mul(G.inv(u), moved))) {
                    fixed = false;
                    break;
                }
            }
            if (fixed) ++count;
        }
        return count;
    }
};

// The upper p-series 1 <= O_{p'} <= O_{p',p} <= ...; reaches G exactly when
// G is p-solvable. pprime_factors collects the set M of p'-factors.
struct PSeries {
    std::vector<Subgroup> terms;  // strictly ascending, terms.front() trivial
    bool p_solvable = false;
    std::vector<PPrimeFactor> pprime_factors;
};

namespace detail {

inline Subgroup preimage_core(const FiniteGroup& G, const Subgroup& V, unsigned p, bool p_part) {
    if (V.order() == 1) return core_by_closures(G, p, p_part);
    if (V.order() == G.order()) return Subgroup::whole(G);
    QuotientGroup Q = quotient(G, V);
    Subgroup K = core_by_closures(Q.group(), p, p_part);
    if (K.order() == 1) return V;
    if (K.order() == Q.group().order()) return Subgroup::whole(G);
    std::vector<std::uint32_t> idx;
    for (std::uint32_t g = 0; g < G.order(); ++g)
        if (K.contains_index(Q.project_index(g))) idx.push_back(g);
    return Subgroup::from_indices(G, std::move(idx));
}

inline std::vector<std::uint32_t> coset_reps_in(const FiniteGroup& G, const Subgroup& V,
                                                const Subgroup& U) {
    std::vector<std::uint32_t> reps;
    std::vector<bool> visited(G.order(), false);
    for (auto u : U.indices()) {
        if (visited[u]) continue;
        reps.push_back(u);
        for (auto v : V.indices()) visited[G.mul(v, u)] = true;
    }
    return reps;
}

}  // namespace detail

inline PSeries upper_p_series(const FiniteGroup& G, unsigned p) {
    PSeries s;
    s.terms.push_back(Subgroup::trivial(G));
    while (true) {
        bool grew = false;
        {
            const Subgroup& V = s.terms.back();
            Subgroup U = detail::preimage_core(G, V, p, false);
            if (U.order() > V.order()) {
                PPrimeFactor f{V, U, detail::coset_reps_in(G, V, U), U.order() / V.order()};
                s.pprime_factors.push_back(std::move(f));
                s.terms.push_back(std::move(U));
                grew = true;
            }
        }
        {
            const Subgroup& U = s.terms.back();
            Subgroup W = detail::preimage_core(G, U, p, true);
            if (W.order() > U.order()) {
                s.terms.push_back(std::move(W));
                grew = true;
            }
        }
        if (!grew || s.terms.back().order() == G.order()) break;
    }
    s.p_solvable = s.terms.back().order() == G.order();
    return s;
}

}  // namespace sylowlab
