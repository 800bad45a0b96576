#pragma once

// Full enumeration of finite permutation groups from generators, with an
// index-centric element algebra on top. Every derived computation (subgroups,
// conjugation, closures) works on element indices into the canonically sorted
// element list; small groups additionally get a multiplication table.
//
// Full enumeration is the oracle of record here. Membership goes through
// FiniteGroup::contains so a stabilizer-chain backend could replace the
// element table later without touching callers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace sylowlab {

inline constexpr std::size_t kDefaultEnumerationCap = 200000;
inline constexpr std::size_t kMultTableMaxOrder = 1024;

// Smallest composition-closed set containing the generators and the identity,
// by breadth-first multiplication. Throws CapExceeded past the cap. The
// result is sorted lexicographically on image sequences (canonical order).
inline std::vector<Permutation> closure(std::span<const Permutation> generators, unsigned degree,
                                        std::size_t cap = kDefaultEnumerationCap) {
    if (degree == 0) throw DomainError("degree must be positive");
    for (const auto& g : generators)
        if (g.degree() != degree) throw DomainError("generators must share one degree");
    if (cap < 1) throw DomainError("cap must be at least 1");

    std::unordered_map<Permutation, bool, PermHash> seen;  // value unused
    std::vector<Permutation> queue;
    Permutation id{degree};
    seen.emplace(id, true);
    queue.push_back(id);
    for (const auto& g : generators) {
        if (seen.emplace(g, true).second) queue.push_back(g);
    }
    if (seen.size() > cap) throw CapExceeded(cap);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Permutation cur = queue[head];  // copy: queue may reallocate
        for (const auto& g : generators) {
            Permutation next = cur * g;
            if (seen.emplace(next, true).second) {
                if (seen.size() > cap) throw CapExceeded(cap);
                queue.push_back(std::move(next));
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

class FiniteGroup {
public:
    static FiniteGroup from_generators(std::string name, unsigned degree,
                                       std::vector<Permutation> generators,
                                       std::size_t cap = kDefaultEnumerationCap) {
        auto elems = closure(generators, degree, cap);
        return FiniteGroup(std::move(name), degree, std::move(generators), std::move(elems));
    }

    // Trusted path: elements must already be the sorted closure of the generators.
    static FiniteGroup from_sorted_elements(std::string name, unsigned degree,
                                            std::vector<Permutation> generators,
                                            std::vector<Permutation> elements) {
        return FiniteGroup(std::move(name), degree, std::move(generators), std::move(elements));
    }

    const std::string& name() const { return name_; }
    unsigned degree() const { return degree_; }
    std::uint64_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<std::uint32_t>& generator_indices() const { return generator_indices_; }
    const Permutation& element(std::uint32_t i) const { return elements_[i]; }

    // identity is lexicographically least, hence always index 0
    std::uint32_t identity_index() const { return 0; }

    std::optional<std::uint32_t> index_of(const Permutation& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const Permutation& p) const { return index_.count(p) != 0; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!table_.empty()) return table_[a * elements_.size() + b];
        return index_.at(elements_[a] * elements_[b]);
    }

    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }

    // g^-1 * a * g
    std::uint32_t conj(std::uint32_t a, std::uint32_t g) const {
        if (!table_.empty()) return mul(mul(inverse_[g], a), g);
        return index_.at(elements_[a].conjugated_by(elements_[g]));
    }

    std::uint64_t element_order(std::uint32_t i) const { return orders_[i]; }

    // Closure of a set of element indices inside this group.
    std::vector<std::uint32_t> closure_indices(std::span<const std::uint32_t> gens) const {
        std::vector<bool> seen(elements_.size(), false);
        std::vector<std::uint32_t> queue;
        seen[identity_index()] = true;
        queue.push_back(identity_index());
        for (auto g : gens) {
            if (!seen[g]) {
                seen[g] = true;
                queue.push_back(g);
            }
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint32_t cur = queue[head];
            for (auto g : gens) {
                std::uint32_t next = mul(cur, g);
                if (!seen[next]) {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        return queue;
    }

    // Disjoint classes {g^-1 x g}, covering the group, ordered by least member.
    const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const { return classes_; }

    std::uint32_t class_id(std::uint32_t i) const { return class_id_[i]; }

    const std::vector<std::uint32_t>& conjugacy_class_of(std::uint32_t i) const {
        return classes_[class_id_[i]];
    }

private:
    FiniteGroup(std::string name, unsigned degree, std::vector<Permutation> generators,
                std::vector<Permutation> elements)
        : name_(std::move(name)), degree_(degree), generators_(std::move(generators)),
          elements_(std::move(elements)) {
        const std::size_t n = elements_.size();
        index_.reserve(n * 2);
        for (std::uint32_t i = 0; i < n; ++i) index_.emplace(elements_[i], i);

        generator_indices_.reserve(generators_.size());
        for (const auto& g : generators_) {
            auto it = index_.find(g);
            if (it == index_.end()) throw DomainError("generator missing from element set");
            generator_indices_.push_back(it->second);
        }

        if (n <= kMultTableMaxOrder) {
            table_.resize(n * n);
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = 0; b < n; ++b)
                    table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
        }

        inverse_.resize(n);
        orders_.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            inverse_[i] = index_.at(elements_[i].inverse());
            orders_[i] = elements_[i].order();
        }

        build_classes();
    }

    void build_classes() {
        const std::size_t n = elements_.size();
        class_id_.assign(n, UINT32_MAX);
        for (std::uint32_t start = 0; start < n; ++start) {
            if (class_id_[start] != UINT32_MAX) continue;
            std::uint32_t cid = static_cast<std::uint32_t>(classes_.size());
            std::vector<std::uint32_t> members{start};
            class_id_[start] = cid;
            for (std::size_t head = 0; head < members.size(); ++head) {
                std::uint32_t cur = members[head];
                for (auto g : generator_indices_) {
                    std::uint32_t next = conj(cur, g);
                    if (class_id_[next] == UINT32_MAX) {
                        class_id_[next] = cid;
                        members.push_back(next);
                    }
                }
            }
            std::sort(members.begin(), members.end());
            classes_.push_back(std::move(members));
        }
    }

    std::string name_;
    unsigned degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;  // sorted
    std::vector<std::uint32_t> generator_indices_;
    std::unordered_map<Permutation, std::uint32_t, PermHash> index_;
    std::vector<std::uint32_t> table_;  // n*n, only for small groups
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint64_t> orders_;
    std::vector<std::vector<std::uint32_t>> classes_;
    std::vector<std::uint32_t> class_id_;
};

// A subset of a parent group closed under the operation, held as sorted
// element indices. The parent must outlive the subgroup.
class Subgroup {
public:
    static Subgroup generated_by(const FiniteGroup& G, std::vector<std::uint32_t> gens) {
        auto idx = G.closure_indices(gens);
        return Subgroup(G, std::move(idx), std::move(gens));
    }

    static Subgroup from_indices(const FiniteGroup& G, std::vector<std::uint32_t> sorted_idx) {
        auto gens = small_generating_set(G, sorted_idx);
        return Subgroup(G, std::move(sorted_idx), std::move(gens));
    }

    static Subgroup from_indices_with_gens(const FiniteGroup& G, std::vector<std::uint32_t> sorted_idx,
                                           std::vector<std::uint32_t> gens) {
        return Subgroup(G, std::move(sorted_idx), std::move(gens));
    }

    static Subgroup trivial(const FiniteGroup& G) {
        return Subgroup(G, {G.identity_index()}, {});
    }

    static Subgroup whole(const FiniteGroup& G) {
        std::vector<std::uint32_t> idx(G.order());
        for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
        return Subgroup(G, std::move(idx), G.generator_indices());
    }

    const FiniteGroup& parent() const { return *parent_; }
    std::uint64_t order() const { return indices_.size(); }
    const std::vector<std::uint32_t>& indices() const { return indices_; }
    const std::vector<std::uint32_t>& generator_indices() const { return generators_; }

    bool contains_index(std::uint32_t i) const {
        return std::binary_search(indices_.begin(), indices_.end(), i);
    }

    bool contains(const Permutation& p) const {
        auto i = parent_->index_of(p);
        return i && contains_index(*i);
    }

    bool is_subset_of(const Subgroup& other) const {
        return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                             indices_.end());
    }

    bool same_set(const Subgroup& other) const {
        return parent_ == other.parent_ && indices_ == other.indices_;
    }

    std::vector<Permutation> elements() const {
        std::vector<Permutation> out;
        out.reserve(indices_.size());
        for (auto i : indices_) out.push_back(parent_->element(i));
        return out;
    }

    Subgroup conjugated_by(std::uint32_t g) const {
        std::vector<std::uint32_t> idx;
        idx.reserve(indices_.size());
        for (auto i : indices_) idx.push_back(parent_->conj(i, g));
        std::sort(idx.begin(), idx.end());
        std::vector<std::uint32_t> gens;
        gens.reserve(generators_.size());
        for (auto i : generators_) gens.push_back(parent_->conj(i, g));
        return Subgroup(*parent_, std::move(idx), std::move(gens));
    }

    std::uint64_t set_hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto i : indices_) {
            h ^= i;
            h *= 1099511628211ull;
        }
        return h;
    }

    // Greedy small generating set: at most log2(|H|) generators.
    static std::vector<std::uint32_t> small_generating_set(const FiniteGroup& G,
                                                           const std::vector<std::uint32_t>& sorted_idx) {
        std::vector<std::uint32_t> gens;
        std::vector<std::uint32_t> cur{G.identity_index()};
        for (auto i : sorted_idx) {
            if (!std::binary_search(cur.begin(), cur.end(), i)) {
                gens.push_back(i);
                cur = G.closure_indices(gens);
                if (cur.size() == sorted_idx.size()) break;
            }
        }
        return gens;
    }

private:
    Subgroup(const FiniteGroup& G, std::vector<std::uint32_t> idx, std::vector<std::uint32_t> gens)
        : parent_(&G), indices_(std::move(idx)), generators_(std::move(gens)) {}

    const FiniteGroup* parent_;
    std::vector<std::uint32_t> indices_;    // sorted ascending = canonical order
    std::vector<std::uint32_t> generators_; // small generating set
};

// Materializes a subgroup as a standalone group (fresh index space).
inline FiniteGroup promote(const Subgroup& H, std::string name) {
    std::vector<Permutation> gens;
    gens.reserve(H.generator_indices().size());
    for (auto i : H.generator_indices()) gens.push_back(H.parent().element(i));
    return FiniteGroup::from_sorted_elements(std::move(name), H.parent().degree(), std::move(gens),
                                             H.elements());
}

// Calls fn with the least-index representative of each right coset Hg.
template <typename Fn>
void for_each_right_coset_rep(const FiniteGroup& G, const std::vector<std::uint32_t>& subgroup_idx,
                              Fn&& fn) {
    std::vector<bool> visited(G.order(), false);
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        if (visited[g]) continue;
        for (auto h : subgroup_idx) visited[G.mul(h, g)] = true;
        fn(g);
    }
}

}  // namespace sylowlab
