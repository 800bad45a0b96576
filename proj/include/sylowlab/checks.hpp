#pragma once

// Exact-arithmetic verification of the identities, lemmas and conjectured
// inequalities: Frobenius divisibility, the subnormalizer sum formula, both
// subnormalizer product formulas, the coprime fixed-point identity, the
// lambda lemmas, and the closed forms of the extremal family. Fractional
// exponents never appear: every statement is checked in cross-multiplied /
// integer-power form.

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bignat.hpp"
#include "catalog.hpp"
#include "report.hpp"
#include "subnormalizer.hpp"

namespace sylowlab {

// Everything the per-(group, prime) checks share: Sylow data, the p-element
// set, the upper p-series, and a memo of brute-force subnormalizer sets.
struct PrimeContext {
    PrimeContext(const FiniteGroup& g, unsigned prime)
        : G(&g), p(prime), syl(sylow_data(g, prime)), p_elems(p_element_indices(g, prime)),
          series(upper_p_series(g, prime)) {}

    const FiniteGroup* G;
    unsigned p;
    SylowData syl;
    std::vector<std::uint32_t> p_elems;  // order-scan route for U_p(G)
    PSeries series;
    SubnormalizerCache cache;

    const std::vector<std::uint32_t>& brute_set(std::uint32_t x, std::size_t budget) {
        auto it = brute_memo_.find(x);
        if (it != brute_memo_.end()) return it->second;
        auto set = subnormalizer_brute(*G, Subgroup::generated_by(*G, {x}), budget, &cache);
        return brute_memo_.emplace(x, std::move(set)).first->second;
    }

private:
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> brute_memo_;
};

namespace detail {

inline CheckReport make_report(std::string id, const PrimeContext& ctx) {
    CheckReport r;
    r.check_id = std::move(id);
    r.group_name = ctx.G->name();
    r.prime = ctx.p;
    return r;
}

inline void set_pass(CheckReport& r, const BigNat& lhs, const BigNat& rhs, std::string detail = "") {
    r.status = CheckStatus::Pass;
    r.lhs = lhs.to_decimal();
    r.rhs = rhs.to_decimal();
    r.detail = std::move(detail);
}

inline void set_fail(CheckReport& r, const BigNat& lhs, const BigNat& rhs, std::string detail) {
    r.status = CheckStatus::Fail;
    r.lhs = lhs.to_decimal();
    r.rhs = rhs.to_decimal();
    r.detail = std::move(detail);
}

inline void set_skipped(CheckReport& r, std::string reason) {
    r.status = CheckStatus::Skipped;
    r.skip_reason = std::move(reason);
}

inline std::uint32_t pow_index(const FiniteGroup& G, std::uint32_t x, std::uint64_t e) {
    std::uint32_t acc = G.identity_index();
    for (std::uint64_t i = 0; i < e; ++i) acc = G.mul(acc, x);
    return acc;
}

// Conjectural statements escalate to hard assertions exactly on p-solvable
// inputs, where the bound is a theorem.
inline CheckStatus conjecture_status(bool holds, bool p_solvable) {
    if (p_solvable) return holds ? CheckStatus::Pass : CheckStatus::Fail;
    return holds ? CheckStatus::ReportOnlyHolds : CheckStatus::ReportOnlyViolated;
}

}  // namespace detail

// |P| divides |U_p(G)|. The p-element set is computed by order scan and as
// the union of all Sylow subgroups, and the two routes must agree.
inline CheckReport check_frobenius(PrimeContext& ctx) {
    CheckReport r = detail::make_report("frobenius", ctx);
    auto via_sylows = p_element_indices_via_sylows(*ctx.G, ctx.syl);
    if (via_sylows != ctx.p_elems) {
        detail::set_fail(r, ctx.p_elems.size(), via_sylows.size(),
                         "p-element routes disagree (order scan vs Sylow union)");
        return r;
    }
    const std::uint64_t u = ctx.p_elems.size();
    const std::uint64_t psize = ctx.syl.rep.order();
    if (u % psize == 0) {
        detail::set_pass(r, u, psize,
                         "ratio=" + std::to_string(u / psize) +
                             " n_p=" + std::to_string(ctx.syl.n_p()));
    } else {
        detail::set_fail(r, u, psize, "|U_p| not divisible by |P|");
    }
    return r;
}

// ratio = 1 iff n_p = 1; otherwise ratio >= p.
inline CheckReport check_miller_gap(PrimeContext& ctx) {
    CheckReport r = detail::make_report("miller-gap", ctx);
    const std::uint64_t u = ctx.p_elems.size();
    const std::uint64_t psize = ctx.syl.rep.order();
    if (u % psize != 0) {
        detail::set_fail(r, u, psize, "Frobenius divisibility failed");
        return r;
    }
    const std::uint64_t ratio = u / psize;
    const std::uint64_t np = ctx.syl.n_p();
    bool ok = ((ratio == 1) == (np == 1)) && (ratio == 1 || ratio >= ctx.p);
    std::string detail = "n_p=" + std::to_string(np);
    if (ok)
        detail::set_pass(r, ratio, ctx.p, std::move(detail));
    else
        detail::set_fail(r, ratio, ctx.p, "gap violated, " + detail);
    return r;
}

// |U_p(G)| = sum over x in P of |G| / |S_G(x)|, every summand integral.
inline CheckReport check_omega_sum(PrimeContext& ctx) {
    CheckReport r = detail::make_report("omega-sum", ctx);
    const FiniteGroup& G = *ctx.G;
    std::uint64_t total = 0;
    for (auto x : ctx.syl.rep.indices()) {
        std::uint64_t size = lambda_element(ctx.syl, x) * ctx.syl.normalizer_order;
        if (G.order() % size != 0) {
            detail::set_fail(r, G.order(), size,
                             "summand not integral at x=" + format_permutation(G.element(x)));
            return r;
        }
        total += G.order() / size;
    }
    const std::uint64_t u = ctx.p_elems.size();
    if (total == u)
        detail::set_pass(r, total, u);
    else
        detail::set_fail(r, total, u, "sum misses the p-element count");
    return r;
}

namespace detail {

inline std::vector<Subgroup> order_p2_subgroups(const FiniteGroup& G, const Subgroup& P, unsigned p,
                                                std::size_t max_count) {
    const std::uint64_t pp = std::uint64_t{p} * p;
    std::vector<Subgroup> out;
    std::unordered_set<std::uint64_t> seen;
    const auto& idx = P.indices();
    for (std::size_t i = 0; i < idx.size() && out.size() < max_count; ++i) {
        for (std::size_t j = i; j < idx.size() && out.size() < max_count; ++j) {
            std::vector<std::uint32_t> gens{idx[i], idx[j]};
            auto k = G.closure_indices(gens);
            if (k.size() != pp) continue;
            std::uint64_t key = index_set_hash(k);
            if (!seen.insert(key).second) continue;
            out.push_back(Subgroup::from_indices_with_gens(G, std::move(k), std::move(gens)));
        }
    }
    return out;
}

}  // namespace detail

// Brute Wielandt count = lambda_G(H) |N_G(P)| = alpha_G(H) |N_G(H)| for all
// cyclic <x>, x in P, plus a sample of order-p^2 subgroups of P.
inline CheckReport check_casolo_a(PrimeContext& ctx, std::size_t cyclic_budget = kBruteBudgetCyclic,
                                  std::size_t subgroup_budget = kBruteBudgetSubgroup) {
    CheckReport r = detail::make_report("casolo-a", ctx);
    const FiniteGroup& G = *ctx.G;
    if (G.order() > cyclic_budget) {
        detail::set_skipped(r, "budget");
        return r;
    }
    std::uint64_t sum_brute = 0, sum_formula = 0;
    std::size_t cyclic_count = 0, sampled = 0;
    try {
        for (auto x : ctx.syl.rep.indices()) {
            const auto& brute = ctx.brute_set(x, cyclic_budget);
            auto a = subnormalizer_size_a(G, ctx.syl, Subgroup::generated_by(G, {x}));
            if (brute.size() != a.size) {
                detail::set_fail(r, brute.size(), a.size,
                                 "brute vs formula at x=" + format_permutation(G.element(x)));
                return r;
            }
            sum_brute += brute.size();
            sum_formula += a.size;
            ++cyclic_count;
        }
        if (ctx.syl.rep.order() >= std::uint64_t{ctx.p} * ctx.p && G.order() <= subgroup_budget) {
            for (const auto& H : detail::order_p2_subgroups(G, ctx.syl.rep, ctx.p, 50)) {
                auto brute = subnormalizer_brute(G, H, subgroup_budget, &ctx.cache);
                auto a = subnormalizer_size_a(G, ctx.syl, H);
                if (brute.size() != a.size) {
                    detail::set_fail(r, brute.size(), a.size, "brute vs formula at an order-p^2 H");
                    return r;
                }
                sum_brute += brute.size();
                sum_formula += a.size;
                ++sampled;
            }
        }
    } catch (const IdentityViolation& e) {
        detail::set_fail(r, 0, 0, e.what());
        return r;
    }
    detail::set_pass(r, sum_brute, sum_formula,
                     "cyclic=" + std::to_string(cyclic_count) +
                         " order-p2-sampled=" + std::to_string(sampled));
    return r;
}

// Formula b) (the p'-factor fixed-point product) equals formula a) for every
// x in P; p-solvable groups only.
inline CheckReport check_casolo_b(PrimeContext& ctx) {
    CheckReport r = detail::make_report("casolo-b", ctx);
    if (!ctx.series.p_solvable) {
        detail::set_skipped(r, "not p-solvable");
        return r;
    }
    const FiniteGroup& G = *ctx.G;
    std::uint64_t sum_a = 0, sum_b = 0;
    for (auto x : ctx.syl.rep.indices()) {
        std::uint64_t a = lambda_element(ctx.syl, x) * ctx.syl.normalizer_order;
        std::uint64_t b = subnormalizer_size_b(G, ctx.series, ctx.p, x);
        if (a != b) {
            detail::set_fail(r, b, a, "formula b vs a at x=" + format_permutation(G.element(x)));
            return r;
        }
        sum_a += a;
        sum_b += b;
    }
    detail::set_pass(r, sum_b, sum_a, "x-count=" + std::to_string(ctx.syl.rep.order()));
    return r;
}

// The coprime-action fixed point identity, in integer-power form:
// |C(P)|^((p-1)|P|) * prod |C(x^p)| = prod |C(x)|^p over x in P.
inline CheckReport check_navarro_rizo(
    const std::string& group_name, const std::string& target_name, unsigned p, const FiniteGroup& G,
    const std::vector<std::uint32_t>& acting, std::uint64_t target_order,
    const std::function<std::uint64_t(const std::vector<std::uint32_t>&)>& fixed_order) {
    CheckReport r;
    r.check_id = "navarro-rizo";
    r.group_name = group_name;
    r.prime = p;
    if (target_order % p == 0) throw DomainError("navarro-rizo: non-coprime action");
    const std::uint64_t c_P = fixed_order(acting);
    BigNat lhs = BigNat(c_P).pow(std::uint64_t(p - 1) * acting.size());
    BigNat prod_cx = 1;
    for (auto x : acting) {
        std::uint64_t c_x = fixed_order({x});
        std::uint64_t c_xp = fixed_order({detail::pow_index(G, x, p)});
        prod_cx *= BigNat(c_x);
        lhs *= BigNat(c_xp);
    }
    BigNat rhs = prod_cx.pow(p);
    std::string detail =
        "target=" + target_name + " |target|=" + std::to_string(target_order) +
        " C(P)=" + std::to_string(c_P);
    if (lhs == rhs)
        detail::set_pass(r, lhs, rhs, std::move(detail));
    else
        detail::set_fail(r, lhs, rhs, std::move(detail));
    return r;
}

// Fixed points of a conjugation action inside a subgroup target: elements of
// T commuting with every actor.
inline std::uint64_t fixed_order_in_subgroup(const FiniteGroup& G, const Subgroup& T,
                                             const std::vector<std::uint32_t>& actors) {
    std::uint64_t count = 0;
    for (auto t : T.indices()) {
        bool fixed = true;
        for (auto a : actors) {
            if (G.conj(t, a) != t) {
                fixed = false;
                break;
            }
        }
        if (fixed) ++count;
    }
    return count;
}

// Runs the identity for the conjugation action of P on every p'-factor of
// the upper p-series.
inline CheckReport check_navarro_rizo_on_factors(PrimeContext& ctx) {
    CheckReport r = detail::make_report("navarro-rizo", ctx);
    if (ctx.series.pprime_factors.empty()) {
        detail::set_skipped(r, "no p'-factor");
        return r;
    }
    const auto& acting = ctx.syl.rep.indices();
    std::size_t count = 0;
    for (const auto& factor : ctx.series.pprime_factors) {
        std::string target_name = "U/V |U|=" + std::to_string(factor.upper.order()) +
                                  " |V|=" + std::to_string(factor.lower.order());
        auto sub = check_navarro_rizo(
            ctx.G->name(), target_name, ctx.p, *ctx.G, acting, factor.order,
            [&factor](const std::vector<std::uint32_t>& actors) { return factor.fixed_order(actors); });
        if (sub.status != CheckStatus::Pass) return sub;
        ++count;
        r.lhs = sub.lhs;
        r.rhs = sub.rhs;
        r.detail = sub.detail;
    }
    r.status = CheckStatus::Pass;
    r.detail = "factors=" + std::to_string(count) + "; last: " + r.detail;
    return r;
}

// alpha_G(x) = alpha_G(<x>) |N_G(<x>)| / |C_G(x)| with the division exact.
inline CheckReport check_alpha_formula(PrimeContext& ctx) {
    CheckReport r = detail::make_report("alpha-formula", ctx);
    const FiniteGroup& G = *ctx.G;
    std::uint64_t sum_alpha = 0, sum_rhs = 0;
    for (auto x : ctx.syl.rep.indices()) {
        PElementStats stats = alpha(G, ctx.syl, x);
        std::uint64_t norm_cyc = normalizer(G, Subgroup::generated_by(G, {x})).order();
        std::uint64_t cent = centralizer(G, x).order();
        std::uint64_t num = stats.alpha_cyclic * norm_cyc;
        if (num % cent != 0) {
            detail::set_fail(r, num, cent,
                             "division not exact at x=" + format_permutation(G.element(x)));
            return r;
        }
        if (stats.alpha != num / cent) {
            detail::set_fail(r, stats.alpha, num / cent,
                             "identity fails at x=" + format_permutation(G.element(x)));
            return r;
        }
        sum_alpha += stats.alpha;
        sum_rhs += num / cent;
    }
    detail::set_pass(r, sum_alpha, sum_rhs, "x-count=" + std::to_string(ctx.syl.rep.order()));
    return r;
}

// lambda_G(x) n_p(H) <= lambda_H(x) n_p(G) for p-elements x of H, with
// equality whenever H is normal in G.
inline CheckReport check_lambda_monotone(PrimeContext& ctx,
                                         const std::vector<std::pair<std::string, Subgroup>>& fixtures) {
    CheckReport r = detail::make_report("lambda-monotone", ctx);
    const FiniteGroup& G = *ctx.G;
    if (fixtures.empty()) {
        detail::set_skipped(r, "no subgroup fixture");
        return r;
    }
    std::uint64_t tight_lhs = 0, tight_rhs = 0;
    bool have_tight = false;
    std::string tight_at;
    std::size_t instances = 0;
    for (const auto& [name, H] : fixtures) {
        FiniteGroup Hgrp = promote(H, name);
        SylowData hsyl = sylow_data(Hgrp, ctx.p);
        const bool normal = is_normal_in(G, H);
        for (auto xh : p_element_indices(Hgrp, ctx.p)) {
            auto xg = G.index_of(Hgrp.element(xh));
            std::uint64_t lhs = lambda_element(ctx.syl, *xg) * hsyl.n_p();
            std::uint64_t rhs = lambda_element(hsyl, xh) * ctx.syl.n_p();
            if (lhs > rhs) {
                detail::set_fail(r, lhs, rhs,
                                 "violated at H=" + name +
                                     " x=" + format_permutation(Hgrp.element(xh)));
                return r;
            }
            if (normal && lhs != rhs) {
                detail::set_fail(r, lhs, rhs,
                                 "equality clause violated at normal H=" + name +
                                     " x=" + format_permutation(Hgrp.element(xh)));
                return r;
            }
            ++instances;
            if (!have_tight || rhs - lhs < tight_rhs - tight_lhs) {
                have_tight = true;
                tight_lhs = lhs;
                tight_rhs = rhs;
                tight_at = name;
            }
        }
    }
    detail::set_pass(r, tight_lhs, tight_rhs,
                     "instances=" + std::to_string(instances) + " tightest at H=" + tight_at);
    return r;
}

// |S_G(x)| = |S_N(x)| |NP/N| for N normal with G = NP, where S_N(x) is the
// set {g in N : <x> subnormal in <x,g>}. Both sides counted by brute force.
inline CheckReport check_snx(PrimeContext& ctx,
                             const std::vector<std::pair<std::string, Subgroup>>& fixtures,
                             std::size_t budget = kBruteBudgetCyclic) {
    CheckReport r = detail::make_report("snx", ctx);
    const FiniteGroup& G = *ctx.G;
    if (G.order() > budget) {
        detail::set_skipped(r, "budget");
        return r;
    }
    if (fixtures.empty()) {
        detail::set_skipped(r, "no N with G = NP");
        return r;
    }
    std::uint64_t sum_lhs = 0, sum_rhs = 0;
    std::size_t instances = 0;
    for (const auto& [name, N] : fixtures) {
        const std::uint64_t index = G.order() / N.order();
        for (auto x : ctx.syl.rep.indices()) {
            const auto& set = ctx.brute_set(x, budget);
            std::uint64_t lhs = set.size();
            std::uint64_t in_n = 0;
            for (auto g : set)
                if (N.contains_index(g)) ++in_n;
            std::uint64_t rhs = in_n * index;
            if (lhs != rhs) {
                detail::set_fail(r, lhs, rhs,
                                 "N=" + name + " x=" + format_permutation(G.element(x)));
                return r;
            }
            sum_lhs += lhs;
            sum_rhs += rhs;
            ++instances;
        }
    }
    detail::set_pass(r, sum_lhs, sum_rhs, "instances=" + std::to_string(instances));
    return r;
}

// lambda_G(x) = lambda_{G/N}(Nx) * lambda_{NP}(x) for N normal, x in P.
inline CheckReport check_lambda_multiplicative(
    PrimeContext& ctx, const std::vector<std::pair<std::string, Subgroup>>& fixtures) {
    CheckReport r = detail::make_report("lambda-mult", ctx);
    const FiniteGroup& G = *ctx.G;
    if (fixtures.empty()) {
        detail::set_skipped(r, "no normal fixture");
        return r;
    }
    std::uint64_t sum_lhs = 0, sum_rhs = 0;
    std::size_t instances = 0;
    for (const auto& [name, N] : fixtures) {
        QuotientGroup Q = quotient(G, N, G.name() + "/" + name);
        const bool p_in_quotient = Q.group().order() % ctx.p == 0;
        std::optional<SylowData> qsyl;
        if (p_in_quotient) qsyl.emplace(sylow_data(Q.group(), ctx.p));

        // NP = union of the N-cosets of P's elements
        std::vector<bool> in_np(G.order(), false);
        for (auto n : N.indices())
            for (auto h : ctx.syl.rep.indices()) in_np[G.mul(n, h)] = true;
        std::vector<std::uint32_t> np_idx;
        for (std::uint32_t i = 0; i < G.order(); ++i)
            if (in_np[i]) np_idx.push_back(i);

        const bool np_is_g = np_idx.size() == G.order();
        std::optional<FiniteGroup> np_grp;
        std::optional<SylowData> np_syl;
        if (!np_is_g) {
            np_grp.emplace(promote(Subgroup::from_indices(G, np_idx), G.name() + ".NP"));
            np_syl.emplace(sylow_data(*np_grp, ctx.p));
        }

        for (auto x : ctx.syl.rep.indices()) {
            std::uint64_t lam_g = lambda_element(ctx.syl, x);
            std::uint64_t lam_q;
            if (p_in_quotient) {
                lam_q = lambda_element(*qsyl, Q.project_index(x));
            } else {
                if (Q.project_index(x) != Q.group().identity_index())
                    throw IdentityViolation("p-element image nontrivial in p'-quotient");
                lam_q = 1;
            }
            std::uint64_t lam_np;
            if (np_is_g) {
                lam_np = lam_g;
            } else {
                auto xi = np_grp->index_of(G.element(x));
                lam_np = lambda_element(*np_syl, *xi);
            }
            std::uint64_t rhs = lam_q * lam_np;
            if (lam_g != rhs) {
                detail::set_fail(r, lam_g, rhs,
                                 "N=" + name + " x=" + format_permutation(G.element(x)));
                return r;
            }
            sum_lhs += lam_g;
            sum_rhs += rhs;
            ++instances;
        }
    }
    detail::set_pass(r, sum_lhs, sum_rhs, "instances=" + std::to_string(instances));
    return r;
}

// Count of <x>-invariant Sylow p-subgroups of the direct power M = L^k is at
// most n_p(L)^s, s = number of <x>-orbits on the factors.
inline CheckReport check_num_orb(const DirectPowerFixture& fixture, unsigned p) {
    CheckReport r;
    r.check_id = "num-orb";
    r.group_name = fixture.group.name();
    r.prime = p;
    const FiniteGroup& G = fixture.group;
    const unsigned d = fixture.block_degree;
    const Permutation& x = fixture.actor;

    // induced permutation of the factor labels; x must respect the blocks
    std::vector<unsigned> block_image(fixture.k);
    for (unsigned b = 0; b < fixture.k; ++b) {
        unsigned target = x[b * d] / d;
        for (unsigned i = 0; i < d; ++i)
            if (x[b * d + i] / d != target)
                throw DomainError("factor decomposition invalid under x");
        block_image[b] = target;
    }
    unsigned orbits = 0;
    std::vector<bool> seen(fixture.k, false);
    for (unsigned b = 0; b < fixture.k; ++b) {
        if (seen[b]) continue;
        ++orbits;
        for (unsigned cur = b; !seen[cur]; cur = block_image[cur]) seen[cur] = true;
    }

    FiniteGroup M = promote(Subgroup::from_indices_with_gens(G, fixture.product_idx,
                                                             fixture.product_gens),
                            fixture.base_factor.name() + "^" + std::to_string(fixture.k));
    SylowData msyl = sylow_data(M, p);
    std::vector<std::uint32_t> m_to_g(M.order());
    for (std::uint32_t i = 0; i < M.order(); ++i) m_to_g[i] = *G.index_of(M.element(i));
    const std::uint32_t x_idx = *G.index_of(x);

    std::uint64_t invariant = 0;
    for (const auto& Q : msyl.all) {
        std::vector<std::uint32_t> q_g, q_conj;
        q_g.reserve(Q.order());
        q_conj.reserve(Q.order());
        for (auto i : Q.indices()) {
            q_g.push_back(m_to_g[i]);
            q_conj.push_back(G.conj(m_to_g[i], x_idx));
        }
        std::sort(q_g.begin(), q_g.end());
        std::sort(q_conj.begin(), q_conj.end());
        if (q_g == q_conj) ++invariant;
    }
    std::uint64_t np_l = sylow_data(fixture.base_factor, p).n_p();
    BigNat bound = BigNat(np_l).pow(orbits);
    std::string detail = "k=" + std::to_string(fixture.k) + " orbits=" + std::to_string(orbits) +
                         " n_p(L)=" + std::to_string(np_l);
    if (BigNat(invariant) <= bound)
        detail::set_pass(r, invariant, bound, std::move(detail));
    else
        detail::set_fail(r, invariant, bound, std::move(detail));
    return r;
}

// (|U_p|/|P|)^p >= n_p^(p-1), the Frobenius-ratio bound. PASS/FAIL on
// p-solvable groups (a theorem there), REPORT_ONLY otherwise.
inline CheckReport check_conjecture_ratio(PrimeContext& ctx) {
    CheckReport r = detail::make_report("conjecture-ratio", ctx);
    const std::uint64_t u = ctx.p_elems.size();
    const std::uint64_t psize = ctx.syl.rep.order();
    if (u % psize != 0) {
        detail::set_fail(r, u, psize, "Frobenius divisibility failed");
        return r;
    }
    BigNat lhs = BigNat(u / psize).pow(ctx.p);
    BigNat rhs = BigNat(ctx.syl.n_p()).pow(ctx.p - 1);
    r.status = detail::conjecture_status(lhs >= rhs, ctx.series.p_solvable);
    r.lhs = lhs.to_decimal();
    r.rhs = rhs.to_decimal();
    r.detail = std::string("ratio^p vs n_p^(p-1); ") +
               (ctx.series.p_solvable ? "p-solvable" : "not p-solvable");
    return r;
}

// (prod over x in P of lambda_G(x))^p <= n_p^|P|.
inline CheckReport check_conjecture_lambda(PrimeContext& ctx) {
    CheckReport r = detail::make_report("conjecture-lambda", ctx);
    BigNat prod = 1;
    for (auto x : ctx.syl.rep.indices()) prod *= BigNat(lambda_element(ctx.syl, x));
    BigNat lhs = prod.pow(ctx.p);
    BigNat rhs = BigNat(ctx.syl.n_p()).pow(ctx.syl.rep.order());
    r.status = detail::conjecture_status(lhs <= rhs, ctx.series.p_solvable);
    r.lhs = lhs.to_decimal();
    r.rhs = rhs.to_decimal();
    r.detail = std::string("(prod lambda)^p vs n_p^|P|; ") +
               (lhs == rhs ? "equality; " : "") +
               (ctx.series.p_solvable ? "p-solvable" : "not p-solvable");
    return r;
}

// The link used between the two conjecture forms, a theorem on every group:
// (|U_p|/|P|)^|P| * prod lambda_G(x) >= n_p^|P|.
inline CheckReport check_amgm_chain(PrimeContext& ctx) {
    CheckReport r = detail::make_report("amgm-chain", ctx);
    const std::uint64_t u = ctx.p_elems.size();
    const std::uint64_t psize = ctx.syl.rep.order();
    if (u % psize != 0) {
        detail::set_fail(r, u, psize, "Frobenius divisibility failed");
        return r;
    }
    BigNat lhs = BigNat(u / psize).pow(psize);
    for (auto x : ctx.syl.rep.indices()) lhs *= BigNat(lambda_element(ctx.syl, x));
    BigNat rhs = BigNat(ctx.syl.n_p()).pow(psize);
    if (lhs >= rhs)
        detail::set_pass(r, lhs, rhs, "(|U_p|/|P|)^|P| * prod lambda vs n_p^|P|");
    else
        detail::set_fail(r, lhs, rhs, "AM-GM chain link violated");
    return r;
}

// The closed forms of the family G_n: n_p = q^((p^n-1)/(p-1)), every
// nontrivial lambda = q^((p^(n-1)-1)/(p-1)), and the exact ratio identity
// |U_p| * p^n = |P| * (1 + (p^n - 1) q^(p^(n-1))).
inline CheckReport check_gn_closed_forms(const GnParams& params,
                                         std::size_t cap = kDefaultEnumerationCap) {
    CheckReport r;
    r.check_id = "gn-forms";
    r.group_name = gn_name(params);
    r.prime = params.p;
    if (gn_expected_order(params, cap) > cap) {
        detail::set_skipped(r, "cap");
        return r;
    }
    FiniteGroup G = build_gn(params, cap);
    PrimeContext ctx(G, params.p);

    const std::uint64_t blocks =
        (detail::pow_u64_checked(params.p, params.n, UINT64_MAX / 2) - 1) / (params.p - 1);
    BigNat expected_np = BigNat(params.q).pow(blocks);
    std::uint64_t sub_blocks =
        params.n == 1 ? 0
                      : (detail::pow_u64_checked(params.p, params.n - 1, UINT64_MAX / 2) - 1) /
                            (params.p - 1);
    BigNat expected_lambda = BigNat(params.q).pow(sub_blocks);

    if (BigNat(ctx.syl.n_p()) != expected_np) {
        detail::set_fail(r, ctx.syl.n_p(), expected_np, "n_p differs from closed form");
        return r;
    }
    for (auto x : ctx.syl.rep.indices()) {
        if (x == G.identity_index()) continue;
        if (BigNat(lambda_element(ctx.syl, x)) != expected_lambda) {
            detail::set_fail(r, lambda_element(ctx.syl, x), expected_lambda,
                             "lambda differs from closed form at x=" +
                                 format_permutation(G.element(x)));
            return r;
        }
    }
    const std::uint64_t pn = detail::pow_u64_checked(params.p, params.n, UINT64_MAX / 2);
    BigNat lhs = BigNat(ctx.p_elems.size()) * BigNat(pn);
    BigNat rhs = BigNat(ctx.syl.rep.order()) *
                 (BigNat(1) + BigNat(pn - 1) * BigNat(params.q).pow(pn / params.p));
    std::string detail = "n_p=" + expected_np.to_decimal() +
                         " lambda=" + expected_lambda.to_decimal() +
                         " |U_p|=" + std::to_string(ctx.p_elems.size());
    if (lhs == rhs)
        detail::set_pass(r, lhs, rhs, std::move(detail));
    else
        detail::set_fail(r, lhs, rhs, "ratio identity failed; " + detail);
    return r;
}

// lambda_G(x) = lambda_{G/N}(xN) for N = O_p(G), for every p-element x.
inline CheckReport check_op_quotient_invariance(PrimeContext& ctx) {
    CheckReport r = detail::make_report("op-invariance", ctx);
    const FiniteGroup& G = *ctx.G;
    Subgroup core = p_core(G, ctx.p);
    if (core.order() == 1) {
        detail::set_skipped(r, "O_p trivial");
        return r;
    }
    QuotientGroup Q = quotient(G, core, G.name() + "/O_p");
    const bool p_in_quotient = Q.group().order() % ctx.p == 0;
    std::optional<SylowData> qsyl;
    if (p_in_quotient) qsyl.emplace(sylow_data(Q.group(), ctx.p));
    std::uint64_t sum_lhs = 0, sum_rhs = 0;
    for (auto x : ctx.p_elems) {
        std::uint64_t lam_g = lambda_element(ctx.syl, x);
        std::uint64_t lam_q = 1;
        if (p_in_quotient) lam_q = lambda_element(*qsyl, Q.project_index(x));
        if (lam_g != lam_q) {
            detail::set_fail(r, lam_g, lam_q, "x=" + format_permutation(G.element(x)));
            return r;
        }
        sum_lhs += lam_g;
        sum_rhs += lam_q;
    }
    detail::set_pass(r, sum_lhs, sum_rhs,
                     "|O_p|=" + std::to_string(core.order()) +
                         " p-elements=" + std::to_string(ctx.p_elems.size()));
    return r;
}

}  // namespace sylowlab
