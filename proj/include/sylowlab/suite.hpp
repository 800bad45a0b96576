#pragma once

// Drives the check operations over the catalog: fixture selection, suite
// registry, and a bounded worker pool with a deterministic ordered merge.

#include <atomic>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "checks.hpp"
#include "group_io.hpp"

namespace sylowlab {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "frobenius", "omega-sum", "alpha",       "casolo-a",    "casolo-b",
        "navarro-rizo", "snx",    "lambda-mult", "monotone",    "op-invariance",
        "conjectures",  "num-orb", "gn-forms",
    };
    return names;
}

struct VerifyOptions {
    std::vector<std::string> suites{"all"};
    std::optional<unsigned> prime;
    std::optional<std::uint64_t> max_order;
    std::size_t cap = kDefaultEnumerationCap;
    std::size_t brute_budget_cyclic = kBruteBudgetCyclic;
    std::size_t brute_budget_subgroup = kBruteBudgetSubgroup;
    unsigned jobs = 0;  // 0 = hardware concurrency, capped at 8
};

inline void validate_suites(const VerifyOptions& o) {
    for (const auto& s : o.suites) {
        if (s == "all") continue;
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end())
            throw DomainError("unknown suite: " + s);
    }
}

inline bool suite_selected(const VerifyOptions& o, const std::string& name) {
    for (const auto& s : o.suites)
        if (s == "all" || s == name) return true;
    return false;
}

// Normal subgroup fixtures: normal closures of class representatives plus the
// terms of the upper p-series; proper and nontrivial, deduplicated, capped.
inline std::vector<std::pair<std::string, Subgroup>> normal_subgroup_fixtures(
    const PrimeContext& ctx, std::size_t max_count = 6) {
    const FiniteGroup& G = *ctx.G;
    std::vector<std::pair<std::string, Subgroup>> out;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;  // (order, hash)
    auto add = [&](std::string name, const Subgroup& H) {
        if (H.order() <= 1 || H.order() >= G.order()) return;
        if (out.size() >= max_count) return;
        if (!seen.insert({H.order(), H.set_hash()}).second) return;
        out.emplace_back(std::move(name), H);
    };
    Subgroup whole = Subgroup::whole(G);
    for (const auto& cls : G.conjugacy_classes()) {
        std::uint32_t x = cls.front();
        if (x == G.identity_index()) continue;
        Subgroup ncl = normal_closure(whole, Subgroup::generated_by(G, {x}));
        add("ncl(" + format_permutation(G.element(x)) + ")", ncl);
    }
    for (const auto& term : ctx.series.terms) add("series-term|" + std::to_string(term.order()) + "|", term);
    return out;
}

// Fixtures for the lambda monotonicity lemma: the Sylow subgroup, its
// normalizer, a point stabilizer, and the normal fixtures of p-divisible
// order (these exercise the equality clause).
inline std::vector<std::pair<std::string, Subgroup>> monotone_subgroup_fixtures(
    const PrimeContext& ctx, const std::vector<std::pair<std::string, Subgroup>>& normal_fixtures) {
    const FiniteGroup& G = *ctx.G;
    std::vector<std::pair<std::string, Subgroup>> out;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    auto add = [&](std::string name, const Subgroup& H) {
        if (H.order() % ctx.p != 0) return;       // the lemma needs p | |H|
        if (H.order() >= G.order()) return;       // trivial instance
        if (!seen.insert({H.order(), H.set_hash()}).second) return;
        out.emplace_back(std::move(name), H);
    };
    add("P", ctx.syl.rep);
    add("N(P)", normalizer(G, ctx.syl.rep));
    std::vector<std::uint32_t> stab;
    for (std::uint32_t i = 0; i < G.order(); ++i)
        if (G.element(i)[0] == 0) stab.push_back(i);
    if (stab.size() > 1 && stab.size() < G.order())
        add("stab(1)", Subgroup::from_indices(G, std::move(stab)));
    for (const auto& [name, H] : normal_fixtures) add(name, H);
    return out;
}

// Normal fixtures satisfying G = NP, the precondition of the S_N(x) lemma.
inline std::vector<std::pair<std::string, Subgroup>> snx_fixtures(
    const PrimeContext& ctx, const std::vector<std::pair<std::string, Subgroup>>& normal_fixtures) {
    const FiniteGroup& G = *ctx.G;
    std::vector<std::pair<std::string, Subgroup>> out;
    for (const auto& [name, N] : normal_fixtures) {
        std::uint64_t meet = 0;
        for (auto i : ctx.syl.rep.indices())
            if (N.contains_index(i)) ++meet;
        if (N.order() * ctx.syl.rep.order() == G.order() * meet) out.emplace_back(name, N);
    }
    return out;
}

// All checks for one catalog group at one prime, in fixed order.
inline std::vector<CheckReport> run_group_prime(const FiniteGroup& G, unsigned p,
                                                const VerifyOptions& o) {
    std::vector<CheckReport> out;
    auto guard = [&](const std::string& id, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            CheckReport r;
            r.check_id = id;
            r.group_name = G.name();
            r.prime = p;
            r.status = CheckStatus::Fail;
            r.detail = std::string("exception: ") + e.what();
            out.push_back(std::move(r));
        }
    };

    PrimeContext ctx(G, p);
    if (suite_selected(o, "frobenius")) {
        guard("frobenius", [&] { out.push_back(check_frobenius(ctx)); });
        guard("miller-gap", [&] { out.push_back(check_miller_gap(ctx)); });
    }
    if (suite_selected(o, "omega-sum"))
        guard("omega-sum", [&] { out.push_back(check_omega_sum(ctx)); });
    if (suite_selected(o, "alpha"))
        guard("alpha-formula", [&] { out.push_back(check_alpha_formula(ctx)); });
    if (suite_selected(o, "casolo-a"))
        guard("casolo-a", [&] {
            out.push_back(check_casolo_a(ctx, o.brute_budget_cyclic, o.brute_budget_subgroup));
        });
    if (suite_selected(o, "casolo-b"))
        guard("casolo-b", [&] { out.push_back(check_casolo_b(ctx)); });
    if (suite_selected(o, "navarro-rizo"))
        guard("navarro-rizo", [&] { out.push_back(check_navarro_rizo_on_factors(ctx)); });

    const bool need_normal = suite_selected(o, "snx") || suite_selected(o, "lambda-mult") ||
                             suite_selected(o, "monotone");
    std::vector<std::pair<std::string, Subgroup>> normal_fixtures;
    if (need_normal) normal_fixtures = normal_subgroup_fixtures(ctx);

    if (suite_selected(o, "snx"))
        guard("snx", [&] {
            out.push_back(check_snx(ctx, snx_fixtures(ctx, normal_fixtures), o.brute_budget_cyclic));
        });
    if (suite_selected(o, "lambda-mult"))
        guard("lambda-mult",
              [&] { out.push_back(check_lambda_multiplicative(ctx, normal_fixtures)); });
    if (suite_selected(o, "monotone"))
        guard("lambda-monotone", [&] {
            out.push_back(check_lambda_monotone(ctx, monotone_subgroup_fixtures(ctx, normal_fixtures)));
        });
    if (suite_selected(o, "op-invariance"))
        guard("op-invariance", [&] { out.push_back(check_op_quotient_invariance(ctx)); });
    if (suite_selected(o, "conjectures")) {
        guard("conjecture-ratio", [&] { out.push_back(check_conjecture_ratio(ctx)); });
        guard("conjecture-lambda", [&] { out.push_back(check_conjecture_lambda(ctx)); });
        guard("amgm-chain", [&] { out.push_back(check_amgm_chain(ctx)); });
    }
    return out;
}

inline std::vector<CheckReport> run_num_orb_suite(std::size_t cap) {
    std::vector<CheckReport> out;
    FiniteGroup s3 = symmetric_group(3, cap);
    auto swap2 = direct_power_with_swap(s3, 2, 2, cap);
    out.push_back(check_num_orb(swap2, 2));
    out.push_back(check_num_orb(swap2, 3));
    FiniteGroup c3 = cyclic_group(3, cap);
    auto c3swap = direct_power_with_swap(c3, 2, 2, cap);
    out.push_back(check_num_orb(c3swap, 3));
    auto plain = direct_power_with_swap(s3, 2, 1, cap);  // trivial action on factors
    out.push_back(check_num_orb(plain, 2));
    return out;
}

inline std::vector<CheckReport> run_gn_forms_suite(std::size_t cap) {
    std::vector<CheckReport> out;
    out.push_back(check_gn_closed_forms({2, 1, 3}, cap));
    out.push_back(check_gn_closed_forms({2, 2, 3}, cap));
    out.push_back(check_gn_closed_forms({3, 1, 7}, cap));
    return out;
}

namespace detail {

inline std::vector<unsigned> primes_dividing(std::uint64_t n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; std::uint64_t{p} * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(static_cast<unsigned>(n));
    return out;
}

}  // namespace detail

// Runs the selected suites over the given groups; job results are merged in
// job order, so identical options give byte-identical reports.
inline std::vector<CheckReport> run_verify(const std::vector<const FiniteGroup*>& groups,
                                           const VerifyOptions& o) {
    validate_suites(o);
    std::vector<std::function<std::vector<CheckReport>()>> jobs;
    for (const FiniteGroup* G : groups) {
        if (o.max_order && G->order() > *o.max_order) continue;
        for (unsigned p : detail::primes_dividing(G->order())) {
            if (o.prime && p != *o.prime) continue;
            jobs.emplace_back([G, p, &o] { return run_group_prime(*G, p, o); });
        }
    }
    if (suite_selected(o, "num-orb"))
        jobs.emplace_back([&o] { return run_num_orb_suite(o.cap); });
    if (suite_selected(o, "gn-forms"))
        jobs.emplace_back([&o] { return run_gn_forms_suite(o.cap); });

    unsigned workers = o.jobs;
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0) workers = 1;
        if (workers > 8) workers = 8;
    }
    if (workers > jobs.size()) workers = static_cast<unsigned>(jobs.size());

    std::vector<std::vector<CheckReport>> results(jobs.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= jobs.size()) return;
                    results[i] = jobs[i]();
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<CheckReport> out;
    for (auto& chunk : results)
        for (auto& r : chunk) out.push_back(std::move(r));
    return out;
}

}  // namespace sylowlab
