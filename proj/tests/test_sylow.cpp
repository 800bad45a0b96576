#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include <sylowlab/catalog.hpp>
#include <sylowlab/sylow.hpp>

using namespace sylowlab;

TEST_CASE("Sylow subgroup orders are the p-part of the group order") {
    CHECK(sylow_subgroup(symmetric_group(4), 2).order() == 8);
    CHECK(sylow_subgroup(symmetric_group(3), 3).order() == 3);
    CHECK(sylow_subgroup(alternating_group(5), 5).order() == 5);
    CHECK(sylow_subgroup(symmetric_group(6), 2).order() == 16);
    CHECK_THROWS_AS(sylow_subgroup(symmetric_group(3), 5), DomainError);
}

TEST_CASE("all Sylow subgroups are the distinct conjugates") {
    auto s4 = symmetric_group(4);
    auto syl = sylow_data(s4, 2);
    CHECK(syl.n_p() == 3);

    // oracle: conjugate by every group element and deduplicate
    std::set<std::vector<std::uint32_t>> distinct;
    for (std::uint32_t g = 0; g < s4.order(); ++g)
        distinct.insert(syl.rep.conjugated_by(g).indices());
    CHECK(distinct.size() == syl.n_p());
    for (const auto& Q : syl.all) CHECK(distinct.count(Q.indices()) == 1);

    auto a5 = alternating_group(5);
    CHECK(sylow_data(a5, 2).n_p() == 5);
    CHECK(sylow_data(a5, 5).n_p() == 6);

    auto s3 = symmetric_group(3);
    auto syl3 = sylow_data(s3, 3);
    CHECK(syl3.n_p() == 1);  // normal Sylow
}

TEST_CASE("Sylow count is 1 mod p across the catalog") {
    for (const auto& G : build_catalog()) {
        for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
            if (G.order() % p != 0) continue;
            auto syl = sylow_data(G, p);
            CHECK(syl.n_p() % p == 1);
            CHECK(syl.n_p() * syl.normalizer_order == G.order());
        }
    }
}

TEST_CASE("p-element sets by order scan and by Sylow union agree") {
    auto s3 = symmetric_group(3);
    auto u2 = p_element_indices(s3, 2);
    CHECK(u2.size() == 4);  // identity and the three transpositions

    auto sl = sl_2_3();
    CHECK(p_element_indices(sl, 3).size() == 9);  // the Frobenius ratio equals |P| here

    auto c6 = cyclic_group(6);
    auto syl6 = sylow_data(c6, 3);
    CHECK(p_element_indices(c6, 3) == syl6.rep.indices());  // normal Sylow: exactly P

    for (const auto& G : {symmetric_group(4), alternating_group(5), build_gn({2, 2, 3})}) {
        for (unsigned p : {2u, 3u, 5u}) {
            if (G.order() % p != 0) continue;
            auto syl = sylow_data(G, p);
            CHECK(p_element_indices(G, p) == p_element_indices_via_sylows(G, syl));
        }
    }
}

TEST_CASE("Frobenius divisibility across the catalog") {
    for (const auto& G : build_catalog()) {
        for (unsigned p : {2u, 3u, 5u, 7u, 11u}) {
            if (G.order() % p != 0) continue;
            auto syl = sylow_data(G, p);
            CHECK(p_element_indices(G, p).size() % syl.rep.order() == 0);
        }
    }
}

TEST_CASE("lambda counts Sylow subgroups containing x") {
    auto s4 = symmetric_group(4);
    auto syl = sylow_data(s4, 2);
    CHECK(lambda_element(syl, s4.identity_index()) == syl.n_p());
    CHECK(lambda_element(syl, *s4.index_of(parse_permutation("(1 2)", 4))) == 1);
    CHECK(lambda_element(syl, *s4.index_of(parse_permutation("(1 2)(3 4)", 4))) == 3);
    CHECK_THROWS_AS(lambda_element(syl, *s4.index_of(parse_permutation("(1 2 3)", 4))), DomainError);

    // the transversal route agrees everywhere
    auto N = normalizer(s4, syl.rep);
    for (auto x : p_element_indices(s4, 2))
        CHECK(lambda_element(syl, x) == lambda_element_via_transversal(s4, syl.rep, N, x));
}

TEST_CASE("lambda on Gn matches the kernel centralizer order") {
    auto g = build_gn({2, 2, 3});
    auto syl = sylow_data(g, 2);
    auto N = p_prime_core(g, 2);
    REQUIRE(N.order() == 27);
    for (auto x : syl.rep.indices()) {
        if (x == g.identity_index()) continue;
        CHECK(lambda_element(syl, x) == centralizer_order_in(N, x));
    }
}

TEST_CASE("alpha statistics") {
    auto s4 = symmetric_group(4);
    auto syl = sylow_data(s4, 2);

    auto t = *s4.index_of(parse_permutation("(1 2)", 4));
    auto stats = alpha(s4, syl, t);
    CHECK(stats.alpha == 2);         // the two transpositions inside the chosen Sylow
    CHECK(stats.alpha_cyclic == 2);
    CHECK(stats.lambda == 1);

    auto id_stats = alpha(s4, syl, s4.identity_index());
    CHECK(id_stats.alpha == 1);
    CHECK(id_stats.alpha_cyclic == 1);

    auto a4 = alternating_group(4);
    auto syl3 = sylow_data(a4, 3);
    auto c = *a4.index_of(parse_permutation("(1 2 3)", 4));
    auto s3stats = alpha(a4, syl3, c);
    CHECK(s3stats.alpha == 1);
    CHECK(s3stats.alpha_cyclic == 1);
}

TEST_CASE("class decomposition of the p-element set") {
    for (const auto& G : {symmetric_group(4), alternating_group(5), sl_2_3()}) {
        for (unsigned p : {2u, 3u}) {
            if (G.order() % p != 0) continue;
            std::uint64_t total = 0;
            std::set<std::uint32_t> seen;
            for (auto x : p_element_indices(G, p)) {
                if (!seen.insert(G.class_id(x)).second) continue;
                total += G.conjugacy_class_of(x).size();
            }
            CHECK(total == p_element_indices(G, p).size());
        }
    }
}

TEST_CASE("lambda subgroup counts and the Sylow itself") {
    auto s4 = symmetric_group(4);
    auto syl = sylow_data(s4, 2);
    CHECK(lambda_subgroup(syl, syl.rep) == 1);
    CHECK(lambda_subgroup(syl, Subgroup::trivial(s4)) == syl.n_p());
    CHECK(lambda_subgroup(syl, p_core(s4, 2)) == 3);  // V4 lies in every Sylow
}
