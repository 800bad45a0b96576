#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <sylowlab/catalog.hpp>
#include <sylowlab/subgroup_algebra.hpp>
#include <sylowlab/sylow.hpp>

using namespace sylowlab;

namespace {

Subgroup cyclic_of(const FiniteGroup& G, const std::string& cycles) {
    return Subgroup::generated_by(G, {*G.index_of(parse_permutation(cycles, G.degree()))});
}

std::set<std::string> element_strings(const Subgroup& H) {
    std::set<std::string> out;
    for (const auto& g : H.elements()) out.insert(format_permutation(g));
    return out;
}

}  // namespace

TEST_CASE("centralizers by brute commutation") {
    auto s3 = symmetric_group(3);
    auto c = centralizer(s3, parse_permutation("(1 2)", 3));
    CHECK(element_strings(c) == std::set<std::string>{"()", "(1 2)"});

    auto c6 = cyclic_group(6);
    CHECK(centralizer(c6, c6.element(3)).order() == 6);

    auto s4 = symmetric_group(4);
    auto c4 = centralizer(s4, parse_permutation("(1 2)", 4));
    CHECK(element_strings(c4) == std::set<std::string>{"()", "(1 2)", "(3 4)", "(1 2)(3 4)"});

    CHECK_THROWS_AS(centralizer(s3, parse_permutation("(1 2)(3 4)", 4)), DomainError);
}

TEST_CASE("normalizers") {
    auto s3 = symmetric_group(3);
    CHECK(normalizer(s3, cyclic_of(s3, "(1 2)")).order() == 2);  // self-normalizing

    auto s4 = symmetric_group(4);
    auto a4 = Subgroup::generated_by(
        s4, {*s4.index_of(parse_permutation("(1 2 3)", 4)), *s4.index_of(parse_permutation("(1 2 4)", 4))});
    REQUIRE(a4.order() == 12);
    CHECK(normalizer(s4, a4).order() == 24);  // normal subgroup

    auto sylow2 = sylow_subgroup(s4, 2);
    REQUIRE(sylow2.order() == 8);
    CHECK(normalizer(s4, sylow2).order() == 8);  // self-normalizing, so n_2 = 3

    // oracle: brute conjugation of the whole subgroup set
    for (std::uint32_t g = 0; g < s4.order(); ++g) {
        bool in_normalizer = normalizer(s4, sylow2).contains_index(g);
        CHECK(in_normalizer == sylow2.conjugated_by(g).same_set(sylow2));
    }
}

TEST_CASE("normal closures") {
    auto s3 = symmetric_group(3);
    auto whole3 = Subgroup::whole(s3);
    auto a3 = cyclic_of(s3, "(1 2 3)");
    CHECK(normal_closure(whole3, a3).same_set(a3));  // already normal
    CHECK(normal_closure(whole3, cyclic_of(s3, "(1 2)")).order() == 6);

    auto s4 = symmetric_group(4);
    auto whole4 = Subgroup::whole(s4);
    auto ncl = normal_closure(whole4, cyclic_of(s4, "(1 2)(3 4)"));
    CHECK(ncl.order() == 4);  // V4

    // oracle: closure of the full conjugacy class
    auto dbl = *s4.index_of(parse_permutation("(1 2)(3 4)", 4));
    auto cls = s4.conjugacy_class_of(dbl);
    auto from_class = Subgroup::generated_by(s4, std::vector<std::uint32_t>(cls.begin(), cls.end()));
    CHECK(ncl.same_set(from_class));

    // idempotence
    CHECK(normal_closure(whole4, ncl).same_set(ncl));
}

TEST_CASE("normal closure requires containment") {
    auto s4 = symmetric_group(4);
    auto v4 = normal_closure(Subgroup::whole(s4), cyclic_of(s4, "(1 2)(3 4)"));
    CHECK_THROWS_AS(normal_closure(v4, cyclic_of(s4, "(1 2)")), DomainError);
}

TEST_CASE("quotient S4/V4 has the order profile of S3") {
    auto s4 = symmetric_group(4);
    auto v4 = p_core(s4, 2);
    REQUIRE(v4.order() == 4);
    auto q = quotient(s4, v4, "S4/V4");
    REQUIRE(q.group().order() == 6);

    std::multiset<std::uint64_t> profile;
    for (std::uint32_t i = 0; i < q.group().order(); ++i) profile.insert(q.group().element_order(i));
    CHECK(profile == std::multiset<std::uint64_t>{1, 2, 2, 2, 3, 3});

    // projection is a homomorphism with kernel exactly V4
    for (std::uint32_t a = 0; a < s4.order(); a += 3) {
        for (std::uint32_t b = 0; b < s4.order(); b += 7) {
            CHECK(q.project_perm(s4.mul(a, b)) == q.project_perm(a) * q.project_perm(b));
        }
    }
    for (std::uint32_t g = 0; g < s4.order(); ++g) {
        bool in_kernel = q.project_perm(g).is_identity();
        CHECK(in_kernel == v4.contains_index(g));
    }

    // image order divides element order
    for (std::uint32_t g = 0; g < s4.order(); ++g)
        CHECK(s4.element(g).order() % q.project_perm(g).order() == 0);
}

TEST_CASE("quotient by the trivial and index-two subgroups") {
    auto s4 = symmetric_group(4);
    CHECK(quotient(s4, Subgroup::trivial(s4)).group().order() == 24);
    auto a4n = normal_closure(Subgroup::whole(s4), cyclic_of(s4, "(1 2 3)"));
    REQUIRE(a4n.order() == 12);
    CHECK(quotient(s4, a4n).group().order() == 2);
}

TEST_CASE("quotient rejects non-normal subgroups with a witness") {
    auto s4 = symmetric_group(4);
    CHECK_THROWS_AS(quotient(s4, cyclic_of(s4, "(1 2)")), NotNormalError);
    try {
        quotient(s4, cyclic_of(s4, "(1 2)"));
    } catch (const NotNormalError& e) {
        CHECK(!e.witness.empty());
    }
}

TEST_CASE("p-cores") {
    auto s4 = symmetric_group(4);
    auto core = p_core(s4, 2);
    CHECK(core.order() == 4);
    // oracle: intersect all Sylow 2-subgroups
    auto syl = sylow_data(s4, 2);
    std::vector<std::uint32_t> meet = syl.all[0].indices();
    for (const auto& Q : syl.all) {
        std::vector<std::uint32_t> next;
        std::set_intersection(meet.begin(), meet.end(), Q.indices().begin(), Q.indices().end(),
                              std::back_inserter(next));
        meet = std::move(next);
    }
    CHECK(core.indices() == meet);

    CHECK(p_core(alternating_group(5), 2).order() == 1);
    CHECK(p_core(symmetric_group(3), 3).order() == 3);  // normal Sylow
}

TEST_CASE("p-prime cores") {
    CHECK(p_prime_core(symmetric_group(4), 2).order() == 1);
    CHECK(p_prime_core(symmetric_group(3), 2).order() == 3);
    CHECK(p_prime_core(build_gn({2, 1, 3}), 2).order() == 3);  // the normal p-complement
}

TEST_CASE("upper p-series of S4 at p=2") {
    auto s4 = symmetric_group(4);
    auto series = upper_p_series(s4, 2);
    REQUIRE(series.p_solvable);
    std::vector<std::uint64_t> orders;
    for (const auto& t : series.terms) orders.push_back(t.order());
    CHECK(orders == std::vector<std::uint64_t>{1, 4, 12, 24});
    REQUIRE(series.pprime_factors.size() == 1);
    CHECK(series.pprime_factors[0].order == 3);
}

TEST_CASE("A5 is not p-solvable at any prime") {
    auto a5 = alternating_group(5);
    for (unsigned p : {2u, 3u, 5u}) {
        auto series = upper_p_series(a5, p);
        CHECK_FALSE(series.p_solvable);
        CHECK(series.terms.back().order() == 1);
    }
}

TEST_CASE("factor orders of the series multiply to the group order") {
    for (const auto& G : {symmetric_group(4), symmetric_group(3), dihedral_group(6), sl_2_3(),
                          build_gn({2, 2, 3}), frobenius_group(7, 3)}) {
        for (unsigned p : {2u, 3u}) {
            if (G.order() % p != 0) continue;
            auto series = upper_p_series(G, p);
            REQUIRE(series.p_solvable);
            std::uint64_t prod = 1;
            for (std::size_t i = 1; i < series.terms.size(); ++i)
                prod *= series.terms[i].order() / series.terms[i - 1].order();
            CHECK(prod == G.order());
        }
    }
}

TEST_CASE("Gn groups have exactly one p'-factor") {
    auto g = build_gn({2, 2, 3});
    auto series = upper_p_series(g, 2);
    REQUIRE(series.p_solvable);
    REQUIRE(series.pprime_factors.size() == 1);
    CHECK(series.pprime_factors[0].order == 27);
}

TEST_CASE("fixed-point counts on p'-factors") {
    auto s4 = symmetric_group(4);
    auto series = upper_p_series(s4, 2);
    REQUIRE(series.pprime_factors.size() == 1);
    const auto& factor = series.pprime_factors[0];  // A4/V4 of order 3
    auto x = *s4.index_of(parse_permutation("(1 2)", 4));
    CHECK(factor.fixed_order({x}) == 1);  // (1 2) inverts the order-3 quotient
    CHECK(factor.fixed_order({s4.identity_index()}) == 3);
}
