#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include <sylowlab/catalog.hpp>
#include <sylowlab/group.hpp>

using namespace sylowlab;

namespace {

// independent closure oracle: repeated pairwise products until stable
std::set<Permutation, std::less<>> closure_oracle(std::vector<Permutation> gens, unsigned degree) {
    std::set<Permutation, std::less<>> cur;
    cur.insert(Permutation(degree));
    for (const auto& g : gens) cur.insert(g);
    while (true) {
        std::set<Permutation, std::less<>> next = cur;
        for (const auto& a : cur)
            for (const auto& b : cur) next.insert(a * b);
        if (next.size() == cur.size()) return cur;
        cur = std::move(next);
    }
}

// independent conjugacy oracle: conjugate by every element
std::multiset<std::size_t> class_sizes_oracle(const FiniteGroup& G) {
    std::multiset<std::size_t> sizes;
    std::set<Permutation, std::less<>> assigned;
    for (const auto& x : G.elements()) {
        if (assigned.count(x)) continue;
        std::set<Permutation, std::less<>> cls;
        for (const auto& g : G.elements()) cls.insert(x.conjugated_by(g));
        sizes.insert(cls.size());
        for (const auto& y : cls) assigned.insert(y);
    }
    return sizes;
}

std::multiset<std::size_t> class_sizes(const FiniteGroup& G) {
    std::multiset<std::size_t> sizes;
    for (const auto& cls : G.conjugacy_classes()) sizes.insert(cls.size());
    return sizes;
}

}  // namespace

TEST_CASE("closure of S3 generators gives all six elements") {
    std::vector<Permutation> gens{parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)};
    auto elems = closure(gens, 3);
    REQUIRE(elems.size() == 6);
    CHECK(std::is_sorted(elems.begin(), elems.end(),
                         [](const Permutation& a, const Permutation& b) { return a < b; }));
    auto oracle = closure_oracle(gens, 3);
    CHECK(std::set<Permutation, std::less<>>(elems.begin(), elems.end()) == oracle);
}

TEST_CASE("closure of the empty set is the trivial group") {
    auto elems = closure({}, 4);
    REQUIRE(elems.size() == 1);
    CHECK(elems[0].is_identity());
}

TEST_CASE("closure reports cap overflow") {
    // dihedral of order 8; the oracle closure confirms 8 elements
    std::vector<Permutation> gens{parse_permutation("(1 2 3 4)", 4), parse_permutation("(1 3)", 4)};
    CHECK(closure_oracle(gens, 4).size() == 8);
    CHECK_THROWS_AS(closure(gens, 4, 7), CapExceeded);
    CHECK(closure(gens, 4, 8).size() == 8);
}

TEST_CASE("closure is deterministic") {
    std::vector<Permutation> gens{parse_permutation("(1 2 3 4 5)", 5), parse_permutation("(1 2)", 5)};
    auto a = closure(gens, 5);
    auto b = closure(gens, 5);
    CHECK(a == b);
    CHECK(a.size() == 120);
}

TEST_CASE("conjugacy classes match the brute-force oracle") {
    auto s3 = symmetric_group(3);
    CHECK(class_sizes(s3) == std::multiset<std::size_t>{1, 2, 3});
    CHECK(class_sizes(s3) == class_sizes_oracle(s3));

    auto a4 = alternating_group(4);
    CHECK(class_sizes(a4) == std::multiset<std::size_t>{1, 3, 4, 4});
    CHECK(class_sizes(a4) == class_sizes_oracle(a4));

    auto s4 = symmetric_group(4);
    CHECK(class_sizes(s4) == class_sizes_oracle(s4));
}

TEST_CASE("abelian groups have singleton classes") {
    auto c6 = cyclic_group(6);
    for (const auto& cls : c6.conjugacy_classes()) CHECK(cls.size() == 1);
}

TEST_CASE("class sizes divide the group order and sum to it") {
    for (const auto& G : {symmetric_group(4), alternating_group(5), dihedral_group(6)}) {
        std::size_t total = 0;
        for (const auto& cls : G.conjugacy_classes()) {
            CHECK(G.order() % cls.size() == 0);
            total += cls.size();
        }
        CHECK(total == G.order());
    }
}

TEST_CASE("index arithmetic agrees with permutation arithmetic") {
    auto G = symmetric_group(4);
    for (std::uint32_t a = 0; a < G.order(); ++a) {
        CHECK(G.element(G.inv(a)) == G.element(a).inverse());
        CHECK(G.element_order(a) == G.element(a).order());
        for (std::uint32_t b = 0; b < G.order(); b += 5) {
            CHECK(G.element(G.mul(a, b)) == G.element(a) * G.element(b));
            CHECK(G.element(G.conj(a, b)) == G.element(a).conjugated_by(G.element(b)));
        }
    }
}

TEST_CASE("identity has index zero") {
    for (const auto& G : {symmetric_group(5), alternating_group(5), cyclic_group(12)})
        CHECK(G.element(0).is_identity());
}

TEST_CASE("subgroup closure and small generating sets") {
    auto G = symmetric_group(4);
    auto v4_gen = *G.index_of(parse_permutation("(1 2)(3 4)", 4));
    auto v4_gen2 = *G.index_of(parse_permutation("(1 3)(2 4)", 4));
    auto V4 = Subgroup::generated_by(G, {v4_gen, v4_gen2});
    CHECK(V4.order() == 4);

    auto rebuilt = Subgroup::from_indices(G, V4.indices());
    CHECK(rebuilt.generator_indices().size() <= 2);
    CHECK(G.closure_indices(rebuilt.generator_indices()) == V4.indices());
}

TEST_CASE("subgroup conjugation preserves order and structure") {
    auto G = symmetric_group(4);
    auto H = Subgroup::generated_by(G, {*G.index_of(parse_permutation("(1 2)", 4))});
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        auto K = H.conjugated_by(g);
        CHECK(K.order() == H.order());
        CHECK(G.closure_indices(K.generator_indices()) == K.indices());
    }
}

TEST_CASE("generators of mismatched degree are rejected") {
    std::vector<Permutation> gens{parse_permutation("(1 2)", 3), parse_permutation("(1 2)", 4)};
    CHECK_THROWS_AS(closure(gens, 3), DomainError);
}
