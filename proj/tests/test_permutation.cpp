#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <sylowlab/permutation.hpp>

using namespace sylowlab;

namespace {

Permutation random_perm(std::mt19937& rng, unsigned degree) {
    std::vector<Point> img(degree);
    for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    for (unsigned i = degree; i > 1; --i) {
        std::uniform_int_distribution<unsigned> d(0, i - 1);
        std::swap(img[i - 1], img[d(rng)]);
    }
    return Permutation::from_images(std::move(img));
}

}  // namespace

TEST_CASE("cycle notation parses to image sequences") {
    CHECK(parse_permutation("(1 2 3)", 4).images() == std::vector<Point>{1, 2, 0, 3});
    CHECK(parse_permutation("()", 3).images() == std::vector<Point>{0, 1, 2});
    CHECK(parse_permutation("(1 2)(3 4)", 4).images() == std::vector<Point>{1, 0, 3, 2});
    CHECK(parse_permutation("(1,2,3)", 3).images() == std::vector<Point>{1, 2, 0});
}

TEST_CASE("cycle notation rejects malformed input") {
    CHECK_THROWS_AS(parse_permutation("(1 2", 4), ParseError);
    CHECK_THROWS_AS(parse_permutation("(1 x)", 4), ParseError);
    CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 4), ParseError);  // repeated point
    CHECK_THROWS_AS(parse_permutation("(1 5)", 4), ParseError);       // point > degree
    CHECK_THROWS_AS(parse_permutation("", 4), ParseError);
    CHECK_THROWS_AS(parse_permutation("(0 1)", 4), ParseError);       // points are 1-based
}

TEST_CASE("composition applies left factor first") {
    auto a = parse_permutation("(1 2)", 3);
    auto b = parse_permutation("(2 3)", 3);
    // point 1: a sends it to 2, then b sends 2 to 3
    CHECK((a * b)[0] == 2);
    CHECK((b * a)[0] == 1);
}

TEST_CASE("inverse and conjugation agree with their definitions") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_perm(rng, 9);
        auto g = random_perm(rng, 9);
        CHECK((p * p.inverse()).is_identity());
        CHECK((p.inverse() * p).is_identity());
        // conjugated_by computes g^-1 p g in one pass; compare against the
        // three-factor route
        CHECK(p.conjugated_by(g) == g.inverse() * p * g);
    }
}

TEST_CASE("element orders are the lcm of cycle lengths") {
    CHECK(Permutation(5).order() == 1);
    CHECK(parse_permutation("(1 2)(3 4 5)", 5).order() == 6);
    CHECK(parse_permutation("(1 2 3 4 5 6 7)", 7).order() == 7);

    // oracle: multiply until identity
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_perm(rng, 8);
        std::uint64_t k = 1;
        Permutation acc = p;
        while (!acc.is_identity()) {
            acc = acc * p;
            ++k;
        }
        CHECK(p.order() == k);
    }
}

TEST_CASE("pow matches repeated multiplication") {
    std::mt19937 rng(99);
    auto p = random_perm(rng, 10);
    Permutation acc{10};
    for (unsigned e = 0; e < 25; ++e) {
        CHECK(p.pow(e) == acc);
        acc = acc * p;
    }
}

TEST_CASE("format round-trips through parse") {
    CHECK(format_permutation(Permutation(4)) == "()");
    CHECK(format_permutation(parse_permutation("(2 3 1)", 4)) == "(1 2 3)");
    std::mt19937 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_perm(rng, 11);
        CHECK(parse_permutation(format_permutation(p), 11) == p);
    }
}

TEST_CASE("from_images validates bijections") {
    CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), DomainError);
    CHECK_THROWS_AS(Permutation::from_images({0, 3, 1}), DomainError);
}
