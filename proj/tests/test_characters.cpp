#include <catch_amalgamated.hpp>

#include <random>

#include "hookschur/characters.hpp"

using namespace hookschur;

namespace {

MultiPoly random_poly(int n, std::mt19937_64& rng) {
    MultiPoly f(n);
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(n));
        for (auto& x : e) x = static_cast<int>(rng() % 4);
        f.add_term(e, static_cast<long long>(rng() % 7) - 3);
    }
    return f;
}

}  // namespace

TEST_CASE("power sums", "[characters]") {
    CHECK(power_sum(1, 2) == MultiPoly::monomial({1, 0}) + MultiPoly::monomial({0, 1}));
    CHECK(power_sum(3, 1) == MultiPoly::monomial({3}));
    const MultiPoly p52 = power_sum(5, 2);
    CHECK(p52.coefficient({5, 0}) == 1);
    CHECK(p52.coefficient({0, 5}) == 1);
    CHECK(p52.terms().size() == 2);
    CHECK_THROWS_AS(power_sum(0, 2), std::invalid_argument);
}

TEST_CASE("frobenius scaling of polynomials", "[characters]") {
    const MultiPoly f = MultiPoly::monomial({1, 0}) + MultiPoly::monomial({0, 1});
    CHECK(frobenius_scale(f, 2) ==
          MultiPoly::monomial({2, 0}) + MultiPoly::monomial({0, 2}));
    CHECK(frobenius_scale(f, 1) == f);

    // wedge^2 character at n=3, scaled by 2
    MultiPoly wedge(3);
    wedge.add_term({1, 1, 0}, 1);
    wedge.add_term({1, 0, 1}, 1);
    wedge.add_term({0, 1, 1}, 1);
    MultiPoly expected(3);
    expected.add_term({2, 2, 0}, 1);
    expected.add_term({2, 0, 2}, 1);
    expected.add_term({0, 2, 2}, 1);
    CHECK(frobenius_scale(wedge, 2) == expected);
}

TEST_CASE("frobenius scaling is multiplicative", "[characters]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const MultiPoly f = random_poly(n, rng);
        const MultiPoly g = random_poly(n, rng);
        const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 3);
        REQUIRE(frobenius_scale(f * g, p) ==
                frobenius_scale(f, p) * frobenius_scale(g, p));
    }
}

TEST_CASE("symmetry check", "[characters]") {
    CHECK(symmetry_check(power_sum(3, 3)));
    CHECK_FALSE(symmetry_check(MultiPoly::monomial({2, 1, 0})));
    CHECK(symmetry_check(MultiPoly(4)));  // zero polynomial
}

TEST_CASE("exact ring arithmetic", "[characters]") {
    MultiPoly f(2);
    f.add_term({1, 0}, 2);
    f.add_term({0, 1}, -2);
    MultiPoly g = f;
    CHECK((f - g).is_zero());
    const MultiPoly prod = f * f;
    CHECK(prod.coefficient({2, 0}) == 4);
    CHECK(prod.coefficient({1, 1}) == -8);
    CHECK(prod.coefficient({0, 2}) == 4);
    CHECK_THROWS_AS(f + MultiPoly(3), std::invalid_argument);
    CHECK_THROWS_AS(f.add_term({1, 2, 3}, 1), std::invalid_argument);
}

TEST_CASE("rendering contract", "[characters]") {
    CHECK(to_string(MultiPoly(3)) == "0");
    MultiPoly f(2);
    f.add_term({0, 0}, -3);
    f.add_term({1, 1}, 2);
    CHECK(to_string(f) == "-3 + 2*v1*v2");
    MultiPoly g(2);
    g.add_term({2, 0}, 1);
    g.add_term({1, 1}, 1);
    g.add_term({0, 2}, 1);
    CHECK(to_string(g) == "v1^2 + v1*v2 + v2^2");
    MultiPoly h(1);
    h.add_term({1}, -1);
    CHECK(to_string(h) == "-v1");
}

TEST_CASE("monomial substitution", "[characters]") {
    // f(x, y) = x^2 y with x -> v1 v2, y -> v2^3
    MultiPoly f(2);
    f.add_term({2, 1}, 5);
    const MultiPoly out = substitute_monomials(f, {{1, 1}, {0, 3}}, 2);
    CHECK(out == MultiPoly::monomial({2, 5}, 5));
    CHECK_THROWS_AS(substitute_monomials(f, {{1, 1}}, 2), std::invalid_argument);
}
