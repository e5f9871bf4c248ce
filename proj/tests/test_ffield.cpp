#include <catch_amalgamated.hpp>

#include "hookschur/ffield.hpp"

using namespace hookschur;

TEST_CASE("prime construction accepts primes and rejects composites", "[ffield]") {
    for (std::uint32_t v : {2u, 3u, 5u, 7u, 11u, 31u, 101u}) {
        CHECK(Prime(v).value() == v);
    }
    for (std::uint32_t v : {0u, 1u, 4u, 6u, 9u, 91u, 100u}) {
        CHECK_THROWS_AS(Prime(v), std::invalid_argument);
    }
}

TEST_CASE("integer binomial", "[ffield]") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
    CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
}

TEST_CASE("binomial mod p agrees with the integer oracle", "[ffield]") {
    CHECK(binomial_mod_p(7, 3, Prime(2)).residue() == 1);
    CHECK(binomial_mod_p(5, 3, Prime(3)).residue() == 1);
    for (std::uint64_t n : {0ULL, 4ULL, 17ULL, 42ULL}) {
        CHECK(binomial_mod_p(n, 0, Prime(5)).residue() == 1);
    }
    for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
        const Prime p(pv);
        for (std::uint64_t n = 0; n <= 60; ++n) {
            for (std::uint64_t k = 0; k <= n; ++k) {
                REQUIRE(binomial_mod_p(n, k, p).residue() ==
                        binomial(n, static_cast<std::int64_t>(k)) % pv);
            }
        }
    }
}

TEST_CASE("shifted binomial congruence", "[ffield]") {
    // C(7,3) = 35 == 1 and C(3,1) = 3 == 1 mod 2.
    CHECK(lucas_shift_identity_check(3, 1, Prime(2)));
    CHECK(lucas_shift_identity_check(0, 0, Prime(2)));
    CHECK(lucas_shift_identity_check(0, 0, Prime(5)));
    CHECK(lucas_shift_identity_check(4, 2, Prime(3)));
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        const Prime p(pv);
        for (std::uint64_t m = 0; m <= 30; ++m) {
            for (std::uint64_t n = 0; n <= m; ++n) {
                REQUIRE(lucas_shift_identity_check(m, n, p));
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively for small p", "[ffield]") {
    for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
        const Prime p(pv);
        const FpElement zero(0, p);
        const FpElement one(1, p);
        for (std::uint32_t a = 0; a < pv; ++a) {
            const FpElement fa(a, p);
            CHECK(fa + zero == fa);
            CHECK(fa * one == fa);
            CHECK(fa + (-fa) == zero);
            if (a != 0) {
                CHECK(fa * fa.inverse() == one);
            }
            for (std::uint32_t b = 0; b < pv; ++b) {
                const FpElement fb(b, p);
                CHECK(fa + fb == fb + fa);
                CHECK(fa * fb == fb * fa);
                for (std::uint32_t c = 0; c < pv; ++c) {
                    const FpElement fc(c, p);
                    CHECK((fa + fb) + fc == fa + (fb + fc));
                    CHECK((fa * fb) * fc == fa * (fb * fc));
                    CHECK(fa * (fb + fc) == fa * fb + fa * fc);
                }
            }
        }
    }
}

TEST_CASE("element error paths", "[ffield]") {
    const Prime p2(2);
    const Prime p3(3);
    CHECK_THROWS_AS(FpElement(0, p2).inverse(), std::domain_error);
    CHECK_THROWS_AS(FpElement(1, p2) + FpElement(1, p3), std::invalid_argument);
    CHECK(FpElement::from_signed(-1, p3).residue() == 2);
    CHECK(FpElement::from_signed(-6, p3).residue() == 0);
    CHECK(FpElement(7, p3).residue() == 1);
}
