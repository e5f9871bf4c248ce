#include <catch_amalgamated.hpp>

#include "hookschur/complexes.hpp"
#include "hookschur/ktheory.hpp"

using namespace hookschur;

namespace {

std::vector<std::size_t> term_dims(const ChainComplexFp& c) {
    std::vector<std::size_t> dims;
    for (const auto& t : c.terms()) dims.push_back(t.dim);
    return dims;
}

}  // namespace

TEST_CASE("hook complex terms and gates", "[complexes]") {
    const Prime p2(2);
    CHECK(term_dims(build_hook_complex(2, 2, p2)) == std::vector<std::size_t>{3, 1});
    CHECK(term_dims(build_hook_complex(4, 3, p2)) ==
          std::vector<std::size_t>{15, 15, 3, 0});
    CHECK_THROWS_AS(build_hook_complex(3, 2, p2), std::invalid_argument);
    CHECK_THROWS_AS(build_hook_complex(5, 2, Prime(3)), std::invalid_argument);
}

TEST_CASE("consecutive differentials compose to zero", "[complexes]") {
    for (std::uint32_t pv : {2u, 3u}) {
        const Prime p(pv);
        for (std::int64_t m = pv; m <= 6; m += pv) {
            for (int n = 1; n <= 3; ++n) {
                const ChainComplexFp c = build_hook_complex(m, n, p);
                REQUIRE(c.composites_vanish());
            }
        }
    }
}

TEST_CASE("prime-length complexes are exact past degree zero", "[complexes]") {
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        const Prime p(pv);
        for (int n = 1; n <= 3; ++n) {
            const CohomologyReport rep = cohomology(build_hook_complex(pv, n, p));
            REQUIRE(rep.degrees[0].h_dim == static_cast<std::size_t>(n));
            REQUIRE(rep.degrees[0].h_character == power_sum(pv, n));
            for (std::size_t i = 1; i < rep.degrees.size(); ++i) {
                REQUIRE(rep.degrees[i].h_dim == 0);
            }
            REQUIRE(rep.all_match);
        }
    }
}

TEST_CASE("composite cohomology dimensions", "[complexes]") {
    const Prime p2(2);
    const CohomologyReport rep = cohomology(build_hook_complex(4, 3, p2));
    CHECK(rep.degrees[0].h_dim == 6);
    CHECK(rep.degrees[1].h_dim == 3);
    CHECK(rep.degrees[2].h_dim == 0);
    CHECK(rep.degrees[3].h_dim == 0);
    CHECK(rep.euler_terms == 15 - 15 + 3 - 0);
    CHECK(rep.euler_cohomology == 6 - 3);
    CHECK(rep.euler_consistent);
    CHECK(rep.all_match);

    const CohomologyReport rep63 = cohomology(build_hook_complex(6, 2, Prime(3)));
    CHECK(rep63.degrees[0].h_dim == 3);
    CHECK(rep63.degrees[1].h_dim == 1);
    for (std::size_t i = 2; i < rep63.degrees.size(); ++i) {
        CHECK(rep63.degrees[i].h_dim == 0);
    }
    CHECK(rep63.all_match);
}

TEST_CASE("splitting complex shape and dimension bookkeeping", "[complexes]") {
    const Prime p2(2);
    const ChainComplexFp l = build_splitting_complex(2, 2, p2, 1);
    CHECK(term_dims(l) == std::vector<std::size_t>{1, 2, 1});
    CHECK(l.composites_vanish());

    // per-degree split: dim N(V)_i = dim L_i + dim N(V')_i
    struct Case {
        std::int64_t m;
        std::uint32_t p;
        int n;
    };
    for (const Case tc : {Case{2, 2, 2}, Case{4, 2, 3}, Case{3, 3, 2}, Case{6, 3, 3}}) {
        const Prime p(tc.p);
        const ChainComplexFp big = build_hook_complex(tc.m, tc.n, p);
        const ChainComplexFp small = build_hook_complex(tc.m, tc.n - 1, p);
        for (int ell = 1; ell <= tc.n; ++ell) {
            const ChainComplexFp split = build_splitting_complex(tc.m, tc.n, p, ell);
            REQUIRE(split.composites_vanish());
            for (std::size_t i = 0; i < big.length(); ++i) {
                REQUIRE(big.term(i).dim ==
                        split.term(i + 1).dim + small.term(i).dim);
            }
        }
    }

    CHECK_THROWS_AS(build_splitting_complex(2, 2, p2, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_splitting_complex(2, 2, p2, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_splitting_complex(3, 2, p2, 1), std::invalid_argument);
}

TEST_CASE("contraction homotopy identity", "[complexes]") {
    {
        const HomotopyReport r = homotopy_check(4, 2, Prime(2), 1);
        CHECK(r.pass);
        CHECK(r.eligible > 0);
        CHECK(r.failures == 0);
    }
    {
        const HomotopyReport r = homotopy_check(3, 3, Prime(3), 2);
        CHECK(r.pass);
        CHECK(r.eligible > 0);
    }
    {
        // v_1^(m-1) inside S_{m-1}V has alpha_1 + 1 = m divisible by p: skipped
        const HomotopyReport r = homotopy_check(2, 2, Prime(2), 1);
        CHECK(r.skipped > 0);
        CHECK(r.pass);
    }
    for (std::uint32_t pv : {2u, 3u}) {
        for (std::int64_t m = pv; m <= 6; m += pv) {
            for (int n = 1; n <= 3; ++n) {
                for (int ell = 1; ell <= n; ++ell) {
                    REQUIRE(homotopy_check(m, n, Prime(pv), ell).pass);
                }
            }
        }
    }
}

TEST_CASE("identity group element induces the identity action", "[complexes]") {
    const Prime p3(3);
    const HookModule m(HookShape{2, 1}, 3, p3);
    const auto action =
        hookschur::detail::induced_term_action(m, hookschur::detail::identity_gl(3, 3));
    CHECK(action == FpSparseMatrix::identity(m.dimension(), p3));
}

TEST_CASE("group elements commute with the differentials", "[complexes]") {
    const Prime p3(3);
    const ChainComplexFp c = build_hook_complex(3, 2, p3);
    const EquivarianceReport rep = equivariance_check(c, 20, 20260810);
    CHECK(rep.pass);
    CHECK(rep.failures == 0);
    CHECK(rep.seed == 20260810);

    // negative control: a corrupted differential must fail
    const ChainComplexFp bad = c.with_flipped_entry(0, 0, 0);
    const EquivarianceReport bad_rep = equivariance_check(bad, 20, 20260810);
    CHECK_FALSE(bad_rep.pass);
    CHECK(bad_rep.failures > 0);

    const ChainComplexFp c42 = build_hook_complex(4, 2, Prime(2));
    CHECK(equivariance_check(c42, 20, 7).pass);

    CHECK_THROWS_AS(
        equivariance_check(build_splitting_complex(2, 2, Prime(2), 1), 5, 1),
        std::invalid_argument);
}

TEST_CASE("cohomology equals the scaled smaller complex", "[complexes]") {
    const Prime p2(2);
    {
        const FrobeniusComparisonReport r =
            frobenius_comparison(build_hook_complex(4, 2, p2));
        CHECK(r.pass);
        CHECK(r.target_m == 2);
        // H^0 character is the doubled character of S_2(V) at n=2
        const CohomologyReport coh = cohomology(build_hook_complex(4, 2, p2));
        MultiPoly expected(2);
        expected.add_term({4, 0}, 1);
        expected.add_term({2, 2}, 1);
        expected.add_term({0, 4}, 1);
        CHECK(coh.degrees[0].h_character == expected);
    }
    {
        // m = p: the target is the rank-n space in degree zero
        const CohomologyReport coh = cohomology(build_hook_complex(3, 3, Prime(3)));
        CHECK(coh.degrees[0].h_character == power_sum(3, 3));
    }
    {
        // three-level tower
        CHECK(frobenius_comparison(build_hook_complex(8, 2, p2)).pass);
        CHECK(frobenius_comparison(build_hook_complex(4, 2, p2)).pass);
        CHECK(frobenius_comparison(build_hook_complex(2, 2, p2)).pass);
    }
}

TEST_CASE("multidegree violations are detected", "[complexes]") {
    const Prime p2(2);
    const ChainComplexFp c = build_hook_complex(2, 2, p2);
    // find an entry position connecting two different multidegrees
    std::size_t row = 0;
    std::size_t col = 0;
    bool found = false;
    for (std::size_t r = 0; r < c.term(1).dim && !found; ++r) {
        for (std::size_t cc = 0; cc < c.term(0).dim && !found; ++cc) {
            if (!(c.term(1).multidegrees[r] == c.term(0).multidegrees[cc]) &&
                c.differential(0).value_at(r, cc) == 0) {
                row = r;
                col = cc;
                found = true;
            }
        }
    }
    REQUIRE(found);
    const ChainComplexFp bad = c.with_flipped_entry(0, row, col);
    CHECK_THROWS_AS(cohomology(bad), std::logic_error);
}

TEST_CASE("corrupted complexes are rejected at construction", "[complexes]") {
    const Prime p2(2);
    const ChainComplexFp c = build_hook_complex(4, 3, p2);
    std::vector<ComplexTerm> terms(c.terms());
    std::vector<FpSparseMatrix> diffs;
    for (std::size_t i = 0; i < c.differential_count(); ++i) {
        diffs.push_back(c.differential(i));
    }
    // Flip an entry of d_0 in a row that d_1 does not annihilate.
    REQUIRE(!diffs[1].entries().empty());
    const std::size_t bad_row = diffs[1].entries().begin()->first.second;
    diffs[0].add_at(bad_row, 0, 1);
    const bool fails_d2 = !ChainComplexFp(ChainComplexFp::Kind::hook, 4, 3, p2, 0,
                                          terms, diffs, false)
                               .composites_vanish();
    CHECK(fails_d2);
    CHECK_THROWS_AS(
        ChainComplexFp(ChainComplexFp::Kind::hook, 4, 3, p2, 0, terms, diffs, true),
        std::logic_error);
}
