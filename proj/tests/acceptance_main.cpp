// Acceptance suite: runs every top-level verification criterion at its exact
// threshold and prints one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria.

#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hookschur/hookschur.hpp"
#include "tableau_oracle.hpp"

using namespace hookschur;

namespace {

struct Grid {
    std::vector<std::tuple<std::int64_t, std::uint32_t, int>> cases;  // (m, p, n)
};

Grid full_grid() {
    Grid g;
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        for (std::int64_t m = pv; m <= 10; m += pv) {
            for (int n = 1; n <= 4; ++n) {
                g.cases.emplace_back(m, pv, n);
            }
        }
    }
    return g;
}

class ComplexCache {
public:
    const ChainComplexFp& get(std::int64_t m, std::uint32_t p, int n) {
        const auto key = std::make_tuple(m, p, n);
        auto it = complexes_.find(key);
        if (it == complexes_.end()) {
            it = complexes_.emplace(key, build_hook_complex(m, n, Prime(p))).first;
        }
        return it->second;
    }

    const CohomologyReport& cohomology_of(std::int64_t m, std::uint32_t p, int n) {
        const auto key = std::make_tuple(m, p, n);
        auto it = reports_.find(key);
        if (it == reports_.end()) {
            it = reports_.emplace(key, cohomology(get(m, p, n))).first;
        }
        return it->second;
    }

private:
    std::map<std::tuple<std::int64_t, std::uint32_t, int>, ChainComplexFp> complexes_;
    std::map<std::tuple<std::int64_t, std::uint32_t, int>, CohomologyReport> reports_;
};

ComplexCache cache;

int failures = 0;

void report(int criterion, bool pass, const std::string& label) {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": "
              << label << "\n";
    if (!pass) ++failures;
}

bool criterion_1_complex_property(std::string& label) {
    const Grid grid = full_grid();
    std::size_t checked = 0;
    bool ok = true;
    for (const auto& [m, p, n] : grid.cases) {
        const ChainComplexFp& c = cache.get(m, p, n);
        ok = ok && c.composites_vanish();
        ++checked;
    }
    std::ostringstream os;
    os << "d.d = 0 exactly for p in {2,3,5}, p | m, m <= 10, n <= 4 (" << checked
       << " complexes)";
    label = os.str();
    return ok;
}

bool criterion_2_prime_exactness(std::string& label) {
    bool ok = true;
    std::size_t checked = 0;
    for (std::uint32_t pv : {2u, 3u, 5u, 7u}) {
        for (int n = 1; n <= 4; ++n) {
            const CohomologyReport& rep = cache.cohomology_of(pv, pv, n);
            ok = ok && rep.degrees[0].h_dim == static_cast<std::size_t>(n);
            ok = ok && rep.degrees[0].h_character == power_sum(pv, n);
            for (std::size_t i = 1; i < rep.degrees.size(); ++i) {
                ok = ok && rep.degrees[i].h_dim == 0;
            }
            ++checked;
        }
    }
    std::ostringstream os;
    os << "for m = p in {2,3,5,7}, n <= 4: H^0 has dimension n and character "
          "v_1^p+...+v_n^p, higher cohomology vanishes ("
       << checked << " cases)";
    label = os.str();
    return ok;
}

bool criterion_3_composite_cohomology(std::string& label) {
    const std::vector<std::pair<std::int64_t, std::uint32_t>> pairs{
        {4, 2}, {6, 2}, {6, 3}, {8, 2}, {9, 3}};
    bool ok = true;
    std::size_t checked = 0;
    for (const auto& [m, p] : pairs) {
        for (int n = 1; n <= 4; ++n) {
            const CohomologyReport& rep = cache.cohomology_of(m, p, n);
            for (const auto& deg : rep.degrees) {
                ok = ok && deg.dim_match && deg.character_match;
            }
            ++checked;
        }
    }
    std::ostringstream os;
    os << "composite cohomology dimensions and multigraded characters match the "
          "scaled hook data for (m,p) in {(4,2),(6,2),(6,3),(8,2),(9,3)}, n <= 4 ("
       << checked << " cases)";
    label = os.str();
    return ok;
}

bool criterion_4_character_identity(std::string& label) {
    bool ok = true;
    std::size_t checked = 0;
    for (std::int64_t m = 1; m <= 8; ++m) {
        for (int n = 1; n <= 4; ++n) {
            ok = ok && verify_power_sum_identity(m, n).holds;
            ++checked;
        }
    }
    std::ostringstream os;
    os << "alternating hook sum equals the power sum exactly for 1 <= m <= 8, "
          "1 <= n <= 4 ("
       << checked << " cases)";
    label = os.str();
    return ok;
}

bool criterion_5_golden_values(std::string& label) {
    bool ok = true;

    MultiPoly ch21(3);
    ch21.add_term({2, 1, 0}, 1);
    ch21.add_term({1, 2, 0}, 1);
    ch21.add_term({2, 0, 1}, 1);
    ch21.add_term({1, 1, 1}, 2);
    ch21.add_term({0, 2, 1}, 1);
    ch21.add_term({1, 0, 2}, 1);
    ch21.add_term({0, 1, 2}, 1);
    ok = ok && hook_character(HookShape{2, 1}, 3) == ch21;

    MultiPoly ch211(3);
    ch211.add_term({2, 1, 1}, 1);
    ch211.add_term({1, 2, 1}, 1);
    ch211.add_term({1, 1, 2}, 1);
    ok = ok && hook_character(HookShape{2, 2}, 3) == ch211;

    const FrobeniusSubquotient sub =
        frobenius_subquotient(HookModule(HookShape{3, 1}, 3, Prime(2)));
    MultiPoly sub_char(3);
    sub_char.add_term({2, 2, 0}, 1);
    sub_char.add_term({2, 0, 2}, 1);
    sub_char.add_term({0, 2, 2}, 1);
    ok = ok && sub.dimension == 3 && sub.character == sub_char;

    const FpSparseMatrix f4 = frobenius_power_map(2, 2, 4, Prime(2));
    const TensorSpaceBasis target = enumerate_basis(2, 0, 8);
    std::vector<BasisTensor> image;
    for (const auto& [rc, v] : f4.entries()) {
        if (v != 1) ok = false;
        image.push_back(target.element(rc.first));
    }
    std::sort(image.begin(), image.end());
    const std::vector<BasisTensor> expected{
        {{}, {0, 8}}, {{}, {4, 4}}, {{}, {8, 0}}};
    ok = ok && image == expected;

    label =
        "golden values reproduced: CH(S_(2,1)) and CH(S_(2,1,1)) at n=3, the "
        "divisible subquotient of S_(3,1) at p=2, and the stretched span of "
        "S_2 at n=2";
    return ok;
}

bool criterion_6_homotopy(std::string& label) {
    bool ok = true;
    std::size_t checked = 0;
    std::size_t eligible = 0;
    for (std::uint32_t pv : {2u, 3u}) {
        for (std::int64_t m = pv; m <= 6; m += pv) {
            for (int n = 1; n <= 3; ++n) {
                for (int ell = 1; ell <= n; ++ell) {
                    const HomotopyReport rep = homotopy_check(m, n, Prime(pv), ell);
                    ok = ok && rep.pass;
                    eligible += rep.eligible;
                    ++checked;
                }
            }
        }
    }
    std::ostringstream os;
    os << "contraction homotopy identity verified exhaustively for m <= 6, n <= 3, "
          "p in {2,3}, all distinguished indices ("
       << checked << " cases, " << eligible << " basis tensors)";
    label = os.str();
    return ok;
}

bool criterion_7_equivariance(std::string& label) {
    const std::uint64_t seed = 20260810;
    bool ok = true;
    std::size_t checked = 0;
    for (std::uint32_t pv : {2u, 3u}) {
        for (std::int64_t m = pv; m <= 6; m += pv) {
            for (int n = 1; n <= 3; ++n) {
                const ChainComplexFp& c = cache.get(m, pv, n);
                const EquivarianceReport rep = equivariance_check(c, 20, seed);
                ok = ok && rep.pass;
                ++checked;
            }
        }
    }
    // negative control: a corrupted differential must be detected
    {
        const ChainComplexFp& c = cache.get(3, 3, 2);
        const ChainComplexFp bad = c.with_flipped_entry(0, 0, 0);
        const EquivarianceReport rep = equivariance_check(bad, 20, seed);
        ok = ok && !rep.pass;
    }
    std::ostringstream os;
    os << "20 random elementary/diagonal group elements commute with every "
          "differential for m <= 6, n <= 3, p in {2,3} (seed "
       << seed << ", " << checked << " complexes); corrupted differential fails";
    label = os.str();
    return ok;
}

bool criterion_8_shifted_binomials(std::string& label) {
    bool ok = true;
    std::size_t checked = 0;
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        const Prime p(pv);
        for (std::uint64_t m = 0; m <= 30; ++m) {
            for (std::uint64_t n = 0; n <= m; ++n) {
                const FpElement lhs =
                    binomial_mod_p(pv * m + pv - 1, pv * n + pv - 1, p);
                const std::uint64_t rhs = binomial(m, static_cast<std::int64_t>(n)) % pv;
                ok = ok && lhs.residue() == rhs;
                ++checked;
            }
        }
    }
    std::ostringstream os;
    os << "C(pm+p-1, pn+p-1) == C(m,n) mod p against the integer-binomial oracle "
          "for 0 <= n <= m <= 30, p in {2,3,5} ("
       << checked << " pairs)";
    label = os.str();
    return ok;
}

bool criterion_9_adams(std::string& label) {
    bool ok = true;
    for (std::int64_t k = 1; k <= 6; ++k) {
        for (int n = 1; n <= 4; ++n) {
            ok = ok && adams_grayson(k, trivial_class(n)).value == power_sum(k, n);
        }
    }
    for (std::int64_t k = 1; k <= 4; ++k) {
        for (std::int64_t l = 1; l <= 4; ++l) {
            for (int rank = 1; rank <= 3; ++rank) {
                ok = ok && adams_composition_check(k, l, trivial_class(rank));
            }
        }
    }
    {
        MultiPoly a_val(5);
        a_val.add_term({1, 0, 0, 0, 0}, 1);
        a_val.add_term({0, 1, 0, 0, 0}, 1);
        MultiPoly b_val(5);
        b_val.add_term({0, 0, 1, 0, 0}, 1);
        b_val.add_term({0, 0, 0, 1, 0}, 1);
        b_val.add_term({0, 0, 0, 0, 1}, 1);
        ok = ok && ring_hom_check(2, K0Class{5, a_val}, K0Class{5, b_val});
        ok = ok && ring_hom_check(3, line_class({1, 0}), line_class({0, 2}));
    }
    std::size_t euler_checked = 0;
    for (const auto& [m, p, n] : full_grid().cases) {
        const ChainComplexFp& c = cache.get(m, p, n);
        const CohomologyReport& rep = cache.cohomology_of(m, p, n);
        ok = ok && euler_characteristic(c) == euler_characteristic_from_cohomology(rep);
        ++euler_checked;
    }
    std::ostringstream os;
    os << "Adams identities: hook sum equals power sum (k <= 6, n <= 4), "
          "composition (k,l <= 4), ring homomorphism on split classes, and "
          "term/cohomology Euler agreement on all "
       << euler_checked << " built complexes";
    label = os.str();
    return ok;
}

bool criterion_10_dimension_oracle(std::string& label) {
    bool ok = true;
    std::size_t checked = 0;
    for (std::int64_t a = 1; a <= 8; ++a) {
        for (std::int64_t b = 0; a + b <= 8; ++b) {
            for (int n = 1; n <= 4; ++n) {
                const std::uint64_t expected = oracle::count_hook_tableaux(a, b, n);
                std::size_t dim2 = 0;
                bool first = true;
                for (std::uint32_t pv : {2u, 3u, 5u}) {
                    const HookModule module(HookShape{a, b}, n, Prime(pv));
                    ok = ok && module.dimension() == expected;
                    if (first) {
                        dim2 = module.dimension();
                        first = false;
                    } else {
                        ok = ok && module.dimension() == dim2;
                    }
                }
                ++checked;
            }
        }
    }
    std::ostringstream os;
    os << "hook module dimensions equal the brute-force tableau count and agree "
          "across p in {2,3,5} for every shape with a+b <= 8, n <= 4 ("
       << checked << " shapes)";
    label = os.str();
    return ok;
}

}  // namespace

int main() {
    std::string label;
    bool ok;

    ok = criterion_1_complex_property(label);
    report(1, ok, label);
    ok = criterion_2_prime_exactness(label);
    report(2, ok, label);
    ok = criterion_3_composite_cohomology(label);
    report(3, ok, label);
    ok = criterion_4_character_identity(label);
    report(4, ok, label);
    ok = criterion_5_golden_values(label);
    report(5, ok, label);
    ok = criterion_6_homotopy(label);
    report(6, ok, label);
    ok = criterion_7_equivariance(label);
    report(7, ok, label);
    ok = criterion_8_shifted_binomials(label);
    report(8, ok, label);
    ok = criterion_9_adams(label);
    report(9, ok, label);
    ok = criterion_10_dimension_oracle(label);
    report(10, ok, label);

    if (failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << failures << " criteria failed\n";
    }
    return failures;
}
