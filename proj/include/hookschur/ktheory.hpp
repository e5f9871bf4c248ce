#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hookschur/characters.hpp"
#include "hookschur/complexes.hpp"
#include "hookschur/schur.hpp"

namespace hookschur {

/// A class in the split model of the Grothendieck group: the class of a sum
/// of line bundles is identified with its character polynomial. Direct sums
/// add characters, tensor products multiply them.
struct K0Class {
    int n = 0;           // ambient variable count
    MultiPoly value{0};  // character of the class

    friend bool operator==(const K0Class& a, const K0Class& b) {
        return a.n == b.n && a.value == b.value;
    }
};

/// The trivial split class of rank n: v_1 + ... + v_n.
inline K0Class trivial_class(int n) {
    MultiPoly value(n);
    for (int k = 0; k < n; ++k) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(k)] = 1;
        value.add_term(e, 1);
    }
    return K0Class{n, std::move(value)};
}

inline K0Class line_class(const std::vector<int>& exponents) {
    return K0Class{static_cast<int>(exponents.size()), MultiPoly::monomial(exponents)};
}

inline K0Class operator+(const K0Class& a, const K0Class& b) {
    if (a.n != b.n) throw std::invalid_argument("K0Class: variable count mismatch");
    return K0Class{a.n, a.value + b.value};
}

inline K0Class operator*(const K0Class& a, const K0Class& b) {
    if (a.n != b.n) throw std::invalid_argument("K0Class: variable count mismatch");
    return K0Class{a.n, a.value * b.value};
}

/// chi = sum_i (-1)^i [term_i], as a character polynomial.
inline K0Class euler_characteristic(const ChainComplexFp& c) {
    MultiPoly value(c.n());
    for (std::size_t i = 0; i < c.length(); ++i) {
        const MultiPoly ch = c.term(i).character(c.n());
        if (i % 2 == 0) {
            value += ch;
        } else {
            value -= ch;
        }
    }
    return K0Class{c.n(), std::move(value)};
}

/// chi computed from cohomology instead of terms: sum_i (-1)^i [H^i].
inline K0Class euler_characteristic_from_cohomology(const CohomologyReport& report) {
    MultiPoly value(report.n);
    for (std::size_t i = 0; i < report.degrees.size(); ++i) {
        if (i % 2 == 0) {
            value += report.degrees[i].h_character;
        } else {
            value -= report.degrees[i].h_character;
        }
    }
    return K0Class{report.n, std::move(value)};
}

/// chi' = sum_i (-1)^i [im d_i]. Image characters exist because the
/// differentials preserve multidegree; they are computed block by block.
inline K0Class secondary_euler_characteristic(const ChainComplexFp& c) {
    MultiPoly value(c.n());
    for (std::size_t i = 0; i < c.differential_count(); ++i) {
        const detail::BlockRanks ranks = detail::blockwise_ranks(
            c.differential(i), c.term(i).multidegrees, c.term(i + 1).multidegrees);
        MultiPoly image_char(c.n());
        for (const auto& [mu, r] : ranks.rank) {
            if (r > 0) image_char.add_term(mu.exponents, static_cast<long long>(r));
        }
        if (i % 2 == 0) {
            value += image_char;
        } else {
            value -= image_char;
        }
    }
    return K0Class{c.n(), std::move(value)};
}

/// The two Euler characteristics of a complex, taken together.
struct EulerData {
    K0Class chi;
    K0Class chi_prime;
};

inline EulerData euler_data(const ChainComplexFp& c) {
    return EulerData{euler_characteristic(c), secondary_euler_characteristic(c)};
}

namespace detail {

// Decomposes a split class into its list of line monomials (with coefficient
// multiplicity). Rejects classes that are not nonnegative sums of monomials.
inline std::vector<std::vector<int>> split_lines(const K0Class& cls) {
    std::vector<std::vector<int>> lines;
    for (const auto& [e, c] : cls.value.terms()) {
        if (c < 0) {
            throw std::invalid_argument(
                "adams_grayson: class is not a nonnegative sum of line classes");
        }
        for (long long t = 0; t < c; ++t) lines.push_back(e);
    }
    return lines;
}

}  // namespace detail

/// The k-th Adams operation on a split class via the alternating hook sum
/// psi^k[P] = sum_{i=0}^{k-1} (-1)^i [S_(k-i,1^i)(P)], evaluated by
/// substituting the line monomials of P into the hook Schur polynomials.
/// A single line class maps to its k-th tensor power.
inline K0Class adams_grayson(std::int64_t k, const K0Class& cls) {
    if (k < 1) {
        throw std::invalid_argument("adams_grayson: only operations with k >= 1");
    }
    const std::vector<std::vector<int>> lines = detail::split_lines(cls);
    const int rank = static_cast<int>(lines.size());
    MultiPoly value(cls.n);
    if (rank > 0) {
        for (std::int64_t i = 0; i < k; ++i) {
            const MultiPoly s = hook_character(HookShape{k - i, i}, rank);
            const MultiPoly evaluated = substitute_monomials(s, lines, cls.n);
            if (i % 2 == 0) {
                value += evaluated;
            } else {
                value -= evaluated;
            }
        }
    }
    return K0Class{cls.n, std::move(value)};
}

/// psi^k after psi^l equals psi^{kl}.
inline bool adams_composition_check(std::int64_t k, std::int64_t l, const K0Class& cls) {
    return adams_grayson(k, adams_grayson(l, cls)) == adams_grayson(k * l, cls);
}

/// psi^k is additive and multiplicative on split classes.
inline bool ring_hom_check(std::int64_t k, const K0Class& a, const K0Class& b) {
    const bool additive = adams_grayson(k, a + b) == adams_grayson(k, a) + adams_grayson(k, b);
    const bool multiplicative =
        adams_grayson(k, a * b) == adams_grayson(k, a) * adams_grayson(k, b);
    return additive && multiplicative;
}

struct FrobeniusAdamsReport {
    std::int64_t m = 0;
    int n = 0;
    std::uint32_t p = 0;
    bool hook_sum_is_power_sum = false;  // psi^m(trivial rank n) == p_m
    bool euler_terms_match = false;      // chi via terms == the hook sum
    bool euler_cohomology_match = false; // chi via cohomology == p_m
    bool inductive_match = false;        // psi^p(psi^{m/p}) == psi^m
    bool pass = false;
};

/// Verifies that the alternating hook sum for exponent m equals the class of
/// the m-th power bundle in the split model, directly, through the Euler
/// characteristic of the built complex, and through the two-stage composition.
inline FrobeniusAdamsReport frobenius_adams_check(std::int64_t m, int n, Prime p) {
    if (m < 1 || m % p.value() != 0) {
        throw std::invalid_argument("frobenius_adams_check: p must divide m");
    }
    FrobeniusAdamsReport report;
    report.m = m;
    report.n = n;
    report.p = p.value();

    const K0Class trivial = trivial_class(n);
    const K0Class psi_m = adams_grayson(m, trivial);
    const MultiPoly target = power_sum(m, n);
    report.hook_sum_is_power_sum = psi_m.value == target;

    const ChainComplexFp complex = build_hook_complex(m, n, p);
    report.euler_terms_match = euler_characteristic(complex).value == psi_m.value;
    const CohomologyReport coh = cohomology(complex);
    report.euler_cohomology_match =
        euler_characteristic_from_cohomology(coh).value == target;

    report.inductive_match =
        adams_grayson(static_cast<std::int64_t>(p.value()),
                      adams_grayson(m / p.value(), trivial)) == psi_m;

    report.pass = report.hook_sum_is_power_sum && report.euler_terms_match &&
                  report.euler_cohomology_match && report.inductive_match;
    return report;
}

}  // namespace hookschur
