#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookschur/complexes.hpp"
#include "hookschur/ktheory.hpp"
#include "hookschur/schur.hpp"

// Machine-readable reports behind the command-line frontend. Every report
// serializes to JSON (schema version 1) and back, and renders to a fixed
// text layout; identical inputs produce byte-identical output.
namespace hookschur::reports {

inline constexpr int kSchemaVersion = 1;

struct ComplexReport {
    int schema = kSchemaVersion;
    std::string command = "complex";
    std::int64_t m = 0;
    std::uint32_t p = 0;
    int n = 0;
    std::vector<std::uint64_t> term_dims;
    std::vector<std::uint64_t> differential_ranks;
    bool d_squared_zero = false;
    bool pass = false;

    friend bool operator==(const ComplexReport&, const ComplexReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComplexReport, schema, command, m, p, n,
                                   term_dims, differential_ranks, d_squared_zero,
                                   pass)

struct CohomologyDegreeReport {
    std::uint64_t degree = 0;
    std::uint64_t term_dim = 0;
    std::uint64_t kernel_dim = 0;
    std::uint64_t image_dim = 0;
    std::uint64_t h_dim = 0;
    std::uint64_t expected_dim = 0;
    std::string h_character;
    std::string expected_character;
    bool dim_match = false;
    bool character_match = false;

    friend bool operator==(const CohomologyDegreeReport&,
                           const CohomologyDegreeReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CohomologyDegreeReport, degree, term_dim,
                                   kernel_dim, image_dim, h_dim, expected_dim,
                                   h_character, expected_character, dim_match,
                                   character_match)

struct CohomologyReport {
    int schema = kSchemaVersion;
    std::string command = "cohomology";
    std::int64_t m = 0;
    std::uint32_t p = 0;
    int n = 0;
    std::vector<CohomologyDegreeReport> degrees;
    std::int64_t euler_terms = 0;
    std::int64_t euler_cohomology = 0;
    bool euler_consistent = false;
    bool pass = false;

    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CohomologyReport, schema, command, m, p, n,
                                   degrees, euler_terms, euler_cohomology,
                                   euler_consistent, pass)

struct CharacterReport {
    int schema = kSchemaVersion;
    std::string command = "character";
    std::int64_t arm = 0;
    std::int64_t leg = 0;
    int n = 0;
    std::uint32_t p = 0;  // 0: no subquotient requested
    std::uint64_t dimension = 0;
    std::string character;
    bool has_subquotient = false;
    std::uint64_t subquotient_dimension = 0;
    std::string subquotient_character;
    bool pass = true;

    friend bool operator==(const CharacterReport&, const CharacterReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CharacterReport, schema, command, arm, leg, n, p,
                                   dimension, character, has_subquotient,
                                   subquotient_dimension, subquotient_character, pass)

struct IdentityReport {
    int schema = kSchemaVersion;
    std::string command = "identity";
    std::int64_t m = 0;
    int n = 0;
    std::string residual;
    bool pass = false;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(IdentityReport, schema, command, m, n, residual,
                                   pass)

struct AdamsReport {
    int schema = kSchemaVersion;
    std::string command = "adams";
    std::int64_t k = 0;
    std::int64_t l = 0;  // 0: no composition requested
    int n = 0;
    std::string psi;
    bool equals_power_sum = false;
    bool composition_checked = false;
    bool composition_ok = false;
    bool ring_hom_ok = false;
    bool pass = false;

    friend bool operator==(const AdamsReport&, const AdamsReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AdamsReport, schema, command, k, l, n, psi,
                                   equals_power_sum, composition_checked,
                                   composition_ok, ring_hom_ok, pass)

struct HomotopyCaseReport {
    int ell = 0;
    std::uint64_t eligible = 0;
    std::uint64_t skipped = 0;
    std::uint64_t failures = 0;
    bool pass = false;

    friend bool operator==(const HomotopyCaseReport&,
                           const HomotopyCaseReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HomotopyCaseReport, ell, eligible, skipped,
                                   failures, pass)

struct HomotopyReport {
    int schema = kSchemaVersion;
    std::string command = "homotopy";
    std::int64_t m = 0;
    std::uint32_t p = 0;
    int n = 0;
    std::vector<HomotopyCaseReport> cases;
    bool pass = false;

    friend bool operator==(const HomotopyReport&, const HomotopyReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HomotopyReport, schema, command, m, p, n, cases,
                                   pass)

struct EquivarianceReport {
    int schema = kSchemaVersion;
    std::string command = "equivariance";
    std::int64_t m = 0;
    std::uint32_t p = 0;
    int n = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    int failures = 0;
    bool pass = false;

    friend bool operator==(const EquivarianceReport&,
                           const EquivarianceReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EquivarianceReport, schema, command, m, p, n,
                                   seed, trials, failures, pass)

struct SweepCellReport {
    std::int64_t m = 0;
    std::uint32_t p = 0;
    int n = 0;
    std::string status;  // "pass", "fail" or "skipped:size"
    bool cohomology_ok = false;
    bool frobenius_ok = false;
    bool identity_ok = false;

    friend bool operator==(const SweepCellReport&, const SweepCellReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SweepCellReport, m, p, n, status, cohomology_ok,
                                   frobenius_ok, identity_ok)

struct SweepReport {
    int schema = kSchemaVersion;
    std::string command = "sweep";
    std::int64_t max_m = 0;
    int max_n = 0;
    std::vector<SweepCellReport> cells;
    bool pass = false;

    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SweepReport, schema, command, max_m, max_n, cells,
                                   pass)

// -- report construction ----------------------------------------------------

/// Largest ambient space appearing in the hook complex at (m, n).
inline std::uint64_t max_ambient_dimension(std::int64_t m, int n) {
    std::uint64_t best = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        const std::uint64_t wedge =
            binomial(static_cast<std::uint64_t>(n), i + 1);
        const std::int64_t sym_degree = m - i - 1;
        const std::uint64_t sym =
            binomial(static_cast<std::uint64_t>(n + sym_degree - 1), sym_degree);
        if (wedge * sym > best) best = wedge * sym;
    }
    return best;
}

inline std::uint64_t ambient_dimension_for_shape(HookShape shape, int n) {
    if (shape.arm <= 0) return 0;
    return binomial(static_cast<std::uint64_t>(n), shape.leg + 1) *
           binomial(static_cast<std::uint64_t>(n + shape.arm - 2), shape.arm - 1);
}

inline ComplexReport make_complex_report(std::int64_t m, int n, Prime p) {
    const ChainComplexFp c = build_hook_complex(m, n, p);
    ComplexReport out;
    out.m = m;
    out.p = p.value();
    out.n = n;
    for (const auto& t : c.terms()) out.term_dims.push_back(t.dim);
    for (std::size_t i = 0; i < c.differential_count(); ++i) {
        out.differential_ranks.push_back(c.differential(i).rank());
    }
    out.d_squared_zero = c.composites_vanish();
    out.pass = out.d_squared_zero;
    return out;
}

inline CohomologyReport make_cohomology_report(std::int64_t m, int n, Prime p) {
    const hookschur::CohomologyReport rep = cohomology(build_hook_complex(m, n, p));
    CohomologyReport out;
    out.m = rep.m;
    out.p = rep.p;
    out.n = rep.n;
    for (const auto& d : rep.degrees) {
        CohomologyDegreeReport deg;
        deg.degree = d.degree;
        deg.term_dim = d.term_dim;
        deg.kernel_dim = d.kernel_dim;
        deg.image_dim = d.image_in_dim;
        deg.h_dim = d.h_dim;
        deg.expected_dim = d.expected_dim;
        deg.h_character = to_string(d.h_character);
        deg.expected_character = to_string(d.expected_character);
        deg.dim_match = d.dim_match;
        deg.character_match = d.character_match;
        out.degrees.push_back(std::move(deg));
    }
    out.euler_terms = rep.euler_terms;
    out.euler_cohomology = rep.euler_cohomology;
    out.euler_consistent = rep.euler_consistent;
    out.pass = rep.all_match;
    return out;
}

inline CharacterReport make_character_report(HookShape shape, int n,
                                             std::uint32_t p_or_zero) {
    CharacterReport out;
    out.arm = shape.arm;
    out.leg = shape.leg;
    out.n = n;
    out.p = p_or_zero;
    const Prime p(p_or_zero == 0 ? 2 : p_or_zero);
    const HookModule module(shape, n, p);
    out.dimension = module.dimension();
    out.character = to_string(module.character());
    if (p_or_zero != 0) {
        const FrobeniusSubquotient sub = frobenius_subquotient(module);
        out.has_subquotient = true;
        out.subquotient_dimension = sub.dimension;
        out.subquotient_character = to_string(sub.character);
    }
    out.pass = true;
    return out;
}

inline IdentityReport make_identity_report(std::int64_t m, int n) {
    const PowerSumIdentityResult result = verify_power_sum_identity(m, n);
    IdentityReport out;
    out.m = m;
    out.n = n;
    out.residual = to_string(result.residual);
    out.pass = result.holds;
    return out;
}

inline AdamsReport make_adams_report(std::int64_t k, std::int64_t l_or_zero, int n) {
    AdamsReport out;
    out.k = k;
    out.l = l_or_zero;
    out.n = n;
    const K0Class trivial = trivial_class(n);
    const K0Class psi = adams_grayson(k, trivial);
    out.psi = to_string(psi.value);
    out.equals_power_sum = psi.value == power_sum(k, n);
    std::vector<int> first(static_cast<std::size_t>(n), 0);
    first[0] = 1;
    out.ring_hom_ok = ring_hom_check(k, trivial, line_class(first));
    out.pass = out.equals_power_sum && out.ring_hom_ok;
    if (l_or_zero > 0) {
        out.composition_checked = true;
        out.composition_ok = adams_composition_check(k, l_or_zero, trivial);
        out.pass = out.pass && out.composition_ok;
    }
    return out;
}

inline HomotopyReport make_homotopy_report(std::int64_t m, int n, Prime p,
                                           int ell_or_zero) {
    HomotopyReport out;
    out.m = m;
    out.p = p.value();
    out.n = n;
    out.pass = true;
    const int first = ell_or_zero == 0 ? 1 : ell_or_zero;
    const int last = ell_or_zero == 0 ? n : ell_or_zero;
    for (int ell = first; ell <= last; ++ell) {
        const hookschur::HomotopyReport rep = homotopy_check(m, n, p, ell);
        HomotopyCaseReport c;
        c.ell = ell;
        c.eligible = rep.eligible;
        c.skipped = rep.skipped;
        c.failures = rep.failures;
        c.pass = rep.pass;
        out.pass = out.pass && c.pass;
        out.cases.push_back(c);
    }
    return out;
}

inline EquivarianceReport make_equivariance_report(std::int64_t m, int n, Prime p,
                                                   std::uint64_t seed, int trials) {
    const hookschur::EquivarianceReport rep =
        equivariance_check(build_hook_complex(m, n, p), trials, seed);
    EquivarianceReport out;
    out.m = m;
    out.p = p.value();
    out.n = n;
    out.seed = rep.seed;
    out.trials = rep.trials;
    out.failures = rep.failures;
    out.pass = rep.pass;
    return out;
}

inline SweepReport make_sweep_report(std::int64_t max_m, int max_n) {
    SweepReport out;
    out.max_m = max_m;
    out.max_n = max_n;
    out.pass = true;
    for (std::int64_t m = 2; m <= max_m; ++m) {
        for (std::uint32_t pv : {2u, 3u}) {
            if (m % pv != 0) continue;
            for (int n = 1; n <= max_n; ++n) {
                SweepCellReport cell;
                cell.m = m;
                cell.p = pv;
                cell.n = n;
                if (max_ambient_dimension(m, n) > elimination_limit()) {
                    cell.status = "skipped:size";
                    out.cells.push_back(cell);
                    continue;
                }
                const Prime p(pv);
                const ChainComplexFp complex = build_hook_complex(m, n, p);
                const hookschur::CohomologyReport coh = cohomology(complex);
                cell.cohomology_ok = coh.all_match;
                cell.frobenius_ok = frobenius_comparison(complex).pass;
                cell.identity_ok = verify_power_sum_identity(m, n).holds;
                const bool ok = cell.cohomology_ok && cell.frobenius_ok &&
                                cell.identity_ok;
                cell.status = ok ? "pass" : "fail";
                out.pass = out.pass && ok;
                out.cells.push_back(cell);
            }
        }
    }
    return out;
}

// -- text rendering -----------------------------------------------------------

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join_dims(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace detail

inline std::string render_text(const ComplexReport& r) {
    std::string out;
    out += "complex m=" + std::to_string(r.m) + " p=" + std::to_string(r.p) +
           " n=" + std::to_string(r.n) + "\n";
    out += "term_dims: " + detail::join_dims(r.term_dims) + "\n";
    out += "differential_ranks: " + detail::join_dims(r.differential_ranks) + "\n";
    out += "d_squared_zero: " + detail::yes_no(r.d_squared_zero) + "\n";
    out += "pass: " + detail::yes_no(r.pass) + "\n";
    return out;
}

inline std::string render_text(const CohomologyReport& r) {
    std::string out;
    out += "cohomology m=" + std::to_string(r.m) + " p=" + std::to_string(r.p) +
           " n=" + std::to_string(r.n) + "\n";
    for (const auto& d : r.degrees) {
        out += "degree " + std::to_string(d.degree) + ": term=" +
               std::to_string(d.term_dim) + " kernel=" + std::to_string(d.kernel_dim) +
               " image_in=" + std::to_string(d.image_dim) + " h=" +
               std::to_string(d.h_dim) + " expected=" + std::to_string(d.expected_dim) +
               " dim_match=" + detail::yes_no(d.dim_match) + " character_match=" +
               detail::yes_no(d.character_match) + "\n";
        out += "  h_character: " + d.h_character + "\n";
        out += "  expected_character: " + d.expected_character + "\n";
    }
    out += "euler: terms=" + std::to_string(r.euler_terms) + " cohomology=" +
           std::to_string(r.euler_cohomology) + " consistent=" +
           detail::yes_no(r.euler_consistent) + "\n";
    out += "pass: " + detail::yes_no(r.pass) + "\n";
    return out;
}

inline std::string render_text(const CharacterReport& r) {
    std::string out;
    out += "character shape=(" + std::to_string(r.arm) + ",1^" +
           std::to_string(r.leg) + ") n=" + std::to_string(r.n) + "\n";
    out += "dimension: " + std::to_string(r.dimension) + "\n";
    out += "character: " + r.character + "\n";
    if (r.has_subquotient) {
        out += "subquotient p=" + std::to_string(r.p) +
               " dimension: " + std::to_string(r.subquotient_dimension) + "\n";
        out += "subquotient character: " + r.subquotient_character + "\n";
    }
    out += "pass: " + detail::yes_no(r.pass) + "\n";
    return out;
}

inline std::string render_text(const IdentityReport& r) {
    std::string out;
    out += "identity m=" + std::to_string(r.m) + " n=" + std::to_string(r.n) + "\n";
    out += "residual: " + r.residual + "\n";
    out += "pass: " + detail::yes_no(r.pass) + "\n";
    return out;
}

inline std::string render_text(const AdamsReport& r) {
    std::string out;
    out += "adams k=" + std::to_string(r.k);
    if (r.l > 0) out += " l=" + std::to_string(r.l);
    out += " n=" + std::to_string(r.n) + "\n";
    out += "psi: " + r.psi + "\n";
    out += "equals_power_sum: " + detail::yes_no(r.equals_power_sum) + "\n";
    out += "ring_hom_ok: " + detail::yes_no(r.ring_hom_ok) + "\n";
    if (r.composition_checked) {
        out += "composition_ok: " + detail::yes_no(r.composition_ok) + "\n";
    }
    out += "pass: " + detail::yes_no(r.pass) + "\n";
    return out;
}

inline std::string render_text(const HomotopyReport& r) {
    std::string out;
    out += "homotopy m=" + std::to_string(r.m) + " p=" + std::to_string(r.p) +
           " n=" + std::to_string(r.n) + "\n";
    for (const auto& c : r.cases) {
        out += "ell " + std::to_string(c.ell) + ": eligible=" +
               std::to_string(c.eligible) + " skipped=" + std::to_string(c.skipped) +
               " failures=" + std::to_string(c.failures) + " pass=" +
               detail::yes_no(c.pass) + "\n";
    }
    out += "pass: " + detail::yes_no(r.pass) + "\n";
    return out;
}

inline std::string render_text(const EquivarianceReport& r) {
    std::string out;
    out += "equivariance m=" + std::to_string(r.m) + " p=" + std::to_string(r.p) +
           " n=" + std::to_string(r.n) + " seed=" + std::to_string(r.seed) +
           " trials=" + std::to_string(r.trials) + "\n";
    out += "failures: " + std::to_string(r.failures) + "\n";
    out += "pass: " + detail::yes_no(r.pass) + "\n";
    return out;
}

/// Sweep tables render as CSV in text mode.
inline std::string render_text(const SweepReport& r) {
    std::string out = "m,p,n,status,cohomology,frobenius,identity\n";
    for (const auto& c : r.cells) {
        out += std::to_string(c.m) + "," + std::to_string(c.p) + "," +
               std::to_string(c.n) + "," + c.status + ",";
        if (c.status == "skipped:size") {
            out += "-,-,-\n";
        } else {
            out += detail::yes_no(c.cohomology_ok) + "," +
                   detail::yes_no(c.frobenius_ok) + "," +
                   detail::yes_no(c.identity_ok) + "\n";
        }
    }
    return out;
}

template <typename Report>
std::string render_json(const Report& r) {
    const nlohmann::json j = r;
    return j.dump(2) + "\n";
}

}  // namespace hookschur::reports
