#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hookschur/characters.hpp"
#include "hookschur/ffield.hpp"
#include "hookschur/fp_matrix.hpp"
#include "hookschur/multilinear.hpp"

namespace hookschur {

/// The hook partition (arm, 1^leg). arm <= 0 denotes the zero module.
struct HookShape {
    std::int64_t arm;
    std::int64_t leg;

    std::int64_t size() const noexcept { return arm + leg; }

    friend auto operator<=>(const HookShape&, const HookShape&) = default;
};

/// The hook Schur module S_(a,1^b)(V) over F_p, realized as the cokernel of
/// the Koszul map wedge^{b+2} V (x) S_{a-2} V -> wedge^{b+1} V (x) S_{a-1} V.
/// Coset representatives are canonicalized onto the non-pivot ambient
/// coordinates of the row-reduced relation span.
class HookModule {
public:
    HookModule(HookShape shape, int n, Prime p)
        : shape_(validated(shape, n)),
          n_(n),
          p_(p),
          ambient_(enumerate_basis(n, static_cast<int>(shape.leg) + 1,
                                   static_cast<int>(shape.arm) - 1)),
          presentation_(kappa_matrix(n, static_cast<int>(shape.leg) + 2,
                                     static_cast<int>(shape.arm) - 2, p)),
          reducer_(ambient_.size(), p) {
        std::vector<FpVec> relation_columns(presentation_.cols(),
                                            FpVec(ambient_.size(), 0));
        for (const auto& [rc, v] : presentation_.entries()) {
            relation_columns[rc.second][rc.first] = v;
        }
        for (auto& column : relation_columns) {
            reducer_.add_vector(std::move(column));
        }
        reduced_basis_ = reducer_.non_pivots();
        reduced_position_.assign(ambient_.size(), npos);
        for (std::size_t k = 0; k < reduced_basis_.size(); ++k) {
            reduced_position_[reduced_basis_[k]] = k;
        }
        reduced_multidegrees_.reserve(reduced_basis_.size());
        for (std::size_t coord : reduced_basis_) {
            reduced_multidegrees_.push_back(multidegree(ambient_.element(coord)));
        }
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    HookShape shape() const noexcept { return shape_; }
    int n() const noexcept { return n_; }
    Prime p() const noexcept { return p_; }

    std::size_t dimension() const noexcept { return reduced_basis_.size(); }
    bool is_zero() const noexcept { return reduced_basis_.empty(); }

    const TensorSpaceBasis& ambient() const noexcept { return ambient_; }
    std::size_t ambient_dimension() const noexcept { return ambient_.size(); }
    const FpSparseMatrix& presentation() const noexcept { return presentation_; }

    /// Ambient coordinate indices of the canonical coset representatives.
    const std::vector<std::size_t>& reduced_basis() const noexcept {
        return reduced_basis_;
    }
    const Multidegree& reduced_multidegree(std::size_t k) const {
        return reduced_multidegrees_.at(k);
    }
    const std::vector<Multidegree>& reduced_multidegrees() const noexcept {
        return reduced_multidegrees_;
    }

    /// Position of an ambient coordinate within the reduced basis, or npos.
    std::size_t reduced_position(std::size_t ambient_coord) const {
        return reduced_position_.at(ambient_coord);
    }

    /// The unique coset representative supported on the reduced basis.
    FpVec normal_form(FpVec ambient_vector) const {
        if (ambient_vector.size() != ambient_.size()) {
            throw std::invalid_argument("HookModule: ambient vector length mismatch");
        }
        reducer_.reduce(ambient_vector);
        return ambient_vector;
    }

    /// Reduced coordinates (length dimension()) of an ambient vector's coset.
    FpVec reduce_to_coordinates(FpVec ambient_vector) const {
        ambient_vector = normal_form(std::move(ambient_vector));
        FpVec out(reduced_basis_.size(), 0);
        for (std::size_t k = 0; k < reduced_basis_.size(); ++k) {
            out[k] = ambient_vector[reduced_basis_[k]];
        }
        return out;
    }

    FpVec coordinates_to_ambient(const FpVec& coordinates) const {
        if (coordinates.size() != reduced_basis_.size()) {
            throw std::invalid_argument("HookModule: coordinate length mismatch");
        }
        FpVec out(ambient_.size(), 0);
        for (std::size_t k = 0; k < reduced_basis_.size(); ++k) {
            out[reduced_basis_[k]] = coordinates[k];
        }
        return out;
    }

    bool relation_span_contains(FpVec ambient_vector) const {
        return reducer_.contains(std::move(ambient_vector));
    }

    /// Sum of the multidegree monomials of the reduced basis; equals the hook
    /// Schur polynomial s_(a,1^b)(v_1..v_n).
    MultiPoly character() const {
        MultiPoly out(n_);
        for (const auto& d : reduced_multidegrees_) {
            out.add_term(d.exponents, 1);
        }
        return out;
    }

private:
    static HookShape validated(HookShape shape, int n) {
        if (shape.leg < 0) {
            throw std::invalid_argument("HookModule: negative leg");
        }
        if (n < 1) {
            throw std::invalid_argument("HookModule: dimension must be >= 1");
        }
        return shape;
    }

    HookShape shape_;
    int n_;
    Prime p_;
    TensorSpaceBasis ambient_;
    FpSparseMatrix presentation_;
    SubspaceReducer reducer_;
    std::vector<std::size_t> reduced_basis_;
    std::vector<std::size_t> reduced_position_;
    std::vector<Multidegree> reduced_multidegrees_;
};

inline HookModule build_hook_module(HookShape shape, int n, Prime p) {
    return HookModule(shape, n, p);
}

/// A coset representative in a built hook module.
struct SchurElement {
    const HookModule* module;
    FpVec ambient_coordinates;
};

inline SchurElement normal_form(const SchurElement& e) {
    return SchurElement{e.module, e.module->normal_form(e.ambient_coordinates)};
}

/// Equality of cosets: the difference lies in the relation span.
inline bool schur_equal(const SchurElement& a, const SchurElement& b) {
    if (a.module != b.module) return false;
    const std::uint32_t p = a.module->p().value();
    FpVec diff(a.ambient_coordinates.size());
    for (std::size_t k = 0; k < diff.size(); ++k) {
        diff[k] = detail::sub_mod(a.ambient_coordinates[k], b.ambient_coordinates[k], p);
    }
    return a.module->relation_span_contains(std::move(diff));
}

/// The quotient of a hook module by all reduced-basis elements whose
/// multidegree has an exponent not divisible by p. Empty whenever the hook
/// size is not divisible by p.
struct FrobeniusSubquotient {
    HookShape shape;
    int n;
    std::size_t dimension;
    std::vector<std::size_t> kept;  // positions into the reduced basis
    std::vector<Multidegree> multidegrees;
    MultiPoly character;
};

inline FrobeniusSubquotient frobenius_subquotient(const HookModule& m) {
    const int pv = static_cast<int>(m.p().value());
    FrobeniusSubquotient out{m.shape(), m.n(), 0, {}, {}, MultiPoly(m.n())};
    for (std::size_t k = 0; k < m.dimension(); ++k) {
        const Multidegree& d = m.reduced_multidegree(k);
        bool divisible = true;
        for (int e : d.exponents) {
            if (e % pv != 0) {
                divisible = false;
                break;
            }
        }
        if (!divisible) continue;
        out.kept.push_back(k);
        out.multidegrees.push_back(d);
        out.character.add_term(d.exponents, 1);
    }
    out.dimension = out.kept.size();
    return out;
}

/// The multidegree-scaling isomorphism S_(m/p-i,1^i)(V) -> S^p_(m-i,1^i)(V)
/// induced by v_I (x) v^a |-> v_I (x) v^{pa} v_I^{p-1}. Constructed and
/// verified bijective; any mismatch is an internal error.
struct EtaIsomorphism {
    HookModule source;
    HookModule target;
    FrobeniusSubquotient target_subquotient;
    FpSparseMatrix matrix;  // target_subquotient.dimension x source.dimension
};

inline EtaIsomorphism eta_isomorphism(std::int64_t m, std::int64_t i, int n, Prime p) {
    const std::int64_t pv = p.value();
    if (m < 1 || m % pv != 0) {
        throw std::invalid_argument("eta_isomorphism: p must divide m");
    }
    if (i < 0) {
        throw std::invalid_argument("eta_isomorphism: negative column length");
    }
    HookModule source(HookShape{m / pv - i, i}, n, p);
    HookModule target(HookShape{m - i, i}, n, p);
    FrobeniusSubquotient sub = frobenius_subquotient(target);
    if (source.dimension() != sub.dimension) {
        throw std::logic_error("eta_isomorphism: dimension mismatch");
    }
    FpSparseMatrix map(sub.dimension, source.dimension(), p);
    std::vector<std::size_t> sub_position(target.dimension(), HookModule::npos);
    for (std::size_t s = 0; s < sub.kept.size(); ++s) {
        sub_position[sub.kept[s]] = s;
    }
    for (std::size_t col = 0; col < source.dimension(); ++col) {
        const BasisTensor& t = source.ambient().element(source.reduced_basis()[col]);
        BasisTensor image{t.index_set, std::vector<int>(t.exponents.size())};
        for (std::size_t v = 0; v < t.exponents.size(); ++v) {
            image.exponents[v] = static_cast<int>(pv) * t.exponents[v];
        }
        for (int k : t.index_set) {
            image.exponents[static_cast<std::size_t>(k - 1)] +=
                static_cast<int>(pv) - 1;
        }
        FpVec ambient(target.ambient_dimension(), 0);
        ambient[target.ambient().index_of(image)] = 1;
        const FpVec coords = target.reduce_to_coordinates(std::move(ambient));
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (coords[k] == 0) continue;
            if (sub_position[k] == HookModule::npos) {
                throw std::logic_error(
                    "eta_isomorphism: image leaves the divisible block");
            }
            map.set(sub_position[k], col, coords[k]);
        }
    }
    if (map.rank() != sub.dimension) {
        throw std::logic_error("eta_isomorphism: map is not bijective");
    }
    return EtaIsomorphism{std::move(source), std::move(target), std::move(sub),
                          std::move(map)};
}

/// Hook Schur polynomial s_(a,1^b) in n variables. Character counts do not
/// depend on the prime; a fixed reference prime backs the computation.
inline MultiPoly hook_character(HookShape shape, int n) {
    return HookModule(shape, n, Prime(2)).character();
}

/// Residual of p_m - sum_i (-1)^i s_(m-i,1^i); zero iff the identity holds.
struct PowerSumIdentityResult {
    bool holds;
    MultiPoly residual;
};

inline PowerSumIdentityResult verify_power_sum_identity(std::int64_t m, int n) {
    if (m < 1) throw std::invalid_argument("verify_power_sum_identity: m must be >= 1");
    MultiPoly alternating(n);
    for (std::int64_t i = 0; i < m; ++i) {
        const MultiPoly s = hook_character(HookShape{m - i, i}, n);
        if (i % 2 == 0) {
            alternating += s;
        } else {
            alternating -= s;
        }
    }
    MultiPoly residual = alternating - power_sum(m, n);
    return PowerSumIdentityResult{residual.is_zero(), std::move(residual)};
}

}  // namespace hookschur
