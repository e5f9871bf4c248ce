#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hookschur/characters.hpp"
#include "hookschur/ffield.hpp"
#include "hookschur/fp_matrix.hpp"

namespace hookschur {

/// An indexed basis element v_I (x) v^alpha of wedge^i V (x) S_j V.
/// index_set is strictly increasing with entries in [1, n]; exponents has
/// length n with nonnegative entries summing to j.
struct BasisTensor {
    std::vector<int> index_set;
    std::vector<int> exponents;

    friend auto operator<=>(const BasisTensor&, const BasisTensor&) = default;
};

/// mdeg(v_I (x) v^alpha): exponent vector alpha plus the indicator of I.
inline Multidegree multidegree(const BasisTensor& t) {
    Multidegree d{t.exponents};
    for (int k : t.index_set) {
        d.exponents[static_cast<std::size_t>(k - 1)] += 1;
    }
    return d;
}

namespace detail {

// Subsets of `allowed` of size k, in lexicographic order on the chosen
// (ascending) index sequences.
inline void for_each_subset(const std::vector<int>& allowed, int k,
                            const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > static_cast<int>(allowed.size())) return;
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(k));
    const std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(current.size()) == k) {
            fn(current);
            return;
        }
        const std::size_t needed = static_cast<std::size_t>(k) - current.size();
        for (std::size_t t = start; t + needed <= allowed.size(); ++t) {
            current.push_back(allowed[t]);
            rec(t + 1);
            current.pop_back();
        }
    };
    rec(0);
}

// Exponent vectors of total degree j in n variables, in descending
// lexicographic order (so v_1^j comes first).
inline void for_each_exponent_vector(
    int n, int j, const std::function<void(const std::vector<int>&)>& fn) {
    if (j < 0) return;
    if (n == 0) {
        if (j == 0) {
            std::vector<int> empty;
            fn(empty);
        }
        return;
    }
    std::vector<int> current(static_cast<std::size_t>(n), 0);
    const std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == n - 1) {
            current[static_cast<std::size_t>(pos)] = remaining;
            fn(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[static_cast<std::size_t>(pos)] = e;
            rec(pos + 1, remaining - e);
        }
    };
    rec(0, j);
}

// Sign of wedging v_k onto v_I from the right: (-1)^{#{l in I : l > k}}.
// Returns 0 sign when k already lies in I.
inline int right_wedge_sign(const std::vector<int>& index_set, int k) {
    int greater = 0;
    for (int l : index_set) {
        if (l == k) return 0;
        if (l > k) ++greater;
    }
    return (greater % 2 == 0) ? 1 : -1;
}

inline std::vector<int> sorted_insert(const std::vector<int>& index_set, int k) {
    std::vector<int> out;
    out.reserve(index_set.size() + 1);
    bool placed = false;
    for (int l : index_set) {
        if (!placed && k < l) {
            out.push_back(k);
            placed = true;
        }
        out.push_back(l);
    }
    if (!placed) out.push_back(k);
    return out;
}

inline std::vector<int> erased(const std::vector<int>& index_set, std::size_t pos) {
    std::vector<int> out;
    out.reserve(index_set.size() - 1);
    for (std::size_t t = 0; t < index_set.size(); ++t) {
        if (t != pos) out.push_back(index_set[t]);
    }
    return out;
}

}  // namespace detail

/// The canonical ordered basis of wedge^i V (x) S_j V: index sets in
/// lexicographic order, then exponent vectors in descending lexicographic
/// order. Element count is C(n,i) * C(n+j-1,j).
class TensorSpaceBasis {
public:
    TensorSpaceBasis(int n, int wedge_degree, int sym_degree,
                     std::vector<BasisTensor> elements)
        : n_(n),
          wedge_degree_(wedge_degree),
          sym_degree_(sym_degree),
          elements_(std::move(elements)) {
        for (std::size_t idx = 0; idx < elements_.size(); ++idx) {
            index_.emplace(elements_[idx], idx);
        }
    }

    int n() const noexcept { return n_; }
    int wedge_degree() const noexcept { return wedge_degree_; }
    int sym_degree() const noexcept { return sym_degree_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<BasisTensor>& elements() const noexcept { return elements_; }
    const BasisTensor& element(std::size_t idx) const { return elements_.at(idx); }

    std::size_t index_of(const BasisTensor& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) {
            throw std::logic_error("TensorSpaceBasis: element not in basis");
        }
        return it->second;
    }

    bool contains(const BasisTensor& t) const { return index_.count(t) > 0; }

private:
    int n_;
    int wedge_degree_;
    int sym_degree_;
    std::vector<BasisTensor> elements_;
    std::map<BasisTensor, std::size_t> index_;
};

namespace detail {

inline TensorSpaceBasis enumerate_basis_on(const std::vector<int>& wedge_indices,
                                           int n, int i, int j) {
    std::vector<BasisTensor> elements;
    if (j >= 0 && i >= 0) {
        for_each_subset(wedge_indices, i, [&](const std::vector<int>& I) {
            for_each_exponent_vector(n, j, [&](const std::vector<int>& a) {
                elements.push_back(BasisTensor{I, a});
            });
        });
    }
    return TensorSpaceBasis(n, i, j, std::move(elements));
}

/// Basis with wedge indices drawn from [1,n] \ {avoid}; exponents still range
/// over all n variables.
inline TensorSpaceBasis enumerate_basis_avoiding(int n, int avoid, int i, int j) {
    std::vector<int> allowed;
    for (int k = 1; k <= n; ++k) {
        if (k != avoid) allowed.push_back(k);
    }
    return enumerate_basis_on(allowed, n, i, j);
}

}  // namespace detail

/// Full canonical basis of wedge^i V (x) S_j V; empty when i > n (and for
/// negative degrees).
inline TensorSpaceBasis enumerate_basis(int n, int i, int j) {
    if (n < 0) throw std::invalid_argument("enumerate_basis: negative dimension");
    std::vector<int> all;
    for (int k = 1; k <= n; ++k) all.push_back(k);
    return detail::enumerate_basis_on(all, n, i, j);
}

/// Matrix of phi: wedge^i V (x) S_j V -> wedge^{i+1} V (x) S_{j-1} V,
/// v_I (x) v^a |-> sum_k a_k (v_I ^ v_k) (x) v^{a - e_k}.
inline FpSparseMatrix phi_matrix(int n, int i, int j, Prime p) {
    const TensorSpaceBasis source = enumerate_basis(n, i, j);
    const TensorSpaceBasis target = enumerate_basis(n, i + 1, j - 1);
    FpSparseMatrix m(target.size(), source.size(), p);
    for (std::size_t col = 0; col < source.size(); ++col) {
        const BasisTensor& t = source.element(col);
        for (int k = 1; k <= n; ++k) {
            const int a_k = t.exponents[static_cast<std::size_t>(k - 1)];
            if (a_k == 0) continue;
            const int sign = detail::right_wedge_sign(t.index_set, k);
            if (sign == 0) continue;
            BasisTensor image{detail::sorted_insert(t.index_set, k), t.exponents};
            image.exponents[static_cast<std::size_t>(k - 1)] -= 1;
            const std::uint32_t coeff =
                FpElement::from_signed(sign * a_k, p).residue();
            m.add_at(target.index_of(image), col, coeff);
        }
    }
    return m;
}

/// Matrix of the Koszul map kappa: wedge^b V (x) S_a V -> wedge^{b-1} V (x)
/// S_{a+1} V, extracting each wedge factor with sign (-1)^{position-1}.
inline FpSparseMatrix kappa_matrix(int n, int b, int a, Prime p) {
    const TensorSpaceBasis source = enumerate_basis(n, b, a);
    const TensorSpaceBasis target = enumerate_basis(n, b - 1, a + 1);
    FpSparseMatrix m(target.size(), source.size(), p);
    for (std::size_t col = 0; col < source.size(); ++col) {
        const BasisTensor& t = source.element(col);
        for (std::size_t pos = 0; pos < t.index_set.size(); ++pos) {
            const int k = t.index_set[pos];
            const int sign = (pos % 2 == 0) ? 1 : -1;
            BasisTensor image{detail::erased(t.index_set, pos), t.exponents};
            image.exponents[static_cast<std::size_t>(k - 1)] += 1;
            const std::uint32_t coeff = FpElement::from_signed(sign, p).residue();
            m.add_at(target.index_of(image), col, coeff);
        }
    }
    return m;
}

/// The injective 0/1 matrix v^a (x) v_I |-> v^{pa} v_I^{p-1} (x) v_I on
/// wedge^i V (x) S_j V, landing in sym degree p*j + (p-1)*i.
inline FpSparseMatrix eta_prime_matrix(int n, int i, int j, Prime p) {
    const int pv = static_cast<int>(p.value());
    const TensorSpaceBasis source = enumerate_basis(n, i, j);
    const TensorSpaceBasis target = enumerate_basis(n, i, pv * j + (pv - 1) * i);
    FpSparseMatrix m(target.size(), source.size(), p);
    for (std::size_t col = 0; col < source.size(); ++col) {
        const BasisTensor& t = source.element(col);
        BasisTensor image{t.index_set, std::vector<int>(t.exponents.size())};
        for (std::size_t v = 0; v < t.exponents.size(); ++v) {
            image.exponents[v] = pv * t.exponents[v];
        }
        for (int k : t.index_set) {
            image.exponents[static_cast<std::size_t>(k - 1)] += pv - 1;
        }
        m.set(target.index_of(image), col, 1);
    }
    return m;
}

/// The formal power map S_i(V) -> S_{im}(V), v^a |-> v^{ma}, as an injective
/// 0/1 matrix.
inline FpSparseMatrix frobenius_power_map(int n, int i, std::int64_t m, Prime p) {
    if (m < 1) throw std::invalid_argument("frobenius_power_map: power must be >= 1");
    const TensorSpaceBasis source = enumerate_basis(n, 0, i);
    const TensorSpaceBasis target =
        enumerate_basis(n, 0, static_cast<int>(m) * i);
    FpSparseMatrix out(target.size(), source.size(), p);
    for (std::size_t col = 0; col < source.size(); ++col) {
        const BasisTensor& t = source.element(col);
        BasisTensor image{{}, std::vector<int>(t.exponents.size())};
        for (std::size_t v = 0; v < t.exponents.size(); ++v) {
            image.exponents[v] = static_cast<int>(m) * t.exponents[v];
        }
        out.set(target.index_of(image), col, 1);
    }
    return out;
}

}  // namespace hookschur
