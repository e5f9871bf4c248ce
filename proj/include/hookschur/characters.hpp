#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookschur {

/// A torus weight: one nonnegative exponent per basis vector of V.
struct Multidegree {
    std::vector<int> exponents;

    int total() const {
        return std::accumulate(exponents.begin(), exponents.end(), 0);
    }

    friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
};

/// Sparse multivariate polynomial over the integers in variables v_1..v_n.
/// Zero coefficients are never stored; arithmetic is exact (overflow-checked).
class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, long long>;

    explicit MultiPoly(int variable_count) : n_(variable_count) {
        if (variable_count < 0) {
            throw std::invalid_argument("MultiPoly: negative variable count");
        }
    }

    static MultiPoly monomial(const std::vector<int>& exponents, long long coeff = 1) {
        MultiPoly f(static_cast<int>(exponents.size()));
        f.add_term(exponents, coeff);
        return f;
    }

    int variable_count() const noexcept { return n_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    long long coefficient(const std::vector<int>& exponents) const {
        auto it = terms_.find(exponents);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const std::vector<int>& exponents, long long coeff) {
        if (static_cast<int>(exponents.size()) != n_) {
            throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
        }
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponents, 0);
        if (__builtin_add_overflow(it->second, coeff, &it->second)) {
            throw std::overflow_error("MultiPoly: coefficient overflow");
        }
        if (it->second == 0) terms_.erase(it);
    }

    MultiPoly& operator+=(const MultiPoly& other) {
        require_same_variables(other);
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& other) {
        require_same_variables(other);
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly out(n_);
        for (const auto& [e, c] : terms_) out.add_term(e, -c);
        return out;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_variables(b);
        MultiPoly out(a.n_);
        std::vector<int> e(a.n_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                long long c;
                if (__builtin_mul_overflow(ca, cb, &c)) {
                    throw std::overflow_error("MultiPoly: coefficient overflow");
                }
                out.add_term(e, c);
            }
        }
        return out;
    }

    MultiPoly scaled(long long factor) const {
        MultiPoly out(n_);
        for (const auto& [e, c] : terms_) {
            long long s;
            if (__builtin_mul_overflow(c, factor, &s)) {
                throw std::overflow_error("MultiPoly: coefficient overflow");
            }
            out.add_term(e, s);
        }
        return out;
    }

    /// The polynomial with variables a and b exchanged (0-based indices).
    MultiPoly with_swapped_variables(int a, int b) const {
        MultiPoly out(n_);
        for (const auto& [e, c] : terms_) {
            std::vector<int> swapped = e;
            std::swap(swapped[static_cast<std::size_t>(a)],
                      swapped[static_cast<std::size_t>(b)]);
            out.add_term(swapped, c);
        }
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void require_same_variables(const MultiPoly& other) const {
        if (n_ != other.n_) {
            throw std::invalid_argument("MultiPoly: variable count mismatch");
        }
    }

    int n_;
    TermMap terms_;
};

/// p_m = v_1^m + ... + v_n^m.
inline MultiPoly power_sum(std::int64_t m, int n) {
    if (m < 1) throw std::invalid_argument("power_sum: exponent must be positive");
    MultiPoly f(n);
    for (int k = 0; k < n; ++k) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(k)] = static_cast<int>(m);
        f.add_term(e, 1);
    }
    return f;
}

/// Scales every exponent vector entrywise by p; coefficients unchanged.
inline MultiPoly frobenius_scale(const MultiPoly& f, std::int64_t p) {
    if (p < 1) throw std::invalid_argument("frobenius_scale: factor must be positive");
    MultiPoly out(f.variable_count());
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> scaled(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            scaled[i] = e[i] * static_cast<int>(p);
        }
        out.add_term(scaled, c);
    }
    return out;
}

/// True iff f is invariant under every adjacent-variable transposition.
inline bool symmetry_check(const MultiPoly& f) {
    for (int k = 0; k + 1 < f.variable_count(); ++k) {
        if (!(f.with_swapped_variables(k, k + 1) == f)) return false;
    }
    return true;
}

/// Substitutes monomial images for the variables of f. images[t] is the
/// exponent vector (length n_out) replacing variable t.
inline MultiPoly substitute_monomials(const MultiPoly& f,
                                      const std::vector<std::vector<int>>& images,
                                      int n_out) {
    if (static_cast<int>(images.size()) != f.variable_count()) {
        throw std::invalid_argument("substitute_monomials: image count mismatch");
    }
    MultiPoly out(n_out);
    std::vector<int> e(static_cast<std::size_t>(n_out));
    for (const auto& [exps, c] : f.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t t = 0; t < exps.size(); ++t) {
            if (exps[t] == 0) continue;
            const auto& img = images[t];
            if (static_cast<int>(img.size()) != n_out) {
                throw std::invalid_argument(
                    "substitute_monomials: image length mismatch");
            }
            for (int i = 0; i < n_out; ++i) {
                e[static_cast<std::size_t>(i)] +=
                    exps[t] * img[static_cast<std::size_t>(i)];
            }
        }
        out.add_term(e, c);
    }
    return out;
}

namespace detail {

inline int total_degree(const std::vector<int>& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

inline void append_monomial(std::string& out, const std::vector<int>& e,
                            long long coeff_magnitude) {
    bool printed = false;
    if (coeff_magnitude != 1) {
        out += std::to_string(coeff_magnitude);
        printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) out += '*';
        out += 'v';
        out += std::to_string(i + 1);
        if (e[i] != 1) {
            out += '^';
            out += std::to_string(e[i]);
        }
        printed = true;
    }
    if (!printed) out += '1';
}

}  // namespace detail

/// Canonical rendering: terms sorted by total degree, then descending
/// lexicographic exponent order; unit coefficients and zero exponents omitted.
inline std::string to_string(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    std::vector<const MultiPoly::TermMap::value_type*> terms;
    terms.reserve(f.terms().size());
    for (const auto& term : f.terms()) terms.push_back(&term);
    std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
        const int da = detail::total_degree(a->first);
        const int db = detail::total_degree(b->first);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* term : terms) {
        const long long c = term->second;
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const unsigned long long mag =
            c < 0 ? -static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
        detail::append_monomial(out, term->first, static_cast<long long>(mag));
    }
    return out;
}

}  // namespace hookschur
