#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hookschur {

namespace detail {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;  // p < 2^31, no overflow
    return s >= p ? s - p : s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + (p - b);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t base = a % p;
    std::uint64_t r = 1 % p;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Fermat inverse; requires p prime and a not divisible by p.
inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    return pow_mod(a, p - 2, p);
}

}  // namespace detail

/// A prime modulus, checked by trial division at construction.
class Prime {
public:
    explicit Prime(std::uint32_t value) : value_(value) {
        if (value < 2) {
            throw std::invalid_argument("Prime: modulus must be >= 2");
        }
        if (value >= (1u << 31)) {
            throw std::invalid_argument("Prime: modulus too large");
        }
        for (std::uint64_t d = 2; d * d <= value; ++d) {
            if (value % d == 0) {
                throw std::invalid_argument("Prime: " + std::to_string(value) +
                                            " is not prime");
            }
        }
    }

    std::uint32_t value() const noexcept { return value_; }

    friend bool operator==(Prime a, Prime b) noexcept { return a.value_ == b.value_; }
    friend bool operator!=(Prime a, Prime b) noexcept { return a.value_ != b.value_; }

private:
    std::uint32_t value_;
};

/// An element of F_p in canonical form: 0 <= residue < p.
class FpElement {
public:
    FpElement(std::uint64_t residue, Prime modulus)
        : residue_(static_cast<std::uint32_t>(residue % modulus.value())),
          modulus_(modulus) {}

    static FpElement from_signed(std::int64_t value, Prime modulus) {
        const auto p = static_cast<std::int64_t>(modulus.value());
        std::int64_t r = value % p;
        if (r < 0) r += p;
        return FpElement(static_cast<std::uint64_t>(r), modulus);
    }

    std::uint32_t residue() const noexcept { return residue_; }
    Prime modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return residue_ == 0; }

    FpElement inverse() const {
        if (residue_ == 0) throw std::domain_error("FpElement: inverse of zero");
        return FpElement(detail::inv_mod(residue_, modulus_.value()), modulus_);
    }

    FpElement pow(std::uint64_t e) const {
        return FpElement(detail::pow_mod(residue_, e, modulus_.value()), modulus_);
    }

    friend FpElement operator+(FpElement a, FpElement b) {
        a.require_same_modulus(b);
        return FpElement(detail::add_mod(a.residue_, b.residue_, a.modulus_.value()),
                         a.modulus_);
    }
    friend FpElement operator-(FpElement a, FpElement b) {
        a.require_same_modulus(b);
        return FpElement(detail::sub_mod(a.residue_, b.residue_, a.modulus_.value()),
                         a.modulus_);
    }
    friend FpElement operator*(FpElement a, FpElement b) {
        a.require_same_modulus(b);
        return FpElement(detail::mul_mod(a.residue_, b.residue_, a.modulus_.value()),
                         a.modulus_);
    }
    FpElement operator-() const {
        return FpElement(detail::neg_mod(residue_, modulus_.value()), modulus_);
    }

    friend bool operator==(FpElement a, FpElement b) noexcept {
        return a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
    }
    friend bool operator!=(FpElement a, FpElement b) noexcept { return !(a == b); }

private:
    void require_same_modulus(FpElement other) const {
        if (modulus_ != other.modulus_) {
            throw std::invalid_argument("FpElement: mixed moduli");
        }
    }

    std::uint32_t residue_;
    Prime modulus_;
};

/// Exact integer binomial coefficient C(n, k); 0 when k < 0 or k > n.
/// Throws std::overflow_error if the result does not fit in 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    kk = std::min(kk, n - kk);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= kk; ++i) {
        r = r * (n - kk + i) / i;  // exact at every step
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial: result exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(r);
}

namespace detail {

// C(nd, kd) mod p for digits 0 <= nd, kd < p.
inline std::uint32_t binomial_digit_mod(std::uint32_t nd, std::uint32_t kd,
                                        std::uint32_t p) {
    if (kd > nd) return 0;
    kd = std::min(kd, nd - kd);
    std::uint32_t num = 1 % p;
    std::uint32_t den = 1 % p;
    for (std::uint32_t i = 1; i <= kd; ++i) {
        num = mul_mod(num, nd - kd + i, p);
        den = mul_mod(den, i, p);
    }
    return mul_mod(num, inv_mod(den, p), p);
}

}  // namespace detail

/// C(n, k) mod p via the base-p digit product; never forms large factorials.
inline FpElement binomial_mod_p(std::uint64_t n, std::uint64_t k, Prime p) {
    const std::uint32_t pv = p.value();
    std::uint32_t acc = 1 % pv;
    while ((n > 0 || k > 0) && acc != 0) {
        acc = detail::mul_mod(
            acc,
            detail::binomial_digit_mod(static_cast<std::uint32_t>(n % pv),
                                       static_cast<std::uint32_t>(k % pv), pv),
            pv);
        n /= pv;
        k /= pv;
    }
    return FpElement(acc, p);
}

/// Checks the shifted congruence C(pm+p-1, pn+p-1) == C(m, n) mod p.
inline bool lucas_shift_identity_check(std::uint64_t m, std::uint64_t n, Prime p) {
    const std::uint64_t pv = p.value();
    FpElement lhs = binomial_mod_p(pv * m + pv - 1, pv * n + pv - 1, p);
    FpElement rhs = binomial_mod_p(m, n, p);
    return lhs == rhs;
}

}  // namespace hookschur
