#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hookschur/ffield.hpp"

namespace hookschur {

/// Thrown when a dense elimination would exceed the configured size limit.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::atomic<std::size_t>& elimination_limit_storage() {
    static std::atomic<std::size_t> limit{20000};
    return limit;
}

}  // namespace detail

inline std::size_t elimination_limit() {
    return detail::elimination_limit_storage().load(std::memory_order_relaxed);
}

/// Adjusts the dense-elimination size limit process-wide. Intended to be set
/// once at startup (e.g. from an environment override).
inline void set_elimination_limit(std::size_t limit) {
    detail::elimination_limit_storage().store(limit, std::memory_order_relaxed);
}

/// Dense coordinate vector of residues mod p.
using FpVec = std::vector<std::uint32_t>;

namespace detail {

// In-place reduced row echelon form on flat row-major data.
// Returns the pivot columns in ascending order.
inline std::vector<std::size_t> rref_in_place(std::vector<std::uint32_t>& a,
                                              std::size_t rows, std::size_t cols,
                                              std::uint32_t p) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < rows && a[pivot_row * cols + col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        if (pivot_row != row) {
            for (std::size_t c = col; c < cols; ++c) {
                std::swap(a[row * cols + c], a[pivot_row * cols + c]);
            }
        }
        const std::uint32_t inv = inv_mod(a[row * cols + col], p);
        if (inv != 1) {
            for (std::size_t c = col; c < cols; ++c) {
                a[row * cols + c] = mul_mod(a[row * cols + c], inv, p);
            }
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            const std::uint32_t factor = a[r * cols + col];
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols; ++c) {
                a[r * cols + c] =
                    sub_mod(a[r * cols + c], mul_mod(factor, a[row * cols + c], p), p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline void check_elimination_size(std::size_t rows, std::size_t cols) {
    const std::size_t limit = elimination_limit();
    if (rows > limit || cols > limit) {
        throw SizeLimitError("matrix dimension " +
                             std::to_string(rows > cols ? rows : cols) +
                             " exceeds elimination limit " + std::to_string(limit));
    }
}

}  // namespace detail

/// Exact sparse matrix over F_p. Only nonzero entries are stored; rank, kernel
/// and image computations materialize a dense copy (guarded by the size limit).
class FpSparseMatrix {
public:
    using EntryMap = std::map<std::pair<std::size_t, std::size_t>, std::uint32_t>;

    FpSparseMatrix(std::size_t rows, std::size_t cols, Prime p)
        : rows_(rows), cols_(cols), p_(p) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Prime modulus() const noexcept { return p_; }
    const EntryMap& entries() const noexcept { return entries_; }
    std::size_t nonzero_count() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }

    void set(std::size_t r, std::size_t c, std::uint64_t value) {
        check_index(r, c);
        const std::uint32_t v = static_cast<std::uint32_t>(value % p_.value());
        if (v == 0) {
            entries_.erase({r, c});
        } else {
            entries_[{r, c}] = v;
        }
    }

    void add_at(std::size_t r, std::size_t c, std::uint64_t value) {
        check_index(r, c);
        const std::uint32_t v = static_cast<std::uint32_t>(value % p_.value());
        if (v == 0) return;
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            entries_[{r, c}] = v;
        } else {
            const std::uint32_t s = detail::add_mod(it->second, v, p_.value());
            if (s == 0) {
                entries_.erase(it);
            } else {
                it->second = s;
            }
        }
    }

    std::uint32_t value_at(std::size_t r, std::size_t c) const {
        check_index(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? 0 : it->second;
    }

    FpElement at(std::size_t r, std::size_t c) const {
        return FpElement(value_at(r, c), p_);
    }

    static FpSparseMatrix identity(std::size_t n, Prime p) {
        FpSparseMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    /// this * other.
    FpSparseMatrix multiply(const FpSparseMatrix& other) const {
        if (cols_ != other.rows_ || p_ != other.p_) {
            throw std::invalid_argument("FpSparseMatrix: incompatible product");
        }
        // Index this by column for the middle dimension.
        std::map<std::size_t, std::vector<std::pair<std::size_t, std::uint32_t>>> by_col;
        for (const auto& [rc, v] : entries_) {
            by_col[rc.second].emplace_back(rc.first, v);
        }
        FpSparseMatrix result(rows_, other.cols_, p_);
        for (const auto& [rc, bv] : other.entries_) {
            auto it = by_col.find(rc.first);
            if (it == by_col.end()) continue;
            for (const auto& [row, av] : it->second) {
                result.add_at(row, rc.second, detail::mul_mod(av, bv, p_.value()));
            }
        }
        return result;
    }

    FpVec apply(const FpVec& v) const {
        if (v.size() != cols_) {
            throw std::invalid_argument("FpSparseMatrix: vector length mismatch");
        }
        FpVec out(rows_, 0);
        for (const auto& [rc, value] : entries_) {
            const std::uint32_t x = v[rc.second];
            if (x == 0) continue;
            out[rc.first] =
                detail::add_mod(out[rc.first], detail::mul_mod(value, x, p_.value()),
                                p_.value());
        }
        return out;
    }

    FpVec column(std::size_t c) const {
        if (c >= cols_) throw std::out_of_range("FpSparseMatrix: column out of range");
        FpVec out(rows_, 0);
        for (const auto& [rc, v] : entries_) {
            if (rc.second == c) out[rc.first] = v;
        }
        return out;
    }

    std::vector<std::uint32_t> to_dense() const {
        detail::check_elimination_size(rows_, cols_);
        std::vector<std::uint32_t> dense(rows_ * cols_, 0);
        for (const auto& [rc, v] : entries_) {
            dense[rc.first * cols_ + rc.second] = v;
        }
        return dense;
    }

    std::size_t rank() const {
        if (rows_ == 0 || cols_ == 0) return 0;
        auto dense = to_dense();
        return detail::rref_in_place(dense, rows_, cols_, p_.value()).size();
    }

    /// Columns of this matrix forming a basis of the image (pivot columns).
    std::vector<std::size_t> image_pivot_columns() const {
        if (rows_ == 0 || cols_ == 0) return {};
        auto dense = to_dense();
        return detail::rref_in_place(dense, rows_, cols_, p_.value());
    }

    /// Basis of the right kernel, one dense vector per free column.
    std::vector<FpVec> kernel_basis() const {
        if (cols_ == 0) return {};
        if (rows_ == 0) {
            std::vector<FpVec> basis;
            for (std::size_t c = 0; c < cols_; ++c) {
                FpVec v(cols_, 0);
                v[c] = 1;
                basis.push_back(std::move(v));
            }
            return basis;
        }
        auto dense = to_dense();
        const auto pivots = detail::rref_in_place(dense, rows_, cols_, p_.value());
        std::vector<char> is_pivot(cols_, 0);
        for (std::size_t c : pivots) is_pivot[c] = 1;
        std::vector<FpVec> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            FpVec v(cols_, 0);
            v[f] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                v[pivots[r]] = detail::neg_mod(dense[r * cols_ + f], p_.value());
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    friend bool operator==(const FpSparseMatrix& a, const FpSparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ &&
               a.entries_ == b.entries_;
    }

private:
    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) {
            throw std::out_of_range("FpSparseMatrix: index out of range");
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    Prime p_;
    EntryMap entries_;
};

/// Maintains the reduced row echelon form of a growing span of vectors and
/// reduces other vectors against it. Used for coset normal forms.
class SubspaceReducer {
public:
    SubspaceReducer(std::size_t ambient_dim, Prime p)
        : dim_(ambient_dim), p_(p), pivot_flag_(ambient_dim, 0) {
        detail::check_elimination_size(1, ambient_dim);
    }

    std::size_t ambient_dimension() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool is_pivot(std::size_t coord) const { return pivot_flag_.at(coord) != 0; }

    /// Inserts a vector into the span. Returns false if it was already contained.
    bool add_vector(FpVec v) {
        if (v.size() != dim_) {
            throw std::invalid_argument("SubspaceReducer: vector length mismatch");
        }
        reduce(v);
        std::size_t lead = dim_;
        for (std::size_t c = 0; c < dim_; ++c) {
            if (v[c] != 0) {
                lead = c;
                break;
            }
        }
        if (lead == dim_) return false;
        const std::uint32_t inv = detail::inv_mod(v[lead], p_.value());
        if (inv != 1) {
            for (auto& x : v) x = detail::mul_mod(x, inv, p_.value());
        }
        // Keep existing rows fully reduced against the new pivot.
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::uint32_t factor = rows_[k][lead];
            if (factor == 0) continue;
            subtract_scaled(rows_[k], v, factor);
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(lead);
        pivot_flag_[lead] = 1;
        return true;
    }

    /// Subtracts span elements to clear every pivot coordinate of v.
    void reduce(FpVec& v) const {
        if (v.size() != dim_) {
            throw std::invalid_argument("SubspaceReducer: vector length mismatch");
        }
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::uint32_t factor = v[pivots_[k]];
            if (factor == 0) continue;
            subtract_scaled(v, rows_[k], factor);
        }
    }

    bool contains(FpVec v) const {
        reduce(v);
        for (std::uint32_t x : v) {
            if (x != 0) return false;
        }
        return true;
    }

    std::vector<std::size_t> non_pivots() const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < dim_; ++c) {
            if (!pivot_flag_[c]) out.push_back(c);
        }
        return out;
    }

private:
    void subtract_scaled(FpVec& target, const FpVec& source, std::uint32_t factor) const {
        const std::uint32_t p = p_.value();
        for (std::size_t c = 0; c < dim_; ++c) {
            if (source[c] == 0) continue;
            target[c] = detail::sub_mod(target[c], detail::mul_mod(factor, source[c], p), p);
        }
    }

    std::size_t dim_;
    Prime p_;
    std::vector<FpVec> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<char> pivot_flag_;
};

}  // namespace hookschur
