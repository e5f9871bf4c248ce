#pragma once

#include <cstdint>

// Test-only oracle: counts semistandard Young tableaux of hook shape
// (a, 1^b) with entries in [1, n] by direct enumeration. The arm row must be
// weakly increasing, the leg column strictly increasing below the corner.
// Deliberately independent of the library's linear algebra.
namespace oracle {

namespace detail {

inline std::uint64_t count_rows(std::int64_t remaining, int min_value, int n) {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (int v = min_value; v <= n; ++v) {
        total += count_rows(remaining - 1, v, n);
    }
    return total;
}

inline std::uint64_t count_columns(std::int64_t remaining, int min_value, int n) {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (int v = min_value; v <= n; ++v) {
        total += count_columns(remaining - 1, v + 1, n);
    }
    return total;
}

}  // namespace detail

inline std::uint64_t count_hook_tableaux(std::int64_t a, std::int64_t b, int n) {
    if (a <= 0 || b < 0 || n < 1) return 0;
    std::uint64_t total = 0;
    for (int corner = 1; corner <= n; ++corner) {
        const std::uint64_t rows = detail::count_rows(a - 1, corner, n);
        const std::uint64_t cols = detail::count_columns(b, corner + 1, n);
        total += rows * cols;
    }
    return total;
}

}  // namespace oracle
