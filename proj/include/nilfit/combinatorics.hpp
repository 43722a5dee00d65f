#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace nilfit {

// C(n, r) with saturation at `cap` to avoid overflow.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r,
                                     std::uint64_t cap) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > cap) return cap + 1;
    }
    return acc;
}

// Calls fn on every ascending r-subset of {0,...,n-1}; returning false
// stops the enumeration early.
inline void for_each_combination(
    std::size_t n, std::size_t r,
    const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    if (r > n) return;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return;
        std::size_t i = r;
        while (i-- > 0) {
            if (idx[i] != i + n - r) {
                ++idx[i];
                for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (r == 0) return;
    }
}

}  // namespace nilfit
