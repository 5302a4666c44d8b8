#ifndef KHTREE_COMBINATORICS_HPP
#define KHTREE_COMBINATORICS_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "error.hpp"

namespace khtree {

using Vertex = std::uint32_t;

/// Exact binomial coefficient; throws on 64-bit overflow.
inline std::int64_t binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || n < 0 || r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        // result * (n - r + i) / i stays integral at every step
        const std::int64_t g = std::gcd(result, i);
        const std::int64_t num = result / g;
        const std::int64_t den = i / g;
        const std::int64_t factor = (n - r + i) / den;
        std::int64_t next = 0;
        if (__builtin_mul_overflow(num, factor, &next)) {
            throw Error(Errc::ResourceCap, "binomial coefficient overflows 64 bits");
        }
        result = next;
    }
    return result;
}

constexpr bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

constexpr int floor_log2(std::int64_t n) {
    int m = 0;
    while (n > 1) {
        n >>= 1;
        ++m;
    }
    return m;
}

/// Visits every r-subset of {first, ..., first + n - 1} in lexicographic order.
/// The callback receives a sorted vector; returning false stops the walk.
template <class Fn>
bool for_each_combination(Vertex first, Vertex n, Vertex r, Fn&& fn) {
    if (r > n) {
        return true;
    }
    std::vector<Vertex> comb(r);
    std::iota(comb.begin(), comb.end(), first);
    const Vertex last = first + n;
    while (true) {
        if (!fn(static_cast<const std::vector<Vertex>&>(comb))) {
            return false;
        }
        // advance to the next combination
        Vertex i = r;
        while (i > 0 && comb[i - 1] == last - r + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return true;
        }
        ++comb[i - 1];
        for (Vertex j = i; j < r; ++j) {
            comb[j] = comb[j - 1] + 1;
        }
    }
}

/// Visits every r-subset of the given sorted list, lexicographically by position.
template <class Fn>
bool for_each_subset_of(const std::vector<Vertex>& items, std::size_t r, Fn&& fn) {
    if (r > items.size()) {
        return true;
    }
    std::vector<Vertex> sub(r);
    return for_each_combination(0, static_cast<Vertex>(items.size()), static_cast<Vertex>(r),
                                [&](const std::vector<Vertex>& idx) {
                                    for (std::size_t i = 0; i < r; ++i) {
                                        sub[i] = items[idx[i]];
                                    }
                                    return fn(static_cast<const std::vector<Vertex>&>(sub));
                                });
}

} // namespace khtree

#endif // KHTREE_COMBINATORICS_HPP
