#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace segal::detail {

// C(n, k) as uint64_t; returns 0 for k < 0 or k > n.
inline std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

// floor division, correct for negative numerators
inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline int mod_positive(int a, int b) {
    int r = a % b;
    return r < 0 ? r + b : r;
}

// Enumerates all weakly increasing sequences of the given length with values
// in [lo, hi], invoking fn(const std::vector<int>&) on each, in lexicographic
// order. length 0 yields the single empty sequence.
template <typename Fn>
void for_each_monotone_sequence(int length, int lo, int hi, Fn&& fn) {
    if (length == 0) {
        std::vector<int> empty;
        fn(empty);
        return;
    }
    if (lo > hi) return;
    std::vector<int> seq(static_cast<std::size_t>(length), lo);
    while (true) {
        fn(seq);
        int i = length - 1;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == hi) --i;
        if (i < 0) break;
        int v = ++seq[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < length; ++j) seq[static_cast<std::size_t>(j)] = v;
    }
}

[[noreturn]] inline void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace segal::detail
