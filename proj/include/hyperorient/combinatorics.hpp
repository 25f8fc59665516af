// Small combinatorial helpers shared by every module: binomials, colex
// enumeration and ranking of p-subsets, and permutation utilities.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hyperorient {

// Exact binomial coefficient; saturates at UINT64_MAX on overflow.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        if (result > UINT64_MAX / num) return UINT64_MAX;
        result = result * num / i;
    }
    return result;
}

// True if a < b in colexicographic order (both sorted ascending, same size).
inline bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// All p-subsets of the given ground elements, in colexicographic order.
// The input need not be sorted; the output subsets are sorted ascending.
inline std::vector<std::vector<int>> psubsets_of(std::vector<int> ground, int p) {
    if (p < 1 || p > static_cast<int>(ground.size()))
        throw std::invalid_argument("psubsets_of: p out of range");
    std::sort(ground.begin(), ground.end());
    std::vector<std::vector<int>> out;
    out.reserve(binomial(ground.size(), p));
    std::vector<int> idx(p);
    std::iota(idx.begin(), idx.end(), 0);
    // Generate index combinations in colex order: advance the lowest index
    // that can move, reset everything below it.
    const int k = static_cast<int>(ground.size());
    while (true) {
        std::vector<int> sub(p);
        for (int i = 0; i < p; ++i) sub[i] = ground[idx[i]];
        out.push_back(std::move(sub));
        int j = 0;
        while (j + 1 < p && idx[j] + 1 == idx[j + 1]) ++j;
        if (idx[j] + 1 >= k && j + 1 >= p) break;
        ++idx[j];
        for (int i = 0; i < j; ++i) idx[i] = i;
        if (idx[p - 1] >= k) break;
    }
    return out;
}

// All p-subsets of {1, ..., n} in colexicographic order.
inline std::vector<std::vector<int>> all_psubsets(int n, int p) {
    std::vector<int> ground(n);
    std::iota(ground.begin(), ground.end(), 1);
    return psubsets_of(std::move(ground), p);
}

// Colex rank of a sorted p-subset of {1, ..., n} (n-independent).
inline std::uint64_t colex_rank(const std::vector<int>& sorted_pset) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted_pset.size(); ++i)
        rank += binomial(static_cast<std::uint64_t>(sorted_pset[i]) - 1, i + 1);
    return rank;
}

// All permutations of {1, ..., r} in lexicographic order.
inline std::vector<std::vector<int>> all_permutations(int r) {
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline bool is_permutation_of(const std::vector<int>& candidate,
                              const std::vector<int>& elements) {
    std::vector<int> a = candidate, b = elements;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// True if the values are pairwise distinct.
inline bool all_distinct(const std::vector<int>& values) {
    std::vector<int> v = values;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline std::uint64_t factorial(int r) {
    std::uint64_t result = 1;
    for (int i = 2; i <= r; ++i) result *= static_cast<std::uint64_t>(i);
    return result;
}

}  // namespace hyperorient
