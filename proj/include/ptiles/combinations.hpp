#pragma once

#include <vector>

#include "ptiles/errors.hpp"

namespace ptiles {

// C(n, k) computed exactly; throws DomainError if it would not fit in a
// signed 64-bit count.
long long binomial(long long n, long long k);

// The rank-th k-subset of {0..n-1} in lexicographic order, 0-based rank.
std::vector<long long> unrank_combination(long long n, long long k, long long rank);

// Advances idx (an ascending k-subset of {0..n-1}) to its lexicographic
// successor. Returns false when idx was the last combination.
bool next_combination(std::vector<long long>& idx, long long n);

// Calls f(idx) for every ascending k-subset of {0..n-1}, lexicographically.
template <typename F>
void for_each_combination(long long n, long long k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<long long> idx(static_cast<std::size_t>(k));
    for (long long i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        f(const_cast<const std::vector<long long>&>(idx));
        if (!next_combination(idx, n)) break;
    }
}

}  // namespace ptiles
