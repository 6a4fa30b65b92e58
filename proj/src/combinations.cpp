#include "ptiles/combinations.hpp"

#include <string>

namespace ptiles {

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact: prefix products are binomials
        if (acc > static_cast<__int128>(1) << 62)
            throw DomainError("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                              ") exceeds 2^62");
    }
    return static_cast<long long>(acc);
}

std::vector<long long> unrank_combination(long long n, long long k, long long rank) {
    std::vector<long long> idx;
    idx.reserve(static_cast<std::size_t>(k));
    long long next = 0;
    for (long long slot = k; slot >= 1; --slot) {
        // Smallest admissible element whose block of successors covers rank.
        while (true) {
            long long block = binomial(n - next - 1, slot - 1);
            if (rank < block) break;
            rank -= block;
            ++next;
        }
        idx.push_back(next);
        ++next;
    }
    return idx;
}

bool next_combination(std::vector<long long>& idx, long long n) {
    long long k = static_cast<long long>(idx.size());
    for (long long i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - k + i) {
            ++idx[static_cast<std::size_t>(i)];
            for (long long j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace ptiles
