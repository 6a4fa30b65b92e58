#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ptiles/fourier.hpp"
#include "ptiles/padic.hpp"

namespace ptiles {

/**
 * Outcome of a tiling check. The direct verifier fills the coverage
 * histogram (count -> number of residues) and, on failure, the smallest
 * residue covered a wrong number of times. The spectral verifier instead
 * records the first frequency at which both transforms are nonzero; its
 * histogram stays empty.
 */
struct TilingReport {
    bool is_tiling = false;
    std::optional<long long> witness;
    std::map<long long, long long> coverage_histogram;
    std::optional<Frequency> witness_frequency;
};

/// gamma_T, the largest valuation of a pairwise difference in T.
struct GammaT {
    int value = 0;

    friend bool operator==(const GammaT&, const GammaT&) = default;
};

// Needs at least two points (a singleton has no pairs and is refused;
// search code uses the convention gamma = -1 for singletons instead).
GammaT gamma_t(const PointSet& t_set);

// Counts Sum over t of 1_Omega(x - t) for every x in Z/p^n and demands the
// constant 1. Requires omega.level == t_set.precision, else DomainError.
TilingReport verify_tiling(const LevelSet& omega, const PointSet& t_set);

// Equivalent criterion on the transform side: |Omega| * |T| = p^n and at
// every frequency u/p^k with 1 <= k <= n at least one of the two transforms
// vanishes. Same precondition as verify_tiling.
TilingReport verify_tiling_spectral(const LevelSet& omega, const PointSet& t_set);

// Rounds omega to the compact open set the tiling theory predicts: cells
// mod p^{gamma_T+1} are kept or dropped by strict majority of their
// members. Exact half is AmbiguousCellError; omega.level < gamma_T + 1 is
// PrecisionError. Exact ball-union inputs round-trip unchanged.
CompactOpenSet regularize(const LevelSet& omega, const PointSet& t_set);

// Every T containing 0 with verify_tiling(omega, T) true, by backtracking
// exact cover (smallest uncovered residue first). Sorted lexicographically.
// Returns an empty list when |omega| does not divide p^n.
std::vector<PointSet> find_complements(const LevelSet& omega);

// True iff omega is a union of whole residue classes mod p^{gamma_T+1}.
// Input must actually tile with t_set, else DomainError.
bool theorem_shadow_check(const LevelSet& omega, const PointSet& t_set);

/// One census row: a tile, everything that tiles with it, and its shape.
struct CensusRecord {
    LevelSet omega;
    std::vector<PointSet> complements;
    int gamma;  // smallest gamma_T over the complements (-1 for T = {0})
    CompactOpenSet compact_open;
};

// All tiles of Z/p^n of size m containing 0, with their complements.
// Returns empty unless m is a power of p dividing p^n. jobs > 1 splits the
// candidate space across threads; output is identical for any job count.
std::vector<CensusRecord> census(const PrimeBase& base, int n, long long m, int jobs = 1);

// The census reduced to (tile, number of complements) pairs.
std::vector<std::pair<LevelSet, long long>> enumerate_tiles(const PrimeBase& base, int n,
                                                            long long m, int jobs = 1);

}  // namespace ptiles
