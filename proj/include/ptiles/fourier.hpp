#pragma once

#include "ptiles/cyclotomic.hpp"
#include "ptiles/padic.hpp"

namespace ptiles {

/**
 * One exact transform value at one frequency. Every transform in scope
 * (ball indicators, finite point measures, compact open sets) takes values
 * in rational combinations of roots of unity, so the value is stored
 * exactly; floats appear only through to_complex().
 */
struct FTValue {
    CyclotomicSum value;

    bool is_zero() const { return value.is_zero(); }
    std::complex<double> to_complex() const { return value.to_complex(); }
};

// Transform of the indicator of b = c + p^k Z_p at xi:
// conj(chi)(c*xi) * p^{-k} when |xi|_p <= p^k, zero otherwise.
FTValue ft_ball(const Ball& b, const Frequency& xi);

// Transform of the point measure sum of unit masses at t_set: one root of
// unity per point. Trivial xi gives the constant |T|. Needs every point
// known mod p^k, else PrecisionError.
FTValue ft_point_measure(const PointSet& t_set, const Frequency& xi);

// Transform of the indicator of s: ball transforms summed exactly.
FTValue ft_compact_open(const CompactOpenSet& s, const Frequency& xi);

// Transform of the indicator of omega's cells; equal to ft_compact_open of
// to_compact_open(omega) but computed in one pass over the members.
FTValue ft_level_set(const LevelSet& omega, const Frequency& xi);

/// Both sides of the p-point vanishing criterion, computed independently.
struct PairVanishing {
    bool transform_is_zero;
    bool pairwise_condition;

    friend bool operator==(const PairVanishing&, const PairVanishing&) = default;
};

// For a set S of exactly p points: the point-measure transform at xi
// vanishes if and only if |(s - s')xi|_p = p for every distinct pair.
// Returns both booleans so tests can assert they agree; any other
// cardinality is a DomainError.
PairVanishing check_pair_vanishing(const PointSet& s_points, const Frequency& xi);

// For |xi|_p > p^{gamma_T + 1} the point-measure transform cannot vanish;
// this evaluates it and reports non-vanishing. Frequencies at or inside
// that radius are outside the guarantee and raise DomainError. Points are
// reinterpreted at precision max(precision, k) so any in-range frequency
// is evaluable.
bool check_nonvanishing(const PointSet& t_set, const Frequency& xi);

// Transforms of sets inside Z_p are constant on xi + Z_p. Evaluates the
// transform of s at xi and at the unnormalized representation xi + u_shift
// (which must satisfy |u|_p <= 1, else DomainError) and reports exact value
// equality.
bool check_local_constancy(const CompactOpenSet& s, const Frequency& xi,
                           const RawFrequency& u_shift);

}  // namespace ptiles
