#pragma once

#include <string>

#include "ptiles/fourier.hpp"

namespace ptiles {

/// Outcome of one exhaustive or randomized sweep.
struct SweepResult {
    bool pass = false;
    long long checks = 0;
    std::string detail;  // empty on success, first counterexample otherwise
};

// Independent oracle for ball transforms: the plain Riemann sum
// (1/p^level) * Sum over x in [0, p^level) inside the ball of the
// character conj(chi)(x*xi). Characters are constant on level-`level`
// cells once level >= max(ball level, xi exponent), so the sum equals the
// integral exactly; below that the call is refused.
FTValue riemann_ft_ball(const Ball& b, const Frequency& xi, int level);

// ft_ball against the Riemann oracle: ball levels 0..2, every center,
// every frequency with exponent <= max_gamma. The oracle runs at
// max(2, max_gamma) + 1 and, for center 0, one level deeper — the two
// refinements must agree exactly or the oracle itself is not yet exact.
SweepResult ball_transform_matches_riemann(const PrimeBase& base, int max_gamma);

// Randomized agreement between the exact zero test and a float evaluation:
// `trials` sums with integer coefficients in [-5, 5] and order <= p^max_gamma,
// half the trials built blockwise-constant (hence exactly zero). Agreement
// means is_zero <=> |to_complex| < 1e-9.
SweepResult zero_test_matches_float(const PrimeBase& base, int max_gamma, int trials,
                                    unsigned long long seed);

// Exhaustive p-point criterion: every size-p subset of Z/p^2 against every
// frequency with exponent 1 or 2; the transform-side and pairwise-side
// booleans of check_pair_vanishing must agree.
SweepResult p_point_vanishing_equivalence(const PrimeBase& base);

// Exhaustive non-vanishing just outside the guaranteed radius: every
// T of size 2..4 inside Z/p^depth, every frequency with exponent
// gamma_T + 2; the transform must be nonzero each time.
SweepResult nonvanishing_outside_radius(const PrimeBase& base, int depth);

}  // namespace ptiles
