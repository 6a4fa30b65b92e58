#include "ptiles/selfcheck.hpp"

#include <random>
#include <sstream>

#include "ptiles/combinations.hpp"
#include "ptiles/errors.hpp"

namespace ptiles {

namespace {

std::string describe(const Frequency& xi) {
    std::ostringstream os;
    if (xi.is_trivial()) return "0";
    os << xi.unit() << "/" << xi.base().p() << "^" << xi.exponent();
    return os.str();
}

// Every frequency with exponent <= max_gamma, trivial first, then by
// (exponent, unit) ascending.
std::vector<Frequency> frequencies_up_to(const PrimeBase& base, int max_gamma) {
    std::vector<Frequency> out;
    out.push_back(Frequency::trivial(base));
    for (int k = 1; k <= max_gamma; ++k) {
        long long modulus = base.pow(k);
        for (long long u = 1; u < modulus; ++u)
            if (u % base.p() != 0) out.emplace_back(base, k, u);
    }
    return out;
}

}  // namespace

FTValue riemann_ft_ball(const Ball& b, const Frequency& xi, int level) {
    require_same_base(b.base(), xi.base());
    if (level < b.level() || level < xi.exponent())
        throw DomainError("Riemann sum at level " + std::to_string(level) +
                          " cannot resolve the integrand");
    long long points = b.base().pow(level);
    long long order = b.base().pow(xi.exponent());
    long long stride = b.base().pow(b.level());
    CyclotomicSum acc(b.base(), xi.exponent());
    Rational weight(1, points);
    for (long long x = b.center(); x < points; x += stride) {
        acc.add_root(-((x % order) * xi.unit()), weight);
    }
    return FTValue{acc};
}

SweepResult ball_transform_matches_riemann(const PrimeBase& base, int max_gamma) {
    SweepResult result;
    int oracle_level = std::max(2, max_gamma) + 1;
    std::vector<Frequency> freqs = frequencies_up_to(base, max_gamma);
    for (int level = 0; level <= 2; ++level) {
        for (long long center = 0; center < base.pow(level); ++center) {
            Ball b(base, level, center);
            for (const Frequency& xi : freqs) {
                FTValue fast = ft_ball(b, xi);
                FTValue oracle = riemann_ft_ball(b, xi, oracle_level);
                ++result.checks;
                if (!(fast.value == oracle.value)) {
                    result.detail = "ft_ball(B(" + std::to_string(center) + ",p^-" +
                                    std::to_string(level) + "), " + describe(xi) +
                                    ") disagrees with the Riemann sum";
                    return result;
                }
                if (center == 0) {
                    // Refining the oracle must not change it: the finite sum
                    // is already the exact integral.
                    FTValue finer = riemann_ft_ball(b, xi, oracle_level + 1);
                    ++result.checks;
                    if (!(oracle.value == finer.value)) {
                        result.detail = "Riemann sum not stable under refinement at " +
                                        describe(xi);
                        return result;
                    }
                }
            }
        }
    }
    result.pass = true;
    return result;
}

SweepResult zero_test_matches_float(const PrimeBase& base, int max_gamma, int trials,
                                    unsigned long long seed) {
    SweepResult result;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gamma_pick(0, max_gamma);
    std::uniform_int_distribution<long long> coeff_pick(-5, 5);
    for (int trial = 0; trial < trials; ++trial) {
        int gamma = gamma_pick(rng);
        long long order = base.pow(gamma);
        std::vector<Rational> coeffs(static_cast<std::size_t>(order));
        bool make_zero = trial % 2 == 1;
        if (make_zero && gamma >= 1) {
            // Constant on blocks of stride p^(gamma-1): exactly zero.
            long long block = base.pow(gamma - 1);
            for (long long i = 0; i < block; ++i) {
                long long c = coeff_pick(rng);
                for (long long j = 0; j < base.p(); ++j)
                    coeffs[static_cast<std::size_t>(i + j * block)] = Rational(c);
            }
        } else if (make_zero) {
            coeffs[0] = Rational(0);
        } else {
            for (auto& c : coeffs) c = Rational(coeff_pick(rng));
        }
        CyclotomicSum sum(base, gamma, coeffs);
        bool exact = sum.is_zero();
        bool approx = std::abs(sum.to_complex()) < 1e-9;
        ++result.checks;
        if (exact != approx) {
            std::ostringstream os;
            os << "trial " << trial << " (gamma " << gamma << "): is_zero=" << exact
               << " but |value|=" << std::abs(sum.to_complex());
            result.detail = os.str();
            return result;
        }
    }
    result.pass = true;
    return result;
}

SweepResult p_point_vanishing_equivalence(const PrimeBase& base) {
    SweepResult result;
    long long cells = base.pow(2);
    std::vector<Frequency> freqs = frequencies_up_to(base, 2);
    for_each_combination(cells, base.p(), [&](const std::vector<long long>& points) {
        if (!result.detail.empty()) return;
        PointSet s(base, 2, points);
        for (const Frequency& xi : freqs) {
            if (xi.is_trivial()) continue;
            PairVanishing pv = check_pair_vanishing(s, xi);
            ++result.checks;
            if (pv.transform_is_zero != pv.pairwise_condition) {
                std::ostringstream os;
                os << "S={";
                for (long long pt : points) os << pt << ",";
                os << "} xi=" << describe(xi) << ": transform_is_zero="
                   << pv.transform_is_zero << " pairwise=" << pv.pairwise_condition;
                result.detail = os.str();
                return;
            }
        }
    });
    result.pass = result.detail.empty();
    return result;
}

SweepResult nonvanishing_outside_radius(const PrimeBase& base, int depth) {
    SweepResult result;
    long long cells = base.pow(depth);
    for (long long size = 2; size <= 4 && size <= cells; ++size) {
        for_each_combination(cells, size, [&](const std::vector<long long>& points) {
            if (!result.detail.empty()) return;
            PointSet t(base, depth, points);
            int k = max_pairwise_valuation(t) + 2;
            long long modulus = base.pow(k);
            for (long long u = 1; u < modulus; ++u) {
                if (u % base.p() == 0) continue;
                Frequency xi(base, k, u);
                ++result.checks;
                if (!check_nonvanishing(t, xi)) {
                    std::ostringstream os;
                    os << "T={";
                    for (long long pt : points) os << pt << ",";
                    os << "} xi=" << describe(xi) << ": transform vanished";
                    result.detail = os.str();
                    return;
                }
            }
        });
        if (!result.detail.empty()) break;
    }
    result.pass = result.detail.empty();
    return result;
}

}  // namespace ptiles
