#include "ptiles/fourier.hpp"

#include <algorithm>
#include <string>

#include "ptiles/errors.hpp"

namespace ptiles {

namespace {

long long mul_mod(long long a, long long b, long long modulus) {
    return static_cast<long long>(static_cast<__int128>(a) * b % modulus);
}

}  // namespace

FTValue ft_ball(const Ball& b, const Frequency& xi) {
    require_same_base(b.base(), xi.base());
    int k = xi.exponent();
    CyclotomicSum value(b.base(), k);
    if (k > b.level()) {
        return FTValue{value};  // character averages to zero over the ball
    }
    long long order = b.base().pow(k);
    long long idx = mul_mod(b.center() % order, xi.unit(), order);
    value.add_root(-idx, Rational(1, b.base().pow(b.level())));
    return FTValue{value};
}

FTValue ft_point_measure(const PointSet& t_set, const Frequency& xi) {
    require_same_base(t_set.base(), xi.base());
    int k = xi.exponent();
    if (xi.is_trivial()) {
        return FTValue{CyclotomicSum::constant(t_set.base(), 0, Rational(t_set.size()))};
    }
    if (t_set.precision() < k)
        throw PrecisionError("points known mod p^" + std::to_string(t_set.precision()) +
                             ", frequency needs them mod p^" + std::to_string(k));
    long long order = t_set.base().pow(k);
    CyclotomicSum value(t_set.base(), k);
    for (long long t : t_set.points()) {
        value.add_root(-mul_mod(t % order, xi.unit(), order), Rational(1));
    }
    return FTValue{value};
}

FTValue ft_compact_open(const CompactOpenSet& s, const Frequency& xi) {
    require_same_base(s.base(), xi.base());
    int k = xi.exponent();
    long long order = s.base().pow(k);
    CyclotomicSum value(s.base(), k);
    for (const Ball& b : s.balls()) {
        if (k > b.level()) continue;
        long long idx = mul_mod(b.center() % order, xi.unit(), order);
        value.add_root(-idx, Rational(1, s.base().pow(b.level())));
    }
    return FTValue{value};
}

FTValue ft_level_set(const LevelSet& omega, const Frequency& xi) {
    require_same_base(omega.base(), xi.base());
    int k = xi.exponent();
    CyclotomicSum value(omega.base(), k);
    if (k > omega.level()) return FTValue{value};
    long long order = omega.base().pow(k);
    Rational cell = Rational(1, omega.base().pow(omega.level()));
    std::vector<long long> counts(static_cast<std::size_t>(order), 0);
    const std::vector<bool>& bits = omega.bits();
    for (long long m = 0; m < omega.modulus(); ++m) {
        if (!bits[static_cast<std::size_t>(m)]) continue;
        long long idx = mul_mod(m % order, xi.unit(), order);
        ++counts[static_cast<std::size_t>(floor_mod(-idx, order))];
    }
    for (long long i = 0; i < order; ++i) {
        if (counts[static_cast<std::size_t>(i)] != 0)
            value.add_root(i, cell * counts[static_cast<std::size_t>(i)]);
    }
    return FTValue{value};
}

PairVanishing check_pair_vanishing(const PointSet& s_points, const Frequency& xi) {
    require_same_base(s_points.base(), xi.base());
    if (s_points.size() != s_points.base().p())
        throw DomainError("pair-vanishing criterion needs exactly p points, got " +
                          std::to_string(s_points.size()));
    bool ft_zero = ft_point_measure(s_points, xi).is_zero();
    bool pairwise = !xi.is_trivial();
    const auto& pts = s_points.points();
    for (std::size_t i = 0; pairwise && i < pts.size(); ++i) {
        for (std::size_t j = i + 1; pairwise && j < pts.size(); ++j) {
            // |(s - s')xi|_p = p exactly when v_p(s - s') = k - 1.
            pairwise = valuation(s_points.base(), Rational(pts[j] - pts[i])) ==
                       xi.exponent() - 1;
        }
    }
    return PairVanishing{ft_zero, pairwise};
}

bool check_nonvanishing(const PointSet& t_set, const Frequency& xi) {
    require_same_base(t_set.base(), xi.base());
    int gamma = max_pairwise_valuation(t_set);
    if (xi.exponent() <= gamma + 1)
        throw DomainError("no non-vanishing guarantee at |xi|_p <= p^" +
                          std::to_string(gamma + 1) + " (gamma_T = " +
                          std::to_string(gamma) + ")");
    PointSet lifted = t_set.with_precision(std::max(t_set.precision(), xi.exponent()));
    return !ft_point_measure(lifted, xi).is_zero();
}

bool check_local_constancy(const CompactOpenSet& s, const Frequency& xi,
                           const RawFrequency& u_shift) {
    if (!u_shift.normalized(s.base()).is_trivial())
        throw DomainError("perturbation must satisfy |u|_p <= 1");
    FTValue at_xi = ft_compact_open(s, xi);

    // Evaluate at the raw, unnormalized representation of xi + u. The raw
    // numerator may share powers of p with the denominator; the value must
    // still agree with the normalized evaluation.
    RawFrequency raw = raw_frequency_sum(
        s.base(), RawFrequency{xi.unit(), xi.exponent()}, u_shift);
    int j = raw.denominator_exponent;
    long long order = s.base().pow(j);
    Frequency norm = raw.normalized(s.base());
    CyclotomicSum shifted(s.base(), j);
    for (const Ball& b : s.balls()) {
        if (norm.exponent() > b.level()) continue;
        long long idx = mul_mod(floor_mod(raw.numerator, order), b.center() % order, order);
        shifted.add_root(-idx, Rational(1, s.base().pow(b.level())));
    }
    return at_xi.value == shifted;
}

}  // namespace ptiles
