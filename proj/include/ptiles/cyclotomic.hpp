#pragma once

#include <complex>
#include <vector>

#include "ptiles/padic.hpp"
#include "ptiles/rational.hpp"

namespace ptiles {

/**
 * Exact rational combination of p^gamma-th roots of unity.
 *
 * The value is sum_i coeffs[i] * omega^i where omega = exp(2*pi*i / p^gamma).
 * All arithmetic is exact; the only lossy operation is to_complex().
 */
class CyclotomicSum {
public:
    // The zero sum at a given order (coeffs all zero, length p^gamma).
    CyclotomicSum(const PrimeBase& base, int gamma);

    // Direct construction from a coefficient vector of length exactly p^gamma.
    CyclotomicSum(const PrimeBase& base, int gamma, std::vector<Rational> coeffs);

    // The constant c = c * omega^0 at the given order.
    static CyclotomicSum constant(const PrimeBase& base, int gamma, const Rational& c);

    const PrimeBase& base() const { return base_; }
    int gamma() const { return gamma_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Adds weight * omega^exponent; exponent may be any integer (reduced mod p^gamma).
    void add_root(long long exponent, const Rational& weight);

    // The same value expressed at order gamma' >= gamma: index i maps to
    // i * p^(gamma' - gamma).
    CyclotomicSum lifted(int new_gamma) const;

    // Exact zero test.  For gamma == 0 the sum is just coeffs[0]; for
    // gamma >= 1 the sum vanishes iff the coefficients are constant on each
    // block { i + j * p^(gamma-1) : 0 <= j < p }, 0 <= i < p^(gamma-1).
    bool is_zero() const;

    std::complex<double> to_complex() const;

    CyclotomicSum operator+(const CyclotomicSum& other) const;
    CyclotomicSum operator-(const CyclotomicSum& other) const;
    CyclotomicSum scaled(const Rational& factor) const;

    // Value equality: the difference is exactly zero.  Two sums at different
    // orders are compared after lifting to the common order.
    bool operator==(const CyclotomicSum& other) const;
    bool operator!=(const CyclotomicSum& other) const { return !(*this == other); }

private:
    PrimeBase base_;
    int gamma_;
    std::vector<Rational> coeffs_;
};

}  // namespace ptiles
