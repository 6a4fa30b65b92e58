#include "ptiles/cyclotomic.hpp"

#include <cmath>
#include <stdexcept>

#include "ptiles/errors.hpp"

namespace ptiles {

namespace {

long long order_size(const PrimeBase& base, int gamma) {
    if (gamma < 0) {
        throw DomainError("cyclotomic order exponent must be >= 0");
    }
    long long n = checked_pow(base.p(), gamma);
    if (n > kMaxCells) {
        throw DomainError("cyclotomic order exceeds supported size");
    }
    return n;
}

}  // namespace

CyclotomicSum::CyclotomicSum(const PrimeBase& base, int gamma)
    : base_(base), gamma_(gamma), coeffs_(order_size(base, gamma), Rational(0)) {}

CyclotomicSum::CyclotomicSum(const PrimeBase& base, int gamma, std::vector<Rational> coeffs)
    : base_(base), gamma_(gamma), coeffs_(std::move(coeffs)) {
    long long n = order_size(base, gamma);
    if (static_cast<long long>(coeffs_.size()) != n) {
        throw DomainError("coefficient vector length must equal p^gamma");
    }
}

CyclotomicSum CyclotomicSum::constant(const PrimeBase& base, int gamma, const Rational& c) {
    CyclotomicSum s(base, gamma);
    s.coeffs_[0] = c;
    return s;
}

void CyclotomicSum::add_root(long long exponent, const Rational& weight) {
    long long n = static_cast<long long>(coeffs_.size());
    long long i = exponent % n;
    if (i < 0) i += n;
    coeffs_[static_cast<std::size_t>(i)] += weight;
}

CyclotomicSum CyclotomicSum::lifted(int new_gamma) const {
    if (new_gamma < gamma_) {
        throw DomainError("cannot lift a root-of-unity sum to a smaller order");
    }
    if (new_gamma == gamma_) return *this;
    CyclotomicSum out(base_, new_gamma);
    long long stride = checked_pow(base_.p(), new_gamma - gamma_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != Rational(0)) {
            out.coeffs_[i * static_cast<std::size_t>(stride)] = coeffs_[i];
        }
    }
    return out;
}

bool CyclotomicSum::is_zero() const {
    if (gamma_ == 0) {
        return coeffs_[0] == Rational(0);
    }
    // omega = primitive p^gamma-th root.  The minimal polynomial of omega over
    // the rationals is the p^gamma-th cyclotomic polynomial, whose relations
    // force the sum to vanish exactly when, for every residue i mod
    // p^(gamma-1), the p coefficients coeffs[i + j*p^(gamma-1)] agree.
    long long block = checked_pow(base_.p(), gamma_ - 1);
    for (long long i = 0; i < block; ++i) {
        const Rational& first = coeffs_[static_cast<std::size_t>(i)];
        for (long long j = 1; j < base_.p(); ++j) {
            if (coeffs_[static_cast<std::size_t>(i + j * block)] != first) {
                return false;
            }
        }
    }
    return true;
}

std::complex<double> CyclotomicSum::to_complex() const {
    const double two_pi = 6.283185307179586476925286766559;
    double n = static_cast<double>(coeffs_.size());
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == Rational(0)) continue;
        double angle = two_pi * static_cast<double>(i) / n;
        acc += to_double(coeffs_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

CyclotomicSum CyclotomicSum::operator+(const CyclotomicSum& other) const {
    require_same_base(base_, other.base_);
    int g = std::max(gamma_, other.gamma_);
    CyclotomicSum a = lifted(g);
    CyclotomicSum b = other.lifted(g);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        a.coeffs_[i] += b.coeffs_[i];
    }
    return a;
}

CyclotomicSum CyclotomicSum::operator-(const CyclotomicSum& other) const {
    return *this + other.scaled(Rational(-1));
}

CyclotomicSum CyclotomicSum::scaled(const Rational& factor) const {
    CyclotomicSum out = *this;
    for (auto& c : out.coeffs_) {
        c *= factor;
    }
    return out;
}

bool CyclotomicSum::operator==(const CyclotomicSum& other) const {
    if (base_.p() != other.base_.p()) return false;
    return (*this - other).is_zero();
}

}  // namespace ptiles
