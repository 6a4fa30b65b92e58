#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ptiles/cyclotomic.hpp"

using namespace ptiles;

namespace {

CyclotomicSum random_sum(std::mt19937_64& rng, const PrimeBase& base, int gamma) {
    long long order = base.pow(gamma);
    std::uniform_int_distribution<long long> coeff(-5, 5);
    std::vector<Rational> cs(static_cast<std::size_t>(order));
    for (auto& c : cs) c = Rational(coeff(rng));
    return CyclotomicSum(base, gamma, std::move(cs));
}

// A sum that is exactly zero: constant on every block {i + j p^(gamma-1)}.
CyclotomicSum random_zero(std::mt19937_64& rng, const PrimeBase& base, int gamma) {
    long long order = base.pow(gamma);
    long long block = base.pow(gamma - 1);
    std::uniform_int_distribution<long long> coeff(-5, 5);
    std::vector<Rational> cs(static_cast<std::size_t>(order));
    for (long long i = 0; i < block; ++i) {
        Rational c(coeff(rng));
        for (long long j = 0; j < base.p(); ++j)
            cs[static_cast<std::size_t>(i + j * block)] = c;
    }
    return CyclotomicSum(base, gamma, std::move(cs));
}

}  // namespace

TEST_CASE("construction and validation") {
    PrimeBase two(2);
    CyclotomicSum z(two, 2);
    CHECK(z.coeffs() == std::vector<Rational>{0, 0, 0, 0});
    CHECK(z.is_zero());
    CHECK(CyclotomicSum::constant(two, 1, Rational(7)).coeffs() ==
          std::vector<Rational>{7, 0});
    CHECK_THROWS_AS(CyclotomicSum(two, 1, {Rational(1)}), DomainError);  // wrong length
    CHECK_THROWS_AS(CyclotomicSum(two, -1), DomainError);
    CHECK_THROWS_AS(CyclotomicSum(two, 63), DomainError);  // p^gamma overflows
}

TEST_CASE("add_root reduces exponents mod the order") {
    PrimeBase two(2), three(3);
    CyclotomicSum s(three, 1);
    s.add_root(0, Rational(1));
    CHECK(s.coeffs() == std::vector<Rational>{1, 0, 0});
    CyclotomicSum t(two, 1);
    t.add_root(3, Rational(1));  // omega_2^3 = omega_2^1
    CHECK(t.coeffs() == std::vector<Rational>{0, 1});
    t.add_root(-1, Rational(2));  // -1 = 1 mod 2
    CHECK(t.coeffs() == std::vector<Rational>{0, 3});
    CyclotomicSum before = t;
    t.add_root(5, Rational(0));  // zero weight changes nothing
    CHECK(t.coeffs() == before.coeffs());
}

TEST_CASE("lifting re-expresses the same value at a finer order") {
    PrimeBase two(2), three(3);
    CyclotomicSum s(two, 1, {Rational(1), Rational(1)});
    CHECK(s.lifted(2).coeffs() ==
          std::vector<Rational>{1, 0, 1, 0});  // omega_2 = omega_4^2
    CHECK(s.lifted(1).coeffs() == s.coeffs());
    CyclotomicSum c(three, 0, {Rational(5)});
    CHECK(c.lifted(1).coeffs() == std::vector<Rational>{5, 0, 0});
    CHECK_THROWS_AS(s.lifted(0), DomainError);
}

TEST_CASE("exact zero test") {
    PrimeBase two(2), three(3);
    CHECK(CyclotomicSum(three, 1, {Rational(1), Rational(1), Rational(1)}).is_zero());
    CHECK(CyclotomicSum(two, 2, {Rational(1), Rational(0), Rational(1), Rational(0)})
              .is_zero());
    CHECK(!CyclotomicSum(two, 2, {Rational(1), Rational(1), Rational(0), Rational(0)})
               .is_zero());
    CHECK(CyclotomicSum(two, 0, {Rational(0)}).is_zero());
    CHECK(!CyclotomicSum(two, 0, {Rational(2)}).is_zero());
    CHECK(CyclotomicSum(two, 1, {Rational(1, 2), Rational(1, 2)}).is_zero());
    // 1 + omega_2 = 0
    CyclotomicSum s(two, 1);
    s.add_root(0, Rational(1));
    s.add_root(1, Rational(1));
    CHECK(s.is_zero());
}

TEST_CASE("float evaluation matches known values") {
    PrimeBase two(2), three(3);
    CHECK(std::abs(CyclotomicSum(two, 1, {Rational(1), Rational(1)}).to_complex()) <
          1e-12);
    std::complex<double> z =
        CyclotomicSum(two, 2, {Rational(1), Rational(1), Rational(0), Rational(0)})
            .to_complex();
    CHECK(std::abs(z - std::complex<double>(1.0, 1.0)) < 1e-12);
    std::complex<double> c =
        CyclotomicSum(three, 1, {Rational(2), Rational(0), Rational(0)}).to_complex();
    CHECK(std::abs(c - std::complex<double>(2.0, 0.0)) < 1e-12);
}

TEST_CASE("zero test agrees with float evaluation on random sums") {
    std::mt19937_64 rng(112233);
    for (long long p : {2, 3, 5}) {
        PrimeBase base(p);
        for (int trial = 0; trial < 150; ++trial) {
            int gamma = static_cast<int>(rng() % 4);
            CyclotomicSum s = (trial % 2 == 1 && gamma >= 1)
                                  ? random_zero(rng, base, gamma)
                                  : random_sum(rng, base, gamma);
            CHECK(s.is_zero() == (std::abs(s.to_complex()) < 1e-9));
        }
    }
}

TEST_CASE("lifting preserves value and zeroness") {
    std::mt19937_64 rng(445566);
    for (long long p : {2, 3}) {
        PrimeBase base(p);
        for (int trial = 0; trial < 100; ++trial) {
            int gamma = static_cast<int>(rng() % 3);
            CyclotomicSum s = random_sum(rng, base, gamma);
            CyclotomicSum up = s.lifted(gamma + 2);
            CHECK(std::abs(s.to_complex() - up.to_complex()) < 1e-12);
            CHECK(s.is_zero() == up.is_zero());
            CHECK(s == up);  // value equality across orders
        }
    }
}

TEST_CASE("arithmetic is linear and exact") {
    std::mt19937_64 rng(778899);
    PrimeBase three(3);
    for (int trial = 0; trial < 100; ++trial) {
        CyclotomicSum a = random_zero(rng, three, 2);
        CyclotomicSum b = random_zero(rng, three, 1);
        CHECK((a + b).is_zero());  // sum of zeros is zero, across orders
        CyclotomicSum s = random_sum(rng, three, 2);
        CHECK((s - s).is_zero());
        CHECK((s + s) == s.scaled(Rational(2)));
        CHECK(s.scaled(Rational(0)).is_zero());
    }
}

TEST_CASE("value equality, not structural equality") {
    PrimeBase two(2), three(3);
    // 2 * omega_4^2 equals -2: both are the same value at different shapes
    CyclotomicSum a(two, 2, {Rational(0), Rational(0), Rational(2), Rational(0)});
    CyclotomicSum b = CyclotomicSum::constant(two, 0, Rational(-2));
    CHECK(a == b);
    CHECK(a != CyclotomicSum::constant(two, 0, Rational(2)));
    // different primes never compare equal
    CHECK(CyclotomicSum::constant(two, 0, Rational(1)) !=
          CyclotomicSum::constant(three, 0, Rational(1)));
}
