#pragma once

#include <vector>

#include "ptiles/errors.hpp"
#include "ptiles/rational.hpp"

namespace ptiles {

// p^exp as a long long; exp >= 0. Throws DomainError on overflow.
long long checked_pow(long long base, int exp);

// value mod modulus, reduced into [0, modulus) for any sign of value.
inline long long floor_mod(long long value, long long modulus) {
    long long r = value % modulus;
    return r < 0 ? r + modulus : r;
}

// Hard cap on any enumerated resolution p^n (bit vectors, coefficient
// vectors, translate tables). Requests beyond it are refused up front.
inline constexpr long long kMaxCells = 1LL << 22;

/**
 * The prime every object in a computation is based on. Construction runs a
 * deterministic trial-division primality check, so holding a PrimeBase is
 * proof that p is prime.
 */
class PrimeBase {
  public:
    explicit PrimeBase(long long p);

    long long p() const { return p_; }
    long long pow(int n) const { return checked_pow(p_, n); }

    friend bool operator==(const PrimeBase&, const PrimeBase&) = default;

  private:
    long long p_;
};

// Throws DomainError unless both objects share one prime base.
void require_same_base(const PrimeBase& a, const PrimeBase& b);

/**
 * A p-adic integer known to finite precision: the residue class
 * r + p^n Z_p. Precision 0 carries no digits at all and stands for the
 * whole of Z_p. The stored value is always reduced into [0, p^n).
 */
class PAdicInt {
  public:
    PAdicInt(PrimeBase base, int precision, long long value);

    PrimeBase base() const { return base_; }
    int precision() const { return precision_; }
    long long residue() const { return residue_; }

    // The class mod p^k. Throws PrecisionError when k exceeds the known digits.
    long long residue_mod(int k) const;

    friend bool operator==(const PAdicInt&, const PAdicInt&) = default;

  private:
    PrimeBase base_;
    int precision_;
    long long residue_;
};

/**
 * A frequency u/p^k in p^{-k}Z_p / Z_p, the natural domain for transforms
 * of sets inside Z_p: shifting a frequency by a p-adic integer does not
 * change the character it induces on Z_p. Exponent 0 is the trivial class
 * (all of Z_p, only triviality observable); exponent k >= 1 has
 * |xi|_p = p^k exactly, witnessed by the unit part.
 */
class Frequency {
  public:
    // exponent <= 0 collapses to the trivial class and requires unit 0;
    // exponent >= 1 requires 0 <= unit < p^k with p not dividing unit.
    Frequency(PrimeBase base, int exponent, long long unit);

    static Frequency trivial(PrimeBase base) { return Frequency(base, 0, 0); }

    PrimeBase base() const { return base_; }
    int exponent() const { return exponent_; }
    long long unit() const { return unit_; }
    bool is_trivial() const { return exponent_ == 0; }

    friend bool operator==(const Frequency&, const Frequency&) = default;

  private:
    PrimeBase base_;
    int exponent_;
    long long unit_;
};

/**
 * A frequency written as numerator / p^denominator_exponent before
 * normalization, e.g. parsed from "5/4". normalized() strips shared powers
 * of p and reduces the numerator to the canonical representative of the
 * same class modulo Z_p.
 */
struct RawFrequency {
    long long numerator = 0;
    int denominator_exponent = 0;

    Frequency normalized(const PrimeBase& base) const;
};

// Exact sum of two raw frequencies over a common power-of-p denominator.
RawFrequency raw_frequency_sum(const PrimeBase& base, const RawFrequency& a,
                               const RawFrequency& b);

/// The ball c + p^k Z_p inside Z_p: radius p^{-k}, Haar measure p^{-k}.
/// The center is reduced into [0, p^k) at construction.
class Ball {
  public:
    Ball(PrimeBase base, int level, long long center);

    PrimeBase base() const { return base_; }
    int level() const { return level_; }
    long long center() const { return center_; }
    Rational measure() const;

    // Whether `other` is contained in this ball (same base assumed).
    bool contains(const Ball& other) const;

    friend bool operator==(const Ball&, const Ball&) = default;
    // Canonical order: by (level, center). Same base assumed.
    friend bool operator<(const Ball& a, const Ball& b);

  private:
    PrimeBase base_;
    int level_;
    long long center_;
};

/**
 * Canonical finite disjoint union of maximal balls: the normal form every
 * bounded tile reduces to. Invariants: balls pairwise disjoint, no p
 * siblings all present (they would merge into the parent ball), sorted by
 * (level, center). Canonical form is unique, so structural equality is
 * semantic equality. Only canonicalize() builds one.
 */
class CompactOpenSet {
  public:
    static CompactOpenSet empty(PrimeBase base);
    static CompactOpenSet whole(PrimeBase base);  // Z_p itself

    PrimeBase base() const { return base_; }
    const std::vector<Ball>& balls() const { return balls_; }
    bool is_empty() const { return balls_.empty(); }
    int max_level() const;  // 0 for the empty set
    Rational measure() const;

    friend bool operator==(const CompactOpenSet&, const CompactOpenSet&) = default;

  private:
    CompactOpenSet(PrimeBase base, std::vector<Ball> balls);
    friend CompactOpenSet canonicalize(PrimeBase base, const std::vector<Ball>& balls);

    PrimeBase base_;
    std::vector<Ball> balls_;
};

/**
 * A subset of Z/p^n: the discretization of a measurable subset of Z_p at
 * resolution p^{-n}, stored as a characteristic bit vector of length p^n.
 */
class LevelSet {
  public:
    LevelSet(PrimeBase base, int level, const std::vector<long long>& members);
    static LevelSet from_bits(PrimeBase base, int level, std::vector<bool> bits);

    PrimeBase base() const { return base_; }
    int level() const { return level_; }
    long long modulus() const { return static_cast<long long>(bits_.size()); }
    bool contains(long long residue) const;
    long long size() const;
    Rational measure() const;  // size / p^level
    std::vector<long long> members() const;
    const std::vector<bool>& bits() const { return bits_; }

    // Every member keeps all p^(new_level - level) digit extensions.
    LevelSet lifted(int new_level) const;
    // Exact coarsening; throws PrecisionError unless the set is a union of
    // cells mod p^new_level.
    LevelSet restricted(int new_level) const;

    friend bool operator==(const LevelSet&, const LevelSet&) = default;

  private:
    LevelSet(PrimeBase base, int level, std::vector<bool> bits, int);

    PrimeBase base_;
    int level_;
    std::vector<bool> bits_;
};

/**
 * A finite set of p-adic integers known mod p^n: the type of tiling
 * complements and of supports of point measures. Points are strictly
 * increasing residues in [0, p^n); equal residues would mean two points the
 * known digits cannot tell apart, so duplicates raise PrecisionError.
 */
class PointSet {
  public:
    PointSet(PrimeBase base, int precision, std::vector<long long> points);

    PrimeBase base() const { return base_; }
    int precision() const { return precision_; }
    const std::vector<long long>& points() const { return points_; }
    long long size() const { return static_cast<long long>(points_.size()); }

    // Same integers read at another precision. Raising precision appends
    // zero digits; lowering reduces mod p^n and must keep points distinct.
    PointSet with_precision(int new_precision) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

  private:
    PrimeBase base_;
    int precision_;
    std::vector<long long> points_;
};

// ---- operations ----

// Exponent of p in a nonzero rational: x = p^v * (a/b) with p dividing
// neither a nor b. Throws DomainError on zero (its valuation is infinite).
long long valuation(const PrimeBase& base, const Rational& x);

// max over distinct pairs of v_p(t - t'); -1 for a singleton (no pairs).
// Always < precision since distinct residues differ below p^n.
int max_pairwise_valuation(const PointSet& t);

// Value m / p^k with k = max(exponent, 0).
struct FractionalPart {
    int exponent;
    long long numerator;

    friend bool operator==(const FractionalPart&, const FractionalPart&) = default;
};

// The fractional part {t * xi}. Needs t known mod p^k, else PrecisionError.
FractionalPart fractional_part(const Frequency& xi, const PAdicInt& t);

// Canonical form (disjoint, maximal, sorted) of a union of balls.
// Measure is preserved exactly. Throws DomainError on mixed primes.
CompactOpenSet canonicalize(PrimeBase base, const std::vector<Ball>& balls);

// Bit vector of the residues mod p^level covered by s. Requires
// level >= s.max_level(), else PrecisionError.
LevelSet to_level_set(const CompactOpenSet& s, int level);

// The compact open set whose level-n cells are exactly omega's members.
CompactOpenSet to_compact_open(const LevelSet& omega);

enum class SetOp { Union, Intersect, Difference };

// Exact set algebra on canonical sets, computed at the finest common level.
CompactOpenSet set_algebra(const CompactOpenSet& a, const CompactOpenSet& b, SetOp op);

// Z_p minus a.
CompactOpenSet complement(const CompactOpenSet& a);

}  // namespace ptiles
