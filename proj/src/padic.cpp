#include "ptiles/padic.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ptiles {

namespace {

long long mul_mod(long long a, long long b, long long modulus) {
    return static_cast<long long>(static_cast<__int128>(a) * b % modulus);
}

}  // namespace

long long checked_pow(long long base, int exp) {
    if (exp < 0) throw DomainError("checked_pow: negative exponent");
    __int128 acc = 1;
    for (int i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > static_cast<__int128>(1) << 62)
            throw DomainError("checked_pow: " + std::to_string(base) + "^" +
                              std::to_string(exp) + " overflows");
    }
    return static_cast<long long>(acc);
}

PrimeBase::PrimeBase(long long p) : p_(p) {
    if (p < 2) throw DomainError("prime base must be >= 2, got " + std::to_string(p));
    for (long long d = 2; d * d <= p; ++d) {
        if (p % d == 0)
            throw DomainError("prime base must be prime, got " + std::to_string(p) +
                              " = " + std::to_string(d) + " * " + std::to_string(p / d));
    }
}

void require_same_base(const PrimeBase& a, const PrimeBase& b) {
    if (!(a == b))
        throw DomainError("mixed prime bases: p=" + std::to_string(a.p()) +
                          " vs p=" + std::to_string(b.p()));
}

PAdicInt::PAdicInt(PrimeBase base, int precision, long long value)
    : base_(base), precision_(precision), residue_(0) {
    if (precision < 0) throw DomainError("precision must be >= 0");
    residue_ = floor_mod(value, base_.pow(precision));
}

long long PAdicInt::residue_mod(int k) const {
    if (k < 0) throw DomainError("residue_mod: negative exponent");
    if (k > precision_)
        throw PrecisionError("residue known mod p^" + std::to_string(precision_) +
                             " only, asked mod p^" + std::to_string(k));
    return residue_ % base_.pow(k);
}

Frequency::Frequency(PrimeBase base, int exponent, long long unit)
    : base_(base), exponent_(exponent), unit_(unit) {
    if (exponent_ <= 0) {
        // Any xi in Z_p: only triviality is observable, so normalize fully.
        if (unit_ != 0)
            throw DomainError("trivial frequency must carry unit 0");
        exponent_ = 0;
        return;
    }
    long long modulus = base_.pow(exponent_);
    if (unit_ < 0 || unit_ >= modulus)
        throw DomainError("frequency unit out of range [0, p^k)");
    if (unit_ % base_.p() == 0)
        throw DomainError("frequency unit must be a unit: p divides " +
                          std::to_string(unit_));
}

Frequency RawFrequency::normalized(const PrimeBase& base) const {
    long long num = numerator;
    int k = denominator_exponent;
    if (num == 0 || k <= 0) return Frequency::trivial(base);
    while (k > 0 && num % base.p() == 0) {
        num /= base.p();
        --k;
    }
    if (k == 0) return Frequency::trivial(base);
    return Frequency(base, k, floor_mod(num, base.pow(k)));
}

RawFrequency raw_frequency_sum(const PrimeBase& base, const RawFrequency& a,
                               const RawFrequency& b) {
    if (a.denominator_exponent < 0 || b.denominator_exponent < 0)
        throw DomainError("raw frequency denominator exponent must be >= 0");
    int k = std::max(a.denominator_exponent, b.denominator_exponent);
    __int128 num = static_cast<__int128>(a.numerator) *
                       checked_pow(base.p(), k - a.denominator_exponent) +
                   static_cast<__int128>(b.numerator) *
                       checked_pow(base.p(), k - b.denominator_exponent);
    if (num > (static_cast<__int128>(1) << 62) || num < -(static_cast<__int128>(1) << 62))
        throw DomainError("raw frequency sum overflows");
    return RawFrequency{static_cast<long long>(num), k};
}

Ball::Ball(PrimeBase base, int level, long long center)
    : base_(base), level_(level), center_(0) {
    if (level < 0) throw DomainError("ball level must be >= 0");
    center_ = floor_mod(center, base_.pow(level));
}

Rational Ball::measure() const {
    return Rational(1, base_.pow(level_));
}

bool Ball::contains(const Ball& other) const {
    if (other.level_ < level_) return false;
    return other.center_ % base_.pow(level_) == center_;
}

bool operator<(const Ball& a, const Ball& b) {
    if (a.level_ != b.level_) return a.level_ < b.level_;
    return a.center_ < b.center_;
}

CompactOpenSet::CompactOpenSet(PrimeBase base, std::vector<Ball> balls)
    : base_(base), balls_(std::move(balls)) {}

CompactOpenSet CompactOpenSet::empty(PrimeBase base) {
    return CompactOpenSet(base, {});
}

CompactOpenSet CompactOpenSet::whole(PrimeBase base) {
    return CompactOpenSet(base, {Ball(base, 0, 0)});
}

int CompactOpenSet::max_level() const {
    int m = 0;
    for (const Ball& b : balls_) m = std::max(m, b.level());
    return m;
}

Rational CompactOpenSet::measure() const {
    Rational total(0);
    for (const Ball& b : balls_) total += b.measure();
    return total;
}

namespace {

// p-ary trie over the digits of ball centers, least significant first.
// A full node is a ball wholly contained in the union; inserting under a
// full node is absorption, and a node whose p children are all full merges
// into a full node itself.
struct TrieNode {
    bool full = false;
    std::map<long long, int> children;  // digit -> node index
};

class BallTrie {
  public:
    explicit BallTrie(PrimeBase base) : base_(base) { nodes_.emplace_back(); }

    void insert(const Ball& ball) {
        int cur = 0;
        long long digits = ball.center();
        for (int depth = 0; depth < ball.level(); ++depth) {
            if (nodes_[cur].full) return;  // absorbed by a coarser ball
            long long digit = digits % base_.p();
            digits /= base_.p();
            auto it = nodes_[cur].children.find(digit);
            if (it == nodes_[cur].children.end()) {
                nodes_.emplace_back();
                it = nodes_[cur].children.emplace(digit, static_cast<int>(nodes_.size()) - 1).first;
            }
            cur = it->second;
        }
        nodes_[cur].full = true;
        nodes_[cur].children.clear();
    }

    std::vector<Ball> collect() {
        merge(0);
        std::vector<Ball> out;
        emit(0, 0, 0, out);
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    void merge(int node) {
        for (auto& [digit, child] : nodes_[node].children) merge(child);
        if (nodes_[node].full) return;
        if (static_cast<long long>(nodes_[node].children.size()) != base_.p()) return;
        for (auto& [digit, child] : nodes_[node].children)
            if (!nodes_[child].full) return;
        nodes_[node].full = true;
        nodes_[node].children.clear();
    }

    void emit(int node, int depth, long long center, std::vector<Ball>& out) const {
        if (nodes_[node].full) {
            out.emplace_back(base_, depth, center);
            return;
        }
        for (const auto& [digit, child] : nodes_[node].children)
            emit(child, depth + 1, center + digit * base_.pow(depth), out);
    }

    PrimeBase base_;
    std::vector<TrieNode> nodes_;
};

}  // namespace

CompactOpenSet canonicalize(PrimeBase base, const std::vector<Ball>& balls) {
    BallTrie trie(base);
    for (const Ball& b : balls) {
        require_same_base(base, b.base());
        trie.insert(b);
    }
    return CompactOpenSet(base, trie.collect());
}

LevelSet::LevelSet(PrimeBase base, int level, const std::vector<long long>& members)
    : base_(base), level_(level) {
    if (level < 0) throw DomainError("level must be >= 0");
    long long modulus = base_.pow(level);
    if (modulus > kMaxCells) throw DomainError("resolution p^n too large");
    bits_.assign(static_cast<std::size_t>(modulus), false);
    for (long long m : members) {
        if (m < 0 || m >= modulus)
            throw DomainError("member " + std::to_string(m) + " out of [0, p^n)");
        bits_[static_cast<std::size_t>(m)] = true;
    }
}

LevelSet::LevelSet(PrimeBase base, int level, std::vector<bool> bits, int)
    : base_(base), level_(level), bits_(std::move(bits)) {}

LevelSet LevelSet::from_bits(PrimeBase base, int level, std::vector<bool> bits) {
    if (level < 0) throw DomainError("level must be >= 0");
    long long modulus = base.pow(level);
    if (modulus > kMaxCells) throw DomainError("resolution p^n too large");
    if (static_cast<long long>(bits.size()) != modulus)
        throw DomainError("bit vector length must be exactly p^n");
    return LevelSet(base, level, std::move(bits), 0);
}

bool LevelSet::contains(long long residue) const {
    return bits_[static_cast<std::size_t>(floor_mod(residue, modulus()))];
}

long long LevelSet::size() const {
    return static_cast<long long>(std::count(bits_.begin(), bits_.end(), true));
}

Rational LevelSet::measure() const {
    return Rational(size(), modulus());
}

std::vector<long long> LevelSet::members() const {
    std::vector<long long> out;
    for (long long i = 0; i < modulus(); ++i)
        if (bits_[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

LevelSet LevelSet::lifted(int new_level) const {
    if (new_level < level_) throw DomainError("lifted: new level below current level");
    long long old_modulus = modulus();
    long long new_modulus = base_.pow(new_level);
    if (new_modulus > kMaxCells) throw DomainError("resolution p^n too large");
    std::vector<bool> bits(static_cast<std::size_t>(new_modulus), false);
    for (long long x = 0; x < new_modulus; ++x)
        bits[static_cast<std::size_t>(x)] = bits_[static_cast<std::size_t>(x % old_modulus)];
    return LevelSet(base_, new_level, std::move(bits), 0);
}

LevelSet LevelSet::restricted(int new_level) const {
    if (new_level > level_) throw DomainError("restricted: new level above current level");
    if (new_level < 0) throw DomainError("level must be >= 0");
    long long new_modulus = base_.pow(new_level);
    std::vector<bool> bits(static_cast<std::size_t>(new_modulus), false);
    for (long long c = 0; c < new_modulus; ++c) {
        // The cell c + p^new_level Z_p must be wholly in or wholly out.
        bool value = bits_[static_cast<std::size_t>(c)];
        for (long long x = c; x < modulus(); x += new_modulus) {
            if (bits_[static_cast<std::size_t>(x)] != value)
                throw PrecisionError("set is not a union of cells mod p^" +
                                     std::to_string(new_level));
        }
        bits[static_cast<std::size_t>(c)] = value;
    }
    return LevelSet(base_, new_level, std::move(bits), 0);
}

PointSet::PointSet(PrimeBase base, int precision, std::vector<long long> points)
    : base_(base), precision_(precision), points_(std::move(points)) {
    if (precision < 1) throw DomainError("point set precision must be >= 1");
    if (points_.empty()) throw DomainError("point set must be nonempty");
    long long modulus = base_.pow(precision);
    std::sort(points_.begin(), points_.end());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i] < 0 || points_[i] >= modulus)
            throw DomainError("point " + std::to_string(points_[i]) + " out of [0, p^n)");
        if (i > 0 && points_[i] == points_[i - 1])
            throw PrecisionError("points collide mod p^" + std::to_string(precision) +
                                 ": " + std::to_string(points_[i]));
    }
}

PointSet PointSet::with_precision(int new_precision) const {
    if (new_precision >= precision_) return PointSet(base_, new_precision, points_);
    long long modulus = base_.pow(new_precision);
    std::vector<long long> reduced;
    reduced.reserve(points_.size());
    for (long long t : points_) reduced.push_back(t % modulus);
    return PointSet(base_, new_precision, std::move(reduced));
}

long long valuation(const PrimeBase& base, const Rational& x) {
    if (x.numerator() == 0) throw DomainError("valuation of zero is infinite");
    long long v = 0;
    long long num = x.numerator();
    long long den = x.denominator();
    while (num % base.p() == 0) {
        num /= base.p();
        ++v;
    }
    while (den % base.p() == 0) {
        den /= base.p();
        --v;
    }
    return v;
}

int max_pairwise_valuation(const PointSet& t) {
    const auto& pts = t.points();
    int best = -1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            long long d = pts[j] - pts[i];
            int v = 0;
            while (d % t.base().p() == 0) {
                d /= t.base().p();
                ++v;
            }
            best = std::max(best, v);
        }
    }
    return best;
}

FractionalPart fractional_part(const Frequency& xi, const PAdicInt& t) {
    require_same_base(xi.base(), t.base());
    int k = xi.exponent();
    if (k <= 0) return FractionalPart{0, 0};
    if (t.precision() < k)
        throw PrecisionError("fractional part of t*xi needs t mod p^" + std::to_string(k) +
                             ", have p^" + std::to_string(t.precision()));
    long long modulus = xi.base().pow(k);
    return FractionalPart{k, mul_mod(t.residue_mod(k), xi.unit(), modulus)};
}

LevelSet to_level_set(const CompactOpenSet& s, int level) {
    if (level < s.max_level())
        throw PrecisionError("level " + std::to_string(level) + " below finest ball level " +
                             std::to_string(s.max_level()));
    long long modulus = s.base().pow(level);
    if (modulus > kMaxCells) throw DomainError("resolution p^n too large");
    std::vector<bool> bits(static_cast<std::size_t>(modulus), false);
    for (const Ball& b : s.balls()) {
        long long step = s.base().pow(b.level());
        for (long long x = b.center(); x < modulus; x += step)
            bits[static_cast<std::size_t>(x)] = true;
    }
    return LevelSet::from_bits(s.base(), level, std::move(bits));
}

CompactOpenSet to_compact_open(const LevelSet& omega) {
    std::vector<Ball> balls;
    for (long long m : omega.members()) balls.emplace_back(omega.base(), omega.level(), m);
    return canonicalize(omega.base(), balls);
}

CompactOpenSet set_algebra(const CompactOpenSet& a, const CompactOpenSet& b, SetOp op) {
    require_same_base(a.base(), b.base());
    int level = std::max(a.max_level(), b.max_level());
    const LevelSet la = to_level_set(a, level);
    const LevelSet lb = to_level_set(b, level);
    const std::vector<bool>& xs = la.bits();
    const std::vector<bool>& ys = lb.bits();
    std::vector<bool> bits(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        switch (op) {
            case SetOp::Union: bits[i] = xs[i] || ys[i]; break;
            case SetOp::Intersect: bits[i] = xs[i] && ys[i]; break;
            case SetOp::Difference: bits[i] = xs[i] && !ys[i]; break;
        }
    }
    return to_compact_open(LevelSet::from_bits(a.base(), level, std::move(bits)));
}

CompactOpenSet complement(const CompactOpenSet& a) {
    return set_algebra(CompactOpenSet::whole(a.base()), a, SetOp::Difference);
}

}  // namespace ptiles
