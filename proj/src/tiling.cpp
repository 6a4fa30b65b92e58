#include "ptiles/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>

#include "ptiles/combinations.hpp"
#include "ptiles/errors.hpp"

namespace ptiles {

namespace {

// Backtracking exact cover over Z/p^n with word-vector bitmasks. The first
// translate t = 0 is pre-placed; each node covers the smallest uncovered
// residue x by branching over t in (x - omega), so every complement is
// reached exactly once (disjointness forces a unique t per residue).
class CoverSearch {
  public:
    explicit CoverSearch(const LevelSet& omega)
        : cells_(omega.modulus()),
          words_(static_cast<std::size_t>((cells_ + 63) / 64)),
          members_(omega.members()),
          omega_mask_(words_, 0) {
        for (long long w : members_) set_bit(omega_mask_, w);
        // Memoizing every translate costs cells * words words of memory;
        // past this size translates are rebuilt per probe instead.
        memoize_ = cells_ <= 4096;
        if (memoize_) {
            table_.assign(static_cast<std::size_t>(cells_) * words_, 0);
            built_.assign(static_cast<std::size_t>(cells_), false);
        }
    }

    std::vector<std::vector<long long>> run() {
        cover_ = omega_mask_;
        // Mark the padding bits of the top word covered so the scan for an
        // uncovered residue never wanders past cells_.
        for (long long b = cells_; b < static_cast<long long>(words_) * 64; ++b)
            set_bit(cover_, b);
        chosen_.assign(1, 0);
        extend();
        for (auto& t : out_) std::sort(t.begin(), t.end());
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

  private:
    static void set_bit(std::vector<std::uint64_t>& mask, long long b) {
        mask[static_cast<std::size_t>(b >> 6)] |= std::uint64_t{1} << (b & 63);
    }

    void build_translate(long long t, std::uint64_t* dst) const {
        for (std::size_t w = 0; w < words_; ++w) dst[w] = 0;
        for (long long m : members_) {
            long long b = m + t;
            if (b >= cells_) b -= cells_;
            dst[static_cast<std::size_t>(b >> 6)] |= std::uint64_t{1} << (b & 63);
        }
    }

    const std::uint64_t* translate(long long t) {
        if (!memoize_) {
            build_translate(t, scratch_.data());
            return scratch_.data();
        }
        std::uint64_t* row = table_.data() + static_cast<std::size_t>(t) * words_;
        if (!built_[static_cast<std::size_t>(t)]) {
            build_translate(t, row);
            built_[static_cast<std::size_t>(t)] = true;
        }
        return row;
    }

    long long first_uncovered() const {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t open = ~cover_[w];
            if (open) return static_cast<long long>(w) * 64 + __builtin_ctzll(open);
        }
        return -1;
    }

    void extend() {
        long long x = first_uncovered();
        if (x < 0) {
            out_.push_back(chosen_);
            return;
        }
        std::vector<long long> cand;
        cand.reserve(members_.size());
        for (long long m : members_) {
            long long t = x - m;
            cand.push_back(t < 0 ? t + cells_ : t);
        }
        std::sort(cand.begin(), cand.end());
        std::vector<std::uint64_t> saved;
        for (long long t : cand) {
            const std::uint64_t* tm = translate(t);
            bool clash = false;
            for (std::size_t w = 0; w < words_ && !clash; ++w)
                clash = (cover_[w] & tm[w]) != 0;
            if (clash) continue;
            for (std::size_t w = 0; w < words_; ++w) cover_[w] ^= tm[w];
            chosen_.push_back(t);
            extend();
            chosen_.pop_back();
            tm = translate(t);  // scratch may have been overwritten below us
            for (std::size_t w = 0; w < words_; ++w) cover_[w] ^= tm[w];
        }
    }

    long long cells_;
    std::size_t words_;
    std::vector<long long> members_;
    std::vector<std::uint64_t> omega_mask_;
    bool memoize_ = true;
    std::vector<std::uint64_t> table_;
    std::vector<bool> built_;
    std::vector<std::uint64_t> scratch_ = std::vector<std::uint64_t>(words_, 0);
    std::vector<std::uint64_t> cover_;
    std::vector<long long> chosen_;
    std::vector<std::vector<long long>> out_;
};

void require_matched_level(const LevelSet& omega, const PointSet& t_set) {
    require_same_base(omega.base(), t_set.base());
    if (omega.level() != t_set.precision())
        throw DomainError("tile level " + std::to_string(omega.level()) +
                          " != complement precision " + std::to_string(t_set.precision()));
}

// Member count per residue class mod p^{gamma+1}.
std::vector<long long> cell_counts(const LevelSet& omega, int cell_level) {
    long long cells = omega.base().pow(cell_level);
    std::vector<long long> count(static_cast<std::size_t>(cells), 0);
    const std::vector<bool>& bits = omega.bits();
    for (long long m = 0; m < omega.modulus(); ++m)
        if (bits[static_cast<std::size_t>(m)]) ++count[static_cast<std::size_t>(m % cells)];
    return count;
}

}  // namespace

GammaT gamma_t(const PointSet& t_set) {
    if (t_set.size() < 2)
        throw DomainError("gamma_T needs at least two points, got " +
                          std::to_string(t_set.size()));
    return GammaT{max_pairwise_valuation(t_set)};
}

TilingReport verify_tiling(const LevelSet& omega, const PointSet& t_set) {
    require_matched_level(omega, t_set);
    long long cells = omega.modulus();
    std::vector<long long> count(static_cast<std::size_t>(cells), 0);
    std::vector<long long> members = omega.members();
    for (long long t : t_set.points()) {
        for (long long m : members) {
            long long x = m + t;
            if (x >= cells) x -= cells;
            ++count[static_cast<std::size_t>(x)];
        }
    }
    TilingReport report;
    report.is_tiling = true;
    for (long long x = 0; x < cells; ++x) {
        ++report.coverage_histogram[count[static_cast<std::size_t>(x)]];
        if (count[static_cast<std::size_t>(x)] != 1 && report.is_tiling) {
            report.is_tiling = false;
            report.witness = x;
        }
    }
    return report;
}

TilingReport verify_tiling_spectral(const LevelSet& omega, const PointSet& t_set) {
    require_matched_level(omega, t_set);
    TilingReport report;
    int n = omega.level();
    if (omega.size() * t_set.size() != omega.base().pow(n)) {
        return report;  // mass condition already fails
    }
    for (int k = 1; k <= n; ++k) {
        long long modulus = omega.base().pow(k);
        for (long long u = 1; u < modulus; ++u) {
            if (u % omega.base().p() == 0) continue;
            Frequency xi(omega.base(), k, u);
            if (ft_level_set(omega, xi).is_zero()) continue;
            if (ft_point_measure(t_set, xi).is_zero()) continue;
            report.witness_frequency = xi;
            return report;
        }
    }
    report.is_tiling = true;
    return report;
}

CompactOpenSet regularize(const LevelSet& omega, const PointSet& t_set) {
    require_same_base(omega.base(), t_set.base());
    int cell_level = max_pairwise_valuation(t_set) + 1;
    if (omega.level() < cell_level)
        throw PrecisionError("level " + std::to_string(omega.level()) +
                             " set cannot resolve cells mod p^" +
                             std::to_string(cell_level));
    long long capacity = omega.base().pow(omega.level() - cell_level);
    std::vector<long long> count = cell_counts(omega, cell_level);
    std::vector<Ball> kept;
    for (long long c = 0; c < static_cast<long long>(count.size()); ++c) {
        long long inside = count[static_cast<std::size_t>(c)];
        if (2 * inside == capacity)
            throw AmbiguousCellError("cell " + std::to_string(c) + " mod p^" +
                                     std::to_string(cell_level) +
                                     " is split exactly in half");
        if (2 * inside > capacity) kept.emplace_back(omega.base(), cell_level, c);
    }
    return canonicalize(omega.base(), kept);
}

std::vector<PointSet> find_complements(const LevelSet& omega) {
    long long cells = omega.modulus();
    long long m = omega.size();
    if (m == 0 || cells % m != 0) return {};
    std::vector<std::vector<long long>> raw = CoverSearch(omega).run();
    std::vector<PointSet> out;
    out.reserve(raw.size());
    // Z/p^0 is the one-point group; its complement {0} only has a
    // representation at precision 1.
    int precision = std::max(omega.level(), 1);
    for (auto& t : raw) out.emplace_back(omega.base(), precision, std::move(t));
    return out;
}

bool theorem_shadow_check(const LevelSet& omega, const PointSet& t_set) {
    if (!verify_tiling(omega, t_set).is_tiling)
        throw DomainError("shadow check is only defined for tiling pairs");
    int cell_level = max_pairwise_valuation(t_set) + 1;
    long long capacity = omega.base().pow(omega.level() - cell_level);
    for (long long inside : cell_counts(omega, cell_level))
        if (inside != 0 && inside != capacity) return false;
    return true;
}

namespace {

// Runs fn(members) for every size-m subset of Z/p^n containing 0, in
// lexicographic order, ranks [lo, hi) of the combinations of {1..p^n-1}.
template <typename F>
void scan_candidates(long long cells, long long m, long long lo, long long hi, F&& fn) {
    if (hi <= lo) return;
    std::vector<long long> idx = unrank_combination(cells - 1, m - 1, lo);
    std::vector<long long> members(static_cast<std::size_t>(m));
    for (long long r = lo; r < hi; ++r) {
        members[0] = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) members[i + 1] = idx[i] + 1;
        fn(members);
        if (r + 1 < hi) next_combination(idx, cells - 1);
    }
}

}  // namespace

std::vector<CensusRecord> census(const PrimeBase& base, int n, long long m, int jobs) {
    if (n < 0) throw DomainError("census level must be >= 0");
    long long cells = base.pow(n);
    if (cells > kMaxCells)
        throw DomainError("census over p^" + std::to_string(n) + " cells is too large");
    if (m < 1 || m > cells) return {};
    long long q = m;
    while (q % base.p() == 0) q /= base.p();
    if (q != 1) return {};  // |omega| * |T| = p^n forces a power of p

    auto inspect = [&](const std::vector<long long>& members,
                       std::vector<CensusRecord>& sink) {
        LevelSet omega(base, n, members);
        std::vector<PointSet> complements = find_complements(omega);
        if (complements.empty()) return;
        int gamma = max_pairwise_valuation(complements.front());
        for (const PointSet& t : complements)
            gamma = std::min(gamma, max_pairwise_valuation(t));
        sink.push_back(CensusRecord{omega, std::move(complements), gamma,
                                    to_compact_open(omega)});
    };

    long long total = binomial(cells - 1, m - 1);
    long long workers = std::max(1, jobs);
    if (workers > total) workers = total;
    if (workers <= 1) {
        std::vector<CensusRecord> out;
        scan_candidates(cells, m, 0, total,
                        [&](const std::vector<long long>& mem) { inspect(mem, out); });
        return out;
    }

    std::vector<std::vector<CensusRecord>> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (long long w = 0; w < workers; ++w) {
        long long lo = total * w / workers;
        long long hi = total * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            scan_candidates(cells, m, lo, hi, [&](const std::vector<long long>& mem) {
                inspect(mem, parts[static_cast<std::size_t>(w)]);
            });
        });
    }
    for (auto& th : pool) th.join();
    std::vector<CensusRecord> out;
    for (auto& part : parts)
        for (auto& rec : part) out.push_back(std::move(rec));
    return out;
}

std::vector<std::pair<LevelSet, long long>> enumerate_tiles(const PrimeBase& base, int n,
                                                            long long m, int jobs) {
    std::vector<std::pair<LevelSet, long long>> out;
    for (const CensusRecord& rec : census(base, n, m, jobs))
        out.emplace_back(rec.omega, static_cast<long long>(rec.complements.size()));
    return out;
}

}  // namespace ptiles
