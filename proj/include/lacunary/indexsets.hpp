#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lacunary/intpoly.hpp"

namespace lacunary {

/// A set of non-negative integers certified up to an explicit bound.
/// Membership and counting past the bound fail loudly rather than
/// extrapolating; truncations never silently lie about the infinite set
/// they stand in for.
class IndexSet {
public:
    IndexSet() = default;

    const std::string& spec() const { return spec_; }
    long bound() const { return bound_; }

    bool contains(long n) const {
        if (n < 0) return false;
        if (n > bound_) throw Error("bound exceeded: index " + std::to_string(n) +
                                    " past certification bound " + std::to_string(bound_));
        return bit(n);
    }

    /// #S(x) = number of members <= x.
    long count_upto(long x) const {
        if (x < 0) return 0;
        if (x > bound_) throw Error("bound exceeded: count at " + std::to_string(x) +
                                    " past certification bound " + std::to_string(bound_));
        auto it = std::upper_bound(members_.begin(), members_.end(), x);
        return static_cast<long>(it - members_.begin());
    }

    std::size_t size() const { return members_.size(); }

    /// 1-based: the j-th member in increasing order.
    long nth(std::size_t j) const {
        if (j == 0 || j > members_.size())
            throw Error("bound exceeded: set has only " + std::to_string(members_.size()) +
                        " certified members, asked for #" + std::to_string(j));
        return members_[j - 1];
    }

    /// Smallest member >= t, if certified.
    std::optional<long> next_geq(long t) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), t);
        if (it == members_.end()) return std::nullopt;
        return *it;
    }

    const std::vector<long>& members() const { return members_; }

    /// 1-based rank of a member (its index in increasing order), if present.
    std::optional<std::size_t> rank_of(long n) const {
        auto it = std::lower_bound(members_.begin(), members_.end(), n);
        if (it == members_.end() || *it != n) return std::nullopt;
        return static_cast<std::size_t>(it - members_.begin()) + 1;
    }

    /// Witness pair (i, j), i < j, recorded for partial sumsets.
    std::optional<std::pair<long, long>> witness(long n) const {
        auto it = witnesses_.find(n);
        if (it == witnesses_.end()) return std::nullopt;
        return it->second;
    }

    // -- constructors ------------------------------------------------------

    static IndexSet explicit_list(std::vector<long> xs, long bound, std::string spec = "") {
        IndexSet s;
        s.bound_ = bound;
        s.alloc();
        for (long x : xs) {
            if (x < 0) throw ConfigError("negative index in set");
            if (x <= bound) s.set_bit(x);
        }
        s.collect();
        s.spec_ = spec.empty() ? "list" : std::move(spec);
        return s;
    }

    static IndexSet progression(long offset, long step, long bound) {
        if (offset < 0 || step <= 0) throw ConfigError("progression needs offset >= 0, step >= 1");
        IndexSet s;
        s.bound_ = bound;
        s.alloc();
        for (long n = offset; n <= bound; n += step) s.set_bit(n);
        s.collect();
        s.prog_ = {offset, step};
        s.spec_ = step == 1 && offset == 0
                      ? "all"
                      : "progression:" + std::to_string(offset) + "," + std::to_string(step);
        return s;
    }

    static IndexSet all(long bound) { return progression(0, 1, bound); }

    static IndexSet primes(long bound) {
        IndexSet s;
        s.bound_ = bound;
        s.alloc();
        if (bound >= 2) {
            std::vector<bool> sieve(bound + 1, true);
            sieve[0] = sieve[1] = false;
            for (long p = 2; p * p <= bound; ++p)
                if (sieve[p])
                    for (long m = p * p; m <= bound; m += p) sieve[m] = false;
            for (long n = 2; n <= bound; ++n)
                if (sieve[n]) s.set_bit(n);
        }
        s.collect();
        s.spec_ = "primes:" + std::to_string(bound);
        return s;
    }

    static IndexSet union_of(const IndexSet& a, const IndexSet& b, long bound) {
        require_certified(a, bound);
        require_certified(b, bound);
        IndexSet s;
        s.bound_ = bound;
        s.alloc();
        for (long m : a.members_)
            if (m <= bound) s.set_bit(m);
        for (long m : b.members_)
            if (m <= bound) s.set_bit(m);
        s.collect();
        s.spec_ = "union(" + a.spec_ + "," + b.spec_ + ")";
        return s;
    }

    static IndexSet complement_within(const IndexSet& a, long bound) {
        require_certified(a, bound);
        IndexSet s;
        s.bound_ = bound;
        s.alloc();
        for (long n = 0; n <= bound; ++n)
            if (!a.bit(n)) s.set_bit(n);
        s.collect();
        s.spec_ = "complement(" + a.spec_ + ")";
        return s;
    }

    friend IndexSet sumset(const IndexSet& a, const IndexSet& b, long bound);
    friend IndexSet partial_sumset(const IndexSet& a, const IndexSet& b, long bound);

    void rename_spec(std::string s) { spec_ = std::move(s); }

private:
    std::string spec_;
    long bound_ = -1;
    std::vector<std::uint64_t> bits_;
    std::vector<long> members_;
    std::map<long, std::pair<long, long>> witnesses_;
    std::optional<std::pair<long, long>> prog_;  // (offset, step) fast path

    static void require_certified(const IndexSet& s, long bound) {
        if (s.bound_ < bound)
            throw Error("bound exceeded: operand certified to " + std::to_string(s.bound_) +
                        " but " + std::to_string(bound) + " required");
    }

    void alloc() { bits_.assign(static_cast<std::size_t>(bound_ / 64 + 1), 0); }
    void set_bit(long n) { bits_[n >> 6] |= (std::uint64_t{1} << (n & 63)); }
    bool bit(long n) const { return (bits_[n >> 6] >> (n & 63)) & 1u; }
    void collect() {
        members_.clear();
        for (long n = 0; n <= bound_; ++n)
            if (bit(n)) members_.push_back(n);
    }
};

/// Exact {a + b} restricted to [0, bound].
inline IndexSet sumset(const IndexSet& a, const IndexSet& b, long bound) {
    IndexSet::require_certified(a, bound);
    IndexSet::require_certified(b, bound);
    IndexSet s;
    s.bound_ = bound;
    s.alloc();
    if (a.prog_ && b.prog_) {
        // reachability: o1+o2 plus any non-negative combination of the steps
        auto [o1, s1] = *a.prog_;
        auto [o2, s2] = *b.prog_;
        long start = o1 + o2;
        if (start <= bound) {
            s.set_bit(start);
            for (long n = start; n <= bound; ++n) {
                if (!s.bit(n)) continue;
                if (n + s1 <= bound) s.set_bit(n + s1);
                if (n + s2 <= bound) s.set_bit(n + s2);
            }
        }
        s.collect();
        s.spec_ = "sumset(" + a.spec_ + "," + b.spec_ + ")";
        return s;
    }
    // shifted bitwise OR of b's mask for each member of a
    double work = static_cast<double>(a.members_.size()) * (static_cast<double>(bound) / 64.0 + 1);
    if (work > 4e8) throw ConfigError("sumset materialization too large at this bound");
    std::size_t words = s.bits_.size();
    for (long av : a.members_) {
        if (av > bound) break;
        std::size_t wshift = static_cast<std::size_t>(av >> 6);
        unsigned bshift = static_cast<unsigned>(av & 63);
        for (std::size_t w = 0; w + wshift < words; ++w) {
            std::uint64_t chunk = b.bits_[w];
            if (chunk == 0) continue;
            s.bits_[w + wshift] |= chunk << bshift;
            if (bshift && w + wshift + 1 < words) s.bits_[w + wshift + 1] |= chunk >> (64 - bshift);
        }
    }
    // clear anything past the bound introduced by the shifts
    for (long n = bound + 1; n < static_cast<long>(words) * 64; ++n)
        s.bits_[n >> 6] &= ~(std::uint64_t{1} << (n & 63));
    s.collect();
    s.spec_ = "sumset(" + a.spec_ + "," + b.spec_ + ")";
    return s;
}

/// Exact {a_i + b_j : 1 <= i < j} restricted to [0, bound], with one witness
/// pair per member: smallest j first, then smallest i.
inline IndexSet partial_sumset(const IndexSet& a, const IndexSet& b, long bound) {
    IndexSet::require_certified(a, bound);
    IndexSet::require_certified(b, bound);
    IndexSet s;
    s.bound_ = bound;
    s.alloc();
    const auto& av = a.members_;
    const auto& bv = b.members_;
    double work = static_cast<double>(av.size()) * static_cast<double>(bv.size());
    if (work > 4e8) throw ConfigError("partial sumset materialization too large at this bound");
    for (std::size_t j = 2; j <= bv.size(); ++j) {
        long bj = bv[j - 1];
        if (bj > bound) break;
        for (std::size_t i = 1; i < j && i <= av.size(); ++i) {
            long v = av[i - 1] + bj;
            if (v > bound) break;
            s.set_bit(v);
            if (!s.witnesses_.count(v))
                s.witnesses_[v] = {static_cast<long>(i), static_cast<long>(j)};
        }
    }
    s.collect();
    s.spec_ = "partial(" + a.spec_ + "," + b.spec_ + ")";
    return s;
}

/// #S(x) as an exact count; thin wrapper kept for symmetry with the profile.
inline long count_upto(const IndexSet& s, long x) { return s.count_upto(x); }

struct DensityProfile {
    struct Checkpoint {
        long x;
        long count;
        Rat ratio;  // #S(x)/x, exact; #S(0)/1 at x = 0 by convention
    };
    std::vector<Checkpoint> checkpoints;
};

inline DensityProfile density_profile(const IndexSet& s, const std::vector<long>& xs) {
    DensityProfile p;
    for (long x : xs) {
        long c = s.count_upto(x);
        p.checkpoints.push_back({x, c, x > 0 ? Rat(Int(c)) / Rat(Int(x)) : Rat(Int(c))});
    }
    return p;
}

/// L(f, M) over [0, bound] from a coefficient stream. The stream must cover
/// every index of [0, bound] exactly once.
inline IndexSet coefficient_level_set(const std::vector<std::pair<long, Int>>& stream,
                                      const Int& M, long bound) {
    if (M < 0) throw ConfigError("level M must be >= 0");
    std::vector<char> seen(bound + 1, 0);
    std::vector<long> hits;
    for (const auto& [n, a] : stream) {
        if (n < 0 || n > bound) continue;
        if (seen[n]) throw Error("incomplete stream: duplicate index " + std::to_string(n));
        seen[n] = 1;
        if (abs(a) <= M) hits.push_back(n);
    }
    for (long n = 0; n <= bound; ++n)
        if (!seen[n]) throw Error("incomplete stream: missing index " + std::to_string(n));
    return IndexSet::explicit_list(std::move(hits), bound, "levelset");
}

}  // namespace lacunary
