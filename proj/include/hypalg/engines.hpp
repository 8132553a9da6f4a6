#pragma once

/**
 * @file engines.hpp
 * @brief General Poincaré-series engines: the Koszul reciprocal, the Golod
 *        bound, Fröberg's Koszul-homology formula, and the enumerator of
 *        non-touching paths that feeds the latter.
 */

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exactalg.hpp"

namespace hypalg {

/// Counts of surviving Koszul-homology monomials keyed by
/// (r = product length, w = total homological weight).
class BigradedCounts {
public:
    using Key = std::pair<int, int>;

    BigradedCounts() { counts_[{0, 0}] = 1; }

    /// Throws InvalidInput on keys violating r >= 1, w >= r.
    void add(int r, int w, std::uint64_t value)
    {
        if (r < 1 || w < r)
            throw InvalidInput("bigraded count needs r >= 1 and w >= r");
        if (value == 0)
            return;
        counts_[{r, w}] += value;
    }

    std::uint64_t get(int r, int w) const
    {
        auto it = counts_.find({r, w});
        return it == counts_.end() ? 0 : it->second;
    }

    const std::map<Key, std::uint64_t>& counts() const { return counts_; }

    int max_product_length() const
    {
        int m = 0;
        for (const auto& c : counts_)
            m = std::max(m, c.first.first);
        return m;
    }

    friend bool operator==(const BigradedCounts&, const BigradedCounts&) = default;

private:
    std::map<Key, std::uint64_t> counts_;
};

/// 1 / H(-t), valid for Koszul algebras. H must have constant term 1.
inline RationalFunction koszul_poincare(const RationalFunction& h_series)
{
    const Integer d0 = h_series.denominator()[0];
    if (d0 == 0 || h_series.numerator()[0] != d0)
        throw InvalidInput("Hilbert series must have constant term 1: " + h_series.to_string());
    return h_series.negate_variable().reciprocal();
}

/// (1+t)^embdim / (1 - sum_i beta_i t^{i+1}); total_betti[0] is beta_1.
inline RationalFunction golod_poincare(std::size_t embdim, const std::vector<Integer>& total_betti)
{
    if (embdim == 0)
        throw InvalidInput("embedding dimension must be positive");
    if (total_betti.empty())
        throw InvalidInput("total Betti list must be nonempty");
    Polynomial den{1};
    for (std::size_t k = 0; k < total_betti.size(); ++k) {
        if (total_betti[k] < 0)
            throw InvalidInput("Betti numbers must be nonnegative");
        den -= Polynomial::monomial(total_betti[k], k + 2);
    }
    return {Polynomial::one_plus_t_pow(embdim), den};
}

enum class PathShape { line, cycle };

inline constexpr int kMaxPathEdges = 24;

/// Counts sets of pairwise non-touching index intervals ("paths") by
/// (number of paths, total edge count).
///
/// Line: intervals inside 1..n. Cycle: intervals of length 1..n-1 on the
/// indices mod n, plus the whole cycle once. Two intervals may be chosen
/// together only if at least one unused index separates them.
inline BigradedCounts disjoint_path_counts(PathShape shape, int n)
{
    if (n < 1 || (shape == PathShape::cycle && n < 3))
        throw RangeError("disjoint_path_counts: n out of range");
    if (n > kMaxPathEdges)
        throw SizeLimitError("path enumeration is limited to " + std::to_string(kMaxPathEdges) + " edges");

    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    auto rotl = [&](std::uint32_t m) { return ((m << 1U) | (m >> (n - 1))) & full; };
    auto rotr = [&](std::uint32_t m) { return ((m >> 1U) | (m << (n - 1))) & full; };

    struct Interval {
        std::uint32_t mask;
        std::uint32_t halo; // mask plus both neighbouring indices
        int length;
    };
    std::vector<Interval> intervals;
    if (shape == PathShape::line) {
        for (int start = 0; start < n; ++start)
            for (int len = 1; start + len <= n; ++len) {
                const std::uint32_t m = ((std::uint32_t{1} << len) - 1) << start;
                intervals.push_back({m, (m | (m << 1U) | (m >> 1U)) & full, len});
            }
    } else {
        for (int start = 0; start < n; ++start)
            for (int len = 1; len < n; ++len) {
                std::uint32_t m = 0;
                for (int k = 0; k < len; ++k)
                    m |= std::uint32_t{1} << ((start + k) % n);
                intervals.push_back({m, m | rotl(m) | rotr(m), len});
            }
    }

    BigradedCounts counts;
    if (shape == PathShape::cycle)
        counts.add(1, n, 1);
    // Choose intervals in increasing list order so each set is counted once.
    auto dfs = [&](auto&& self, std::size_t from, std::uint32_t blocked, int r, int w) -> void {
        for (std::size_t k = from; k < intervals.size(); ++k) {
            const auto& iv = intervals[k];
            if (iv.mask & blocked)
                continue;
            counts.add(r + 1, w + iv.length, 1);
            self(self, k + 1, blocked | iv.halo, r + 1, w + iv.length);
        }
    };
    dfs(dfs, 0, 0, 0, 0);
    return counts;
}

/// Denominator of Fröberg's formula: sum counts(r, w) (-1)^r t^{w+r}.
inline Polynomial froberg_denominator(const BigradedCounts& counts)
{
    Polynomial den;
    for (const auto& [key, v] : counts.counts()) {
        Integer c(static_cast<unsigned long>(v));
        den += Polynomial::monomial(key.first % 2 == 0 ? c : Integer(-c),
                                    static_cast<std::size_t>(key.first + key.second));
    }
    return den;
}

/// P_R(t) = (1+t)^embdim / H(-t, t) for rings whose Taylor resolution is
/// minimal. `top_cycle_weight`, when given, adds one extra product-free
/// class of that weight (the full-cycle class) for counts that omit it.
inline RationalFunction froberg_poincare(std::size_t embdim, const BigradedCounts& counts,
                                         std::optional<int> top_cycle_weight = std::nullopt)
{
    if (embdim == 0)
        throw InvalidInput("embedding dimension must be positive");
    BigradedCounts all = counts;
    if (top_cycle_weight)
        all.add(1, *top_cycle_weight, 1);
    Polynomial den = froberg_denominator(all);
    if (den[0] == 0)
        throw InvalidInput("Froberg denominator has zero constant term");
    return {Polynomial::one_plus_t_pow(embdim), den};
}

inline constexpr int kMaxTaylorGenerators = 20;

/// True iff removing any generator from any subset shrinks the lcm, i.e. the
/// Taylor resolution of the squarefree ideal is minimal.
inline bool taylor_is_minimal(const std::vector<std::vector<int>>& generators)
{
    const auto m = generators.size();
    if (m > static_cast<std::size_t>(kMaxTaylorGenerators))
        throw SizeLimitError("Taylor minimality check is limited to " + std::to_string(kMaxTaylorGenerators) +
                             " generators");
    std::vector<std::uint64_t> gens;
    for (const auto& g : generators) {
        std::uint64_t mask = 0;
        for (int v : g) {
            if (v < 0 || v >= 64)
                throw InvalidInput("generator variable index out of range");
            mask |= std::uint64_t{1} << v;
        }
        gens.push_back(mask);
    }
    const std::size_t subsets = std::size_t{1} << m;
    std::vector<std::uint64_t> lcm(subsets, 0);
    for (std::size_t s = 1; s < subsets; ++s) {
        const auto low = static_cast<std::size_t>(std::countr_zero(s));
        lcm[s] = lcm[s & (s - 1)] | gens[low];
    }
    for (std::size_t s = 1; s < subsets; ++s)
        for (std::size_t rest = s; rest; rest &= rest - 1) {
            const std::size_t g = rest & (~rest + 1);
            if (lcm[s ^ g] == lcm[s])
                return false;
        }
    return true;
}

} // namespace hypalg
