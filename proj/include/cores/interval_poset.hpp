#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cores {

/// Closed integer interval [lo, hi].
struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool operator==(const Interval&) const = default;
};

/// For the consecutive modulus list (t, ..., t+p), the candidate beta-set
/// elements below the finiteness bound split into disjoint intervals
///   S_i = [(i-1)(t+p) + 1, i*t - 1],   i = 1, ..., floor((t+p-2)/p).
/// Everything between consecutive intervals is a combination of the moduli
/// and can never occur in a core's beta-set.
using IntervalFamily = std::vector<Interval>;

/// The interval index limit floor((t+p-2)/p). Exposed because exports
/// report it even when trailing intervals come out empty and are dropped.
std::int64_t interval_index_bound(std::int64_t t, std::int64_t p);

/// Requires t >= 1, p >= 1. An empty result (t = 1) means the only core is
/// the empty partition.
IntervalFamily build_intervals(std::int64_t t, std::int64_t p);

/// Partial order on the interval elements: y precedes x when x - y is a
/// nonnegative integer combination of t, ..., t+p. Good beta-sets are
/// exactly the down-sets of this poset, so counting cores reduces to
/// counting down-sets.
class CorePoset {
public:
    CorePoset(std::int64_t t, std::int64_t p);

    std::int64_t t() const { return t_; }
    std::int64_t p() const { return p_; }
    const IntervalFamily& intervals() const { return intervals_; }

    /// All interval elements, ascending.
    const std::vector<std::int64_t>& ground() const { return ground_; }

    /// True when y precedes-or-equals x in the order. Both arguments must
    /// be ground elements.
    bool leq(std::int64_t y, std::int64_t x) const;

    /// Ground elements strictly below x (every one of them must accompany
    /// x in a down-set).
    std::vector<std::int64_t> predecessors(std::int64_t x) const;

    /// Covering pairs (y, x) with y immediately below x, each pair
    /// ascending in (x, y). Determines the Hasse diagram.
    std::vector<std::pair<std::int64_t, std::int64_t>> cover_pairs() const;

private:
    bool reachable(std::int64_t diff) const;

    std::int64_t t_;
    std::int64_t p_;
    IntervalFamily intervals_;
    std::vector<std::int64_t> ground_;
};

CorePoset build_poset(std::int64_t t, std::int64_t p);

/// True when `subset` (any order, duplicates rejected) is a down-set of
/// the poset: together with every element, all its predecessors appear.
/// Elements outside the ground set render the subset not good.
bool is_good_subset(const CorePoset& poset,
                    const std::vector<std::int64_t>& subset);

/// Number of down-sets, counted by the same prefix-closed DFS the
/// enumerator uses (no subset materialized).
mpz_class count_good_subsets(const CorePoset& poset);

/// All down-sets, each listed ascending, ordered by cardinality then
/// lexicographically.
std::vector<std::vector<std::int64_t>> enumerate_good_subsets(
    const CorePoset& poset);

}  // namespace cores
