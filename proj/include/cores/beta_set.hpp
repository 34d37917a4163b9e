#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cores/partition.hpp"

namespace cores {

/// The beta-set of a partition with parts l_1 >= ... >= l_r is
/// {l_i + r - i : 1 <= i <= r}, equivalently the set of first-column hook
/// lengths of its Young diagram. It is a finite set of distinct positive
/// integers (never containing 0), and every such set arises from exactly
/// one partition, so the encoding is a bijection.
///
/// A partition is a t-core exactly when its beta-set is closed under
/// subtracting t (whenever the difference stays positive, it must be a
/// member; an element equal to t disqualifies the set). That closure test
/// is what makes beta-sets the workhorse for simultaneous-core checks and
/// enumeration.
class BetaSet {
public:
    BetaSet() = default;

    /// Validates distinct positive integers; stores them strictly
    /// decreasing. Throws std::invalid_argument on zeros, negatives, or
    /// duplicates.
    static BetaSet from_elements(std::vector<std::int64_t> elements);

    static BetaSet of(const Partition& p);

    /// Inverse of `of`: with elements x_1 > ... > x_r, the parts are
    /// l_i = x_i - (r - i). Always yields a valid partition.
    Partition to_partition() const;

    /// Strictly decreasing.
    const std::vector<std::int64_t>& elements() const { return elements_; }

    bool contains(std::int64_t x) const;
    bool is_empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }

    /// Largest element; requires a nonempty set.
    std::int64_t max() const;

    /// Brace form sorted decreasing, e.g. "{7,3,2}"; empty prints as "{}".
    std::string str() const;

    bool operator==(const BetaSet&) const = default;

private:
    std::vector<std::int64_t> elements_;
};

/// Moduli t_1 < t_2 < ... < t_m (m >= 1, all positive) defining the
/// simultaneous-core condition.
class CoreSpec {
public:
    /// Throws std::invalid_argument unless the list is nonempty, positive,
    /// and strictly increasing.
    static CoreSpec from_moduli(std::vector<std::int64_t> moduli);

    /// Parses space- or comma-separated moduli, e.g. "3,4" or "3 4".
    static CoreSpec parse(std::string_view text);

    /// The spec (t, t+1, ..., t+p); requires t >= 1, p >= 1.
    static CoreSpec consecutive(std::int64_t t, std::int64_t p);

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    std::size_t count() const { return moduli_.size(); }
    std::int64_t gcd() const;

    /// True when the moduli are t, t+1, ..., t+p for some p >= 1.
    bool is_consecutive() const;

    /// Comma-separated, e.g. "3,4".
    std::string str() const;

    bool operator==(const CoreSpec&) const = default;

private:
    std::vector<std::int64_t> moduli_;
};

/// Beta-set route: every x in b with x >= t must have x - t in b (which
/// forces x != t, since 0 is never a member). Requires t >= 1.
bool is_t_core_beta(const BetaSet& b, std::int64_t t);

/// Hook-length route: no entry of hook_table(p) divisible by t.
/// Requires t >= 1.
bool is_t_core_hooks(const Partition& p, std::int64_t t);

/// t-core for every modulus of `spec` (decided on the beta-set).
bool is_simultaneous_core(const Partition& p, const CoreSpec& spec);

/// True when no element of b is a nonnegative integer combination of the
/// moduli. Decided by reachability DP over {0, ..., max(b)}; representable
/// values beyond max(b) cannot occur in b.
bool excludes_linear_combinations(const BetaSet& b, const CoreSpec& spec);

}  // namespace cores
