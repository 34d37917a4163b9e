#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cores/beta_set.hpp"
#include "cores/partition.hpp"

namespace cores {

/// Outcome of the finiteness test for a modulus list: the family of
/// simultaneous cores is finite exactly when gcd = 1, in which case every
/// beta-set element is < bound.
struct FinitenessReport {
    std::int64_t gcd = 0;
    bool finite = false;
    /// Present iff finite. Strict upper limit on beta-set elements:
    /// (t_1 - 1) * (t_2 + ... + t_m), clamped up to 1 so the empty
    /// universe case (single modulus 1, whose only core is the empty
    /// partition) stays representable.
    std::optional<std::int64_t> bound;

    bool operator==(const FinitenessReport&) const = default;
};

/// gcd, finiteness verdict, and beta-element bound for `spec`.
FinitenessReport analyze(const CoreSpec& spec);

/// Flat JSON object, e.g. {"moduli":[3,4],"gcd":1,"finite":true,"bound":14}.
/// When infinite, "bound" is null.
std::string report_json(const CoreSpec& spec, const FinitenessReport& r);

/// For gcd d > 1: the n-th member of an explicit infinite family of
/// simultaneous cores, the partition with beta-set {1, 1+d, ..., 1+n*d}.
/// Sizes strictly increase with n. Throws std::invalid_argument when
/// gcd = 1 or n < 0.
Partition witness(const CoreSpec& spec, std::int64_t n);

}  // namespace cores
