#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "cores/beta_set.hpp"
#include "cores/partition.hpp"

namespace cores {

/// Raised when enumeration is asked for a modulus list whose core family
/// is infinite (gcd of the moduli exceeds 1).
class infinite_family_error : public std::runtime_error {
public:
    explicit infinite_family_error(std::int64_t gcd);
    std::int64_t gcd() const { return gcd_; }

private:
    std::int64_t gcd_;
};

/// All simultaneous cores for one modulus list, in canonical order:
/// ascending by size, ties broken by comparing part lists lexicographically
/// with larger first parts earlier ([3] before [2,1]).
using CoreFamily = std::vector<Partition>;

/// True when a precedes b in the canonical family order.
bool family_order_less(const Partition& a, const Partition& b);

/// Complete family of simultaneous cores for `spec`, canonically ordered.
/// The search walks beta-sets as strictly increasing element sequences
/// drawn from {1, ..., bound-1}, extending only while closure under
/// subtracting every modulus holds; every closed set is reached exactly
/// once because each of its increasing-order prefixes is itself closed.
/// Throws infinite_family_error when gcd > 1, std::invalid_argument when
/// the bound exceeds the guard limit documented in the README.
CoreFamily enumerate_cores(const CoreSpec& spec);

/// Aggregate statistics of a finite family. Exact arithmetic throughout;
/// the average is total_size / count in lowest terms.
struct FamilyStats {
    mpz_class count;
    mpz_class max_size;
    mpz_class total_size;
    mpq_class average_size;
    mpz_class self_conjugate_count;
};

FamilyStats stats(const CoreFamily& family);

/// Enumerates `spec` and aggregates.
FamilyStats stats(const CoreSpec& spec);

/// For the consecutive spec (t, ..., t+p): classifies the family by the
/// smallest positive integer absent from each member's beta-set. Element
/// [j-1] of the result counts the cores whose beta-set contains all of
/// 1, ..., j-1 but not j. The class index never exceeds t (t itself can
/// never be a member), so the vector has length exactly t and the entries
/// sum to the family size.
std::vector<mpz_class> r_class_counts(std::int64_t t, std::int64_t p);

}  // namespace cores
