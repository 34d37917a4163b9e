#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cores {

/// f[t] = number of simultaneous (t, ..., t+p)-cores, for t = 0..t_max.
using CountTable = std::vector<mpz_class>;

/// The full table f[0..t_max] via the recurrence
///   f_0 = 1,  f_t = 0 for t < 0,
///   f_t = sum_{i=1}^{p-1} f_{t-i} + sum_{j=0}^{t-p} f_j * f_{t-p-j}.
/// For p = 1 the first sum is an empty range, not a special case.
/// p = 1 gives the Catalan numbers, p = 2 the Motzkin numbers.
/// Requires t_max >= 0, p >= 1.
CountTable consecutive_core_count(std::int64_t t_max, std::int64_t p);

/// Single recurrence value, total over all integer t: negative t yields 0.
/// Memoized per p; safe to call concurrently. Requires p >= 1.
mpz_class core_count(std::int64_t t, std::int64_t p);

/// Exact binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
mpz_class binomial(std::int64_t n, std::int64_t k);

/// Exact quotient, verified by multiplying back; throws std::logic_error
/// when den is zero or the division leaves a remainder. Guards the
/// closed-form counts below against transcription slips.
mpz_class exact_div(const mpz_class& num, const mpz_class& den);

/// binomial(2t+1, t) / (2t+1). Equal to binomial(2t, t) / (t+1); the two
/// forms are tested against each other.
mpz_class catalan(std::int64_t t);

/// sum_k binomial(t, 2k) * catalan(k), each term an exact integer.
mpz_class motzkin(std::int64_t t);

/// Number of simultaneous (a, b)-cores for coprime a, b:
/// binomial(a+b, a) / (a+b). Throws std::invalid_argument when
/// gcd(a, b) != 1 (the formula does not apply).
mpz_class coprime_core_count(std::int64_t a, std::int64_t b);

/// Largest size of an (a, b)-core for coprime a, b:
/// (a^2 - 1)(b^2 - 1) / 24. Rejects non-coprime input.
mpz_class largest_core_size(std::int64_t a, std::int64_t b);

/// Average size over all (t, t+1)-cores: binomial(t+1, 3) / 2, exact.
/// Requires t >= 1.
mpq_class average_consecutive_core_size(std::int64_t t);

/// Number of self-conjugate (a, b)-cores for coprime a, b:
/// binomial(floor(a/2) + floor(b/2), floor(a/2)). Rejects non-coprime
/// input.
mpz_class self_conjugate_core_count(std::int64_t a, std::int64_t b);

}  // namespace cores
