#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cores {

/// Truncated power series with exact rational coefficients: coeffs[k] is
/// the coefficient of x^k, and every operation works to a stated order N
/// (coefficients 0..N), discarding everything above.
class Series {
public:
    Series() = default;

    /// Truncation order: the highest tracked exponent.
    explicit Series(std::size_t order);

    static Series constant(const mpq_class& c, std::size_t order);

    std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    const mpq_class& coeff(std::size_t k) const;
    void set_coeff(std::size_t k, const mpq_class& v);

    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    Series add(const Series& other) const;
    Series sub(const Series& other) const;
    Series mul(const Series& other) const;

    /// Requires other.coeff(0) != 0.
    Series div(const Series& other) const;

    /// Square root with constant term 1: requires coeff(0) == 1. Computed
    /// by the convolution recursion r_0 = 1,
    /// r_n = (q_n - sum_{k=1}^{n-1} r_k r_{n-k}) / 2.
    Series sqrt() const;

    /// "c0, c1, ..., cN" with each coefficient in lowest terms (integers
    /// print without a denominator).
    std::string str() const;

    bool operator==(const Series&) const = default;

private:
    std::vector<mpq_class> coeffs_;
};

/// Free-function spelling of Series::sqrt.
Series sqrt_series(const Series& q);

/// Generating function sum f_t x^t of the consecutive-core counts, built
/// directly from the recurrence, through x^order.
Series series_from_recurrence(std::int64_t p, std::size_t order);

/// Same generating function from its closed form
///   (1 - sum_{i=1}^{p-1} x^i - sqrt((1 - sum x^i)^2 - 4 x^p)) / (2 x^p),
/// expanded with exact rational arithmetic through x^order; p = 1
/// specializes to (1 - sqrt(1 - 4x)) / (2x). Throws std::logic_error if
/// the numerator fails to vanish through x^(p-1) or any final coefficient
/// is non-integral; either would mean the formula was transcribed wrong.
Series closed_form_series(std::int64_t p, std::size_t order);

/// Verifies F - 1 = (sum_{i=1}^{p-1} x^i) F + x^p F^2 through x^order.
bool check_functional_equation(const Series& f, std::int64_t p);

}  // namespace cores
