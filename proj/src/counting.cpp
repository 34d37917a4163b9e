#include "cores/counting.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cores {
namespace {

void append_next_count(CountTable& f, std::int64_t p) {
    const auto t = static_cast<std::int64_t>(f.size());
    mpz_class total = 0;
    for (std::int64_t i = 1; i <= p - 1 && i <= t; ++i) {
        total += f[static_cast<std::size_t>(t - i)];
    }
    for (std::int64_t j = 0; j <= t - p; ++j) {
        total += f[static_cast<std::size_t>(j)] *
                 f[static_cast<std::size_t>(t - p - j)];
    }
    f.push_back(std::move(total));
}

// Zero is admitted (gcd(0, b) = b, so it only passes alongside 1); the
// formulas degrade gracefully there and the count one is even correct, a
// modulus of 0 constraining nothing.
void require_coprime(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("moduli must be >= 0");
    }
    if (std::gcd(a, b) != 1) {
        throw std::invalid_argument("formula requires coprime moduli");
    }
}

}  // namespace

CountTable consecutive_core_count(std::int64_t t_max, std::int64_t p) {
    if (t_max < 0 || p < 1) {
        throw std::invalid_argument("counts need t_max >= 0 and p >= 1");
    }
    CountTable f;
    f.reserve(static_cast<std::size_t>(t_max) + 1);
    f.push_back(1);
    while (static_cast<std::int64_t>(f.size()) <= t_max) {
        append_next_count(f, p);
    }
    return f;
}

mpz_class core_count(std::int64_t t, std::int64_t p) {
    if (p < 1) {
        throw std::invalid_argument("counts need p >= 1");
    }
    if (t < 0) return 0;
    static std::mutex mutex;
    static std::map<std::int64_t, CountTable> tables;
    std::lock_guard<std::mutex> lock(mutex);
    CountTable& f = tables[p];
    if (f.empty()) f.push_back(1);
    while (static_cast<std::int64_t>(f.size()) <= t) {
        append_next_count(f, p);
    }
    return f[static_cast<std::size_t>(t)];
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::invalid_argument("binomial needs n >= 0");
    }
    if (k < 0 || k > n) return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::logic_error("exact_div by zero");
    }
    mpz_class q = num / den;
    if (q * den != num) {
        throw std::logic_error("exact_div has a remainder");
    }
    return q;
}

mpz_class catalan(std::int64_t t) {
    if (t < 0) {
        throw std::invalid_argument("catalan needs t >= 0");
    }
    return exact_div(binomial(2 * t + 1, t), mpz_class(static_cast<long>(2 * t + 1)));
}

mpz_class motzkin(std::int64_t t) {
    if (t < 0) {
        throw std::invalid_argument("motzkin needs t >= 0");
    }
    mpz_class total = 0;
    for (std::int64_t k = 0; 2 * k <= t; ++k) {
        total += binomial(t, 2 * k) * catalan(k);
    }
    return total;
}

mpz_class coprime_core_count(std::int64_t a, std::int64_t b) {
    require_coprime(a, b);
    return exact_div(binomial(a + b, a), mpz_class(static_cast<long>(a + b)));
}

mpz_class largest_core_size(std::int64_t a, std::int64_t b) {
    require_coprime(a, b);
    const mpz_class num = mpz_class(static_cast<long>(a * a - 1)) *
                          mpz_class(static_cast<long>(b * b - 1));
    return exact_div(num, 24);
}

mpq_class average_consecutive_core_size(std::int64_t t) {
    if (t < 1) {
        throw std::invalid_argument("average needs t >= 1");
    }
    mpq_class avg(binomial(t + 1, 3), 2);
    avg.canonicalize();
    return avg;
}

mpz_class self_conjugate_core_count(std::int64_t a, std::int64_t b) {
    require_coprime(a, b);
    const std::int64_t ha = a / 2;
    const std::int64_t hb = b / 2;
    return binomial(ha + hb, ha);
}

}  // namespace cores
