#include "cores/power_series.hpp"

#include <sstream>
#include <stdexcept>

#include "cores/counting.hpp"

namespace cores {

Series::Series(std::size_t order) : coeffs_(order + 1, mpq_class(0)) {}

Series Series::constant(const mpq_class& c, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

const mpq_class& Series::coeff(std::size_t k) const {
    static const mpq_class zero(0);
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

void Series::set_coeff(std::size_t k, const mpq_class& v) {
    if (k >= coeffs_.size()) {
        throw std::out_of_range("coefficient index past truncation order");
    }
    coeffs_[k] = v;
}

Series Series::add(const Series& other) const {
    Series s(std::min(order(), other.order()));
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
        s.coeffs_[k] = coeff(k) + other.coeff(k);
    }
    return s;
}

Series Series::sub(const Series& other) const {
    Series s(std::min(order(), other.order()));
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
        s.coeffs_[k] = coeff(k) - other.coeff(k);
    }
    return s;
}

Series Series::mul(const Series& other) const {
    Series s(std::min(order(), other.order()));
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
        mpq_class c(0);
        for (std::size_t j = 0; j <= k; ++j) {
            c += coeff(j) * other.coeff(k - j);
        }
        s.coeffs_[k] = c;
    }
    return s;
}

Series Series::div(const Series& other) const {
    if (other.coeff(0) == 0) {
        throw std::invalid_argument("series division needs a unit constant term");
    }
    Series s(std::min(order(), other.order()));
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
        mpq_class c = coeff(k);
        for (std::size_t j = 0; j < k; ++j) {
            c -= s.coeffs_[j] * other.coeff(k - j);
        }
        s.coeffs_[k] = c / other.coeff(0);
    }
    return s;
}

Series Series::sqrt() const {
    if (coeff(0) != 1) {
        throw std::invalid_argument("series sqrt needs constant term 1");
    }
    Series r(order());
    r.coeffs_[0] = 1;
    for (std::size_t n = 1; n < r.coeffs_.size(); ++n) {
        mpq_class c = coeff(n);
        for (std::size_t k = 1; k < n; ++k) {
            c -= r.coeffs_[k] * r.coeffs_[n - k];
        }
        r.coeffs_[n] = c / 2;
    }
    return r;
}

std::string Series::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) os << ", ";
        os << coeffs_[k];
    }
    return os.str();
}

Series sqrt_series(const Series& q) { return q.sqrt(); }

Series series_from_recurrence(std::int64_t p, std::size_t order) {
    const CountTable f =
        consecutive_core_count(static_cast<std::int64_t>(order), p);
    Series s(order);
    for (std::size_t k = 0; k <= order; ++k) {
        s.set_coeff(k, mpq_class(f[k]));
    }
    return s;
}

Series closed_form_series(std::int64_t p, std::size_t order) {
    if (p < 1) {
        throw std::invalid_argument("closed form needs p >= 1");
    }
    // Work at order + p so that dividing by x^p (a coefficient shift)
    // still yields all coefficients through the requested order.
    const std::size_t work = order + static_cast<std::size_t>(p);
    Series head(work);  // 1 - x - x^2 - ... - x^(p-1)
    head.set_coeff(0, 1);
    for (std::int64_t i = 1; i <= p - 1; ++i) {
        head.set_coeff(static_cast<std::size_t>(i), -1);
    }
    Series radicand = head.mul(head);
    radicand.set_coeff(static_cast<std::size_t>(p),
                       radicand.coeff(static_cast<std::size_t>(p)) - 4);
    const Series root = radicand.sqrt();
    const Series numerator = head.sub(root);
    // numerator = 2 x^p F, so shift down by p and halve.
    for (std::int64_t k = 0; k < p; ++k) {
        if (numerator.coeff(static_cast<std::size_t>(k)) != 0) {
            throw std::logic_error("closed form numerator not divisible by x^p");
        }
    }
    Series f(order);
    for (std::size_t k = 0; k <= order; ++k) {
        const mpq_class c = numerator.coeff(k + static_cast<std::size_t>(p)) / 2;
        if (c.get_den() != 1) {
            throw std::logic_error("closed form yielded a non-integer count");
        }
        f.set_coeff(k, c);
    }
    return f;
}

bool check_functional_equation(const Series& f, std::int64_t p) {
    if (p < 1 || f.order() < static_cast<std::size_t>(p)) {
        throw std::invalid_argument(
            "functional equation needs p >= 1 and a series of order >= p");
    }
    const std::size_t order = f.order();
    Series rhs(order);
    // (x + ... + x^(p-1)) F
    for (std::size_t k = 0; k <= order; ++k) {
        mpq_class c(0);
        for (std::int64_t i = 1; i <= p - 1 && static_cast<std::size_t>(i) <= k;
             ++i) {
            c += f.coeff(k - static_cast<std::size_t>(i));
        }
        rhs.set_coeff(k, c);
    }
    // + x^p F^2
    const Series f2 = f.mul(f);
    for (std::size_t k = static_cast<std::size_t>(p); k <= order; ++k) {
        rhs.set_coeff(k, rhs.coeff(k) + f2.coeff(k - static_cast<std::size_t>(p)));
    }
    for (std::size_t k = 0; k <= order; ++k) {
        const mpq_class lhs = k == 0 ? f.coeff(0) - 1 : f.coeff(k);
        if (lhs != rhs.coeff(k)) return false;
    }
    return true;
}

}  // namespace cores
