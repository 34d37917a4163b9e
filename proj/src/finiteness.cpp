#include "cores/finiteness.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cores {

FinitenessReport analyze(const CoreSpec& spec) {
    FinitenessReport r;
    r.gcd = spec.gcd();
    r.finite = (r.gcd == 1);
    if (r.finite) {
        const auto& m = spec.moduli();
        std::int64_t tail = 0;
        for (std::size_t i = 1; i < m.size(); ++i) tail += m[i];
        std::int64_t bound = (m[0] - 1) * tail;
        // With a single modulus of 1 the formula gives 0; clamp so the
        // bound remains a strict upper limit (no element is < 1 anyway).
        if (bound < 1) bound = 1;
        r.bound = bound;
    }
    return r;
}

std::string report_json(const CoreSpec& spec, const FinitenessReport& r) {
    std::ostringstream os;
    os << "{\"moduli\":[";
    const auto& m = spec.moduli();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i > 0) os << ',';
        os << m[i];
    }
    os << "],\"gcd\":" << r.gcd
       << ",\"finite\":" << (r.finite ? "true" : "false") << ",\"bound\":";
    if (r.bound) {
        os << *r.bound;
    } else {
        os << "null";
    }
    os << '}';
    return os.str();
}

Partition witness(const CoreSpec& spec, std::int64_t n) {
    const std::int64_t d = spec.gcd();
    if (d == 1) {
        throw std::invalid_argument(
            "witness family exists only when the moduli share a factor");
    }
    if (n < 0) {
        throw std::invalid_argument("witness index must be >= 0");
    }
    // Beta-set {1, 1+d, ..., 1+n*d}: every element is 1 mod d while each
    // modulus is 0 mod d, so no element equals a modulus, and subtracting
    // a modulus from an element either drops below 1 or lands on another
    // element. Closure holds for every modulus at once.
    std::vector<std::int64_t> elems;
    elems.reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) elems.push_back(1 + k * d);
    return BetaSet::from_elements(std::move(elems)).to_partition();
}

}  // namespace cores
