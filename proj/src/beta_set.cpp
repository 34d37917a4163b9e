#include "cores/beta_set.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cores {

BetaSet BetaSet::from_elements(std::vector<std::int64_t> elements) {
    std::sort(elements.begin(), elements.end(), std::greater<>());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 1) {
            throw std::invalid_argument("beta-set elements must be >= 1");
        }
        if (i > 0 && elements[i] == elements[i - 1]) {
            throw std::invalid_argument("beta-set elements must be distinct");
        }
    }
    BetaSet b;
    b.elements_ = std::move(elements);
    return b;
}

BetaSet BetaSet::of(const Partition& p) {
    const auto& parts = p.parts();
    const auto r = static_cast<std::int64_t>(parts.size());
    std::vector<std::int64_t> elems;
    elems.reserve(parts.size());
    for (std::int64_t i = 1; i <= r; ++i) {
        elems.push_back(parts[static_cast<std::size_t>(i - 1)] + r - i);
    }
    // parts weakly decreasing makes these strictly decreasing already
    BetaSet b;
    b.elements_ = std::move(elems);
    return b;
}

Partition BetaSet::to_partition() const {
    const auto r = static_cast<std::int64_t>(elements_.size());
    std::vector<std::int64_t> parts;
    parts.reserve(elements_.size());
    for (std::int64_t i = 1; i <= r; ++i) {
        parts.push_back(elements_[static_cast<std::size_t>(i - 1)] - (r - i));
    }
    return Partition::from_parts(std::move(parts));
}

bool BetaSet::contains(std::int64_t x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x, std::greater<>());
}

std::int64_t BetaSet::max() const {
    if (elements_.empty()) {
        throw std::logic_error("max of empty beta-set");
    }
    return elements_.front();
}

std::string BetaSet::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) os << ',';
        os << elements_[i];
    }
    os << '}';
    return os.str();
}

CoreSpec CoreSpec::from_moduli(std::vector<std::int64_t> moduli) {
    if (moduli.empty()) {
        throw std::invalid_argument("modulus list must be nonempty");
    }
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 1) {
            throw std::invalid_argument("moduli must be >= 1");
        }
        if (i > 0 && moduli[i] <= moduli[i - 1]) {
            throw std::invalid_argument("moduli must be strictly increasing");
        }
    }
    CoreSpec s;
    s.moduli_ = std::move(moduli);
    return s;
}

CoreSpec CoreSpec::parse(std::string_view text) {
    std::vector<std::int64_t> moduli;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == ',' || text[i] == '\t') {
            ++i;
            continue;
        }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{}) {
            throw std::invalid_argument("bad modulus list: " + std::string(text));
        }
        i = static_cast<std::size_t>(ptr - text.data());
        moduli.push_back(value);
    }
    return from_moduli(std::move(moduli));
}

CoreSpec CoreSpec::consecutive(std::int64_t t, std::int64_t p) {
    if (t < 1 || p < 1) {
        throw std::invalid_argument("consecutive spec needs t >= 1 and p >= 1");
    }
    std::vector<std::int64_t> moduli;
    moduli.reserve(static_cast<std::size_t>(p + 1));
    for (std::int64_t k = 0; k <= p; ++k) moduli.push_back(t + k);
    return from_moduli(std::move(moduli));
}

std::int64_t CoreSpec::gcd() const {
    std::int64_t g = 0;
    for (std::int64_t t : moduli_) g = std::gcd(g, t);
    return g;
}

bool CoreSpec::is_consecutive() const {
    if (moduli_.size() < 2) return false;
    for (std::size_t i = 1; i < moduli_.size(); ++i) {
        if (moduli_[i] != moduli_[i - 1] + 1) return false;
    }
    return true;
}

std::string CoreSpec::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i > 0) os << ',';
        os << moduli_[i];
    }
    return os.str();
}

bool is_t_core_beta(const BetaSet& b, std::int64_t t) {
    if (t < 1) {
        throw std::invalid_argument("modulus must be >= 1");
    }
    for (std::int64_t x : b.elements()) {
        if (x == t) return false;
        if (x > t && !b.contains(x - t)) return false;
    }
    return true;
}

bool is_t_core_hooks(const Partition& p, std::int64_t t) {
    if (t < 1) {
        throw std::invalid_argument("modulus must be >= 1");
    }
    for (const auto& row : hook_table(p)) {
        for (std::int64_t h : row) {
            if (h % t == 0) return false;
        }
    }
    return true;
}

bool is_simultaneous_core(const Partition& p, const CoreSpec& spec) {
    const BetaSet b = BetaSet::of(p);
    for (std::int64_t t : spec.moduli()) {
        if (!is_t_core_beta(b, t)) return false;
    }
    return true;
}

bool excludes_linear_combinations(const BetaSet& b, const CoreSpec& spec) {
    if (b.is_empty()) return true;
    const std::int64_t limit = b.max();
    // reachable[v] = v is a nonnegative combination of the moduli
    std::vector<char> reachable(static_cast<std::size_t>(limit) + 1, 0);
    reachable[0] = 1;
    for (std::int64_t v = 1; v <= limit; ++v) {
        for (std::int64_t t : spec.moduli()) {
            if (t <= v && reachable[static_cast<std::size_t>(v - t)]) {
                reachable[static_cast<std::size_t>(v)] = 1;
                break;
            }
        }
    }
    for (std::int64_t x : b.elements()) {
        if (reachable[static_cast<std::size_t>(x)]) return false;
    }
    return true;
}

}  // namespace cores
