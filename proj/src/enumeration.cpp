#include "cores/enumeration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cores/finiteness.hpp"

namespace cores {
namespace {

// Enumeration materializes a bitset over {1, ..., bound-1}; refuse sizes
// past this so a huge modulus list fails fast instead of thrashing.
constexpr std::int64_t kMaxUniverse = std::int64_t{1} << 20;

std::string gcd_message(std::int64_t gcd) {
    std::ostringstream os;
    os << "family is infinite: moduli share the factor " << gcd;
    return os.str();
}

}  // namespace

infinite_family_error::infinite_family_error(std::int64_t gcd)
    : std::runtime_error(gcd_message(gcd)), gcd_(gcd) {}

bool family_order_less(const Partition& a, const Partition& b) {
    const std::int64_t sa = a.size();
    const std::int64_t sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts() > b.parts();
}

CoreFamily enumerate_cores(const CoreSpec& spec) {
    const FinitenessReport report = analyze(spec);
    if (!report.finite) {
        throw infinite_family_error(report.gcd);
    }
    const std::int64_t bound = *report.bound;
    if (bound > kMaxUniverse) {
        throw std::invalid_argument("enumeration universe too large");
    }

    const auto& moduli = spec.moduli();
    std::vector<char> member(static_cast<std::size_t>(bound), 0);
    std::vector<std::int64_t> chosen;
    CoreFamily family;
    family.push_back(Partition{});

    // x can join the set iff for every modulus t: x != t, and when x > t
    // the element x - t is already chosen. Candidates are taken in
    // increasing order, so prefixes of any closed set are themselves
    // closed and each closed set is produced exactly once.
    auto admissible = [&](std::int64_t x) {
        for (std::int64_t t : moduli) {
            if (x == t) return false;
            if (x > t && !member[static_cast<std::size_t>(x - t)]) return false;
        }
        return true;
    };

    auto emit = [&] {
        std::vector<std::int64_t> elems(chosen.rbegin(), chosen.rend());
        family.push_back(BetaSet::from_elements(std::move(elems)).to_partition());
    };

    auto dfs = [&](auto&& self, std::int64_t from) -> void {
        for (std::int64_t x = from; x < bound; ++x) {
            if (!admissible(x)) continue;
            member[static_cast<std::size_t>(x)] = 1;
            chosen.push_back(x);
            emit();
            self(self, x + 1);
            chosen.pop_back();
            member[static_cast<std::size_t>(x)] = 0;
        }
    };
    dfs(dfs, 1);

    std::sort(family.begin(), family.end(), family_order_less);
    return family;
}

FamilyStats stats(const CoreFamily& family) {
    FamilyStats s;
    s.count = static_cast<unsigned long>(family.size());
    s.max_size = 0;
    s.total_size = 0;
    s.self_conjugate_count = 0;
    for (const Partition& p : family) {
        const std::int64_t sz = p.size();
        s.total_size += static_cast<long>(sz);
        if (mpz_class(static_cast<long>(sz)) > s.max_size) {
            s.max_size = static_cast<long>(sz);
        }
        if (p == p.conjugate()) ++s.self_conjugate_count;
    }
    if (family.empty()) {
        throw std::invalid_argument("stats of empty family");
    }
    s.average_size = mpq_class(s.total_size) / mpq_class(s.count);
    s.average_size.canonicalize();
    return s;
}

FamilyStats stats(const CoreSpec& spec) { return stats(enumerate_cores(spec)); }

std::vector<mpz_class> r_class_counts(std::int64_t t, std::int64_t p) {
    const CoreFamily family = enumerate_cores(CoreSpec::consecutive(t, p));
    std::vector<mpz_class> counts(static_cast<std::size_t>(t), 0);
    for (const Partition& part : family) {
        const BetaSet b = BetaSet::of(part);
        std::int64_t j = 1;
        while (b.contains(j)) ++j;
        if (j > t) {
            throw std::logic_error("core beta-set contains its own modulus");
        }
        ++counts[static_cast<std::size_t>(j - 1)];
    }
    return counts;
}

}  // namespace cores
