#include "cores/interval_poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace cores {

std::int64_t interval_index_bound(std::int64_t t, std::int64_t p) {
    if (t < 1 || p < 1) {
        throw std::invalid_argument("intervals need t >= 1 and p >= 1");
    }
    return (t + p - 2) / p;
}

IntervalFamily build_intervals(std::int64_t t, std::int64_t p) {
    const std::int64_t index_bound = interval_index_bound(t, p);
    IntervalFamily intervals;
    for (std::int64_t i = 1; i <= index_bound; ++i) {
        Interval s{(i - 1) * (t + p) + 1, i * t - 1};
        if (s.lo > s.hi) continue;  // cannot happen for i <= index_bound
        intervals.push_back(s);
    }
    return intervals;
}

CorePoset::CorePoset(std::int64_t t, std::int64_t p)
    : t_(t), p_(p), intervals_(build_intervals(t, p)) {
    for (const Interval& s : intervals_) {
        for (std::int64_t x = s.lo; x <= s.hi; ++x) ground_.push_back(x);
    }
}

bool CorePoset::reachable(std::int64_t diff) const {
    if (diff < 0) return false;
    // diff is a combination of t, ..., t+p iff some multiple k*t with
    // k*t <= diff <= k*(t+p) exists: k coins each contribute t plus up
    // to p extra.
    if (diff == 0) return true;
    for (std::int64_t k = 1; k * t_ <= diff; ++k) {
        if (diff <= k * (t_ + p_)) return true;
    }
    return false;
}

bool CorePoset::leq(std::int64_t y, std::int64_t x) const {
    if (!std::binary_search(ground_.begin(), ground_.end(), y) ||
        !std::binary_search(ground_.begin(), ground_.end(), x)) {
        throw std::invalid_argument("leq arguments must be ground elements");
    }
    return reachable(x - y);
}

std::vector<std::int64_t> CorePoset::predecessors(std::int64_t x) const {
    std::vector<std::int64_t> below;
    for (std::int64_t y : ground_) {
        if (y != x && leq(y, x)) below.push_back(y);
    }
    return below;
}

std::vector<std::pair<std::int64_t, std::int64_t>> CorePoset::cover_pairs()
    const {
    std::vector<std::pair<std::int64_t, std::int64_t>> covers;
    for (std::int64_t x : ground_) {
        const auto below = predecessors(x);
        for (std::int64_t y : below) {
            // y is covered by x when nothing sits strictly between
            bool direct = true;
            for (std::int64_t z : below) {
                if (z != y && leq(y, z)) {
                    direct = false;
                    break;
                }
            }
            if (direct) covers.emplace_back(y, x);
        }
    }
    std::sort(covers.begin(), covers.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second < b.second;
                  return a.first < b.first;
              });
    return covers;
}

CorePoset build_poset(std::int64_t t, std::int64_t p) {
    return CorePoset(t, p);
}

bool is_good_subset(const CorePoset& poset,
                    const std::vector<std::int64_t>& subset) {
    std::vector<std::int64_t> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    const auto& ground = poset.ground();
    for (std::int64_t x : sorted) {
        if (!std::binary_search(ground.begin(), ground.end(), x)) {
            return false;
        }
    }
    for (std::int64_t x : sorted) {
        for (std::int64_t y : poset.predecessors(x)) {
            if (!std::binary_search(sorted.begin(), sorted.end(), y)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Shared walk over down-sets: candidates ascend, and an element may join
// once all its predecessors are in. Prefixes of a down-set listed in
// ascending order are again down-sets (predecessors are smaller), so the
// walk hits each exactly once.
template <typename Visit>
void walk_good_subsets(const CorePoset& poset, Visit&& visit) {
    const auto& ground = poset.ground();
    const std::size_t n = ground.size();

    std::vector<std::vector<std::size_t>> preds(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::int64_t y : poset.predecessors(ground[i])) {
            const auto it = std::lower_bound(ground.begin(), ground.end(), y);
            preds[i].push_back(static_cast<std::size_t>(it - ground.begin()));
        }
    }

    std::vector<char> in(n, 0);
    std::vector<std::size_t> chosen;
    visit(chosen);
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t i = from; i < n; ++i) {
            bool ok = true;
            for (std::size_t q : preds[i]) {
                if (!in[q]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            in[i] = 1;
            chosen.push_back(i);
            visit(chosen);
            self(self, i + 1);
            chosen.pop_back();
            in[i] = 0;
        }
    };
    dfs(dfs, 0);
}

}  // namespace

mpz_class count_good_subsets(const CorePoset& poset) {
    mpz_class total = 0;
    walk_good_subsets(poset, [&](const std::vector<std::size_t>&) { ++total; });
    return total;
}

std::vector<std::vector<std::int64_t>> enumerate_good_subsets(
    const CorePoset& poset) {
    const auto& ground = poset.ground();
    std::vector<std::vector<std::int64_t>> all;
    walk_good_subsets(poset, [&](const std::vector<std::size_t>& chosen) {
        std::vector<std::int64_t> subset;
        subset.reserve(chosen.size());
        for (std::size_t i : chosen) subset.push_back(ground[i]);
        all.push_back(std::move(subset));
    });
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return all;
}

}  // namespace cores
