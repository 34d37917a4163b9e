#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cores/beta_set.hpp"
#include "cores/counting.hpp"
#include "cores/enumeration.hpp"
#include "cores/interval_poset.hpp"

using cores::BetaSet;
using cores::CoreFamily;
using cores::CorePoset;
using cores::CoreSpec;
using cores::Interval;
using cores::IntervalFamily;
using cores::build_intervals;
using cores::build_poset;
using cores::core_count;
using cores::count_good_subsets;
using cores::enumerate_cores;
using cores::enumerate_good_subsets;
using cores::family_order_less;
using cores::interval_index_bound;
using cores::is_good_subset;

namespace {

// Reference for the order relation: try every coefficient split of diff
// into parts from {t, ..., t+p} by plain recursion.
bool brute_force_reachable(std::int64_t diff, std::int64_t t, std::int64_t p) {
    if (diff == 0) return true;
    if (diff < t) return false;
    for (std::int64_t coin = t; coin <= t + p; ++coin) {
        if (brute_force_reachable(diff - coin, t, p)) return true;
    }
    return false;
}

}  // namespace

TEST_SUITE("intervalposet") {

TEST_CASE("interval layout for worked examples") {
    CHECK(build_intervals(7, 2) ==
          IntervalFamily{{1, 6}, {10, 13}, {19, 20}});
    CHECK(build_intervals(3, 1) == IntervalFamily{{1, 2}, {5, 5}});
    CHECK(build_intervals(2, 1) == IntervalFamily{{1, 1}});
    CHECK(build_intervals(1, 1).empty());
    CHECK(build_intervals(1, 4).empty());
    CHECK(interval_index_bound(7, 2) == 3);
    CHECK(interval_index_bound(3, 1) == 2);
    CHECK(interval_index_bound(1, 2) == 0);
}

TEST_CASE("ground set and relations of the smallest posets") {
    const CorePoset p31 = build_poset(3, 1);
    CHECK(p31.ground() == std::vector<std::int64_t>{1, 2, 5});
    CHECK(p31.leq(1, 5));
    CHECK(p31.leq(2, 5));
    CHECK_FALSE(p31.leq(1, 2));
    CHECK(p31.leq(5, 5));
    CHECK(p31.predecessors(5) == std::vector<std::int64_t>{1, 2});
    CHECK(p31.cover_pairs() ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 5}, {2, 5}});

    const CorePoset p32 = build_poset(3, 2);
    CHECK(p32.ground() == std::vector<std::int64_t>{1, 2});
    CHECK_FALSE(p32.leq(1, 2));
    CHECK(p32.cover_pairs().empty());

    const CorePoset p21 = build_poset(2, 1);
    CHECK(p21.ground() == std::vector<std::int64_t>{1});
}

TEST_CASE("order axioms hold on the finite ground set") {
    for (const auto& [t, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {5, 1}, {7, 2}, {8, 3}, {9, 2}}) {
        const CorePoset poset = build_poset(t, p);
        const auto& ground = poset.ground();
        for (std::int64_t x : ground) {
            CHECK(poset.leq(x, x));
            for (std::int64_t y : ground) {
                if (poset.leq(y, x) && poset.leq(x, y)) CHECK(x == y);
                if (poset.leq(y, x) && y != x) CHECK(y < x);
                for (std::int64_t z : ground) {
                    if (poset.leq(z, y) && poset.leq(y, x)) {
                        CHECK(poset.leq(z, x));
                    }
                }
            }
        }
    }
}

TEST_CASE("relation matches brute-force coefficient search") {
    for (std::int64_t t = 1; t <= 9; ++t) {
        for (std::int64_t p = 1; p <= 3 && t + p <= 12; ++p) {
            const CorePoset poset = build_poset(t, p);
            for (std::int64_t x : poset.ground()) {
                for (std::int64_t y : poset.ground()) {
                    if (y > x) continue;
                    CHECK(poset.leq(y, x) ==
                          brute_force_reachable(x - y, t, p));
                }
            }
        }
    }
}

TEST_CASE("interval shift law links consecutive intervals") {
    for (std::int64_t t = 2; t <= 9; ++t) {
        for (std::int64_t p = 1; p <= 3; ++p) {
            const IntervalFamily intervals = build_intervals(t, p);
            for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
                std::set<std::int64_t> shifted;
                for (std::int64_t x = intervals[i + 1].lo;
                     x <= intervals[i + 1].hi; ++x) {
                    for (std::int64_t k = 0; k <= p; ++k) {
                        shifted.insert(x - (t + k));
                    }
                }
                std::set<std::int64_t> current;
                for (std::int64_t x = intervals[i].lo; x <= intervals[i].hi;
                     ++x) {
                    current.insert(x);
                }
                CHECK(shifted == current);
            }
        }
    }
}

TEST_CASE("ground set is the complement of the blocked ranges") {
    for (std::int64_t t = 1; t <= 9; ++t) {
        for (std::int64_t p = 1; p <= 3; ++p) {
            const std::int64_t index = interval_index_bound(t, p);
            std::set<std::int64_t> expected;
            for (std::int64_t x = 1; x <= index * t - 1; ++x) {
                bool blocked = false;
                for (std::int64_t i = 1; i * t <= x && !blocked; ++i) {
                    if (x <= i * (t + p)) blocked = true;
                }
                if (!blocked) expected.insert(x);
            }
            const CorePoset poset = build_poset(t, p);
            const auto& ground = poset.ground();
            CHECK(std::set<std::int64_t>(ground.begin(), ground.end()) ==
                  expected);
        }
    }
}

TEST_CASE("down-set membership") {
    const CorePoset poset = build_poset(3, 1);
    CHECK(is_good_subset(poset, {}));
    CHECK(is_good_subset(poset, {1, 2}));
    CHECK_FALSE(is_good_subset(poset, {5}));
    CHECK(is_good_subset(poset, {1, 2, 5}));
    CHECK_FALSE(is_good_subset(poset, {3}));
    CHECK_FALSE(is_good_subset(poset, {1, 1}));
}

TEST_CASE("down-set listing for the smallest posets") {
    CHECK(enumerate_good_subsets(build_poset(3, 1)) ==
          std::vector<std::vector<std::int64_t>>{
              {}, {1}, {2}, {1, 2}, {1, 2, 5}});
    CHECK(enumerate_good_subsets(build_poset(2, 1)) ==
          std::vector<std::vector<std::int64_t>>{{}, {1}});
    CHECK(enumerate_good_subsets(build_poset(1, 2)) ==
          std::vector<std::vector<std::int64_t>>{{}});
    CHECK(count_good_subsets(build_poset(3, 1)) == 5);
    CHECK(count_good_subsets(build_poset(3, 2)) == 4);
    CHECK(count_good_subsets(build_poset(1, 1)) == 1);
}

TEST_CASE("down-set count equals the recurrence") {
    for (std::int64_t t = 1; t <= 10; ++t) {
        for (std::int64_t p = 1; p <= 3; ++p) {
            CHECK(count_good_subsets(build_poset(t, p)) == core_count(t, p));
        }
    }
}

TEST_CASE("down-sets beta-decode onto the enumerated family") {
    for (std::int64_t t = 1; t <= 10; ++t) {
        for (std::int64_t p = 1; p <= 3; ++p) {
            CoreFamily from_poset;
            for (const auto& subset :
                 enumerate_good_subsets(build_poset(t, p))) {
                from_poset.push_back(
                    BetaSet::from_elements(subset).to_partition());
            }
            std::sort(from_poset.begin(), from_poset.end(), family_order_less);
            CHECK(from_poset ==
                  enumerate_cores(CoreSpec::consecutive(t, p)));
        }
    }
}

}  // TEST_SUITE
