#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "cores/partition.hpp"

using cores::HookTable;
using cores::Partition;
using cores::hook_table;

namespace {

Partition random_partition(std::mt19937& rng, std::int64_t max_part,
                           std::int64_t max_len) {
    std::uniform_int_distribution<std::int64_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::int64_t> part_dist(1, max_part);
    std::vector<std::int64_t> parts;
    const std::int64_t len = len_dist(rng);
    for (std::int64_t i = 0; i < len; ++i) parts.push_back(part_dist(rng));
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition::from_parts(std::move(parts));
}

std::vector<std::int64_t> flatten_sorted(const HookTable& table) {
    std::vector<std::int64_t> flat;
    for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
    std::sort(flat.begin(), flat.end());
    return flat;
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("construction validates shape") {
    CHECK(Partition::from_parts({5, 2, 2}).parts() ==
          std::vector<std::int64_t>{5, 2, 2});
    CHECK(Partition::from_parts({}).is_empty());
    CHECK_THROWS_AS(Partition::from_parts({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_parts({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_parts({-1}), std::invalid_argument);
}

TEST_CASE("parse accepts bracket form and round-trips with str") {
    CHECK(Partition::parse("[5,2,2]") == Partition::from_parts({5, 2, 2}));
    CHECK(Partition::parse("[]").is_empty());
    CHECK(Partition::parse("[ 3 , 1 , 1 ]") == Partition::from_parts({3, 1, 1}));
    CHECK(Partition::from_parts({5, 2, 2}).str() == "[5,2,2]");
    CHECK(Partition().str() == "[]");
    CHECK_THROWS_AS(Partition::parse("5,2,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[5,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[2,3]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[1] x"), std::invalid_argument);
}

TEST_CASE("size sums the parts") {
    CHECK(Partition::from_parts({5, 2, 2}).size() == 9);
    CHECK(Partition().size() == 0);
    CHECK(Partition::from_parts({3, 1, 1}).size() == 5);
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(Partition::from_parts({5, 2, 2}).conjugate() ==
          Partition::from_parts({3, 3, 1, 1, 1}));
    CHECK(Partition().conjugate().is_empty());
    CHECK(Partition::from_parts({3, 1, 1}).conjugate() ==
          Partition::from_parts({3, 1, 1}));
}

TEST_CASE("hook table matches the worked example") {
    const HookTable expected{{7, 6, 3, 2, 1}, {3, 2}, {2, 1}};
    CHECK(hook_table(Partition::from_parts({5, 2, 2})) == expected);
    CHECK(hook_table(Partition()).empty());
}

TEST_CASE("conjugation is an involution") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        const Partition p = random_partition(rng, 12, 12);
        CHECK(p.conjugate().conjugate() == p);
    }
}

TEST_CASE("hook multiset is conjugation-invariant") {
    std::mt19937 rng(20240812);
    for (int i = 0; i < 200; ++i) {
        const Partition p = random_partition(rng, 10, 10);
        CHECK(flatten_sorted(hook_table(p)) ==
              flatten_sorted(hook_table(p.conjugate())));
    }
}

TEST_CASE("hook rows strictly decrease") {
    std::mt19937 rng(20240813);
    for (int i = 0; i < 200; ++i) {
        const Partition p = random_partition(rng, 10, 10);
        for (const auto& row : hook_table(p)) {
            for (std::size_t j = 1; j < row.size(); ++j) {
                CHECK(row[j] < row[j - 1]);
            }
        }
    }
}

}  // TEST_SUITE
