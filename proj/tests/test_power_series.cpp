#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "cores/counting.hpp"
#include "cores/power_series.hpp"

using cores::Series;
using cores::check_functional_equation;
using cores::closed_form_series;
using cores::core_count;
using cores::series_from_recurrence;
using cores::sqrt_series;

namespace {

Series from_ints(const std::vector<long>& values) {
    Series s(values.size() - 1);
    for (std::size_t k = 0; k < values.size(); ++k) {
        s.set_coeff(k, mpq_class(values[k]));
    }
    return s;
}

}  // namespace

TEST_SUITE("powerseries") {

TEST_CASE("arithmetic basics") {
    const Series a = from_ints({1, 2, 3});
    const Series b = from_ints({1, -1, 0});
    CHECK(a.add(b) == from_ints({2, 1, 3}));
    CHECK(a.sub(b) == from_ints({0, 3, 3}));
    CHECK(a.mul(b) == from_ints({1, 1, 1}));
    CHECK(a.mul(b).div(b) == a);
    CHECK_THROWS_AS(a.div(from_ints({0, 1, 1})), std::invalid_argument);
    CHECK(Series::constant(mpq_class(3), 2) == from_ints({3, 0, 0}));
}

TEST_CASE("coefficients beyond the order read as zero") {
    const Series a = from_ints({1, 2});
    CHECK(a.coeff(5) == 0);
    CHECK(a.order() == 1);
    CHECK_THROWS_AS(Series(1).set_coeff(2, mpq_class(1)), std::out_of_range);
}

TEST_CASE("square root of binomial radicands") {
    Series q1(3);
    q1.set_coeff(0, mpq_class(1));
    q1.set_coeff(1, mpq_class(-4));
    CHECK(q1.sqrt() == from_ints({1, -2, -2, -4}));

    Series q2(3);
    q2.set_coeff(0, mpq_class(1));
    q2.set_coeff(1, mpq_class(-2));
    q2.set_coeff(2, mpq_class(-3));
    CHECK(sqrt_series(q2) == from_ints({1, -1, -2, -2}));

    CHECK(from_ints({1, 0, 0, 0}).sqrt() == from_ints({1, 0, 0, 0}));
    CHECK_THROWS_AS(from_ints({2, 0}).sqrt(), std::invalid_argument);
}

TEST_CASE("square root squares back to its argument") {
    std::mt19937 rng(20240819);
    std::uniform_int_distribution<long> coeff_dist(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        Series q(12);
        q.set_coeff(0, mpq_class(1));
        for (std::size_t k = 1; k <= 12; ++k) {
            q.set_coeff(k, mpq_class(coeff_dist(rng)));
        }
        CHECK(q.sqrt().mul(q.sqrt()) == q);
    }
}

TEST_CASE("recurrence series prefixes") {
    CHECK(series_from_recurrence(1, 5) == from_ints({1, 1, 2, 5, 14, 42}));
    CHECK(series_from_recurrence(2, 6) ==
          from_ints({1, 1, 2, 4, 9, 21, 51}));
    CHECK(series_from_recurrence(3, 5) == from_ints({1, 1, 2, 4, 8, 17}));
}

TEST_CASE("closed form expansions") {
    CHECK(closed_form_series(1, 4) == from_ints({1, 1, 2, 5, 14}));
    CHECK(closed_form_series(2, 6) == from_ints({1, 1, 2, 4, 9, 21, 51}));
    CHECK(closed_form_series(3, 5) == from_ints({1, 1, 2, 4, 8, 17}));
}

TEST_CASE("closed form matches the recurrence to high order") {
    for (std::int64_t p = 1; p <= 4; ++p) {
        CHECK(closed_form_series(p, 30) == series_from_recurrence(p, 30));
    }
}

TEST_CASE("closed form coefficients are nonnegative integers") {
    for (std::int64_t p = 1; p <= 4; ++p) {
        const Series f = closed_form_series(p, 30);
        for (const mpq_class& c : f.coeffs()) {
            CHECK(c.get_den() == 1);
            CHECK(c >= 0);
        }
    }
}

TEST_CASE("functional equation holds for the counting series") {
    for (std::int64_t p = 1; p <= 4; ++p) {
        CHECK(check_functional_equation(series_from_recurrence(p, 30), p));
    }
    CHECK(check_functional_equation(from_ints({1, 1, 2, 5, 14, 42}), 1));
}

TEST_CASE("functional equation rejects other series") {
    CHECK_FALSE(check_functional_equation(from_ints({1, 1, 1, 1}), 1));
    CHECK_FALSE(check_functional_equation(from_ints({1, 1, 2, 4, 9, 22}), 2));
    CHECK_THROWS_AS(check_functional_equation(from_ints({1}), 2),
                    std::invalid_argument);
}

TEST_CASE("printing uses comma separation and lowest terms") {
    CHECK(series_from_recurrence(2, 6).str() == "1, 1, 2, 4, 9, 21, 51");
    Series s(2);
    s.set_coeff(0, mpq_class(1));
    s.set_coeff(1, mpq_class(-1, 2));
    CHECK(s.str() == "1, -1/2, 0");
}

TEST_CASE("series coefficient equals the direct count") {
    for (std::int64_t p = 1; p <= 3; ++p) {
        const Series s = closed_form_series(p, 12);
        for (std::size_t t = 0; t <= 12; ++t) {
            CHECK(s.coeff(t) ==
                  mpq_class(core_count(static_cast<std::int64_t>(t), p)));
        }
    }
}

}  // TEST_SUITE
