#include <doctest.h>

#include <stdexcept>

#include "smar/iterations.hpp"

using namespace smar;

TEST_CASE("first kind: d instance, paper chains") {
    auto t = iterate_first_kind(IterFunction::divisor_count, 6);
    CHECK(t.count == 3);
    CHECK(t.orbit == std::vector<u64>{6, 4, 3, 2});
    CHECK(iterate_first_kind(IterFunction::divisor_count, 5).count == 1);
    CHECK(iterate_first_kind(IterFunction::divisor_count, 2).count == 1);
    CHECK_THROWS_AS(iterate_first_kind(IterFunction::divisor_sum, 6), std::domain_error);
}

TEST_CASE("second kind: sigma instance, paper chain") {
    auto t = iterate_second_kind(IterFunction::divisor_sum, 4, 11);
    CHECK(t.count == 3);
    CHECK(t.orbit == std::vector<u64>{4, 7, 8, 15});
    CHECK(iterate_second_kind(IterFunction::divisor_sum, 2, 3).count == 1);
    CHECK(iterate_second_kind(IterFunction::divisor_sum, 4, 5).count == 1);
    CHECK_THROWS_AS(iterate_second_kind(IterFunction::divisor_sum, 4, 4), std::domain_error);
    CHECK_THROWS_AS(iterate_second_kind(IterFunction::divisor_sum, 1, 5), std::domain_error);
}

TEST_CASE("third kind: gd instance, paper chain") {
    auto t = iterate_third_kind(IterFunction::greatest_proper_divisor, 60, 3);
    CHECK(t.count == 4);
    CHECK(t.orbit == std::vector<u64>{60, 30, 15, 5, 1});
    CHECK(iterate_third_kind(IterFunction::greatest_proper_divisor, 10, 5).count == 1);
    CHECK(iterate_third_kind(IterFunction::greatest_proper_divisor, 7, 2).count == 1);
    CHECK_THROWS_AS(iterate_third_kind(IterFunction::greatest_proper_divisor, 5, 5), std::domain_error);
}

TEST_CASE("orbit validity and minimality, first kind over [3, 1e4]") {
    for (u64 x = 3; x <= 10000; ++x) {
        auto t = iterate_first_kind(IterFunction::divisor_count, x);
        CHECK(t.count >= 1);
        CHECK(t.count == t.orbit.size() - 1);
        for (std::size_t i = 0; i + 1 < t.orbit.size(); ++i) {
            CHECK(num_divisors(t.orbit[i]) == t.orbit[i + 1]); // re-check each step
            if (i + 2 < t.orbit.size()) CHECK(t.orbit[i + 1] > t.orbit[i + 2]); // strictly decreasing to the fix point
        }
        u64 last = t.orbit.back();
        CHECK((last == 1 || last == 2));
        for (std::size_t i = 1; i + 1 < t.orbit.size(); ++i)
            CHECK((t.orbit[i] != 1 && t.orbit[i] != 2)); // no earlier iterate stops
    }
}

TEST_CASE("second/third kind orbit monotonicity and minimality") {
    for (u64 x = 2; x <= 300; ++x) {
        auto t = iterate_second_kind(IterFunction::divisor_sum, x, x + 50);
        for (std::size_t i = 0; i + 1 < t.orbit.size(); ++i) {
            CHECK(t.orbit[i] < t.orbit[i + 1]);
            CHECK(sum_divisors(t.orbit[i]) == t.orbit[i + 1]);
            if (i >= 1) CHECK(t.orbit[i] < x + 50); // earlier iterates below threshold
        }
        CHECK(t.orbit.back() >= x + 50);
    }
    for (u64 x = 4; x <= 300; ++x) {
        auto t = iterate_third_kind(IterFunction::greatest_proper_divisor, x, 2);
        for (std::size_t i = 0; i + 1 < t.orbit.size(); ++i) {
            CHECK(t.orbit[i] > t.orbit[i + 1]);
            CHECK(greatest_proper_divisor(t.orbit[i]) == t.orbit[i + 1]);
            if (i >= 1) CHECK(t.orbit[i] > 2);
        }
        CHECK(t.orbit.back() <= 2);
    }
}
