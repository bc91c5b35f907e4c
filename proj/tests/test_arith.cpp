#include <doctest.h>

#include <stdexcept>

#include <map>
#include <random>

#include "smar/arith.hpp"

using namespace smar;

TEST_CASE("is_prime on fixed values") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91)); // 7*13
    CHECK(is_prime(2147483647ull));
    CHECK(is_prime(18446744073709551557ull)); // largest 64-bit prime
    CHECK_FALSE(is_prime(3215031751ull));     // strong pseudoprime to 2,3,5,7
}

TEST_CASE("factorize on fixed values") {
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    CHECK(factorize(1).empty());
    CHECK(factorize(97) == Factorization{{97, 1}});
    CHECK_THROWS_AS(factorize(0), std::domain_error);
    // large semiprime forces the post-trial-division path
    u64 p = 1000003, q = 1000033;
    CHECK(factorize(p * q) == Factorization{{p, 1}, {q, 1}});
}

TEST_CASE("factorize reconstructs n and flags primes, n <= 1e5") {
    for (u64 n = 1; n <= 100000; ++n) {
        Factorization f = factorize(n);
        CHECK(unfactor(f) == n);
        u64 prev = 1;
        for (const auto& [pp, e] : f) {
            CHECK(pp > prev);
            CHECK(is_prime(pp));
            CHECK(e >= 1);
            prev = pp;
        }
        if (n >= 2) {
            bool single = f.size() == 1 && f[0].exponent == 1;
            CHECK(single == is_prime(n));
        }
    }
}

TEST_CASE("legendre_valuation examples and direct count") {
    CHECK(legendre_valuation(3, 9) == 4);
    CHECK(legendre_valuation(5, 4) == 0);
    CHECK(legendre_valuation(2, 4) == 3);
    for (u64 p : primes_up_to(50)) {
        u64 direct = 0;
        for (u64 m = 1; m <= 1000; ++m) {
            u64 x = m;
            while (x % p == 0) { x /= p; ++direct; }
            CHECK(legendre_valuation(p, m) == direct);
        }
    }
}

TEST_CASE("divisor functions vs enumeration, n <= 1e4") {
    CHECK(num_divisors(6) == 4);
    CHECK(num_divisors(1) == 1);
    CHECK(num_divisors(4) == 3);
    CHECK(sum_divisors(4) == 7);
    CHECK(sum_divisors(8) == 15);
    CHECK(sum_divisors(1) == 1);
    for (u64 n = 1; n <= 10000; ++n) {
        u64 count = 0, sum = 0;
        for (u64 d = 1; d <= n; ++d)
            if (n % d == 0) { ++count; sum += d; }
        CHECK(num_divisors(n) == count);
        CHECK(sum_divisors(n) == sum);
    }
}

TEST_CASE("greatest_proper_divisor") {
    CHECK(greatest_proper_divisor(60) == 30);
    CHECK(greatest_proper_divisor(15) == 5);
    CHECK(greatest_proper_divisor(7) == 1);
    CHECK_THROWS_AS(greatest_proper_divisor(1), std::domain_error);
    for (u64 n = 2; n <= 5000; ++n) {
        u64 g = greatest_proper_divisor(n);
        CHECK(n % g == 0);
        CHECK(g < n);
        for (u64 d = g + 1; d < n; ++d) CHECK(n % d != 0);
    }
}

TEST_CASE("primorial") {
    CHECK(primorial(2) == 2);
    CHECK(primorial(7) == 210);
    CHECK(primorial(13) == 30030);
    CHECK(primorial(47) == 614889782588491410ull);
    CHECK_THROWS_AS(primorial(53), std::overflow_error);
    CHECK_THROWS_AS(primorial(6), std::domain_error);
}

TEST_CASE("triangular") {
    CHECK(triangular(0) == 0);
    CHECK(triangular(7) == 28);
    CHECK(triangular(6) == 21);
    CHECK_THROWS_AS(triangular(UINT64_MAX), std::overflow_error);
}

TEST_CASE("integer_kth_root examples and bracketing property") {
    CHECK(integer_kth_root(26, 3) == 2);
    CHECK(integer_kth_root(27, 3) == 3);
    CHECK(integer_kth_root(24, 2) == 4);
    CHECK(integer_kth_root(0, 5) == 0);
    CHECK(integer_kth_root(UINT64_MAX, 2) == 4294967295ull);
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 20000; ++i) {
        u64 n = rng() >> (rng() % 48);
        u64 k = 1 + rng() % 8;
        u64 r = integer_kth_root(n, k);
        u128 lo = 1, hi = 1;
        for (u64 j = 0; j < k; ++j) { lo *= r; hi *= r + 1; }
        CHECK(lo <= n);
        CHECK(hi > n);
    }
}

TEST_CASE("checked arithmetic reports overflow") {
    CHECK_THROWS_AS(checked_mul(UINT64_MAX, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_add(UINT64_MAX, 1), std::overflow_error);
    CHECK(checked_mul(3, 5) == 15);
}

TEST_CASE("prime cache") {
    CHECK(kth_prime(0) == 2);
    CHECK(kth_prime(4) == 11);
    CHECK(kth_prime(9591) == 99991); // pi(1e5) = 9592
    auto ps = primes_up_to(100);
    CHECK(ps.size() == 25);
    CHECK(ps.back() == 97);
}
