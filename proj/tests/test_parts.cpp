#include <doctest.h>

#include <stdexcept>

#include "smar/parts.hpp"

using namespace smar;

TEST_CASE("inferior_part / superior_part examples") {
    CHECK(inferior_part(SequenceId::primes, 9).value == 7);
    CHECK(inferior_part(SequenceId::squares, 5).value == 4);
    CHECK(inferior_part(SequenceId::cubes, 27).value == 27);
    CHECK(superior_part(SequenceId::primes, 8).value == 11);
    CHECK(superior_part(SequenceId::squares, 5).value == 9);
    CHECK(superior_part(SequenceId::primes, 2).value == 2);
    CHECK_THROWS_AS(inferior_part(SequenceId::primes, 1), std::domain_error);
    CHECK(superior_part(SequenceId::primes, 0).value == 2);
}

TEST_CASE("named wrappers") {
    CHECK(inferior_prime_part(13) == 13);
    CHECK(superior_square_part(10) == 16);
    CHECK(inferior_cubic_part(26) == 8);
    CHECK(superior_cubic_part(28) == 64);
    CHECK(inferior_square_part(0) == 0);
}

TEST_CASE("prime part sandwich, n <= 1e5") {
    for (u64 n = 2; n <= 100000; ++n) {
        u64 lo = inferior_prime_part(n);
        u64 hi = superior_prime_part(n);
        CHECK(lo <= n);
        CHECK(n <= hi);
        CHECK(is_prime(lo));
        CHECK(is_prime(hi));
        bool fixed = is_prime(n);
        CHECK((lo == n) == fixed);
        CHECK((hi == n) == fixed);
    }
    // no prime strictly inside either gap (spot-scan; gaps are short here)
    for (u64 n : {u64(90), u64(120), u64(1330), u64(9560)}) {
        for (u64 q = inferior_prime_part(n) + 1; q < n; ++q) CHECK_FALSE(is_prime(q));
        for (u64 q = n + 1; q < superior_prime_part(n); ++q) CHECK_FALSE(is_prime(q));
    }
}

TEST_CASE("square/cubic parts agree with integer roots") {
    for (u64 n = 0; n <= 50000; ++n) {
        u64 r2 = integer_kth_root(n, 2);
        u64 r3 = integer_kth_root(n, 3);
        CHECK(inferior_square_part(n) == r2 * r2);
        CHECK(inferior_cubic_part(n) == r3 * r3 * r3);
        CHECK(superior_square_part(n) >= n);
        CHECK(superior_cubic_part(n) >= n);
        bool sq = r2 * r2 == n;
        CHECK((inferior_square_part(n) == n) == sq);
        CHECK((superior_square_part(n) == n) == sq);
    }
}

TEST_CASE("square_complementary list values") {
    CHECK(square_complementary(8) == 2);
    CHECK(square_complementary(12) == 3);
    CHECK(square_complementary(1) == 1);
}

TEST_CASE("square_complementary minimal witness, x <= 5000") {
    for (u64 x = 1; x <= 5000; ++x) {
        u64 k = square_complementary(x);
        // result squarefree
        for (const auto& [p, e] : factorize(k)) CHECK(e == 1);
        u64 prod = x * k;
        u64 r = integer_kth_root(prod, 2);
        CHECK(r * r == prod);
        for (u64 j = 1; j < k; ++j) {
            u64 pj = x * j;
            u64 rj = integer_kth_root(pj, 2);
            CHECK(rj * rj != pj);
        }
    }
}

TEST_CASE("cubic_complementary list values") {
    CHECK(cubic_complementary(2) == 4);
    CHECK(cubic_complementary(4) == 2);
    CHECK(cubic_complementary(18) == 12); // 216 = 6^3
    CHECK(cubic_complementary(20) == 50); // 1000 = 10^3
}

TEST_CASE("m_power_complementary reductions and idempotence") {
    CHECK(m_power_complementary(8, 2) == 2);
    CHECK(m_power_complementary(2, 3) == 4);
    CHECK(m_power_complementary(16, 4) == 1);
    // x * m_power_complementary(x, m) can reach x^m; keep it inside 64 bits
    for (u64 m = 2; m <= 6; ++m)
        for (u64 x = 1; x <= 1000; ++x)
            CHECK(m_power_complementary(x * m_power_complementary(x, m), m) == 1);
}

TEST_CASE("prime_complementary list values and gap property") {
    CHECK(prime_complementary(1) == 1);
    CHECK(prime_complementary(8) == 3);
    CHECK(prime_complementary(24) == 5);
    CHECK(prime_complementary(2) == 0);
    for (u64 x = 1; x <= 20000; ++x) {
        u64 k = prime_complementary(x);
        CHECK(is_prime(x + k));
        for (u64 j = 0; j < k; ++j) CHECK_FALSE(is_prime(x + j));
    }
}

TEST_CASE("complementary dispatcher") {
    CHECK(complementary(8, Law::multiply, TargetSet::squares) == 2);
    CHECK(complementary(2, Law::multiply, TargetSet::cubes) == 4);
    CHECK(complementary(16, Law::multiply, TargetSet::m_powers, 4) == 1);
    CHECK(complementary(8, Law::add, TargetSet::primes) == 3);
    CHECK_THROWS_AS(complementary(8, Law::add, TargetSet::squares), std::domain_error);
}
