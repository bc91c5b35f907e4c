#pragma once

#include <cstdint>
#include <vector>

namespace smar {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimePower {
    u64 prime;
    u64 exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime-power decomposition, primes strictly increasing.
// factorize(1) is the empty list.
using Factorization = std::vector<PrimePower>;

u64 checked_add(u64 a, u64 b);
u64 checked_mul(u64 a, u64 b);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// Deterministic over the full 64-bit range (fixed Miller-Rabin witness set).
bool is_prime(u64 n);

Factorization factorize(u64 n);   // rejects n = 0
u64 unfactor(const Factorization& f);

// Exponent of p in m!  (Legendre: sum of floor(m / p^j))
u64 legendre_valuation(u64 p, u64 m);

u64 num_divisors(u64 n);            // d(n)
u64 sum_divisors(u64 n);            // sigma(n), overflow is an error
u64 greatest_proper_divisor(u64 n); // gd(n), n >= 2
u64 primorial(u64 p);               // p#, prime p <= 52
u64 triangular(u64 m);              // m(m+1)/2, overflow is an error
u64 integer_kth_root(u64 n, u64 k); // largest r with r^k <= n, exact

// Primes in ascending order; cache grows on demand, immutable once built.
u64 kth_prime(u64 k);               // 0-indexed: kth_prime(0) = 2
std::vector<u64> primes_up_to(u64 limit);

// Smallest prime factor for every n in [2, limit]; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_factor_table(std::uint32_t limit);

} // namespace smar
