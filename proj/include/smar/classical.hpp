#pragma once

#include <functional>
#include <vector>

#include "smar/arith.hpp"

namespace smar {

// S(p^a): smallest m whose factorial contains p at least a times.
// Always a multiple of p, and at most p*a.
u64 s_of_prime_power(u64 p, u64 a);

// Classical Smarandache function: smallest m with n | m!, S(1) = 1.
// Fast path over the factorization of n.
u64 s(u64 n);

// Definition-literal oracle: walks m! mod n until the residue hits zero.
u64 s_oracle(u64 n);

// S(n) for every n in [0, limit]; entries 0 and 1 are 0 and 1.
std::vector<u64> s_values_up_to(u64 limit);

// Prime characterization: p prime iff S(p) = p, valid for p > 4.
bool is_prime_via_s(u64 p);

// pi(x) = -1 + sum_{k=2..x} floor(S(k)/k), valid for x >= 4.
u64 prime_count_via_s(u64 x);

// counts[x] = prime_count_via_s(x) for x in [4, limit]; entries below 4 are 0.
std::vector<u64> prime_count_via_s_table(u64 limit);

// f(a*b) == max(f(a), f(b)) for the given function; requires gcd(a, b) = 1.
bool check_s_multiplicative(const std::function<u64(u64)>& f, u64 a, u64 b);

} // namespace smar
