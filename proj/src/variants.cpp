#include "smar/variants.hpp"

#include <stdexcept>

namespace smar {

std::string to_string(const SearchOutcome& o) {
    switch (o.kind) {
        case OutcomeKind::found: return std::to_string(o.value);
        case OutcomeKind::not_found_within: return "not-found-within:" + std::to_string(o.bound);
        case OutcomeKind::provably_none: return "provably-none:" + o.reason;
    }
    return "?";
}

u64 double_factorial_mod(u64 m, u64 n) {
    if (m == 0 || n == 0) throw std::domain_error("double_factorial_mod: m, n must be >= 1");
    u64 acc = 1 % n;
    for (u64 i = m % 2 == 0 ? 2 : 1; i <= m; i += 2)
        acc = mulmod(acc, i % n, n);
    return acc;
}

u64 sdf(u64 n) {
    if (n == 0) throw std::domain_error("sdf: n must be >= 1");
    if (n == 1) return 1;
    u64 odd = 1 % n, even = 1 % n;
    // For odd n the odd chain reaches n itself by m = n; for even n the even
    // chain 2^k * k! absorbs every factor by m <= 2n.  Cap accordingly.
    u64 cap = n > (UINT64_MAX - 2) / 2 ? UINT64_MAX : 2 * n + 2;
    for (u64 m = 1; m <= cap; ++m) {
        u64& acc = (m & 1) ? odd : even;
        acc = mulmod(acc, m % n, n);
        if (acc == 0) return m;
    }
    throw std::logic_error("sdf: search exceeded its termination bound");
}

u64 left_factorial_mod(u64 m, u64 p) {
    if (m == 0) throw std::domain_error("left_factorial_mod: m must be >= 1");
    if (!is_prime(p)) throw std::domain_error("left_factorial_mod: p must be prime");
    u64 fact = 1 % p, sum = 0;
    for (u64 i = 1; i <= m; ++i) {
        sum = (sum + fact) % p;        // sum == !i after adding (i-1)!
        fact = mulmod(fact, i % p, p); // fact becomes i!
    }
    return sum;
}

SearchOutcome sk(u64 p, u64 bound) {
    if (!is_prime(p)) throw std::domain_error("sk: p must be prime");
    if (bound < 2) throw std::domain_error("sk: bound must be >= 2");
    u64 fact = 1 % p, sum = 0;
    u64 cap = std::min(bound, p); // !m is constant for m >= p
    for (u64 m = 1; m <= cap; ++m) {
        sum = (sum + fact) % p;
        if (sum == 0) return SearchOutcome::found(m);
        fact = mulmod(fact, m % p, p);
    }
    if (p <= bound) return SearchOutcome::provably_none(kReasonStableResidue);
    return SearchOutcome::not_found_within(bound);
}

u64 factorial_sum_mod(u64 m, u64 p) {
    if (m == 0) throw std::domain_error("factorial_sum_mod: m must be >= 1");
    if (!is_prime(p)) throw std::domain_error("factorial_sum_mod: p must be prime");
    u64 fact = 1 % p, sum = 0;
    for (u64 i = 1; i <= m; ++i) {
        fact = mulmod(fact, i % p, p);
        sum = (sum + fact) % p; // sum == W(i)
    }
    return sum;
}

SearchOutcome sw(u64 p, u64 bound) {
    if (!is_prime(p)) throw std::domain_error("sw: p must be prime");
    if (bound < 1) throw std::domain_error("sw: bound must be >= 1");
    u64 fact = 1 % p, sum = 0;
    u64 cap = std::min(bound, p); // W(m) is constant for m >= p - 1
    for (u64 m = 1; m <= cap; ++m) {
        fact = mulmod(fact, m % p, p);
        sum = (sum + fact) % p;
        if (sum == 0) return SearchOutcome::found(m);
    }
    if (p <= bound) return SearchOutcome::provably_none(kReasonStableResidue);
    return SearchOutcome::not_found_within(bound);
}

u64 ceil_s(u64 n, u64 k) {
    if (n == 0 || k == 0) throw std::domain_error("ceil_s: n, k must be >= 1");
    u64 r = 1;
    for (const auto& [p, e] : factorize(n)) {
        u64 ce = (e + k - 1) / k;
        for (u64 i = 0; i < ce; ++i) r = checked_mul(r, p);
    }
    return r;
}

u64 z(u64 n) {
    if (n == 0) throw std::domain_error("z: n must be >= 1");
    u64 acc = 0;
    for (u64 m = 1;; ++m) { // terminates by m = 2n - 1: T(2n-1) = n(2n-1)
        acc = (acc + m % n) % n;
        if (acc == 0) return m;
    }
}

SearchOutcome sntp(u64 n, u64 prime_bound) {
    if (n == 0) throw std::domain_error("sntp: n must be >= 1");
    if (n % 4 == 0) return SearchOutcome::provably_none(kReasonFourDividesN);
    u64 prim = 1 % n;
    for (u64 p : primes_up_to(prime_bound)) {
        prim = mulmod(prim, p % n, n);
        if (prim == 0 || prim == 1 % n || prim + 1 == n)
            return SearchOutcome::found(p);
    }
    return SearchOutcome::not_found_within(prime_bound);
}

} // namespace smar
