#include "smar/classical.hpp"

#include <numeric>
#include <stdexcept>

namespace smar {

u64 s_of_prime_power(u64 p, u64 a) {
    if (!is_prime(p)) throw std::domain_error("s_of_prime_power: p must be prime");
    if (a == 0) throw std::domain_error("s_of_prime_power: a must be >= 1");
    if (a == 1) return p;
    // The minimal m with v_p(m!) >= a sits at a multiple of p, since the
    // valuation only jumps there.  Binary search t = m/p in [1, a].
    u64 lo = 1, hi = a;
    while (lo < hi) {
        u64 mid = lo + (hi - lo) / 2;
        if (legendre_valuation(p, checked_mul(mid, p)) >= a) hi = mid;
        else lo = mid + 1;
    }
    return checked_mul(lo, p);
}

u64 s(u64 n) {
    if (n == 0) throw std::domain_error("s: n must be >= 1");
    if (n == 1) return 1;
    u64 best = 0;
    for (const auto& [p, e] : factorize(n))
        best = std::max(best, s_of_prime_power(p, e));
    return best;
}

u64 s_oracle(u64 n) {
    if (n == 0) throw std::domain_error("s_oracle: n must be >= 1");
    if (n == 1) return 1;
    u64 acc = 1 % n;
    for (u64 m = 1;; ++m) {
        acc = mulmod(acc, m % n, n);
        if (acc == 0) return m;
    }
}

std::vector<u64> s_values_up_to(u64 limit) {
    if (limit > 0xFFFFFFFFull) throw std::domain_error("s_values_up_to: limit too large");
    auto spf = smallest_factor_table(static_cast<std::uint32_t>(limit));
    std::vector<u64> sv(limit + 1, 0);
    if (limit >= 1) sv[1] = 1;
    for (u64 n = 2; n <= limit; ++n) {
        u64 m = n, best = 0;
        while (m > 1) {
            u64 p = spf[m], e = 0;
            while (m % p == 0) { m /= p; ++e; }
            best = std::max(best, s_of_prime_power(p, e));
        }
        sv[n] = best;
    }
    return sv;
}

bool is_prime_via_s(u64 p) {
    if (p <= 4) throw std::domain_error("is_prime_via_s: characterization needs p > 4");
    return s(p) == p;
}

namespace {

u64 pi_from_s_prefix(const std::vector<u64>& sv, u64 x) {
    u64 sum = 0;
    for (u64 k = 2; k <= x; ++k) sum += sv[k] / k; // floor(S(k)/k)
    return sum - 1;
}

} // namespace

u64 prime_count_via_s(u64 x) {
    if (x < 4) throw std::domain_error("prime_count_via_s: formula needs x >= 4");
    return pi_from_s_prefix(s_values_up_to(x), x);
}

std::vector<u64> prime_count_via_s_table(u64 limit) {
    if (limit < 4) throw std::domain_error("prime_count_via_s_table: limit must be >= 4");
    auto sv = s_values_up_to(limit);
    std::vector<u64> counts(limit + 1, 0);
    u64 sum = 0;
    for (u64 k = 2; k <= limit; ++k) {
        sum += sv[k] / k;
        if (k >= 4) counts[k] = sum - 1;
    }
    return counts;
}

bool check_s_multiplicative(const std::function<u64(u64)>& f, u64 a, u64 b) {
    if (a == 0 || b == 0) throw std::domain_error("check_s_multiplicative: arguments must be >= 1");
    if (std::gcd(a, b) != 1) throw std::domain_error("check_s_multiplicative: a and b must be coprime");
    return f(checked_mul(a, b)) == std::max(f(a), f(b));
}

} // namespace smar
