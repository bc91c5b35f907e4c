#include "smar/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace smar {

u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit addition overflow");
    return r;
}

u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit multiplication overflow");
    return r;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(u128(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace {

// Fixed witness set: deterministic for all n < 2^64.
constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(u64 n) {
    u64 d = n - 1;
    int r = __builtin_ctzll(d);
    d >>= r;
    for (u64 a : kWitnesses) {
        if (a % n == 0) continue;
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    return miller_rabin(n);
}

namespace {

// Brent's cycle variant with fixed polynomial increments; n odd composite.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = step(y);
            ++lam;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be >= 1");
    Factorization f;
    for (u64 p : {u64(2), u64(3), u64(5)}) {
        if (n % p == 0) {
            u64 e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    // trial division with a 2,3,5 wheel up to 2^16
    static constexpr u64 wheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 p = 7;
    int w = 0;
    while (p <= 65536 && p * p <= n) {
        if (n % p == 0) {
            u64 e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
        p += wheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) {
        std::vector<u64> rest;
        if (p * p > n) rest.push_back(n);
        else factor_rec(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            f.push_back({rest[i], j - i});
            i = j;
        }
    }
    return f;
}

u64 unfactor(const Factorization& f) {
    u64 n = 1;
    for (const auto& [p, e] : f)
        for (u64 i = 0; i < e; ++i) n = checked_mul(n, p);
    return n;
}

u64 legendre_valuation(u64 p, u64 m) {
    if (p < 2) throw std::domain_error("legendre_valuation: p must be prime");
    u64 v = 0;
    while (m >= p) {
        m /= p;
        v += m;
    }
    return v;
}

u64 num_divisors(u64 n) {
    u64 d = 1;
    for (const auto& [p, e] : factorize(n)) d *= e + 1;
    return d;
}

u64 sum_divisors(u64 n) {
    u64 s = 1;
    for (const auto& [p, e] : factorize(n)) {
        // 1 + p + ... + p^e
        u64 term = 1, pk = 1;
        for (u64 i = 0; i < e; ++i) {
            pk = checked_mul(pk, p);
            term = checked_add(term, pk);
        }
        s = checked_mul(s, term);
    }
    return s;
}

u64 greatest_proper_divisor(u64 n) {
    if (n < 2) throw std::domain_error("greatest_proper_divisor: n must be >= 2");
    Factorization f = factorize(n);
    return n / f.front().prime;
}

u64 primorial(u64 p) {
    if (!is_prime(p)) throw std::domain_error("primorial: argument must be prime");
    if (p > 52) throw std::overflow_error("primorial: p# exceeds 64 bits for p > 52");
    u64 r = 1;
    for (u64 q : primes_up_to(p)) r = checked_mul(r, q);
    return r;
}

u64 triangular(u64 m) {
    u64 a = m, b = m + 1;
    if (b == 0) throw std::overflow_error("triangular: m + 1 overflows");
    (a % 2 == 0 ? a : b) /= 2;
    return checked_mul(a, b);
}

u64 integer_kth_root(u64 n, u64 k) {
    if (k == 0) throw std::domain_error("integer_kth_root: k must be >= 1");
    if (k == 1 || n < 2) return n;
    if (k >= 64) return 1;
    // floating-point seed, then exact correction
    u64 r = static_cast<u64>(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(k)));
    auto pow_le = [&](u64 x) { // x^k <= n, without overflow
        u128 acc = 1;
        for (u64 i = 0; i < k; ++i) {
            acc *= x;
            if (acc > n) return false;
        }
        return true;
    };
    while (r > 0 && !pow_le(r)) --r;
    while (pow_le(r + 1)) ++r;
    return r;
}

namespace {

std::mutex g_prime_mutex;
std::vector<u64> g_primes;          // ascending, complete below g_sieved_to
u64 g_sieved_to = 0;

// caller holds g_prime_mutex
void ensure_sieved(u64 limit) {
    if (limit <= g_sieved_to) return;
    u64 target = std::max<u64>(limit, std::max<u64>(2 * g_sieved_to, 1024));
    std::vector<bool> composite(target + 1, false);
    g_primes.clear();
    for (u64 i = 2; i <= target; ++i) {
        if (!composite[i]) {
            g_primes.push_back(i);
            for (u64 j = i * i; j <= target; j += i) composite[j] = true;
        }
    }
    g_sieved_to = target;
}

} // namespace

u64 kth_prime(u64 k) {
    std::lock_guard lock(g_prime_mutex);
    // p_k < k (ln k + ln ln k) for k >= 6; generous envelope below
    while (g_primes.size() <= k) ensure_sieved(std::max<u64>(2 * g_sieved_to, 64 * (k + 1)));
    return g_primes[k];
}

std::vector<u64> primes_up_to(u64 limit) {
    std::lock_guard lock(g_prime_mutex);
    ensure_sieved(limit);
    auto end = std::upper_bound(g_primes.begin(), g_primes.end(), limit);
    return {g_primes.begin(), end};
}

std::vector<std::uint32_t> smallest_factor_table(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(u64(limit) + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (u64 j = i; j <= limit; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    return spf;
}

} // namespace smar
