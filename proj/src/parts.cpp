#include "smar/parts.hpp"

#include <stdexcept>

namespace smar {

u64 sequence_value(SequenceId id, u64 k) {
    switch (id) {
        case SequenceId::primes: return kth_prime(k);
        case SequenceId::squares: return checked_mul(k, k);
        case SequenceId::cubes: return checked_mul(checked_mul(k, k), k);
    }
    throw std::logic_error("sequence_value: bad id");
}

PartResult inferior_part(SequenceId id, u64 x) {
    if (x < sequence_value(id, 0))
        throw std::domain_error("inferior_part: x below the least sequence element");
    // gallop, then binary search for the largest k with f(k) <= x
    u64 lo = 0, hi = 1;
    while (sequence_value(id, hi) <= x) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        u64 mid = lo + (hi - lo) / 2;
        if (sequence_value(id, mid) <= x) lo = mid;
        else hi = mid;
    }
    return {lo, sequence_value(id, lo)};
}

PartResult superior_part(SequenceId id, u64 x) {
    u64 first = sequence_value(id, 0);
    if (x <= first) return {0, first};
    u64 lo = 0, hi = 1; // smallest j with f(j) >= x
    while (sequence_value(id, hi) < x) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        u64 mid = lo + (hi - lo) / 2;
        if (sequence_value(id, mid) < x) lo = mid;
        else hi = mid;
    }
    return {hi - 1, sequence_value(id, hi)}; // k of "f(k) < x <= f(k+1)", value f(k+1)
}

u64 inferior_prime_part(u64 n) { return inferior_part(SequenceId::primes, n).value; }
u64 superior_prime_part(u64 n) { return superior_part(SequenceId::primes, n).value; }
u64 inferior_square_part(u64 n) { return inferior_part(SequenceId::squares, n).value; }
u64 superior_square_part(u64 n) { return superior_part(SequenceId::squares, n).value; }
u64 inferior_cubic_part(u64 n) { return inferior_part(SequenceId::cubes, n).value; }
u64 superior_cubic_part(u64 n) { return superior_part(SequenceId::cubes, n).value; }

u64 complementary(u64 x, Law law, TargetSet target, u64 m) {
    if (law == Law::multiply) {
        switch (target) {
            case TargetSet::squares: return square_complementary(x);
            case TargetSet::cubes: return cubic_complementary(x);
            case TargetSet::m_powers: return m_power_complementary(x, m);
            default: break;
        }
    } else if (target == TargetSet::primes) {
        return prime_complementary(x);
    }
    throw std::domain_error("complementary: unsupported (law, target) combination");
}

u64 m_power_complementary(u64 x, u64 m) {
    if (x == 0) throw std::domain_error("m_power_complementary: x must be >= 1");
    if (m < 2) throw std::domain_error("m_power_complementary: m must be >= 2");
    u64 r = 1;
    for (const auto& [p, e] : factorize(x)) {
        u64 deficit = (m - e % m) % m;
        for (u64 i = 0; i < deficit; ++i) r = checked_mul(r, p);
    }
    return r;
}

u64 square_complementary(u64 x) { return m_power_complementary(x, 2); }
u64 cubic_complementary(u64 x) { return m_power_complementary(x, 3); }

u64 prime_complementary(u64 x) {
    if (x == 0) throw std::domain_error("prime_complementary: x must be >= 1");
    for (u64 k = 0;; ++k)
        if (is_prime(checked_add(x, k))) return k;
}

} // namespace smar
