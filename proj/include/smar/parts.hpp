#pragma once

#include "smar/arith.hpp"

namespace smar {

enum class SequenceId { primes, squares, cubes };

// k-th element of the named sequence (primes: 2,3,5,...; squares: 0,1,4,...).
u64 sequence_value(SequenceId id, u64 k);

struct PartResult {
    u64 index; // the k of the defining inequality
    u64 value; // the sequence element the particular cases return
    friend bool operator==(const PartResult&, const PartResult&) = default;
};

// Largest sequence element <= x; rejects x below the least element.
PartResult inferior_part(SequenceId id, u64 x);

// Smallest sequence element >= x; x at or below the least element maps to it.
PartResult superior_part(SequenceId id, u64 x);

u64 inferior_prime_part(u64 n);  // n >= 2
u64 superior_prime_part(u64 n);
u64 inferior_square_part(u64 n);
u64 superior_square_part(u64 n);
u64 inferior_cubic_part(u64 n);
u64 superior_cubic_part(u64 n);

enum class Law { multiply, add };
enum class TargetSet { squares, cubes, m_powers, primes };

// Smallest k completing x under the law into the target set.  Supported
// instances: (multiply, squares/cubes/m_powers) and (add, primes).
u64 complementary(u64 x, Law law, TargetSet target, u64 m = 0);

u64 square_complementary(u64 x);          // squarefree part of x
u64 cubic_complementary(u64 x);
u64 m_power_complementary(u64 x, u64 m);  // m >= 2
u64 prime_complementary(u64 x);           // smallest k >= 0 with x + k prime

} // namespace smar
