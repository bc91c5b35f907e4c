#pragma once

#include <optional>
#include <vector>

#include "smar/arith.hpp"

namespace smar {

enum class IterFunction { divisor_count, divisor_sum, greatest_proper_divisor };

const char* iter_function_name(IterFunction f);

struct IterationTrace {
    IterFunction function;
    u64 start;
    std::optional<u64> threshold;
    std::vector<u64> orbit; // orbit[0] == start
    u64 count;              // orbit.size() - 1
};

inline constexpr u64 kIterationCap = 1000000;

// First kind: iterate until a fixed point.  Registered instance: d with
// fixed points {1, 2}.  count = 1 when the first application already lands
// on (or stays at) a fixed point.
IterationTrace iterate_first_kind(IterFunction f, u64 x);

// Second kind: iterate a strictly increasing map until the value reaches b.
// Registered instance: sigma, domain x > 1; requires b > x.
IterationTrace iterate_second_kind(IterFunction g, u64 x, u64 b);

// Third kind: iterate a strictly decreasing map until the value drops to b.
// Registered instance: gd, domain x > 1; requires b >= 1 and b < x.
IterationTrace iterate_third_kind(IterFunction h, u64 x, u64 b);

} // namespace smar
